#pragma once

#include <stdexcept>
#include <string>

namespace efpm {

enum class Errc {
  length_mismatch,
  empty_instance,
  non_positive_value,
  non_finite_value,
  index_out_of_range,
  non_square_matrix,
  instance_too_large,
  infeasible_allocation,
  invalid_spec,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::empty_instance: return "EmptyInstance";
    case Errc::non_positive_value: return "NonPositiveValue";
    case Errc::non_finite_value: return "NonFiniteValue";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::non_square_matrix: return "NonSquareMatrix";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::infeasible_allocation: return "InfeasibleAllocation";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace efpm
