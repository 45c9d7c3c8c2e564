#include "efpm/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace efpm::io {

namespace {

std::vector<double> number_array(const ordered_json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw Error(Errc::parse_error, std::string("missing array field: ") + field);
  }
  std::vector<double> out;
  out.reserve(j[field].size());
  for (const auto& v : j[field]) {
    if (!v.is_number()) {
      throw Error(Errc::parse_error, std::string(field) + " must contain numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<int> int_array(const ordered_json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw Error(Errc::parse_error, std::string("missing array field: ") + field);
  }
  std::vector<int> out;
  out.reserve(j[field].size());
  for (const auto& v : j[field]) {
    if (!v.is_number_integer()) {
      throw Error(Errc::parse_error, std::string(field) + " must contain integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& field, std::size_t line_no) {
  const std::string t = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size()) {
    throw Error(Errc::parse_error,
                "bad number '" + t + "' on line " + std::to_string(line_no));
  }
  return value;
}

}  // namespace

ordered_json instance_to_json(const Instance& inst) {
  ordered_json j;
  j["budgets"] = inst.budgets;
  j["qualities"] = inst.qualities;
  return j;
}

Instance instance_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error(Errc::parse_error, "instance must be an object");
  return validate_instance(number_array(j, "budgets"), number_array(j, "qualities"));
}

std::string instance_to_csv(const Instance& inst) {
  std::ostringstream out;
  out << "budget,quality\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    ordered_json b = inst.budgets[i];
    ordered_json q = inst.qualities[i];
    out << b.dump() << "," << q.dump() << "\n";
  }
  return out.str();
}

Instance instance_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || trim(line) != "budget,quality") {
    throw Error(Errc::parse_error, "CSV instance needs a 'budget,quality' header");
  }
  std::vector<double> budgets;
  std::vector<double> qualities;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(Errc::parse_error,
                  "expected 'budget,quality' on line " + std::to_string(line_no));
    }
    budgets.push_back(parse_number(line.substr(0, comma), line_no));
    qualities.push_back(parse_number(line.substr(comma + 1), line_no));
  }
  return validate_instance(std::move(budgets), std::move(qualities));
}

ordered_json outcome_to_json(const Outcome& out) {
  ordered_json j;
  j["assignment"] = out.assignment.item_of;
  j["prices"] = out.prices;
  j["revenue"] = out.revenue;
  j["surpluses"] = out.surpluses;
  return j;
}

Outcome outcome_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error(Errc::parse_error, "outcome must be an object");
  Outcome out;
  out.assignment.item_of = int_array(j, "assignment");
  out.prices = number_array(j, "prices");
  if (!j.contains("revenue") || !j["revenue"].is_number()) {
    throw Error(Errc::parse_error, "missing numeric field: revenue");
  }
  out.revenue = j["revenue"].get<double>();
  out.surpluses = number_array(j, "surpluses");
  if (out.prices.size() != out.assignment.item_of.size() ||
      out.surpluses.size() != out.assignment.item_of.size()) {
    throw Error(Errc::parse_error, "outcome arrays differ in length");
  }
  return out;
}

ordered_json audit_to_json(const AuditReport& report) {
  ordered_json j;
  j["envy_free"] = report.envy_free;
  j["individually_rational"] = report.individually_rational;
  j["perfect"] = report.perfect;
  j["revenue_consistent"] = report.revenue_consistent;
  j["worst_violation"] = report.worst_violation;
  ordered_json pairs = ordered_json::array();
  for (const auto& [buyer, item] : report.violating_pairs) {
    pairs.push_back(ordered_json::array({buyer, item}));
  }
  j["violating_pairs"] = pairs;
  return j;
}

ordered_json genspec_to_json(const GenSpec& spec) {
  ordered_json j;
  j["n"] = spec.n;
  j["distribution"] = distribution_name(spec.distribution);
  j["low"] = spec.low;
  j["high"] = spec.high;
  j["seed"] = spec.seed;
  if (spec.distribution == Distribution::tie_heavy) {
    j["distinct_values"] = spec.distinct_values;
  }
  return j;
}

GenSpec genspec_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error(Errc::parse_error, "gen spec must be an object");
  GenSpec spec;
  try {
    spec.n = j.at("n").get<std::size_t>();
    spec.distribution = distribution_from_name(j.at("distribution").get<std::string>());
    spec.low = j.at("low").get<double>();
    spec.high = j.at("high").get<double>();
    spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("distinct_values")) {
      spec.distinct_values = j.at("distinct_values").get<std::size_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad gen spec: ") + e.what());
  }
  return spec;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path);
  out << text;
}

Instance load_instance(const std::string& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return instance_from_json(parse(text));
  }
  return instance_from_csv(text);
}

Outcome load_outcome(const std::string& path) {
  return outcome_from_json(parse(read_text_file(path)));
}

}  // namespace efpm::io
