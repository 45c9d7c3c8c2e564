#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "efpm/errors.hpp"

namespace efpm {

using PriceVector = std::vector<double>;

// One market: n buyers with positive budgets, n items with positive quality
// measures. Buyer b values item j at budgets[b] * qualities[j]; the full
// valuation matrix is never stored unless an oracle asks for it.
struct Instance {
  std::vector<double> budgets;
  std::vector<double> qualities;

  std::size_t size() const { return budgets.size(); }
};

// Checks lengths, positivity and finiteness (including the largest product,
// so valuation() cannot overflow later). Returns the validated instance.
Instance validate_instance(std::vector<double> budgets,
                           std::vector<double> qualities);

// Same checks on an already-built instance.
void ensure_valid(const Instance& inst);

double valuation(const Instance& inst, std::size_t buyer, std::size_t item);

// Largest single valuation, max budget times max quality.
double max_valuation(const Instance& inst);

// Audit/comparison tolerance: 1e-9 * (1 + max valuation). Scale-free across
// wildly scaled markets.
double default_tolerance(const Instance& inst);

// Buyer and item ranks: descending key, ties broken by ascending original
// index (deterministic, needed for golden files).
struct SortedView {
  std::vector<int> buyer_order;  // buyer_order[a] = a-th richest buyer
  std::vector<int> item_order;   // item_order[a]  = a-th best item
};

SortedView sorted_view(const Instance& inst);

// item_of[b] = item sold to buyer b; a permutation of 0..n-1.
struct Assignment {
  std::vector<int> item_of;
};

bool is_permutation(const Assignment& a, std::size_t n);

struct Outcome {
  Assignment assignment;
  PriceVector prices;             // original item indexing
  double revenue = 0.0;           // sum of prices
  std::vector<double> surpluses;  // per buyer: value of own item minus its price
};

// Dense row-major matrix of valuations.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Valuations with rows in buyer rank order and columns in item rank order.
// Rows are nonincreasing left to right, columns nonincreasing top to bottom.
Matrix materialize_matrix(const Instance& inst, const SortedView& view);

// M[i][k] + M[j][l] >= M[i][l] + M[j][k] - tol for all i<j, k<l. Adjacent
// pairs (j = i+1, l = k+1) are sufficient and are what gets checked.
bool is_inverse_monge(const Matrix& m, double tol);

// Total valuation realized by an allocation.
double social_welfare(const Instance& inst, const Assignment& a);

struct AuditReport {
  bool envy_free = false;
  bool individually_rational = false;
  bool perfect = false;
  bool revenue_consistent = false;
  double worst_violation = 0.0;  // most negative slack seen, 0 if none
  // (buyer, item) pairs beyond tolerance; item == the buyer's own item marks
  // an individual-rationality violation, anything else an envy violation.
  std::vector<std::pair<int, int>> violating_pairs;

  bool all_ok() const {
    return envy_free && individually_rational && perfect && revenue_consistent;
  }
};

// Itemized correctness check of an outcome against an instance: every buyer
// weakly prefers their own item at these prices, nobody pays above value,
// every item is sold exactly once, and revenue matches the price sum.
AuditReport audit_envy_free(const Instance& inst, const Outcome& out, double tol);

}  // namespace efpm
