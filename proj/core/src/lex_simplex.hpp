#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "curvegraph/rational.hpp"

namespace curvegraph::detail {

/// Exact dense-tableau simplex over { z >= 0 : A z <= b } with b >= 0, so the
/// origin is a feasible starting basis and no phase one is needed.
///
/// solve() minimizes a list of objectives lexicographically: after objective k
/// is optimal, every nonbasic column with positive reduced cost is frozen at
/// zero, which pins the remaining search to the optimal face of objective k.
/// Entering and leaving choices follow Bland's rule.
class LexSimplex {
 public:
  using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

  explicit LexSimplex(std::size_t variables) : variables_(variables) {}

  /// Adds sum_j coeff_j z_j <= rhs. Requires rhs >= 0.
  void add_constraint(const SparseRow& row, const Rational& rhs);

  std::size_t variables() const { return variables_; }
  std::size_t constraints() const { return rows_.size(); }

  /// Returns the lexicographic optimum. Throws std::logic_error if an
  /// objective is unbounded.
  std::vector<Rational> solve(const std::vector<std::vector<Rational>>& objectives) const;

 private:
  std::size_t variables_;
  std::vector<SparseRow> rows_;
  std::vector<Rational> rhs_;
};

}  // namespace curvegraph::detail
