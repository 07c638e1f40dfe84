#include "lex_simplex.hpp"

#include <stdexcept>

namespace curvegraph::detail {

void LexSimplex::add_constraint(const SparseRow& row, const Rational& rhs) {
  if (rhs < 0) throw std::logic_error("LexSimplex: negative right-hand side");
  for (const auto& [col, coeff] : row) {
    if (col >= variables_) throw std::logic_error("LexSimplex: column out of range");
    (void)coeff;
  }
  rows_.push_back(row);
  rhs_.push_back(rhs);
}

std::vector<Rational> LexSimplex::solve(const std::vector<std::vector<Rational>>& objectives) const {
  const std::size_t m = rows_.size();
  const std::size_t cols = variables_ + m;  // structural columns, then slacks

  std::vector<std::vector<Rational>> tableau(m, std::vector<Rational>(cols));
  std::vector<Rational> rhs = rhs_;
  std::vector<std::size_t> basis(m);
  std::vector<bool> is_basic(cols, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [col, coeff] : rows_[i]) tableau[i][col] += coeff;
    tableau[i][variables_ + i] = 1;
    basis[i] = variables_ + i;
    is_basic[variables_ + i] = true;
  }

  // Reduced-cost rows, one per objective; all start at c since c_B = 0.
  std::vector<std::vector<Rational>> reduced;
  reduced.reserve(objectives.size());
  for (const auto& c : objectives) {
    if (c.size() != variables_) throw std::logic_error("LexSimplex: objective has wrong length");
    std::vector<Rational> row(cols);
    for (std::size_t j = 0; j < variables_; ++j) row[j] = c[j];
    reduced.push_back(std::move(row));
  }

  std::vector<bool> frozen(cols, false);
  std::vector<std::size_t> pivot_support;

  auto pivot = [&](std::size_t p, std::size_t q) {
    auto& prow = tableau[p];
    const Rational inv = 1 / prow[q];
    pivot_support.clear();
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        pivot_support.push_back(j);
      }
    }
    rhs[p] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == p || sgn(tableau[i][q]) == 0) continue;
      const Rational factor = tableau[i][q];
      auto& row = tableau[i];
      for (std::size_t j : pivot_support) row[j] -= factor * prow[j];
      rhs[i] -= factor * rhs[p];
    }
    for (auto& d : reduced) {
      if (sgn(d[q]) == 0) continue;
      const Rational factor = d[q];
      for (std::size_t j : pivot_support) d[j] -= factor * prow[j];
    }
    is_basic[basis[p]] = false;
    basis[p] = q;
    is_basic[q] = true;
  };

  for (auto& d : reduced) {
    for (;;) {
      std::size_t entering = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!frozen[j] && !is_basic[j] && sgn(d[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == cols) break;

      std::size_t leaving = m;
      Rational best_ratio;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(tableau[i][entering]) <= 0) continue;
        const Rational ratio = rhs[i] / tableau[i][entering];
        if (leaving == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == m) throw std::logic_error("LexSimplex: unbounded objective");
      pivot(leaving, entering);
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (!is_basic[j] && sgn(d[j]) > 0) frozen[j] = true;
    }
  }

  std::vector<Rational> z(variables_);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < variables_) z[basis[i]] = rhs[i];
  }
  return z;
}

}  // namespace curvegraph::detail
