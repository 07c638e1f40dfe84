#pragma once

#include <cstddef>
#include <vector>

#include "curvegraph/rational.hpp"

namespace curvegraph {

/// Weighted path on {0, ..., R}: measures m(0..R) and edge weights
/// b(r, r+1) for r < R. All entries positive.
class BirthDeathChain {
 public:
  /// Throws Error{invalid_chain} when the lengths disagree or the chain is
  /// empty, and Error{non_positive_entry} for a non-positive entry.
  BirthDeathChain(std::vector<Rational> measures, std::vector<Rational> weights);

  std::size_t horizon() const { return weights_.size(); }
  const std::vector<Rational>& measures() const { return measures_; }
  const std::vector<Rational>& weights() const { return weights_; }

  const Rational& measure(std::size_t r) const;
  /// b(r, r+1); throws HorizonExceeded for r >= horizon.
  const Rational& weight(std::size_t r) const;
  /// b(r, r-1) with b(0, -1) = 0.
  Rational inner_weight(std::size_t r) const;

  Rational k_plus(std::size_t r) const;
  Rational k_minus(std::size_t r) const;
  /// t(r) = k_+(r) - k_-(r).
  Rational t(std::size_t r) const;

  /// Volume m(B_r) of the ball of radius r around 0.
  Rational ball_volume(std::size_t r) const;

  friend bool operator==(const BirthDeathChain&, const BirthDeathChain&) = default;

 private:
  std::vector<Rational> measures_;
  std::vector<Rational> weights_;
};

}  // namespace curvegraph
