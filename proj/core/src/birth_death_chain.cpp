#include "curvegraph/birth_death_chain.hpp"

#include <string>

#include "curvegraph/error.hpp"

namespace curvegraph {

BirthDeathChain::BirthDeathChain(std::vector<Rational> measures, std::vector<Rational> weights)
    : measures_(std::move(measures)), weights_(std::move(weights)) {
  if (measures_.empty()) throw Error(ErrorKind::invalid_chain, "chain needs at least one measure");
  if (measures_.size() != weights_.size() + 1) {
    throw Error(ErrorKind::invalid_chain, "chain with " + std::to_string(measures_.size()) +
                                              " measures needs " + std::to_string(measures_.size() - 1) +
                                              " weights, got " + std::to_string(weights_.size()));
  }
  for (std::size_t r = 0; r < measures_.size(); ++r) {
    if (measures_[r] <= 0) {
      throw Error(ErrorKind::non_positive_entry, "chain measure m(" + std::to_string(r) + ") is not positive");
    }
  }
  for (std::size_t r = 0; r < weights_.size(); ++r) {
    if (weights_[r] <= 0) {
      throw Error(ErrorKind::non_positive_entry,
                  "chain weight b(" + std::to_string(r) + "," + std::to_string(r + 1) + ") is not positive");
    }
  }
}

const Rational& BirthDeathChain::measure(std::size_t r) const {
  if (r >= measures_.size()) {
    throw Error(ErrorKind::horizon_exceeded, "m(" + std::to_string(r) + ") beyond chain horizon " +
                                                 std::to_string(horizon()));
  }
  return measures_[r];
}

const Rational& BirthDeathChain::weight(std::size_t r) const {
  if (r >= weights_.size()) {
    throw Error(ErrorKind::horizon_exceeded, "b(" + std::to_string(r) + "," + std::to_string(r + 1) +
                                                 ") beyond chain horizon " + std::to_string(horizon()));
  }
  return weights_[r];
}

Rational BirthDeathChain::inner_weight(std::size_t r) const {
  if (r == 0) return Rational(0);
  return weight(r - 1);
}

Rational BirthDeathChain::k_plus(std::size_t r) const { return weight(r) / measure(r); }

Rational BirthDeathChain::k_minus(std::size_t r) const { return inner_weight(r) / measure(r); }

Rational BirthDeathChain::t(std::size_t r) const { return k_plus(r) - k_minus(r); }

Rational BirthDeathChain::ball_volume(std::size_t r) const {
  Rational total(0);
  for (std::size_t s = 0; s <= r; ++s) total += measure(s);
  return total;
}

}  // namespace curvegraph
