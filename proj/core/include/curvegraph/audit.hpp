#pragma once

// Test and verification support: seeded instance generators and the
// brute-force oracle for Ollivier curvature. Nothing in curvegraph::core
// depends on this header.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "curvegraph/birth_death_chain.hpp"
#include "curvegraph/graph.hpp"
#include "curvegraph/rational.hpp"

namespace curvegraph::audit {

/// Seeded generator with platform-independent derived draws (no
/// std::*_distribution, whose output is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// p / q with p in [1, max_num], q in [1, max_den].
  Rational positive_rational(long max_num, long max_den);
  /// Rational in [1, 1 + spread] with denominator up to max_den.
  Rational at_least_one(long spread, long max_den);
  bool chance(long num, long den) { return uniform(1, den) <= num; }

 private:
  std::mt19937_64 engine_;
};

/// Connected graph on labels "0".."n-1", 1 <= n <= max_vertices: a random
/// spanning tree plus a few extra edges, small rational weights and measures.
WeightedGraph random_graph(Rng& rng, std::size_t min_vertices, std::size_t max_vertices);

/// Chain with horizon in [min_horizon, max_horizon] and small rational entries.
BirthDeathChain random_chain(Rng& rng, std::size_t min_horizon, std::size_t max_horizon);

/// Chain from m(0) and curvature sequences: k_plus[r] for r < R, k_minus[r]
/// for 1 <= r <= R (k_minus[0] ignored).
BirthDeathChain chain_from_curvatures(const Rational& m0, const std::vector<Rational>& k_plus,
                                      const std::vector<Rational>& k_minus);

/// Chain whose curvatures dominate `base` from radius `from` on: k_+ scaled up
/// and k_- scaled down by rationals >= 1. For from == 0 the root measure is
/// shared; below `from` the curvatures are resampled freely.
BirthDeathChain dominating_chain(Rng& rng, const BirthDeathChain& base, std::size_t from);

/// Random chain with the same k_+(0) as `base` and the same horizon.
BirthDeathChain matched_root_chain(Rng& rng, const BirthDeathChain& base);

/// 1 = a_0 >= a_1 >= ... >= a_len > 0.
std::vector<Rational> random_admissible_sequence(Rng& rng, std::size_t len);

/// Exhaustive search over integer functions on {x, y} + N(x) + N(y) with
/// f(x) = 0, f(y) = d(x, y), f(u) in [-d(u, x), d(u, x)], pairwise
/// |f(u) - f(v)| <= d(u, v). Returns the minimum of grad_xy(Laplacian f) and the
/// lexicographically smallest minimizer.
struct EnumerationResult {
  Rational value;
  std::vector<VertexIndex> support;
  std::vector<Rational> witness;
  std::size_t feasible = 0;  // number of feasible functions visited
};

EnumerationResult enumerate_lipschitz_optimum(const WeightedGraph& g, VertexIndex x, VertexIndex y);

/// Size of {x, y} + N(x) + N(y).
std::size_t support_size(const WeightedGraph& g, VertexIndex x, VertexIndex y);

}  // namespace curvegraph::audit
