#include <algorithm>
#include <set>
#include <string>

#include "curvegraph/audit.hpp"

namespace curvegraph::audit {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rational Rng::positive_rational(long max_num, long max_den) {
  return rational(uniform(1, max_num), uniform(1, max_den));
}

Rational Rng::at_least_one(long spread, long max_den) {
  const long den = uniform(1, max_den);
  return rational(den + uniform(0, spread * den), den);
}

WeightedGraph random_graph(Rng& rng, std::size_t min_vertices, std::size_t max_vertices) {
  const auto n = static_cast<std::size_t>(rng.uniform(static_cast<long>(min_vertices), static_cast<long>(max_vertices)));
  RawGraph raw;
  for (std::size_t v = 0; v < n; ++v) {
    // Mostly unit measures so that spheres mix equal and unequal masses.
    const Rational m = rng.chance(1, 2) ? Rational(1) : rng.positive_rational(4, 3);
    raw.vertices.push_back({std::to_string(v), m});
  }
  std::set<std::pair<std::size_t, std::size_t>> used;
  auto add_edge = [&](std::size_t u, std::size_t v) {
    if (u == v || !used.insert(std::minmax(u, v)).second) return;
    const Rational b = rng.chance(1, 2) ? Rational(1) : rng.positive_rational(4, 3);
    raw.edges.push_back({std::to_string(u), std::to_string(v), b});
  };
  for (std::size_t v = 1; v < n; ++v) add_edge(v, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(v) - 1)));
  const std::size_t extra = n / 3 + static_cast<std::size_t>(rng.uniform(0, 2));
  for (std::size_t i = 0; i < extra && n > 2; ++i) {
    add_edge(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1)),
             static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1)));
  }
  return validate_graph(raw);
}

BirthDeathChain random_chain(Rng& rng, std::size_t min_horizon, std::size_t max_horizon) {
  const auto h = static_cast<std::size_t>(rng.uniform(static_cast<long>(min_horizon), static_cast<long>(max_horizon)));
  std::vector<Rational> m, b;
  for (std::size_t r = 0; r <= h; ++r) {
    m.push_back(rng.positive_rational(6, 4));
    if (r < h) b.push_back(rng.positive_rational(6, 4));
  }
  return BirthDeathChain(std::move(m), std::move(b));
}

BirthDeathChain chain_from_curvatures(const Rational& m0, const std::vector<Rational>& k_plus,
                                      const std::vector<Rational>& k_minus) {
  std::vector<Rational> m{m0};
  std::vector<Rational> b;
  for (std::size_t r = 0; r < k_plus.size(); ++r) {
    b.push_back(k_plus[r] * m[r]);
    m.push_back(b[r] / k_minus.at(r + 1));
  }
  return BirthDeathChain(std::move(m), std::move(b));
}

BirthDeathChain dominating_chain(Rng& rng, const BirthDeathChain& base, std::size_t from) {
  const std::size_t h = base.horizon();
  std::vector<Rational> kp(h), km(h + 1);
  for (std::size_t r = 0; r < h; ++r) {
    kp[r] = r >= from ? Rational(base.k_plus(r) * rng.at_least_one(2, 3)) : rng.positive_rational(6, 4);
  }
  for (std::size_t r = 1; r <= h; ++r) {
    km[r] = r >= from ? Rational(base.k_minus(r) / rng.at_least_one(2, 3)) : rng.positive_rational(6, 4);
  }
  const Rational m0 = from == 0 ? base.measure(0) : rng.positive_rational(6, 4);
  return chain_from_curvatures(m0, kp, km);
}

BirthDeathChain matched_root_chain(Rng& rng, const BirthDeathChain& base) {
  const std::size_t h = base.horizon();
  std::vector<Rational> m, b;
  for (std::size_t r = 0; r <= h; ++r) {
    m.push_back(rng.positive_rational(6, 4));
    if (r < h) b.push_back(rng.positive_rational(6, 4));
  }
  b[0] = base.k_plus(0) * m[0];
  return BirthDeathChain(std::move(m), std::move(b));
}

std::vector<Rational> random_admissible_sequence(Rng& rng, std::size_t len) {
  std::vector<Rational> a{Rational(1)};
  for (std::size_t r = 1; r <= len; ++r) {
    // Hold the value sometimes so equality steps are covered too.
    a.push_back(rng.chance(1, 3) ? a.back() : Rational(a.back() / rng.at_least_one(1, 4)));
  }
  return a;
}

}  // namespace curvegraph::audit
