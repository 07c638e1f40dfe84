#include "curvegraph/chains.hpp"

#include <string>

#include "curvegraph/error.hpp"

namespace curvegraph {

BirthDeathChain associated_bdc(const WeightedGraph& g, const RootedDecomposition& decomp) {
  std::vector<Rational> measures;
  std::vector<Rational> weights;
  for (std::size_t r = 0; r <= decomp.horizon(); ++r) {
    measures.push_back(decomp.sphere_volume(g, r));
    if (!decomp.has_outer(r)) continue;
    Rational boundary(0);
    for (VertexIndex z : decomp.spheres[r]) {
      for (const auto& n : g.neighbors(z)) {
        if (decomp.radius_of(n.index) == r + 1) boundary += n.weight;
      }
    }
    weights.push_back(boundary);
  }
  return BirthDeathChain(std::move(measures), std::move(weights));
}

BirthDeathChain associated_bdc(const WeightedGraph& g, std::string_view root) {
  return associated_bdc(g, rooted_decomposition(g, root));
}

ModelVerdict is_model(const WeightedGraph& g, std::string_view root) {
  return is_model(g, rooted_decomposition(g, root));
}

ModelVerdict is_model(const WeightedGraph& g, const RootedDecomposition& decomp) {
  ModelVerdict verdict;
  auto check_side = [&](std::size_t r, Side side) {
    const auto& sphere = decomp.spheres[r];
    const VertexIndex first = sphere.front();
    const Rational reference = side == Side::inner ? k_minus(g, decomp, first) : k_plus(g, decomp, first);
    for (VertexIndex v : sphere) {
      const Rational value = side == Side::inner ? k_minus(g, decomp, v) : k_plus(g, decomp, v);
      if (value != reference) {
        verdict.failures.push_back({r, side, g.label(first), g.label(v), reference, value});
        return;
      }
    }
  };
  for (std::size_t r = 0; r <= decomp.horizon(); ++r) {
    check_side(r, Side::inner);
    if (decomp.has_outer(r)) check_side(r, Side::outer);
  }
  verdict.is_model = verdict.failures.empty();
  return verdict;
}

WeightedGraph bdc_as_graph(const BirthDeathChain& chain) {
  RawGraph raw;
  for (std::size_t r = 0; r <= chain.horizon(); ++r) raw.vertices.push_back({std::to_string(r), chain.measure(r)});
  for (std::size_t r = 0; r < chain.horizon(); ++r) {
    raw.edges.push_back({std::to_string(r), std::to_string(r + 1), chain.weight(r)});
  }
  return validate_graph(raw);
}

SphereVolumeStep sphere_volume_step(const WeightedGraph& g, const RootedDecomposition& decomp, std::size_t r) {
  if (!decomp.has_outer(r)) {
    throw Error(ErrorKind::horizon_exceeded, "volume step at r=" + std::to_string(r) + " needs r+1 <= horizon " +
                                                 std::to_string(decomp.horizon()));
  }
  return {r, decomp.sphere_volume(g, r) * average_curvature(g, decomp, r, Side::outer),
          decomp.sphere_volume(g, r + 1) * average_curvature(g, decomp, r + 1, Side::inner)};
}

SphereVolumeStep sphere_volume_step(const BirthDeathChain& chain, std::size_t r) {
  if (r >= chain.horizon()) {
    throw Error(ErrorKind::horizon_exceeded, "volume step at r=" + std::to_string(r) + " needs r+1 <= horizon " +
                                                 std::to_string(chain.horizon()));
  }
  return {r, chain.measure(r) * chain.k_plus(r), chain.measure(r + 1) * chain.k_minus(r + 1)};
}

BirthDeathChain make_unweighted_chain(std::size_t n) {
  return BirthDeathChain(std::vector<Rational>(n + 1, Rational(1)), std::vector<Rational>(n, Rational(1)));
}

BirthDeathChain make_example_gprime(std::size_t n) {
  std::vector<Rational> m;
  std::vector<Rational> b;
  for (std::size_t r = 0; r <= n; ++r) {
    const long next = static_cast<long>(r) + 1;
    m.push_back(Rational(next));
    if (r < n) b.push_back(rational(1, next * next));
  }
  return BirthDeathChain(std::move(m), std::move(b));
}

WeightedGraph make_mirror_model(const BirthDeathChain& chain) {
  RawGraph raw;
  const long horizon = static_cast<long>(chain.horizon());
  for (long x = -horizon; x <= horizon; ++x) {
    raw.vertices.push_back({std::to_string(x), chain.measure(static_cast<std::size_t>(x < 0 ? -x : x))});
  }
  for (long r = 0; r < horizon; ++r) {
    const Rational& w = chain.weight(static_cast<std::size_t>(r));
    raw.edges.push_back({std::to_string(r), std::to_string(r + 1), w});
    raw.edges.push_back({std::to_string(-r), std::to_string(-r - 1), w});
  }
  return validate_graph(raw);
}

BirthDeathChain make_ollivier_matching_chain(const std::vector<Rational>& a) {
  if (a.empty()) throw Error(ErrorKind::invalid_chain, "sequence must contain a_0 = 1");
  if (a.front() != 1) throw Error(ErrorKind::invalid_chain, "sequence must start with a_0 = 1, got " + to_string(a.front()));
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r] <= 0) {
      throw Error(ErrorKind::non_positive_entry, "a_" + std::to_string(r) + " = " + to_string(a[r]) + " is not positive");
    }
    if (r > 0 && a[r] > a[r - 1]) {
      throw Error(ErrorKind::sequence_not_nonincreasing,
                  "a_" + std::to_string(r) + " = " + to_string(a[r]) + " exceeds a_" + std::to_string(r - 1));
    }
  }
  // k_+(r) = a_r (k_+(0) = a_0 = 1) and k_-(r+1) = a_{r+1}:
  //   b(r, r+1) = k_+(r) m(r),  m(r+1) = b(r, r+1) / k_-(r+1).
  std::vector<Rational> m{Rational(1)};
  std::vector<Rational> b;
  for (std::size_t r = 0; r + 1 < a.size(); ++r) {
    b.push_back(a[r] * m[r]);
    m.push_back(b[r] / a[r + 1]);
  }
  return BirthDeathChain(std::move(m), std::move(b));
}

namespace {

RawGraph figure1_raw() {
  RawGraph raw;
  raw.vertices = {{"w", Rational(1)}, {"x", Rational(1)}, {"x'", Rational(1)}, {"y", Rational(1)},
                  {"y'", Rational(3)}, {"z", Rational(1)}, {"z'", Rational(3)}};
  raw.edges = {{"w", "x'", Rational(1)}, {"w", "x", Rational(1)},  {"x'", "y'", Rational(2)},
               {"x", "y", Rational(1)},  {"y", "z", Rational(1)},  {"y'", "z'", Rational(3)},
               {"x", "y'", Rational(1)}};
  return raw;
}

}  // namespace

WeightedGraph make_figure1() { return validate_graph(figure1_raw()); }

WeightedGraph make_figure1_perturbed() {
  RawGraph raw = figure1_raw();
  for (auto& e : raw.edges) {
    if (e.u == "x'" && e.v == "y'") e.weight = 1;
  }
  return validate_graph(raw);
}

}  // namespace curvegraph
