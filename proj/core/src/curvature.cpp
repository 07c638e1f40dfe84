#include "curvegraph/curvature.hpp"

#include <string>

#include "curvegraph/error.hpp"

namespace curvegraph {
namespace {

Rational weight_into_sphere(const WeightedGraph& g, const RootedDecomposition& decomp, VertexIndex x,
                            std::size_t target) {
  Rational total(0);
  for (const auto& n : g.neighbors(x)) {
    if (decomp.radius_of(n.index) == target) total += n.weight;
  }
  return total;
}

void require_outer(const WeightedGraph& g, const RootedDecomposition& decomp, VertexIndex x) {
  const std::size_t r = decomp.radius_of(x);
  if (!decomp.has_outer(r)) {
    throw Error(ErrorKind::horizon_exceeded, "k_+ at \"" + g.label(x) + "\" needs sphere " + std::to_string(r + 1) +
                                                 " beyond horizon " + std::to_string(decomp.horizon()));
  }
}

}  // namespace

std::string_view to_string(Side side) { return side == Side::inner ? "inner" : "outer"; }

Rational k_minus(const WeightedGraph& g, const RootedDecomposition& decomp, VertexIndex x) {
  const std::size_t r = decomp.radius_of(x);
  if (r == 0) return Rational(0);
  return weight_into_sphere(g, decomp, x, r - 1) / g.measure(x);
}

Rational k_plus(const WeightedGraph& g, const RootedDecomposition& decomp, VertexIndex x) {
  require_outer(g, decomp, x);
  return weight_into_sphere(g, decomp, x, decomp.radius_of(x) + 1) / g.measure(x);
}

InnerOuter inner_outer(const WeightedGraph& g, const RootedDecomposition& decomp, VertexIndex x) {
  return {k_minus(g, decomp, x), k_plus(g, decomp, x)};
}

Rational average_curvature(const WeightedGraph& g, const RootedDecomposition& decomp, std::size_t r, Side side) {
  if (r > decomp.horizon() || (side == Side::outer && !decomp.has_outer(r))) {
    throw Error(ErrorKind::horizon_exceeded, "average " + std::string(to_string(side)) + " curvature at r=" +
                                                 std::to_string(r) + " exceeds horizon " +
                                                 std::to_string(decomp.horizon()));
  }
  Rational weighted(0);
  for (VertexIndex z : decomp.spheres[r]) {
    const Rational k = side == Side::inner ? k_minus(g, decomp, z) : k_plus(g, decomp, z);
    weighted += k * g.measure(z);
  }
  return weighted / decomp.sphere_volume(g, r);
}

std::optional<Rational> RadiusCurvature::t() const {
  if (!avg_k_plus) return std::nullopt;
  return Rational(*avg_k_plus - avg_k_minus);
}

std::optional<std::size_t> CurvatureProfile::valid_radius() const {
  if (horizon == 0) return std::nullopt;
  return horizon - 1;
}

CurvatureProfile curvature_profile(const WeightedGraph& g, const RootedDecomposition& decomp) {
  CurvatureProfile p;
  p.horizon = decomp.horizon();
  for (std::size_t r = 0; r <= decomp.horizon(); ++r) {
    const bool outer = decomp.has_outer(r);
    Rational boundary(0);
    for (VertexIndex z : decomp.spheres[r]) {
      VertexCurvature vc{z, r, k_minus(g, decomp, z), std::nullopt};
      if (outer) {
        vc.k_plus = k_plus(g, decomp, z);
        boundary += weight_into_sphere(g, decomp, z, r + 1);
      }
      p.per_vertex.push_back(std::move(vc));
    }
    RadiusCurvature rc{r, average_curvature(g, decomp, r, Side::inner), std::nullopt, decomp.sphere_volume(g, r),
                       std::nullopt};
    if (outer) {
      rc.avg_k_plus = average_curvature(g, decomp, r, Side::outer);
      rc.boundary = boundary;
    }
    p.per_radius.push_back(std::move(rc));
  }
  return p;
}

const Rational& OllivierResult::witness_at(VertexIndex v) const {
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] == v) return witness[i];
  }
  throw Error(ErrorKind::unknown_vertex, "vertex index " + std::to_string(v) + " is outside the witness support");
}

const OllivierResult& OllivierCache::pair(VertexIndex x, VertexIndex y) {
  const auto key = std::make_pair(x, y);
  auto it = results_.find(key);
  if (it == results_.end()) it = results_.emplace(key, ollivier_pair(*graph_, x, y)).first;
  return it->second;
}

Rational sphere_curvature(const WeightedGraph& g, const RootedDecomposition& decomp, std::size_t r) {
  OllivierCache cache(g);
  return sphere_curvature(g, decomp, r, cache);
}

Rational sphere_curvature(const WeightedGraph& g, const RootedDecomposition& decomp, std::size_t r,
                          OllivierCache& cache) {
  if (r < 1 || r > decomp.horizon()) {
    throw Error(ErrorKind::horizon_exceeded, "sphere curvature needs 1 <= r <= " + std::to_string(decomp.horizon()) +
                                                 ", got r=" + std::to_string(r));
  }
  if (decomp.spheres[r].empty()) throw Error(ErrorKind::empty_sphere, "sphere " + std::to_string(r) + " is empty");
  std::optional<Rational> best;
  for (VertexIndex y : decomp.spheres[r]) {
    std::optional<Rational> worst;
    for (const auto& n : g.neighbors(y)) {
      if (decomp.radius_of(n.index) + 1 != r) continue;
      const Rational& k = cache.pair(n.index, y).value;
      if (!worst || k > *worst) worst = k;
    }
    // Every vertex of S_r has a neighbor in S_{r-1}.
    if (!best || *worst < *best) best = *worst;
  }
  return *best;
}

Rational bdc_ollivier_closed_form(const BirthDeathChain& chain, std::size_t r, std::size_t R) {
  if (r >= R) {
    throw Error(ErrorKind::bad_radius_order,
                "closed form needs r < R, got r=" + std::to_string(r) + ", R=" + std::to_string(R));
  }
  if (R + 1 > chain.horizon()) {
    throw Error(ErrorKind::horizon_exceeded, "closed form at R=" + std::to_string(R) + " needs b(R,R+1); chain horizon is " +
                                                 std::to_string(chain.horizon()));
  }
  const Rational span(static_cast<long>(R - r));
  const Rational far = (chain.inner_weight(R) - chain.weight(R)) / (span * chain.measure(R));
  const Rational near = (chain.inner_weight(r) - chain.weight(r)) / (span * chain.measure(r));
  return far - near;
}

Rational bdc_sphere_curvature(const BirthDeathChain& chain, std::size_t R) {
  if (R == 0) throw Error(ErrorKind::bad_radius_order, "sphere curvature starts at R=1");
  return bdc_ollivier_closed_form(chain, R - 1, R);
}

}  // namespace curvegraph
