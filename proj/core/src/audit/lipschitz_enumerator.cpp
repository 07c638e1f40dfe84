#include <algorithm>
#include <optional>
#include <stdexcept>

#include "curvegraph/audit.hpp"

namespace curvegraph::audit {
namespace {

std::vector<VertexIndex> closed_neighborhood_pair(const WeightedGraph& g, VertexIndex x, VertexIndex y) {
  std::vector<VertexIndex> out{x, y};
  for (VertexIndex v : {x, y}) {
    for (const auto& n : g.neighbors(v)) out.push_back(n.index);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Search {
  const WeightedGraph& g;
  std::vector<VertexIndex> support;
  std::vector<std::vector<long>> dist;
  std::size_t px = 0, py = 0;
  long d_xy = 0;
  std::vector<long> f;
  std::optional<Rational> best;
  std::vector<long> best_f;
  std::size_t feasible = 0;

  Rational laplacian_at(std::size_t i) const {
    Rational total(0);
    const VertexIndex v = support[i];
    for (const auto& n : g.neighbors(v)) {
      const auto j = static_cast<std::size_t>(std::find(support.begin(), support.end(), n.index) - support.begin());
      total += n.weight * Rational(f[i] - f[j]);
    }
    return total / g.measure(v);
  }

  void visit(std::size_t i) {
    if (i == support.size()) {
      ++feasible;
      const Rational value = (laplacian_at(py) - laplacian_at(px)) / d_xy;
      if (!best || value < *best) {
        best = value;
        best_f = f;
      }
      return;
    }
    long lo = -dist[i][px], hi = dist[i][px];
    if (i == px) lo = hi = 0;
    if (i == py) lo = hi = d_xy;
    for (long value = lo; value <= hi; ++value) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = std::abs(value - f[j]) <= dist[i][j];
      if (!ok) continue;
      f[i] = value;
      visit(i + 1);
    }
  }
};

}  // namespace

std::size_t support_size(const WeightedGraph& g, VertexIndex x, VertexIndex y) {
  return closed_neighborhood_pair(g, x, y).size();
}

EnumerationResult enumerate_lipschitz_optimum(const WeightedGraph& g, VertexIndex x, VertexIndex y) {
  if (x == y) throw std::invalid_argument("enumerate_lipschitz_optimum: x == y");
  Search s{g, closed_neighborhood_pair(g, x, y), {}, 0, 0, 0, {}, std::nullopt, {}, 0};
  const std::size_t n = s.support.size();
  s.dist.assign(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto from = hop_distances(g, s.support[i]);
    for (std::size_t j = 0; j < n; ++j) s.dist[i][j] = static_cast<long>(from[s.support[j]]);
  }
  s.px = static_cast<std::size_t>(std::find(s.support.begin(), s.support.end(), x) - s.support.begin());
  s.py = static_cast<std::size_t>(std::find(s.support.begin(), s.support.end(), y) - s.support.begin());
  s.d_xy = s.dist[s.px][s.py];
  s.f.assign(n, 0);
  s.visit(0);
  if (!s.best) throw std::logic_error("enumerate_lipschitz_optimum: no feasible function");

  EnumerationResult out;
  out.value = *s.best;
  out.support = s.support;
  for (long v : s.best_f) out.witness.emplace_back(v);
  out.feasible = s.feasible;
  return out;
}

}  // namespace curvegraph::audit
