// Ollivier-Ricci curvature through its Laplacian (Lipschitz-dual) form.
//
// grad_xy(Laplacian f) only reads f on S = {x, y} + N(x) + N(y), and any
// function on S that is 1-Lipschitz for the graph metric extends to a global
// 1-Lipschitz function (McShane extension), so optimizing over S is exact.
// With f(x) = 0 and f(y) = d(x, y) fixed, the feasible set is a
// difference-constraint polytope with integer data, hence integral.

#include <algorithm>
#include <sstream>
#include <string>

#include "curvegraph/curvature.hpp"
#include "curvegraph/error.hpp"
#include "lex_simplex.hpp"

namespace curvegraph {
namespace {

std::vector<VertexIndex> support_of(const WeightedGraph& g, VertexIndex x, VertexIndex y) {
  std::vector<VertexIndex> s{x, y};
  for (const auto& n : g.neighbors(x)) s.push_back(n.index);
  for (const auto& n : g.neighbors(y)) s.push_back(n.index);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::size_t position(const std::vector<VertexIndex>& sorted, VertexIndex v) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

// Coefficients c with  Laplacian f(y) - Laplacian f(x) = sum_z c_z f(z).
std::vector<Rational> objective_coefficients(const WeightedGraph& g, const std::vector<VertexIndex>& support,
                                             VertexIndex x, VertexIndex y) {
  std::vector<Rational> c(support.size());
  for (const auto& n : g.neighbors(y)) {
    const Rational share = n.weight / g.measure(y);
    c[position(support, y)] += share;
    c[position(support, n.index)] -= share;
  }
  for (const auto& n : g.neighbors(x)) {
    const Rational share = n.weight / g.measure(x);
    c[position(support, x)] -= share;
    c[position(support, n.index)] += share;
  }
  return c;
}

}  // namespace

OllivierResult ollivier_pair(const WeightedGraph& g, VertexIndex x, VertexIndex y) {
  if (x >= g.size() || y >= g.size()) throw Error(ErrorKind::unknown_vertex, "vertex index out of range");
  if (x == y) throw Error(ErrorKind::same_vertex, "Ollivier curvature needs two distinct vertices, got \"" + g.label(x) + "\" twice");

  OllivierResult result;
  result.x = x;
  result.y = y;
  result.support = support_of(g, x, y);
  const auto& s = result.support;
  const std::size_t n = s.size();

  std::vector<std::vector<long>> dist(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto from = hop_distances(g, s[i]);
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = static_cast<long>(from[s[j]]);
  }
  const std::size_t px = position(s, x);
  const std::size_t py = position(s, y);
  const long d_xy = dist[px][py];
  result.distance = static_cast<std::size_t>(d_xy);

  // Free vertices are the support minus {x, y}; column k <-> free[k].
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != px && i != py) free.push_back(i);
  }
  // Bounds forced by the fixed values at x and y. Both are 1-Lipschitz, so
  // shifting by the lower bound keeps every right-hand side nonnegative.
  std::vector<long> lower(n), upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    lower[i] = std::max(-dist[i][px], d_xy - dist[i][py]);
    upper[i] = std::min(dist[i][px], d_xy + dist[i][py]);
  }

  detail::LexSimplex lp(free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    const std::size_t v = free[k];
    lp.add_constraint({{k, Rational(1)}}, Rational(upper[v] - lower[v]));
  }
  for (std::size_t a = 0; a < free.size(); ++a) {
    for (std::size_t b = a + 1; b < free.size(); ++b) {
      const std::size_t u = free[a];
      const std::size_t v = free[b];
      // A pair constraint is implied when some other support vertex lies on a
      // geodesic between u and v.
      bool implied = false;
      for (std::size_t w = 0; w < n && !implied; ++w) {
        implied = w != u && w != v && dist[u][w] + dist[w][v] == dist[u][v];
      }
      if (implied) continue;
      // g_v - g_u <= d(u,v) + L_u - L_v, and the mirror image.
      const long up = dist[u][v] + lower[u] - lower[v];
      if (upper[v] - lower[v] > up) lp.add_constraint({{b, Rational(1)}, {a, Rational(-1)}}, Rational(up));
      const long down = dist[u][v] + lower[v] - lower[u];
      if (upper[u] - lower[u] > down) lp.add_constraint({{a, Rational(1)}, {b, Rational(-1)}}, Rational(down));
    }
  }

  const std::vector<Rational> c = objective_coefficients(g, s, x, y);
  std::vector<std::vector<Rational>> objectives;
  objectives.reserve(free.size() + 1);
  std::vector<Rational> primary(free.size());
  for (std::size_t k = 0; k < free.size(); ++k) primary[k] = c[free[k]];
  objectives.push_back(std::move(primary));
  for (std::size_t k = 0; k < free.size(); ++k) {
    std::vector<Rational> unit(free.size());
    unit[k] = 1;
    objectives.push_back(std::move(unit));
  }
  const std::vector<Rational> shifted = lp.solve(objectives);

  result.witness.assign(n, Rational(0));
  result.witness[px] = 0;
  result.witness[py] = d_xy;
  for (std::size_t k = 0; k < free.size(); ++k) result.witness[free[k]] = shifted[k] + lower[free[k]];

  Rational total(0);
  for (std::size_t i = 0; i < n; ++i) total += c[i] * result.witness[i];
  result.value = total / d_xy;
  return result;
}

OllivierResult ollivier_pair(const WeightedGraph& g, std::string_view x, std::string_view y) {
  return ollivier_pair(g, g.index(x), g.index(y));
}

bool witness_is_valid(const WeightedGraph& g, const OllivierResult& result, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const auto& s = result.support;
  if (s.size() != result.witness.size()) return fail("support and witness sizes differ");
  if (!std::is_sorted(s.begin(), s.end())) return fail("support is not sorted");
  for (const auto& value : result.witness) {
    if (!is_integer(value)) return fail("witness value " + to_string(value) + " is not an integer");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto from = hop_distances(g, s[i]);
    for (std::size_t j = 0; j < s.size(); ++j) {
      const Rational gap = abs(result.witness[i] - result.witness[j]);
      if (gap > Rational(static_cast<long>(from[s[j]]))) {
        std::ostringstream msg;
        msg << "not 1-Lipschitz on (" << g.label(s[i]) << ", " << g.label(s[j]) << ")";
        return fail(msg.str());
      }
    }
  }
  const auto d_xy = distance(g, result.x, result.y);
  if (d_xy != result.distance) return fail("stored distance is wrong");
  const Rational dx(static_cast<long>(d_xy));
  if (result.witness_at(result.y) - result.witness_at(result.x) != dx) {
    return fail("witness(y) - witness(x) differs from d(x, y)");
  }
  // Laplacian at x and y from witness values; all neighbors lie in the support.
  auto local_laplacian = [&](VertexIndex v) {
    Rational total(0);
    for (const auto& nb : g.neighbors(v)) total += nb.weight * (result.witness_at(v) - result.witness_at(nb.index));
    return Rational(total / g.measure(v));
  };
  const Rational value = (local_laplacian(result.y) - local_laplacian(result.x)) / dx;
  if (value != result.value) return fail("value " + to_string(result.value) + " but witness gives " + to_string(value));
  return true;
}

}  // namespace curvegraph
