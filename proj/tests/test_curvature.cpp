#include <gtest/gtest.h>

#include <map>

#include "curvegraph/audit.hpp"
#include "curvegraph/chains.hpp"
#include "curvegraph/curvature.hpp"
#include "curvegraph/error.hpp"
#include "support.hpp"

using namespace curvegraph;

namespace {

// All-pairs hop distances by Floyd-Warshall, independent of the BFS in core.
std::vector<std::vector<std::size_t>> floyd(const WeightedGraph& g) {
  const std::size_t n = g.size();
  const std::size_t inf = n + 1;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.adjacent(i, j)) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace

TEST(Curvature, Figure1InnerOuter) {
  const auto g = make_figure1();
  const auto d = rooted_decomposition(g, "w");
  const std::map<std::string, std::pair<int, int>> expected{
      {"x", {1, 2}}, {"x'", {1, 2}}, {"y", {1, 1}}, {"y'", {1, 1}}};
  for (const auto& [label, km_kp] : expected) {
    const auto v = g.index(label);
    EXPECT_EQ(k_minus(g, d, v), km_kp.first) << label;
    EXPECT_EQ(k_plus(g, d, v), km_kp.second) << label;
  }
  EXPECT_EQ(k_minus(g, d, g.index("w")), 0);
  EXPECT_EQ(k_plus(g, d, g.index("w")), 2);
  EXPECT_EQ(k_minus(g, d, g.index("z'")), 1);
  EXPECT_ERROR_KIND(k_plus(g, d, g.index("z'")), ErrorKind::horizon_exceeded);
}

TEST(Curvature, ProfileMarksHorizon) {
  const auto g = make_figure1();
  const auto p = curvature_profile(g, rooted_decomposition(g, "w"));
  ASSERT_EQ(p.per_radius.size(), 4u);
  EXPECT_EQ(p.horizon, 3u);
  EXPECT_EQ(p.valid_radius(), std::optional<std::size_t>(2));
  EXPECT_FALSE(p.per_radius[3].avg_k_plus.has_value());
  EXPECT_EQ(p.per_radius[1].sphere_volume, 2);
  EXPECT_EQ(*p.per_radius[1].t(), 1);
  EXPECT_EQ(p.per_vertex.size(), g.size());
}

TEST(Curvature, AverageIsMeasureWeighted) {
  // Root r with children a (m=1, b=1) and c (m=3, b=2); a and c both reach leaf e.
  const auto g = testing_support::build({{"r", "1"}, {"a", "1"}, {"c", "3"}, {"e", "1"}},
                                        {{"r", "a", "1"}, {"r", "c", "2"}, {"a", "e", "1"}, {"c", "e", "5"}});
  const auto d = rooted_decomposition(g, "r");
  // Inner average: (1 + 2) / (1 + 3); outer average: (1 + 5) / 4.
  EXPECT_EQ(average_curvature(g, d, 1, Side::inner), rational(3, 4));
  EXPECT_EQ(average_curvature(g, d, 1, Side::outer), rational(3, 2));
  EXPECT_ERROR_KIND(average_curvature(g, d, 2, Side::outer), ErrorKind::horizon_exceeded);
}

TEST(Curvature, AgreesWithIndependentOracleOnRandomGraphs) {
  audit::Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const auto g = audit::random_graph(rng, 1, 30);
    const auto dist = floyd(g);
    const VertexIndex root = static_cast<VertexIndex>(rng.uniform(0, static_cast<long>(g.size()) - 1));
    const auto d = rooted_decomposition(g, root);
    std::size_t ecc = 0;
    for (std::size_t v = 0; v < g.size(); ++v) ecc = std::max(ecc, dist[root][v]);
    ASSERT_EQ(d.horizon(), ecc);
    for (std::size_t v = 0; v < g.size(); ++v) {
      Rational inner(0), outer(0);
      for (std::size_t u = 0; u < g.size(); ++u) {
        if (!g.adjacent(u, v)) continue;
        if (dist[root][u] + 1 == dist[root][v]) inner += g.weight(u, v);
        if (dist[root][u] == dist[root][v] + 1) outer += g.weight(u, v);
      }
      inner /= g.measure(v);
      outer /= g.measure(v);
      EXPECT_EQ(k_minus(g, d, v), inner);
      if (dist[root][v] < ecc) EXPECT_EQ(k_plus(g, d, v), outer);
    }
  }
}

TEST(SphereCurvature, Figure1) {
  const auto g = make_figure1();
  const auto d = rooted_decomposition(g, "w");
  EXPECT_EQ(sphere_curvature(g, d, 1), 1);
  EXPECT_EQ(sphere_curvature(g, d, 2), -1);
  EXPECT_EQ(sphere_curvature(g, d, 3), 1);
  EXPECT_ERROR_KIND(sphere_curvature(g, d, 0), ErrorKind::horizon_exceeded);
  EXPECT_ERROR_KIND(sphere_curvature(g, d, 4), ErrorKind::horizon_exceeded);
}

TEST(SphereCurvature, ChainClosedFormByHand) {
  // m = (1, 2, 4, 4), b = (2, 4, 4): the associated chain of make_figure1() at w.
  const BirthDeathChain c({Rational(1), Rational(2), Rational(4), Rational(4)}, {Rational(2), Rational(4), Rational(4)});
  // k(0,1) = (2 - 4)/2 - (0 - 2)/1 = 1;  k(1,2) = (4 - 4)/4 - (2 - 4)/2 = 1.
  EXPECT_EQ(bdc_ollivier_closed_form(c, 0, 1), 1);
  EXPECT_EQ(bdc_ollivier_closed_form(c, 1, 2), 1);
  // k(0,2) = [(4 - 4)/4 - (0 - 2)/1] / 2 = 1.
  EXPECT_EQ(bdc_ollivier_closed_form(c, 0, 2), 1);
  EXPECT_EQ(bdc_sphere_curvature(c, 2), 1);
  EXPECT_ERROR_KIND(bdc_ollivier_closed_form(c, 2, 2), ErrorKind::bad_radius_order);
  EXPECT_ERROR_KIND(bdc_ollivier_closed_form(c, 1, 3), ErrorKind::horizon_exceeded);
}
