#include <gtest/gtest.h>

#include "curvegraph/audit.hpp"
#include "curvegraph/chains.hpp"
#include "curvegraph/curvature.hpp"
#include "curvegraph/error.hpp"
#include "support.hpp"

using namespace curvegraph;

TEST(Ollivier, Figure1Pairs) {
  const auto g = make_figure1();
  const auto xy = ollivier_pair(g, "x", "y");
  EXPECT_EQ(xy.value, -1);
  EXPECT_EQ(xy.distance, 1u);
  EXPECT_EQ(xy.witness_at(g.index("w")), -1);
  EXPECT_EQ(xy.witness_at(g.index("y'")), -1);
  EXPECT_EQ(xy.witness_at(g.index("z")), 2);
  EXPECT_EQ(ollivier_pair(g, "x'", "y'").value, 1);
  EXPECT_ERROR_KIND(xy.witness_at(g.index("z'")), ErrorKind::unknown_vertex);
}

TEST(Ollivier, HandComputedSmallGraphs) {
  // Triangle: f(z) in {0, 1} gives grad Laplacian = 3 either way.
  const auto k3 = testing_support::build({{"a", "1"}, {"b", "1"}, {"c", "1"}},
                                         {{"a", "b", "1"}, {"b", "c", "1"}, {"a", "c", "1"}});
  EXPECT_EQ(ollivier_pair(k3, "a", "b").value, 3);
  // Path 0-1-2: end edge has curvature 1, (0, 2) has (0 - (-1)) / 2 ... by hand:
  // f = (0, 1, 2) forced, Laplacian(2) - Laplacian(0) = 1 - (-1) = 2, divided by d = 2.
  const auto p = testing_support::path(2);
  EXPECT_EQ(ollivier_pair(p, "0", "1").value, 1);
  EXPECT_EQ(ollivier_pair(p, "0", "2").value, 1);
  // Interior edge of a long unit path is flat.
  EXPECT_EQ(ollivier_pair(testing_support::path(4), "1", "2").value, 0);
}

TEST(Ollivier, RejectsSameVertex) {
  EXPECT_ERROR_KIND(ollivier_pair(make_figure1(), "x", "x"), ErrorKind::same_vertex);
}

TEST(Ollivier, Symmetric) {
  audit::Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    const auto g = audit::random_graph(rng, 2, 20);
    const auto x = static_cast<VertexIndex>(rng.uniform(0, static_cast<long>(g.size()) - 1));
    auto y = static_cast<VertexIndex>(rng.uniform(0, static_cast<long>(g.size()) - 2));
    if (y >= x) ++y;
    EXPECT_EQ(ollivier_pair(g, x, y).value, ollivier_pair(g, y, x).value);
  }
}

TEST(Ollivier, MatchesEnumerationIncludingDistantPairs) {
  audit::Rng rng(32);
  int checked = 0;
  while (checked < 80) {
    const auto g = audit::random_graph(rng, 2, 16);
    const auto x = static_cast<VertexIndex>(rng.uniform(0, static_cast<long>(g.size()) - 1));
    auto y = static_cast<VertexIndex>(rng.uniform(0, static_cast<long>(g.size()) - 2));
    if (y >= x) ++y;
    if (audit::support_size(g, x, y) > 9) continue;
    const auto lp = ollivier_pair(g, x, y);
    const auto brute = audit::enumerate_lipschitz_optimum(g, x, y);
    ASSERT_EQ(lp.value, brute.value) << "pair " << g.label(x) << "," << g.label(y);
    EXPECT_EQ(lp.support, brute.support);
    EXPECT_EQ(lp.witness, brute.witness);
    std::string why;
    EXPECT_TRUE(witness_is_valid(g, lp, &why)) << why;
    ++checked;
  }
}

TEST(Ollivier, WitnessValidatorCatchesTampering) {
  const auto g = make_figure1();
  auto r = ollivier_pair(g, "x", "y");
  std::string why;
  ASSERT_TRUE(witness_is_valid(g, r, &why)) << why;

  auto lipschitz = r;
  for (std::size_t i = 0; i < lipschitz.support.size(); ++i)
    if (lipschitz.support[i] == g.index("z")) lipschitz.witness[i] = 4;
  EXPECT_FALSE(witness_is_valid(g, lipschitz, &why));

  auto value = r;
  value.value = 0;
  EXPECT_FALSE(witness_is_valid(g, value, &why));

  auto fractional = r;
  for (std::size_t i = 0; i < fractional.support.size(); ++i)
    if (fractional.support[i] == g.index("z")) fractional.witness[i] = rational(3, 2);
  EXPECT_FALSE(witness_is_valid(g, fractional, &why));
}

TEST(Ollivier, CacheReturnsSameResult) {
  const auto g = make_figure1();
  OllivierCache cache(g);
  const auto& a = cache.pair(g.index("x"), g.index("y"));
  EXPECT_EQ(a.value, -1);
  EXPECT_EQ(&cache.pair(g.index("x"), g.index("y")), &a);
}
