#include <gtest/gtest.h>

#include "curvegraph/audit.hpp"
#include "curvegraph/chains.hpp"
#include "curvegraph/curvature.hpp"
#include "curvegraph/error.hpp"
#include "support.hpp"

using namespace curvegraph;

TEST(Chains, Figure1AssociatedChain) {
  const auto g = make_figure1();
  EXPECT_TRUE(is_model(g, "w").is_model);
  const auto c = associated_bdc(g, "w");
  EXPECT_EQ(c.measures(), (std::vector<Rational>{1, 2, 4, 4}));
  EXPECT_EQ(c.weights(), (std::vector<Rational>{2, 4, 4}));
}

TEST(Chains, PerturbedFigure1IsNotAModel) {
  const auto verdict = is_model(make_figure1_perturbed(), "w");
  ASSERT_FALSE(verdict.is_model);
  ASSERT_FALSE(verdict.failures.empty());
  // x' loses half its outer weight: k_+(x') = 1 vs k_+(x) = 2.
  EXPECT_EQ(verdict.failures.front().radius, 1u);
  EXPECT_EQ(verdict.failures.front().side, Side::outer);
}

TEST(Chains, AssociatedChainAveragesCurvatures) {
  audit::Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    const auto g = audit::random_graph(rng, 2, 30);
    const auto d = rooted_decomposition(g, VertexIndex{0});
    const auto c = associated_bdc(g, d);
    ASSERT_EQ(c.horizon(), d.horizon());
    for (std::size_t r = 0; r <= c.horizon(); ++r) {
      EXPECT_EQ(c.measure(r), d.sphere_volume(g, r));
      EXPECT_EQ(c.k_minus(r), average_curvature(g, d, r, Side::inner));
      if (r < c.horizon()) EXPECT_EQ(c.k_plus(r), average_curvature(g, d, r, Side::outer));
    }
  }
}

TEST(Chains, ChainIsItsOwnAssociatedChain) {
  audit::Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    const auto c = audit::random_chain(rng, 1, 10);
    EXPECT_EQ(associated_bdc(bdc_as_graph(c), "0"), c);
    EXPECT_TRUE(is_model(bdc_as_graph(c), "0").is_model);
  }
}

TEST(Chains, VolumeStepOnChains) {
  audit::Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    const auto c = audit::random_chain(rng, 1, 10);
    for (std::size_t r = 0; r < c.horizon(); ++r) EXPECT_TRUE(sphere_volume_step(c, r).holds());
    EXPECT_ERROR_KIND(sphere_volume_step(c, c.horizon()), ErrorKind::horizon_exceeded);
  }
}

TEST(Chains, ClosedFormMatchesSolver) {
  audit::Rng rng(44);
  for (int i = 0; i < 20; ++i) {
    const auto c = audit::random_chain(rng, 2, 8);
    const auto g = bdc_as_graph(c);
    for (std::size_t R = 1; R + 1 <= c.horizon(); ++R)
      for (std::size_t r = 0; r < R; ++r) EXPECT_EQ(bdc_ollivier_closed_form(c, r, R), ollivier_pair(g, r, R).value);
  }
}

TEST(Chains, ExampleGPrime) {
  const auto c = make_example_gprime(5);
  EXPECT_EQ(c.measure(3), 4);
  EXPECT_EQ(c.weight(2), rational(1, 9));
  // k_+(2) - k_-(2) = (1/9)/3 - (1/4)/3 = -5/108 = -(2*2+1)/(2^2 * 3^3).
  EXPECT_EQ(c.t(2), rational(-5, 108));
}

TEST(Chains, MirrorModelDoublesSpheres) {
  const auto c = make_unweighted_chain(4);
  const auto m = make_mirror_model(c);
  EXPECT_EQ(m.size(), 9u);
  const auto d = rooted_decomposition(m, "0");
  EXPECT_TRUE(is_model(m, d).is_model);
  EXPECT_EQ(d.sphere_volume(m, 0), 1);
  for (std::size_t r = 1; r <= 4; ++r) EXPECT_EQ(d.sphere_volume(m, r), 2);
  const auto mc = associated_bdc(m, d);
  for (std::size_t r = 1; r <= 4; ++r) {
    EXPECT_EQ(mc.k_minus(r), c.k_minus(r));
    if (r < 4) EXPECT_EQ(mc.k_plus(r), c.k_plus(r));
  }
  EXPECT_EQ(mc.k_plus(0), 2 * c.k_plus(0));
}

TEST(Chains, OllivierMatchingChain) {
  const std::vector<Rational> a{1, rational(1, 2), rational(1, 2), rational(1, 5)};
  const auto c = make_ollivier_matching_chain(a);
  EXPECT_EQ(c.horizon(), 3u);
  EXPECT_EQ(c.measure(0), 1);
  EXPECT_EQ(c.k_plus(0), 1);
  for (std::size_t r = 1; r < 3; ++r) {
    EXPECT_EQ(c.k_plus(r), a[r]);
    EXPECT_EQ(c.k_minus(r), a[r]);
  }
  EXPECT_EQ(bdc_sphere_curvature(c, 1), 1);
  EXPECT_EQ(bdc_sphere_curvature(c, 2), 0);

  EXPECT_ERROR_KIND(make_ollivier_matching_chain({}), ErrorKind::invalid_chain);
  EXPECT_ERROR_KIND(make_ollivier_matching_chain({2, 1}), ErrorKind::invalid_chain);
  EXPECT_ERROR_KIND(make_ollivier_matching_chain({1, rational(1, 2), 1}), ErrorKind::sequence_not_nonincreasing);
  EXPECT_ERROR_KIND(make_ollivier_matching_chain({1, 0}), ErrorKind::non_positive_entry);
}
