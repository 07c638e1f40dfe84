#include <gtest/gtest.h>

#include "curvegraph/audit.hpp"
#include "curvegraph/chains.hpp"
#include "curvegraph/comparison.hpp"
#include "curvegraph/error.hpp"
#include "support.hpp"

using namespace curvegraph;

namespace {

const LedgerRow* find_row(const TheoremReport& report, std::string_view check, std::size_t r) {
  for (const auto& row : report.ledger)
    if (row.check == check && row.r == r) return &row;
  return nullptr;
}

}  // namespace

TEST(Growth, ChainAgainstItselfHolds) {
  const auto c = make_example_gprime(6);
  const auto rel = stronger_chain_growth(c, c, 0, GrowthKind::stronger_average_curvature);
  EXPECT_TRUE(rel.holds);
  EXPECT_EQ(rel.common_horizon, 6u);
  EXPECT_FALSE(rel.horizon_mismatch);
}

TEST(Growth, DetectsFirstViolation) {
  // Same measures at the root; the second chain pushes harder out of r = 1.
  const BirthDeathChain weak({1, 1, 1, 1}, {1, 1, 1});
  const BirthDeathChain strong({1, 1, 1, 1}, {1, 2, 1});
  const auto rel = stronger_chain_growth(weak, strong, 0, GrowthKind::stronger_average_curvature);
  EXPECT_FALSE(rel.holds);
  ASSERT_TRUE(rel.first_violation.has_value());
  EXPECT_EQ(rel.first_violation->radius, 1u);
  EXPECT_EQ(rel.first_violation->side, "outer");
  // Beyond r = 2 the chains coincide except k_-(2), where strong has more inner weight.
  EXPECT_TRUE(stronger_chain_growth(weak, strong, 2, GrowthKind::stronger_outside_finite_set).holds);
}

TEST(Growth, NormalizationChecked) {
  const BirthDeathChain a({2, 1}, {2});
  const BirthDeathChain b({1, 1}, {1});
  const auto rel = stronger_chain_growth(a, b, 0, GrowthKind::stronger_average_curvature);
  EXPECT_FALSE(rel.holds);
  EXPECT_EQ(rel.first_violation->side, "normalization");
}

TEST(Growth, CommonRangeOnMismatchedHorizons) {
  const auto rel = stronger_chain_growth(make_unweighted_chain(3), make_unweighted_chain(7), 0,
                                         GrowthKind::stronger_average_curvature);
  EXPECT_TRUE(rel.horizon_mismatch);
  EXPECT_EQ(rel.common_horizon, 3u);
  EXPECT_TRUE(rel.holds);
}

TEST(Growth, PerVertexAgainstModel) {
  const auto g = make_figure1();
  EXPECT_TRUE(stronger_curvature_growth(g, "w", associated_bdc(g, "w")).holds);
  const auto pert = make_figure1_perturbed();
  // The perturbed graph has x' with k_+ = 1 < 2.
  EXPECT_FALSE(stronger_curvature_growth(pert, "w", associated_bdc(g, "w")).holds);
}

TEST(VolumeComparison, DominatingChainsGrowFaster) {
  audit::Rng rng(51);
  for (int i = 0; i < 40; ++i) {
    const auto base = audit::random_chain(rng, 1, 10);
    const auto dom = audit::dominating_chain(rng, base, 0);
    const auto report = volume_comparison(bdc_as_graph(dom), "0", bdc_as_graph(base), "0");
    EXPECT_TRUE(report.hypothesis);
    EXPECT_TRUE(report.conclusion) << report.counterexample.value_or("");
    EXPECT_TRUE(report.passed());
  }
}

TEST(VolumeComparison, FailingHypothesisDoesNotFailReport) {
  const auto report = volume_comparison(bdc_as_graph(make_unweighted_chain(3)), "0",
                                        make_mirror_model(make_unweighted_chain(3)), "0");
  EXPECT_FALSE(report.hypothesis);
  EXPECT_FALSE(report.conclusion);
  EXPECT_TRUE(report.passed());
}

TEST(AsymptoticConstant, MirrorHasTwiceTheVolume) {
  const auto chain = make_unweighted_chain(8);
  const auto result = asymptotic_constant(bdc_as_graph(chain), "0", make_mirror_model(chain), "0", 1);
  EXPECT_EQ(result.constant, 2);
  EXPECT_TRUE(result.report.conclusion);
  const auto* row = find_row(result.report, "conclusion:C*m1>=m2", 5);
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(std::get<Rational>(row->lhs), 2);
  EXPECT_EQ(std::get<Rational>(row->rhs), 2);
}

TEST(AsymptoticConstant, RequiresHypothesis) {
  const auto chain = make_unweighted_chain(4);
  EXPECT_ERROR_KIND(asymptotic_constant(make_mirror_model(chain), "0", bdc_as_graph(make_example_gprime(4)), "0", 1),
                    ErrorKind::hypothesis_failed);
  EXPECT_ERROR_KIND(asymptotic_constant(bdc_as_graph(chain), "0", bdc_as_graph(chain), "0", 0),
                    ErrorKind::bad_radius_order);
}

TEST(LaplacianDistance, GPrimeCounterexample) {
  const auto report = laplacian_distance_compare(bdc_as_graph(make_unweighted_chain(6)), "0", make_example_gprime(6));
  EXPECT_TRUE(report.hypothesis);
  EXPECT_TRUE(report.conclusion);
  ASSERT_TRUE(report.counterexample.has_value());
  const auto* row = find_row(report, "record:volume", 1);
  ASSERT_NE(row, nullptr);
  EXPECT_FALSE(row->ok);
}

TEST(PartialSums, EquivalenceAndTelescoping) {
  audit::Rng rng(52);
  for (int i = 0; i < 40; ++i) {
    const auto tilde = audit::random_chain(rng, 2, 10);
    const auto chain = audit::matched_root_chain(rng, tilde);
    ASSERT_EQ(chain.k_plus(0), tilde.k_plus(0));
    const auto report = partial_sum_equiv_check(tilde, chain);
    EXPECT_TRUE(report.conclusion) << report.counterexample.value_or("");
  }
  EXPECT_ERROR_KIND(partial_sum_equiv_check(make_unweighted_chain(3), BirthDeathChain({1, 1, 1, 1}, {2, 1, 1})),
                    ErrorKind::hypothesis_failed);
}

TEST(CompCurv, Figure1AgainstItsChain) {
  const auto g = make_figure1();
  const auto report = compcurv_check(associated_bdc(g, "w"), g, "w");
  EXPECT_TRUE(report.conclusion) << report.counterexample.value_or("");
  const auto* row = find_row(report, "conclusion:associated-chain-bound", 2);
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(std::get<Rational>(row->lhs), 2);
  EXPECT_EQ(std::get<Rational>(row->rhs), 0);
}

TEST(ModelSphereReport, RecordsFigure1Difference) {
  const auto report = model_sphere_equality_report(make_figure1(), "w");
  EXPECT_EQ(report.status, ReportStatus::recorded);
  EXPECT_FALSE(report.conclusion);
  EXPECT_TRUE(report.passed());
  const auto* k2 = find_row(report, "k(r)==k~(r)", 2);
  ASSERT_NE(k2, nullptr);
  EXPECT_EQ(std::get<Rational>(k2->lhs), -1);
  EXPECT_EQ(std::get<Rational>(k2->rhs), 1);
  EXPECT_NE(to_json(report).find("\"status\": \"recorded\""), std::string::npos);
  EXPECT_ERROR_KIND(model_sphere_equality_report(make_figure1_perturbed(), "w"), ErrorKind::hypothesis_failed);
}

TEST(ScSeries, UnweightedChain) {
  // m(B_r) / b(r, r+1) = r + 1.
  const auto sums = sc_series_partial_sums(bdc_as_graph(make_unweighted_chain(5)), "0", 3);
  EXPECT_EQ(sums, (std::vector<Rational>{1, 3, 6, 10}));
}
