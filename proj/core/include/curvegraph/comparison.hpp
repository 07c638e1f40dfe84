#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "curvegraph/birth_death_chain.hpp"
#include "curvegraph/curvature.hpp"
#include "curvegraph/graph.hpp"

namespace curvegraph {

// ---------------------------------------------------------------------------
// Growth relations
// ---------------------------------------------------------------------------

enum class GrowthKind { stronger_curvature, stronger_average_curvature, stronger_outside_finite_set };

std::string_view to_string(GrowthKind kind);

struct Violation {
  std::size_t radius;
  std::string side;  // "normalization", "inner" or "outer"
  std::string details;
};

/// Verdict of one of the growth definitions. Radii are compared on the common
/// range only: k_- and volumes for r <= common_horizon, k_+ for
/// r < common_horizon.
struct GrowthRelation {
  GrowthKind kind = GrowthKind::stronger_curvature;
  bool holds = true;
  std::optional<Violation> first_violation;
  std::size_t threshold = 0;  // first radius checked; 0 except for the outside-finite-set kind
  std::size_t common_horizon = 0;
  bool horizon_mismatch = false;  // the two horizons differ
};

/// Graph g rooted at x0 against a model given by its radial chain:
/// m(x0) = m~(0), k_+(x) >= k~_+(r) and k_-(x) <= k~_-(r) for every x in S_r.
GrowthRelation stronger_curvature_growth(const WeightedGraph& g, std::string_view x0, const BirthDeathChain& model);

/// Same comparison between the associated chains of two rooted graphs.
GrowthRelation stronger_average_growth(const WeightedGraph& g1, std::string_view x1, const WeightedGraph& g2,
                                       std::string_view x2);

/// Averaged inequalities for r >= R only (R >= 1); no normalization at the root.
GrowthRelation stronger_outside_finite(const WeightedGraph& g1, std::string_view x1, const WeightedGraph& g2,
                                       std::string_view x2, std::size_t R);

// Chain-level versions; the graph versions reduce to these.
GrowthRelation stronger_chain_growth(const BirthDeathChain& c1, const BirthDeathChain& c2, std::size_t from_radius,
                                     GrowthKind kind);

// ---------------------------------------------------------------------------
// Theorem reports
// ---------------------------------------------------------------------------

/// Audit-only reports never fail a run; asserted reports fail when their
/// hypothesis holds and their conclusion does not.
enum class ReportStatus { asserted, recorded };

std::string_view to_string(ReportStatus status);

using LedgerValue = std::variant<Rational, bool>;

std::string to_string(const LedgerValue& value);

struct LedgerRow {
  std::string check;    // which inequality or identity this row evaluates
  std::size_t r = 0;
  std::string subject;  // vertex label when the row is per vertex
  LedgerValue lhs;
  std::string relation;  // ">=", "<=", "==", "<=>", "=>"
  LedgerValue rhs;
  bool ok = true;
};

struct TheoremReport {
  std::string claim;
  bool hypothesis = false;
  bool conclusion = false;
  ReportStatus status = ReportStatus::asserted;
  std::string range;  // e.g. "r in [0, 5]"
  std::vector<LedgerRow> ledger;
  std::optional<std::string> counterexample;

  /// False only for an asserted report whose hypothesis holds while its
  /// conclusion fails.
  bool passed() const { return status == ReportStatus::recorded || !hypothesis || conclusion; }
};

/// Volume comparison: evaluates stronger_average_growth as the hypothesis and
/// m1(S_r) >= m2(S_r) on the common range as the conclusion.
TheoremReport volume_comparison(const WeightedGraph& g1, std::string_view x1, const WeightedGraph& g2,
                                std::string_view x2);

struct AsymptoticConstant {
  Rational constant;
  TheoremReport report;
};

/// C = max_{r <= R} m2(S_r) / m1(S_r), then checks C m1(S_r) >= m2(S_r) on the
/// whole common range, propagating C m1 through the sphere-volume recursion.
/// Throws HypothesisFailed unless stronger_outside_finite holds for R.
AsymptoticConstant asymptotic_constant(const WeightedGraph& g1, std::string_view x1, const WeightedGraph& g2,
                                       std::string_view x2, std::size_t R);

/// Per vertex: k_+(x) - k_-(x) >= k~_+(r) - k~_-(r)  versus
/// Laplacian d(x0, x) <= Laplacian~ d(0, r). Asserts the two agree; volumes
/// are recorded alongside to show the hypothesis does not force them.
TheoremReport laplacian_distance_compare(const WeightedGraph& g, std::string_view x0, const BirthDeathChain& model);

/// For chains G~ (`tilde`) and G with k~_+(0) = k_+(0), at every R:
/// (i) sum_{r<=R} k~(r) <= sum_{r<=R} k(r)  <=>  (ii) t~(R) >= t(R).
TheoremReport partial_sum_equiv_check(const BirthDeathChain& tilde, const BirthDeathChain& chain);

/// Both parts of the sphere-curvature comparison between a chain G~ and a
/// graph G, per radius, plus sum k-bar(r) >= sum k(r) against G's associated chain.
TheoremReport compcurv_check(const BirthDeathChain& model, const WeightedGraph& g, std::string_view x0);

/// For a model graph: k(r) by min-max over pair curvatures next to k~(r) of
/// the associated chain. Recorded, never asserted.
TheoremReport model_sphere_equality_report(const WeightedGraph& g, std::string_view root);

/// Partial sums of sum_r m(B_r) / b-bar(r, r+1) for r = 0..R (R < horizon).
std::vector<Rational> sc_series_partial_sums(const WeightedGraph& g, std::string_view x0, std::size_t R);

// Rendering.
std::string to_json(const TheoremReport& report, int indent = 2);
std::string to_text(const TheoremReport& report);
std::string to_json(const GrowthRelation& relation, int indent = 2);

}  // namespace curvegraph
