#include "curvegraph/comparison.hpp"

#include <algorithm>
#include <sstream>

#include "curvegraph/chains.hpp"
#include "curvegraph/error.hpp"

namespace curvegraph {
namespace {

std::string range_text(std::size_t lo, std::size_t hi) {
  if (hi < lo) return "empty";
  return "r in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

std::size_t common_horizon(std::size_t h1, std::size_t h2) {
  const std::size_t h = std::min(h1, h2);
  if (h < 1) {
    throw Error(ErrorKind::horizon_mismatch,
                "comparison needs a shared radius range of at least 1, horizons are " + std::to_string(h1) + " and " +
                    std::to_string(h2));
  }
  return h;
}

void record(GrowthRelation& rel, std::size_t r, std::string side, std::string details) {
  if (rel.first_violation) return;
  rel.holds = false;
  rel.first_violation = Violation{r, std::move(side), std::move(details)};
}

std::string inequality(const Rational& lhs, const char* op, const Rational& rhs) {
  return to_string(lhs) + " " + op + " " + to_string(rhs) + " fails";
}

LedgerRow compare_row(std::string check, std::size_t r, std::string subject, const Rational& lhs,
                      const std::string& relation, const Rational& rhs) {
  bool ok = false;
  if (relation == ">=") ok = lhs >= rhs;
  else if (relation == "<=") ok = lhs <= rhs;
  else if (relation == "==") ok = lhs == rhs;
  return {std::move(check), r, std::move(subject), lhs, relation, rhs, ok};
}

LedgerRow logic_row(std::string check, std::size_t r, std::string subject, bool lhs, const std::string& relation,
                    bool rhs) {
  const bool ok = relation == "<=>" ? lhs == rhs : (!lhs || rhs);
  return {std::move(check), r, std::move(subject), lhs, relation, rhs, ok};
}

bool all_ok(const std::vector<LedgerRow>& rows, std::string_view prefix) {
  return std::all_of(rows.begin(), rows.end(),
                     [&](const LedgerRow& row) { return row.check.rfind(prefix, 0) != 0 || row.ok; });
}

}  // namespace

std::string_view to_string(GrowthKind kind) {
  switch (kind) {
    case GrowthKind::stronger_curvature: return "stronger-curvature";
    case GrowthKind::stronger_average_curvature: return "stronger-average-curvature";
    case GrowthKind::stronger_outside_finite_set: return "stronger-outside-finite-set";
  }
  return "unknown";
}

std::string_view to_string(ReportStatus status) {
  return status == ReportStatus::asserted ? "asserted" : "recorded";
}

std::string to_string(const LedgerValue& value) {
  if (const auto* q = std::get_if<Rational>(&value)) return to_string(*q);
  return std::get<bool>(value) ? "true" : "false";
}

GrowthRelation stronger_chain_growth(const BirthDeathChain& c1, const BirthDeathChain& c2, std::size_t from_radius,
                                     GrowthKind kind) {
  GrowthRelation rel;
  rel.kind = kind;
  rel.threshold = from_radius;
  rel.common_horizon = common_horizon(c1.horizon(), c2.horizon());
  rel.horizon_mismatch = c1.horizon() != c2.horizon();
  if (from_radius == 0 && c1.measure(0) != c2.measure(0)) {
    record(rel, 0, "normalization",
           "m1(x1) = " + to_string(c1.measure(0)) + " differs from m2(x2) = " + to_string(c2.measure(0)));
  }
  for (std::size_t r = from_radius; r <= rel.common_horizon; ++r) {
    if (r < rel.common_horizon && c1.k_plus(r) < c2.k_plus(r)) {
      record(rel, r, "outer", "avg k_+: " + inequality(c1.k_plus(r), ">=", c2.k_plus(r)));
    }
    if (c1.k_minus(r) > c2.k_minus(r)) {
      record(rel, r, "inner", "avg k_-: " + inequality(c1.k_minus(r), "<=", c2.k_minus(r)));
    }
  }
  return rel;
}

GrowthRelation stronger_curvature_growth(const WeightedGraph& g, std::string_view x0, const BirthDeathChain& model) {
  const auto decomp = rooted_decomposition(g, x0);
  GrowthRelation rel;
  rel.kind = GrowthKind::stronger_curvature;
  rel.common_horizon = common_horizon(decomp.horizon(), model.horizon());
  rel.horizon_mismatch = decomp.horizon() != model.horizon();
  if (g.measure(decomp.root) != model.measure(0)) {
    record(rel, 0, "normalization",
           "m(x0) = " + to_string(g.measure(decomp.root)) + " differs from m~(o) = " + to_string(model.measure(0)));
  }
  for (std::size_t r = 0; r <= rel.common_horizon; ++r) {
    for (VertexIndex x : decomp.spheres[r]) {
      if (r < rel.common_horizon) {
        const Rational kp = k_plus(g, decomp, x);
        if (kp < model.k_plus(r)) {
          record(rel, r, "outer", "k_+(" + g.label(x) + "): " + inequality(kp, ">=", model.k_plus(r)));
        }
      }
      const Rational km = k_minus(g, decomp, x);
      if (km > model.k_minus(r)) {
        record(rel, r, "inner", "k_-(" + g.label(x) + "): " + inequality(km, "<=", model.k_minus(r)));
      }
    }
  }
  return rel;
}

GrowthRelation stronger_average_growth(const WeightedGraph& g1, std::string_view x1, const WeightedGraph& g2,
                                       std::string_view x2) {
  return stronger_chain_growth(associated_bdc(g1, x1), associated_bdc(g2, x2), 0,
                               GrowthKind::stronger_average_curvature);
}

GrowthRelation stronger_outside_finite(const WeightedGraph& g1, std::string_view x1, const WeightedGraph& g2,
                                       std::string_view x2, std::size_t R) {
  if (R < 1) throw Error(ErrorKind::bad_radius_order, "outside-finite-set threshold must be R >= 1");
  return stronger_chain_growth(associated_bdc(g1, x1), associated_bdc(g2, x2), R,
                               GrowthKind::stronger_outside_finite_set);
}

TheoremReport volume_comparison(const WeightedGraph& g1, std::string_view x1, const WeightedGraph& g2,
                                std::string_view x2) {
  const auto c1 = associated_bdc(g1, x1);
  const auto c2 = associated_bdc(g2, x2);
  const auto rel = stronger_chain_growth(c1, c2, 0, GrowthKind::stronger_average_curvature);
  const std::size_t h = rel.common_horizon;

  TheoremReport report;
  report.claim = "volume-comparison";
  report.status = ReportStatus::asserted;
  report.range = range_text(0, h);
  report.ledger.push_back(compare_row("hypothesis:normalization", 0, "", c1.measure(0), "==", c2.measure(0)));
  for (std::size_t r = 0; r <= h; ++r) {
    if (r < h) report.ledger.push_back(compare_row("hypothesis:avg_k_plus", r, "", c1.k_plus(r), ">=", c2.k_plus(r)));
    report.ledger.push_back(compare_row("hypothesis:avg_k_minus", r, "", c1.k_minus(r), "<=", c2.k_minus(r)));
  }
  for (std::size_t r = 0; r <= h; ++r) {
    report.ledger.push_back(compare_row("conclusion:volume", r, "", c1.measure(r), ">=", c2.measure(r)));
  }
  report.hypothesis = rel.holds;
  report.conclusion = all_ok(report.ledger, "conclusion:");
  if (!report.conclusion) {
    const auto it = std::find_if(report.ledger.begin(), report.ledger.end(),
                                 [](const LedgerRow& row) { return row.check == "conclusion:volume" && !row.ok; });
    report.counterexample = "m1(S_" + std::to_string(it->r) + ") = " + to_string(it->lhs) + " < m2(S_" +
                            std::to_string(it->r) + ") = " + to_string(it->rhs);
  }
  return report;
}

AsymptoticConstant asymptotic_constant(const WeightedGraph& g1, std::string_view x1, const WeightedGraph& g2,
                                       std::string_view x2, std::size_t R) {
  const auto rel = stronger_outside_finite(g1, x1, g2, x2, R);
  if (!rel.holds) {
    throw Error(ErrorKind::hypothesis_failed, "stronger average curvature growth outside B_" + std::to_string(R) +
                                                  " fails at r=" + std::to_string(rel.first_violation->radius) +
                                                  ": " + rel.first_violation->details);
  }
  const auto c1 = associated_bdc(g1, x1);
  const auto c2 = associated_bdc(g2, x2);
  const std::size_t h = rel.common_horizon;
  const std::size_t head = std::min(R, h);

  Rational c(0);
  for (std::size_t r = 0; r <= head; ++r) c = std::max(c, Rational(c2.measure(r) / c1.measure(r)));

  TheoremReport report;
  report.claim = "asymptotic-volume-comparison";
  report.status = ReportStatus::asserted;
  report.hypothesis = true;
  report.range = range_text(0, h) + ", threshold R = " + std::to_string(R) + ", C = " + to_string(c);
  for (std::size_t r = 0; r <= head; ++r) {
    report.ledger.push_back(compare_row("conclusion:C*m1>=m2", r, "", Rational(c * c1.measure(r)), ">=", c2.measure(r)));
  }
  // C m1(S_{r+1}) = C m1(S_r) avg k1_+(r) / avg k1_-(r+1) for r >= R.
  Rational scaled = c * c1.measure(head);
  for (std::size_t r = head; r < h; ++r) {
    const auto step = sphere_volume_step(c1, r);
    report.ledger.push_back(compare_row("identity:volume-step", r, "", step.inner_side, "==", step.outer_side));
    scaled = scaled * c1.k_plus(r) / c1.k_minus(r + 1);
    report.ledger.push_back(compare_row("identity:recursion", r + 1, "", scaled, "==", Rational(c * c1.measure(r + 1))));
    report.ledger.push_back(compare_row("conclusion:C*m1>=m2", r + 1, "", scaled, ">=", c2.measure(r + 1)));
  }
  report.conclusion = all_ok(report.ledger, "conclusion:") && all_ok(report.ledger, "identity:");
  return {c, std::move(report)};
}

TheoremReport laplacian_distance_compare(const WeightedGraph& g, std::string_view x0, const BirthDeathChain& model) {
  const auto decomp = rooted_decomposition(g, x0);
  const std::size_t h = common_horizon(decomp.horizon(), model.horizon());

  TheoremReport report;
  report.claim = "laplacian-distance-comparison";
  report.status = ReportStatus::asserted;
  report.range = range_text(0, h - 1) + " (volumes on " + range_text(0, h) + ")";
  bool hypothesis = true;
  for (std::size_t r = 0; r < h; ++r) {
    const Rational model_t = model.t(r);
    const Rational model_lap = model.k_minus(r) - model.k_plus(r);
    for (VertexIndex x : decomp.spheres[r]) {
      const Rational t = k_plus(g, decomp, x) - k_minus(g, decomp, x);
      const Rational lap = laplacian_of_distance(g, decomp, x);
      const bool curvature_form = t >= model_t;
      const bool laplacian_form = lap <= model_lap;
      hypothesis = hypothesis && curvature_form;
      report.ledger.push_back(compare_row("hypothesis:k_plus-k_minus", r, g.label(x), t, ">=", model_t));
      report.ledger.push_back(compare_row("hypothesis:laplacian-distance", r, g.label(x), lap, "<=", model_lap));
      report.ledger.push_back(logic_row("conclusion:equivalent", r, g.label(x), curvature_form, "<=>", laplacian_form));
    }
  }
  std::optional<std::size_t> volume_failure;
  for (std::size_t r = 0; r <= h; ++r) {
    auto row = compare_row("record:volume", r, "", decomp.sphere_volume(g, r), ">=", model.measure(r));
    if (!row.ok && !volume_failure) volume_failure = r;
    report.ledger.push_back(std::move(row));
  }
  report.hypothesis = hypothesis;
  report.conclusion = all_ok(report.ledger, "conclusion:");
  if (hypothesis && volume_failure) {
    report.counterexample = "Laplacian comparison holds on the whole range but m(S_" + std::to_string(*volume_failure) +
                            ") = " + to_string(decomp.sphere_volume(g, *volume_failure)) + " < m~(" +
                            std::to_string(*volume_failure) + ") = " + to_string(model.measure(*volume_failure));
  }
  return report;
}

TheoremReport partial_sum_equiv_check(const BirthDeathChain& tilde, const BirthDeathChain& chain) {
  common_horizon(tilde.horizon(), chain.horizon());
  if (tilde.k_plus(0) != chain.k_plus(0)) {
    throw Error(ErrorKind::hypothesis_failed, "k~_+(0) = " + to_string(tilde.k_plus(0)) + " differs from k_+(0) = " +
                                                  to_string(chain.k_plus(0)));
  }
  const std::size_t last = std::min(tilde.horizon(), chain.horizon()) - 1;

  TheoremReport report;
  report.claim = "partial-sum-equivalence";
  report.status = ReportStatus::asserted;
  report.hypothesis = true;
  report.range = range_text(1, last);
  Rational sum_tilde(0), sum(0);
  for (std::size_t R = 1; R <= last; ++R) {
    sum_tilde += bdc_sphere_curvature(tilde, R);
    sum += bdc_sphere_curvature(chain, R);
    auto partial = compare_row("(i)", R, "", sum_tilde, "<=", sum);
    auto outer = compare_row("(ii)", R, "", tilde.t(R), ">=", chain.t(R));
    const bool i = partial.ok;
    const bool ii = outer.ok;
    report.ledger.push_back(std::move(partial));
    report.ledger.push_back(std::move(outer));
    report.ledger.push_back(logic_row("conclusion:(i)<=>(ii)", R, "", i, "<=>", ii));
    report.ledger.push_back(
        compare_row("conclusion:telescoping~", R, "", sum_tilde, "==", Rational(tilde.k_plus(0) - tilde.t(R))));
    report.ledger.push_back(compare_row("conclusion:telescoping", R, "", sum, "==", Rational(chain.k_plus(0) - chain.t(R))));
  }
  report.conclusion = all_ok(report.ledger, "conclusion:");
  return report;
}

TheoremReport compcurv_check(const BirthDeathChain& model, const WeightedGraph& g, std::string_view x0) {
  const auto decomp = rooted_decomposition(g, x0);
  common_horizon(model.horizon(), decomp.horizon());
  const Rational root_k_plus = k_plus(g, decomp, decomp.root);
  if (model.k_plus(0) != root_k_plus) {
    throw Error(ErrorKind::hypothesis_failed, "k~_+(0) = " + to_string(model.k_plus(0)) + " differs from k_+(x0) = " +
                                                  to_string(root_k_plus));
  }
  const auto bar = associated_bdc(g, decomp);
  const std::size_t last = std::min(model.horizon(), decomp.horizon()) - 1;
  OllivierCache cache(g);

  TheoremReport report;
  report.claim = "sphere-curvature-comparison";
  report.status = ReportStatus::asserted;
  report.hypothesis = true;
  report.range = range_text(1, last);
  Rational sum_model(0), sum_graph(0), sum_bar(0);
  for (std::size_t R = 1; R <= last; ++R) {
    sum_model += bdc_sphere_curvature(model, R);
    sum_bar += bdc_sphere_curvature(bar, R);
    sum_graph += sphere_curvature(g, decomp, R, cache);
    std::optional<Rational> min_t;
    for (VertexIndex x : decomp.spheres[R]) {
      const Rational t = k_plus(g, decomp, x) - k_minus(g, decomp, x);
      if (!min_t || t < *min_t) min_t = t;
    }
    const Rational model_t = model.t(R);

    auto hyp_i = compare_row("part-i:hypothesis", R, "", model_t, "<=", *min_t);
    auto con_i = compare_row("part-i:conclusion", R, "", sum_model, ">=", sum_graph);
    auto hyp_ii = compare_row("part-ii:hypothesis", R, "", sum_model, "<=", sum_graph);
    auto con_ii = compare_row("part-ii:conclusion", R, "", model_t, ">=", *min_t);
    const bool hi = hyp_i.ok, ci = con_i.ok, hii = hyp_ii.ok, cii = con_ii.ok;
    report.ledger.push_back(std::move(hyp_i));
    report.ledger.push_back(std::move(con_i));
    report.ledger.push_back(logic_row("conclusion:part-i", R, "", hi, "=>", ci));
    report.ledger.push_back(std::move(hyp_ii));
    report.ledger.push_back(std::move(con_ii));
    report.ledger.push_back(logic_row("conclusion:part-ii", R, "", hii, "=>", cii));
    report.ledger.push_back(compare_row("conclusion:associated-chain-bound", R, "", sum_bar, ">=", sum_graph));
  }
  report.conclusion = all_ok(report.ledger, "conclusion:");
  if (!report.conclusion) {
    const auto it = std::find_if(report.ledger.begin(), report.ledger.end(), [](const LedgerRow& row) {
      return row.check.rfind("conclusion:", 0) == 0 && !row.ok;
    });
    report.counterexample = it->check + " fails at R=" + std::to_string(it->r);
  }
  return report;
}

TheoremReport model_sphere_equality_report(const WeightedGraph& g, std::string_view root) {
  const auto decomp = rooted_decomposition(g, root);
  const auto verdict = is_model(g, decomp);
  if (!verdict.is_model) {
    const auto& f = verdict.failures.front();
    throw Error(ErrorKind::hypothesis_failed, "not a model around \"" + std::string(root) + "\": " +
                                                  std::string(to_string(f.side)) + " curvature differs at r=" +
                                                  std::to_string(f.radius) + " between \"" + f.first + "\" and \"" +
                                                  f.second + "\"");
  }
  const auto chain = associated_bdc(g, decomp);
  OllivierCache cache(g);

  TheoremReport report;
  report.claim = "model-sphere-curvature-equality";
  report.status = ReportStatus::recorded;
  report.hypothesis = true;
  report.range = decomp.horizon() == 0 ? "empty" : range_text(1, decomp.horizon() - 1);
  Rational sum_graph(0), sum_chain(0);
  std::optional<std::size_t> first_difference;
  for (std::size_t r = 1; r < decomp.horizon(); ++r) {
    const Rational k = sphere_curvature(g, decomp, r, cache);
    const Rational k_chain = bdc_sphere_curvature(chain, r);
    sum_graph += k;
    sum_chain += k_chain;
    auto row = compare_row("k(r)==k~(r)", r, "", k, "==", k_chain);
    if (!row.ok && !first_difference) first_difference = r;
    report.ledger.push_back(std::move(row));
    report.ledger.push_back(compare_row("sum k==sum k~", r, "", sum_graph, "==", sum_chain));
  }
  report.conclusion = !first_difference;
  if (first_difference) {
    const auto& row = report.ledger[2 * (*first_difference - 1)];
    report.counterexample = "k(" + std::to_string(row.r) + ") = " + to_string(row.lhs) + " but k~(" +
                            std::to_string(row.r) + ") = " + to_string(row.rhs);
  }
  return report;
}

std::vector<Rational> sc_series_partial_sums(const WeightedGraph& g, std::string_view x0, std::size_t R) {
  const auto decomp = rooted_decomposition(g, x0);
  if (!decomp.has_outer(R)) {
    throw Error(ErrorKind::horizon_exceeded, "series term at r=" + std::to_string(R) + " needs b(r, r+1); horizon is " +
                                                 std::to_string(decomp.horizon()));
  }
  const auto chain = associated_bdc(g, decomp);
  std::vector<Rational> sums;
  Rational total(0);
  for (std::size_t r = 0; r <= R; ++r) {
    total += chain.ball_volume(r) / chain.weight(r);
    sums.push_back(total);
  }
  return sums;
}

}  // namespace curvegraph
