#include "curvegraph/acceptance.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "curvegraph/audit.hpp"
#include "curvegraph/chains.hpp"
#include "curvegraph/comparison.hpp"
#include "curvegraph/curvature.hpp"
#include "curvegraph/error.hpp"

namespace curvegraph::audit {
namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::string first_failure;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

Rng criterion_rng(std::uint64_t seed, int id) {
  return Rng(seed * 1000003ULL + static_cast<std::uint64_t>(id));
}

std::size_t scaled(std::size_t base, std::size_t num, std::size_t den) {
  const std::size_t n = base * num / den;
  return n == 0 ? 1 : n;
}

// Replaces the solver's witness by `values` on the same support and asks
// whether that function is also a valid optimum.
bool reference_witness_optimal(const WeightedGraph& g, const OllivierResult& r,
                               const std::map<std::string, long>& values, std::string* why) {
  OllivierResult ref = r;
  if (values.size() != ref.support.size()) {
    if (why) *why = "reference witness does not cover the support";
    return false;
  }
  for (std::size_t i = 0; i < ref.support.size(); ++i) {
    const auto it = values.find(g.label(ref.support[i]));
    if (it == values.end()) {
      if (why) *why = "reference witness misses " + g.label(ref.support[i]);
      return false;
    }
    ref.witness[i] = Rational(it->second);
  }
  return witness_is_valid(g, ref, why);
}

// 1. Pair curvatures of the seven-vertex model graph.
void figure1_exactness(Outcome& out, const SuiteOptions&) {
  const auto g = make_figure1();
  const auto xy = ollivier_pair(g, "x", "y");
  const auto xpyp = ollivier_pair(g, "x'", "y'");
  out.require(xy.value == -1, "k(x,y) = " + to_string(xy.value) + ", expected -1");
  out.require(xpyp.value == 1, "k(x',y') = " + to_string(xpyp.value) + ", expected 1");
  std::string why;
  out.require(reference_witness_optimal(g, xy, {{"w", -1}, {"y'", -1}, {"x", 0}, {"y", 1}, {"z", 2}}, &why),
              "f(w)=f(y')=-1, f(x)=0, f(y)=1, f(z)=2 is not optimal for (x,y): " + why);
  out.require(reference_witness_optimal(g, xpyp, {{"w", -1}, {"x", 0}, {"x'", 0}, {"y'", 1}, {"z'", 2}}, &why),
              "g(w)=-1, g(x)=0, g(z')=2 is not optimal for (x',y'): " + why);
  out.require(witness_is_valid(g, xy, &why), "(x,y) witness invalid: " + why);
  out.require(witness_is_valid(g, xpyp, &why), "(x',y') witness invalid: " + why);
  out.detail << "k(x,y)=" << to_string(xy.value) << " k(x',y')=" << to_string(xpyp.value);
}

// 2. Modelhood and associated chain of the same graph.
void figure1_modelhood(Outcome& out, const SuiteOptions&) {
  const auto g = make_figure1();
  const auto verdict = is_model(g, "w");
  const auto chain = associated_bdc(g, "w");
  const BirthDeathChain expected({Rational(1), Rational(2), Rational(4), Rational(4)},
                                 {Rational(2), Rational(4), Rational(4)});
  out.require(verdict.is_model, "figure1 is not a model around w");
  out.require(chain == expected, "associated chain differs from m=(1,2,4,4), b=(2,4,4)");
  out.detail << "is_model=" << (verdict.is_model ? "true" : "false") << " chain m=(";
  for (std::size_t r = 0; r <= chain.horizon(); ++r) out.detail << (r ? "," : "") << to_string(chain.measure(r));
  out.detail << ") b=(";
  for (std::size_t r = 0; r < chain.horizon(); ++r) out.detail << (r ? "," : "") << to_string(chain.weight(r));
  out.detail << ")";
}

// 3. Sphere-volume identity on random graphs.
void volume_step_identity(Outcome& out, const SuiteOptions& opt) {
  auto rng = criterion_rng(opt.seed, 3);
  std::size_t checks = 0;
  for (std::size_t i = 0; i < opt.instances; ++i) {
    const auto g = random_graph(rng, 1, 40);
    const auto root = static_cast<VertexIndex>(rng.uniform(0, static_cast<long>(g.size()) - 1));
    const auto decomp = rooted_decomposition(g, root);
    for (std::size_t r = 0; r < decomp.horizon(); ++r) {
      const auto step = sphere_volume_step(g, decomp, r);
      out.require(step.holds(), "graph " + std::to_string(i) + " r=" + std::to_string(r) + ": " +
                                    to_string(step.inner_side) + " != " + to_string(step.outer_side));
      ++checks;
    }
  }
  out.detail << opt.instances << " graphs, " << checks << " radii";
}

// 4. Volume comparison under the averaged hypothesis.
void volume_comparison_property(Outcome& out, const SuiteOptions& opt) {
  auto rng = criterion_rng(opt.seed, 4);
  std::size_t radii = 0;
  for (std::size_t i = 0; i < opt.instances; ++i) {
    // Alternate between a random chain and the associated chain of a random
    // graph as the weaker side.
    WeightedGraph g2 = i % 2 == 0 ? bdc_as_graph(random_chain(rng, 1, 12)) : random_graph(rng, 2, 40);
    const std::string root2 = g2.label(0);
    const auto c2 = associated_bdc(g2, root2);
    const auto g1 = bdc_as_graph(dominating_chain(rng, c2, 0));
    const auto report = volume_comparison(g1, "0", g2, root2);
    out.require(report.hypothesis, "instance " + std::to_string(i) + ": generator broke the hypothesis");
    out.require(report.conclusion, "instance " + std::to_string(i) + ": " + report.counterexample.value_or("?"));
    radii += c2.horizon() + 1;
  }
  out.detail << opt.instances << " pairs, " << radii << " radii";
}

// 5. Asymptotic constant: mirror model and random outside-finite-set pairs.
void asymptotic_constant_property(Outcome& out, const SuiteOptions& opt) {
  const auto chain = make_unweighted_chain(8);
  const auto mirror = make_mirror_model(chain);
  const auto mirrored = asymptotic_constant(bdc_as_graph(chain), "0", mirror, "0", 1);
  out.require(mirrored.constant == 2, "mirror constant C = " + to_string(mirrored.constant) + ", expected 2");
  out.require(mirrored.report.conclusion, "mirror: C m1 >= m2 fails");
  for (std::size_t r = 1; r <= chain.horizon(); ++r) {
    const auto d = rooted_decomposition(mirror, "0");
    out.require(mirrored.constant * chain.measure(r) == d.sphere_volume(mirror, r),
                "mirror: C m1(S_r) != m2(S_r) at r=" + std::to_string(r));
  }

  auto rng = criterion_rng(opt.seed, 5);
  for (std::size_t i = 0; i < opt.instances; ++i) {
    const auto c2 = random_chain(rng, 2, 12);
    const auto R = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(c2.horizon())));
    const auto c1 = dominating_chain(rng, c2, R);
    const auto result = asymptotic_constant(bdc_as_graph(c1), "0", bdc_as_graph(c2), "0", R);
    out.require(result.report.conclusion, "instance " + std::to_string(i) + " (R=" + std::to_string(R) +
                                              ", C=" + to_string(result.constant) + ") fails");
  }
  out.detail << "mirror C=" << to_string(mirrored.constant) << ", " << opt.instances << " random pairs";
}

// 6. G' satisfies the Laplacian comparison but grows faster.
void gprime_counterexample(Outcome& out, const SuiteOptions&) {
  const std::size_t n = 21;
  const auto gprime = make_example_gprime(n);
  const auto plain = make_unweighted_chain(n);
  for (long r = 1; r <= 20; ++r) {
    const auto ru = static_cast<std::size_t>(r);
    const Rational expected = rational(-(2 * r + 1), r * r * (r + 1) * (r + 1) * (r + 1));
    out.require(gprime.t(ru) == expected, "t'(" + std::to_string(r) + ") = " + to_string(gprime.t(ru)));
    out.require(gprime.measure(ru) == r + 1 && gprime.measure(ru) > plain.measure(ru),
                "m'(S_" + std::to_string(r) + ") is not r+1 > 1");
  }
  out.require(gprime.t(0) == 1 && plain.t(0) == 1, "t(0) != 1");
  const auto report = laplacian_distance_compare(bdc_as_graph(plain), "0", gprime);
  out.require(report.hypothesis, "Laplacian comparison hypothesis fails");
  out.require(report.conclusion, "curvature and Laplacian forms disagree");
  out.require(report.counterexample.has_value(), "volume comparison unexpectedly holds");
  out.detail << "t'(r) formula on r=1..20; " << report.counterexample.value_or("no counterexample");
}

// 7. Birth-death closed form against the LP.
void closed_form_vs_lp(Outcome& out, const SuiteOptions& opt) {
  auto rng = criterion_rng(opt.seed, 7);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < opt.instances; ++i) {
    const auto chain = random_chain(rng, 3, 10);
    const auto g = bdc_as_graph(chain);
    for (std::size_t R = 1; R + 1 <= chain.horizon(); ++R) {
      for (std::size_t r = 0; r < R; ++r) {
        const Rational closed = bdc_ollivier_closed_form(chain, r, R);
        const auto lp = ollivier_pair(g, r, R);
        std::string why;
        out.require(lp.value == closed, "chain " + std::to_string(i) + " k(" + std::to_string(r) + "," +
                                            std::to_string(R) + "): LP " + to_string(lp.value) + " vs closed form " +
                                            to_string(closed));
        out.require(witness_is_valid(g, lp, &why), "chain " + std::to_string(i) + ": " + why);
        ++pairs;
      }
    }
  }
  out.detail << opt.instances << " chains, " << pairs << " pairs";
}

// 8. Partial-sum equivalence for chains with matched k_+(0).
void partial_sum_equivalence(Outcome& out, const SuiteOptions& opt) {
  auto rng = criterion_rng(opt.seed, 8);
  const std::size_t count = scaled(opt.instances, 2, 1);
  std::size_t radii = 0, with_i = 0, violations = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto tilde = random_chain(rng, 2, 12);
    const auto chain = matched_root_chain(rng, tilde);
    const auto report = partial_sum_equiv_check(tilde, chain);
    for (const auto& row : report.ledger) {
      if (row.check == "(i)") {
        ++radii;
        with_i += row.ok ? 1 : 0;
      }
      if (row.check.rfind("conclusion:", 0) == 0 && !row.ok) ++violations;
    }
    out.require(report.conclusion, "pair " + std::to_string(i) + " violates the equivalence");
  }
  out.detail << count << " pairs, " << radii << " radii ((i) true at " << with_i << "), " << violations
             << " violations";
}

// 9. Associated chain bounds the partial sums of sphere curvatures.
void associated_chain_bound(Outcome& out, const SuiteOptions& opt) {
  auto rng = criterion_rng(opt.seed, 9);
  const std::size_t count = scaled(opt.instances, 1, 2);
  std::size_t radii = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto g = random_graph(rng, 3, 40);
    const auto root = static_cast<VertexIndex>(rng.uniform(0, static_cast<long>(g.size()) - 1));
    const auto decomp = rooted_decomposition(g, root);
    const auto bar = associated_bdc(g, decomp);
    OllivierCache cache(g);
    Rational sum_graph(0), sum_bar(0);
    for (std::size_t R = 1; R < decomp.horizon(); ++R) {
      sum_graph += sphere_curvature(g, decomp, R, cache);
      sum_bar += bdc_sphere_curvature(bar, R);
      out.require(sum_bar >= sum_graph, "graph " + std::to_string(i) + " R=" + std::to_string(R) + ": " +
                                            to_string(sum_bar) + " < " + to_string(sum_graph));
      ++radii;
    }
  }
  const auto fig = make_figure1();
  const auto d = rooted_decomposition(fig, "w");
  const auto bar = associated_bdc(fig, d);
  const Rational fig_bar = bdc_sphere_curvature(bar, 1) + bdc_sphere_curvature(bar, 2);
  const Rational fig_graph = sphere_curvature(fig, d, 1) + sphere_curvature(fig, d, 2);
  out.require(fig_bar == 2, "figure1: sum k-bar = " + to_string(fig_bar) + ", expected 2");
  out.require(fig_graph == 0, "figure1: sum k = " + to_string(fig_graph) + ", expected 0");
  out.detail << count << " graphs, " << radii << " radii; figure1 sums " << to_string(fig_bar) << " >= "
             << to_string(fig_graph);
}

// 10. Ollivier-matching chains share the unweighted chain's sphere curvatures.
void ollivier_matching(Outcome& out, const SuiteOptions& opt) {
  auto rng = criterion_rng(opt.seed, 10);
  const std::size_t count = scaled(opt.instances, 1, 10);
  for (std::size_t i = 0; i < count; ++i) {
    const auto a = random_admissible_sequence(rng, static_cast<std::size_t>(rng.uniform(3, 10)));
    const auto chain = make_ollivier_matching_chain(a);
    const auto g = bdc_as_graph(chain);
    const auto decomp = rooted_decomposition(g, "0");
    for (std::size_t r = 1; r < chain.horizon(); ++r) {
      const Rational expected = r == 1 ? Rational(1) : Rational(0);
      out.require(bdc_sphere_curvature(chain, r) == expected,
                  "sequence " + std::to_string(i) + ": closed-form k'(" + std::to_string(r) + ") != " + to_string(expected));
      out.require(sphere_curvature(g, decomp, r) == expected,
                  "sequence " + std::to_string(i) + ": LP k'(" + std::to_string(r) + ") != " + to_string(expected));
    }
    for (std::size_t r = 0; r <= chain.horizon(); ++r) {
      out.require(chain.measure(r) >= 1, "sequence " + std::to_string(i) + ": m'(" + std::to_string(r) + ") < 1");
    }
  }
  out.detail << count << " sequences";
}

// 11. LP optimum equals exhaustive integer enumeration.
void integrality_oracle(Outcome& out, const SuiteOptions& opt) {
  auto rng = criterion_rng(opt.seed, 11);
  std::size_t done = 0, largest = 0;
  while (done < opt.instances) {
    const auto g = random_graph(rng, 2, 40);
    const auto x = static_cast<VertexIndex>(rng.uniform(0, static_cast<long>(g.size()) - 1));
    const auto nbrs = g.neighbors(x);
    const VertexIndex y = nbrs[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(nbrs.size()) - 1))].index;
    const std::size_t s = support_size(g, x, y);
    if (s > 10) continue;
    largest = std::max(largest, s);
    const auto lp = ollivier_pair(g, x, y);
    const auto brute = enumerate_lipschitz_optimum(g, x, y);
    std::string why;
    const std::string tag = "pair " + std::to_string(done);
    out.require(lp.value == brute.value, tag + ": LP " + to_string(lp.value) + " vs enumeration " + to_string(brute.value));
    out.require(witness_is_valid(g, lp, &why), tag + ": " + why);
    out.require(lp.witness == brute.witness, tag + ": witness is not the lexicographically smallest optimum");
    ++done;
  }
  out.detail << done << " adjacent pairs, largest support " << largest;
}

// 12. Audit report for the model-graph sphere curvature claim.
void audit_report(Outcome& out, const SuiteOptions&) {
  const auto g = make_figure1();
  const auto report = model_sphere_equality_report(g, "w");
  out.require(report.status == ReportStatus::recorded, "report is not marked recorded");
  out.require(ollivier_pair(g, "x", "y").value == -1 && ollivier_pair(g, "x'", "y'").value == 1,
              "pairwise inputs differ from k(x,y) = -1, k(x',y') = 1");
  std::optional<Rational> k2, k2_chain;
  Rational sum_lhs(0), sum_rhs(0);
  bool all_equal = true;
  for (const auto& row : report.ledger) {
    const auto& lhs = std::get<Rational>(row.lhs);
    const auto& rhs = std::get<Rational>(row.rhs);
    out.require(row.ok == (lhs == rhs), "ledger row ok flag inconsistent at r=" + std::to_string(row.r));
    if (row.check == "k(r)==k~(r)") {
      sum_lhs += lhs;
      sum_rhs += rhs;
      all_equal = all_equal && row.ok;
      if (row.r == 2) {
        k2 = lhs;
        k2_chain = rhs;
      }
    } else {
      out.require(lhs == sum_lhs && rhs == sum_rhs, "partial sums inconsistent at r=" + std::to_string(row.r));
    }
  }
  out.require(report.conclusion == all_equal, "conclusion flag disagrees with the ledger");
  out.require(k2.has_value(), "report has no r=2 row");
  out.require(report.counterexample.has_value() == !all_equal, "counterexample flag disagrees with the ledger");
  if (k2) out.detail << "k(2)=" << to_string(*k2) << " k~(2)=" << to_string(*k2_chain) << " status=recorded";
}

using Criterion = std::function<void(Outcome&, const SuiteOptions&)>;

const std::vector<std::pair<std::string, Criterion>>& criteria() {
  static const std::vector<std::pair<std::string, Criterion>> list{
      {"figure1-exactness", figure1_exactness},
      {"figure1-modelhood", figure1_modelhood},
      {"volume-step-identity", volume_step_identity},
      {"volume-comparison", volume_comparison_property},
      {"asymptotic-constant", asymptotic_constant_property},
      {"gprime-counterexample", gprime_counterexample},
      {"chain-closed-form", closed_form_vs_lp},
      {"partial-sum-equivalence", partial_sum_equivalence},
      {"associated-chain-bound", associated_chain_bound},
      {"ollivier-matching-chain", ollivier_matching},
      {"integrality-oracle", integrality_oracle},
      {"model-sphere-audit", audit_report},
  };
  return list;
}

std::vector<CriterionResult> run_core(const SuiteOptions& options) {
  std::vector<CriterionResult> results;
  int id = 0;
  for (const auto& [name, run] : criteria()) {
    Outcome out;
    try {
      run(out, options);
    } catch (const Error& e) {
      out.require(false, std::string(to_string(e.kind())) + ": " + e.what());
    } catch (const std::exception& e) {
      out.require(false, e.what());
    }
    CriterionResult r;
    r.id = ++id;
    r.name = name;
    r.status = out.ok ? CriterionStatus::pass : CriterionStatus::fail;
    r.detail = out.ok ? out.detail.str() : out.first_failure;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options) {
  auto results = run_core(options);
  if (options.check_determinism) {
    const auto again = run_core(options);
    const bool same = render(results) == render(again);
    results.push_back({13, "determinism", same ? CriterionStatus::pass : CriterionStatus::fail,
                       same ? "two runs with seed " + std::to_string(options.seed) + " render identically"
                            : "two runs with the same seed differ"});
  }
  return results;
}

std::string render(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed() ? "PASS" : "FAIL") << "  C" << (r.id < 10 ? "0" : "") << r.id << "  " << r.name;
    out << std::string(r.name.size() < 26 ? 26 - r.name.size() : 1, ' ') << r.detail << '\n';
  }
  return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.passed()) return false;
  }
  return true;
}

}  // namespace curvegraph::audit
