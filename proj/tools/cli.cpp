#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "curvegraph/acceptance.hpp"
#include "curvegraph/chains.hpp"
#include "curvegraph/comparison.hpp"
#include "curvegraph/curvature.hpp"
#include "curvegraph/error.hpp"
#include "curvegraph/io.hpp"
#include "json.hpp"

namespace curvegraph::cli {
namespace {

using nlohmann::ordered_json;

// Thrown for argument combinations CLI11 cannot express.
struct UsageError {
  std::string message;
};

struct Input {
  Document document;
  std::string source;
};

Input read_input(const std::string& path, std::istream& in) {
  std::string text;
  std::string source;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    source = "<stdin>";
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::parse_error, path + ": cannot open file");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
    source = path;
  }
  return {parse_document(text, source), source};
}

WeightedGraph read_graph(const std::string& path, std::istream& in) {
  return document_graph(read_input(path, in).document);
}

std::string na(const std::optional<Rational>& value) { return value ? to_string(*value) : "NA"; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream stream(text);
  while (std::getline(stream, current, sep)) parts.push_back(current);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CURVEGRAPH_SEED")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return value;
  }
  return 7;
}

void emit_error(std::ostream& err, std::string_view kind, std::string_view message) {
  ordered_json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  err << j.dump() << '\n';
}

// --- subcommands -----------------------------------------------------------

void cmd_validate(const std::string& file, std::istream& in, std::ostream& out) {
  const auto input = read_input(file, in);
  std::visit([&](const auto& doc) { out << to_json(doc) << '\n'; }, input.document);
}

void cmd_curvature(const std::string& file, const std::string& root, std::optional<std::size_t> radius,
                   std::istream& in, std::ostream& out) {
  const auto g = read_graph(file, in);
  const auto decomp = rooted_decomposition(g, root);
  if (radius && *radius > decomp.horizon()) {
    throw Error(ErrorKind::horizon_exceeded, "radius " + std::to_string(*radius) + " exceeds the horizon " +
                                                 std::to_string(decomp.horizon()) + " of \"" + root + "\"");
  }
  const auto profile = curvature_profile(g, decomp);
  out << "r,vertex,k_minus,k_plus,avg_minus,avg_plus,m_Sr\n";
  for (const auto& v : profile.per_vertex) {
    if (radius && v.radius != *radius) continue;
    const auto& avg = profile.per_radius[v.radius];
    out << v.radius << ',' << g.label(v.vertex) << ',' << to_string(v.k_minus) << ',' << na(v.k_plus) << ','
        << to_string(avg.avg_k_minus) << ',' << na(avg.avg_k_plus) << ',' << to_string(avg.sphere_volume) << '\n';
  }
}

void cmd_ollivier(const std::string& file, const std::string& pair, bool all_adjacent, std::istream& in,
                  std::ostream& out) {
  const auto g = read_graph(file, in);
  if (all_adjacent) {
    ordered_json list = ordered_json::array();
    for (const auto& e : g.edges()) list.push_back(ordered_json::parse(to_json(g, ollivier_pair(g, e.u, e.v), -1)));
    out << list.dump(2) << '\n';
    return;
  }
  const auto labels = split(pair, ',');
  if (labels.size() != 2) throw UsageError{"--pair expects two labels separated by a comma, got \"" + pair + "\""};
  out << to_json(g, ollivier_pair(g, labels[0], labels[1])) << '\n';
}

void cmd_sphere_curv(const std::string& file, const std::string& root, std::istream& in, std::ostream& out) {
  const auto g = read_graph(file, in);
  const auto decomp = rooted_decomposition(g, root);
  const auto chain = associated_bdc(g, decomp);
  OllivierCache cache(g);
  out << "r,k,k_tilde\n";
  for (std::size_t r = 1; r <= decomp.horizon(); ++r) {
    const Rational k = sphere_curvature(g, decomp, r, cache);
    // The chain closed form needs an outer sphere beyond r.
    const std::optional<Rational> k_tilde =
        r < chain.horizon() ? std::optional<Rational>(bdc_sphere_curvature(chain, r)) : std::nullopt;
    out << r << ',' << to_string(k) << ',' << na(k_tilde) << '\n';
  }
}

void cmd_bdc(const std::string& file, const std::string& root, std::istream& in, std::ostream& out) {
  const auto g = read_graph(file, in);
  out << to_json(associated_bdc(g, root)) << '\n';
}

BirthDeathChain named_chain(const std::string& name, std::optional<std::size_t> n) {
  if (!n) throw UsageError{"--n is required for --of " + name};
  return name == "chain" ? make_unweighted_chain(*n) : make_example_gprime(*n);
}

void cmd_gen(const std::string& kind, std::optional<std::size_t> n, const std::string& of, const std::string& seq,
             std::istream& in, std::ostream& out) {
  const auto reject = [&](bool given, const char* flag) {
    if (given) throw UsageError{std::string(flag) + " does not apply to gen " + kind};
  };
  if (kind == "chain" || kind == "gprime") {
    reject(!of.empty(), "--of");
    reject(!seq.empty(), "--seq");
    out << to_json(named_chain(kind, n)) << '\n';
  } else if (kind == "figure1") {
    reject(n.has_value(), "--n");
    reject(!of.empty(), "--of");
    reject(!seq.empty(), "--seq");
    out << to_json(make_figure1()) << '\n';
  } else if (kind == "mirror") {
    reject(!seq.empty(), "--seq");
    if (of.empty()) throw UsageError{"gen mirror requires --of <chain|gprime|FILE>"};
    if (of == "chain" || of == "gprime") {
      out << to_json(make_mirror_model(named_chain(of, n))) << '\n';
      return;
    }
    reject(n.has_value(), "--n");
    const auto input = read_input(of, in);
    const auto* chain = std::get_if<BirthDeathChain>(&input.document);
    if (!chain) throw Error(ErrorKind::invalid_chain, input.source + ": --of expects a chain file");
    out << to_json(make_mirror_model(*chain)) << '\n';
  } else {
    reject(n.has_value(), "--n");
    reject(!of.empty(), "--of");
    if (seq.empty()) throw UsageError{"gen ollivier-match requires --seq <a0,a1,...>"};
    std::vector<Rational> a;
    for (const auto& part : split(seq, ',')) a.push_back(parse_rational(part));
    out << to_json(make_ollivier_matching_chain(a)) << '\n';
  }
}

struct CompareArgs {
  std::vector<std::string> files;
  std::string against;
  std::string root1;
  std::string root2;
  std::optional<std::size_t> outside;
  bool constant = false;
  std::string format = "json";
};

void cmd_compare(const CompareArgs& args, std::istream& in, std::ostream& out) {
  std::string file1;
  std::string file2;
  if (!args.against.empty()) {
    if (args.files.size() > 1) throw UsageError{"compare --against takes at most one positional file"};
    file1 = args.against;
    file2 = args.files.empty() ? "-" : args.files[0];
  } else {
    if (args.files.size() != 2) throw UsageError{"compare needs two files, or one file with --against"};
    file1 = args.files[0];
    file2 = args.files[1];
  }
  if (file1 == "-" && file2 == "-") throw UsageError{"only one input can come from standard input"};
  const auto g1 = read_graph(file1, in);
  const auto g2 = read_graph(file2, in);

  const auto curvature = stronger_curvature_growth(g1, args.root1, associated_bdc(g2, args.root2));
  const auto average = stronger_average_growth(g1, args.root1, g2, args.root2);
  std::optional<GrowthRelation> outside;
  if (args.outside) outside = stronger_outside_finite(g1, args.root1, g2, args.root2, *args.outside);
  const auto volume = volume_comparison(g1, args.root1, g2, args.root2);
  std::optional<AsymptoticConstant> constant;
  if (args.constant) constant = asymptotic_constant(g1, args.root1, g2, args.root2, *args.outside);

  if (args.format == "text") {
    const auto line = [&](const char* name, const GrowthRelation& rel) {
      out << name << ": " << (rel.holds ? "holds" : "fails") << " (common horizon " << rel.common_horizon
          << (rel.horizon_mismatch ? ", horizons differ" : "") << ")";
      if (rel.first_violation) {
        out << "; first violation at r=" << rel.first_violation->radius << " (" << rel.first_violation->side
            << "): " << rel.first_violation->details;
      }
      out << '\n';
    };
    line("stronger_curvature", curvature);
    line("stronger_average_curvature", average);
    if (outside) line("stronger_outside_finite_set", *outside);
    out << '\n' << to_text(volume);
    if (constant) out << "\nC = " << to_string(constant->constant) << "\n\n" << to_text(constant->report);
    return;
  }

  ordered_json j;
  j["g1"] = {{"source", file1 == "-" ? "<stdin>" : file1}, {"root", args.root1}};
  j["g2"] = {{"source", file2 == "-" ? "<stdin>" : file2}, {"root", args.root2}};
  j["stronger_curvature"] = ordered_json::parse(to_json(curvature, -1));
  j["stronger_average_curvature"] = ordered_json::parse(to_json(average, -1));
  if (outside) j["stronger_outside_finite_set"] = ordered_json::parse(to_json(*outside, -1));
  j["volume"] = ordered_json::parse(to_json(volume, -1));
  if (constant) {
    j["asymptotic_constant"] = {{"R", *args.outside},
                                {"C", to_string(constant->constant)},
                                {"report", ordered_json::parse(to_json(constant->report, -1))}};
  }
  out << j.dump(2) << '\n';
}

int cmd_verify(std::uint64_t seed, std::size_t instances, std::ostream& out) {
  audit::SuiteOptions options;
  options.seed = seed;
  options.instances = instances;
  const auto results = audit::run_acceptance_suite(options);
  out << audit::render(results);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed() ? 1 : 0;
  out << passed << '/' << results.size() << " criteria passed (seed " << seed << ", instances " << instances
      << ")\n";
  return audit::all_passed(results) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact curvature and volume-growth comparisons on weighted graphs", "curvegraph"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "curvegraph 0.1.0");

  std::string file = "-";
  std::string root;
  std::optional<std::size_t> radius;
  std::string pair;
  bool all_adjacent = false;
  std::string gen_kind;
  std::optional<std::size_t> n;
  std::string of;
  std::string seq;
  CompareArgs compare;
  std::uint64_t seed = default_seed();
  std::size_t instances = 100;

  auto* validate = app.add_subcommand("validate", "Parse, check invariants and echo the canonical form");
  validate->add_option("file", file, "Graph or chain JSON (default: stdin)");

  auto* curvature = app.add_subcommand("curvature", "Inner/outer and averaged curvatures as CSV");
  curvature->add_option("file", file, "Graph or chain JSON (default: stdin)");
  curvature->add_option("--root", root, "Root vertex")->required();
  curvature->add_option("--radius", radius, "Only rows for this radius");

  auto* ollivier = app.add_subcommand("ollivier", "Exact Ollivier curvature with an optimal witness");
  ollivier->add_option("file", file, "Graph or chain JSON (default: stdin)");
  auto* pair_opt = ollivier->add_option("--pair", pair, "Vertex pair u,v");
  auto* all_opt = ollivier->add_flag("--all-adjacent", all_adjacent, "Every adjacent pair");
  pair_opt->excludes(all_opt);

  auto* sphere = app.add_subcommand("sphere-curv", "Sphere curvature k(r) next to the associated chain's");
  sphere->add_option("file", file, "Graph or chain JSON (default: stdin)");
  sphere->add_option("--root", root, "Root vertex")->required();

  auto* bdc = app.add_subcommand("bdc", "Associated birth-death chain");
  bdc->add_option("file", file, "Graph or chain JSON (default: stdin)");
  bdc->add_option("--root", root, "Root vertex")->required();

  auto* gen = app.add_subcommand("gen", "Generate a named example");
  gen->add_option("kind", gen_kind, "chain | gprime | figure1 | mirror | ollivier-match")
      ->required()
      ->check(CLI::IsMember({"chain", "gprime", "figure1", "mirror", "ollivier-match"}));
  gen->add_option("--n", n, "Horizon of the chain");
  gen->add_option("--of", of, "Chain to mirror: chain, gprime or a chain file");
  gen->add_option("--seq", seq, "Comma-separated rationals 1 = a0 >= a1 >= ... > 0");

  auto* cmp = app.add_subcommand("compare", "Growth relations, volume ledger and asymptotic constant");
  cmp->add_option("files", compare.files, "G1 and G2 (with --against: G2 only, default stdin)")->expected(0, 2);
  cmp->add_option("--against", compare.against, "Reference graph G1");
  cmp->add_option("--root1", compare.root1, "Root of G1")->required();
  cmp->add_option("--root2", compare.root2, "Root of G2")->required();
  auto* outside_opt = cmp->add_option("--outside", compare.outside, "Threshold R >= 1 for the outside-finite-set relation");
  cmp->add_flag("--constant", compare.constant, "Compute the asymptotic volume constant C")->needs(outside_opt);
  cmp->add_option("--format", compare.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Run the seeded acceptance suite");
  verify->add_option("--seed", seed, "Generator seed (default: $CURVEGRAPH_SEED or 7)");
  verify->add_option("--instances", instances, "Base instance count")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    // CLI11 reports missing required options before unknown ones; name the
    // unknown flag first since it is usually the real mistake.
    std::vector<std::string> extras;
    for (const auto* sub : app.get_subcommands()) {
      for (const auto& extra : sub->remaining()) extras.push_back(extra);
    }
    for (const auto& extra : app.remaining()) extras.push_back(extra);
    if (!extras.empty() && e.get_name() != "ExtrasError") {
      err << "usage error: unknown argument " << extras.front() << '\n';
    } else {
      err << "usage error: " << e.what() << '\n';
    }
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << "see: curvegraph " << sub->get_name() << " --help\n";
    } else {
      err << "see: curvegraph --help\n";
    }
    return 2;
  }

  try {
    if (validate->parsed()) cmd_validate(file, in, out);
    if (curvature->parsed()) cmd_curvature(file, root, radius, in, out);
    if (ollivier->parsed()) {
      if (pair.empty() && !all_adjacent) throw UsageError{"ollivier needs --pair u,v or --all-adjacent"};
      cmd_ollivier(file, pair, all_adjacent, in, out);
    }
    if (sphere->parsed()) cmd_sphere_curv(file, root, in, out);
    if (bdc->parsed()) cmd_bdc(file, root, in, out);
    if (gen->parsed()) cmd_gen(gen_kind, n, of, seq, in, out);
    if (cmp->parsed()) cmd_compare(compare, in, out);
    if (verify->parsed()) return cmd_verify(seed, instances, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << '\n';
    return 2;
  } catch (const Error& e) {
    emit_error(err, to_string(e.kind()), e.what());
    return 1;
  }
  return 0;
}

}  // namespace curvegraph::cli
