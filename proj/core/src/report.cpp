#include <algorithm>
#include <sstream>

#include "curvegraph/comparison.hpp"
#include "json.hpp"

namespace curvegraph {
namespace {

using nlohmann::ordered_json;

ordered_json value_json(const LedgerValue& value) {
  if (const auto* b = std::get_if<bool>(&value)) return *b;
  return to_string(std::get<Rational>(value));
}

}  // namespace

std::string to_json(const TheoremReport& report, int indent) {
  ordered_json out;
  out["claim"] = report.claim;
  out["status"] = std::string(to_string(report.status));
  out["hypothesis"] = report.hypothesis;
  out["conclusion"] = report.conclusion;
  out["range"] = report.range;
  out["ledger"] = ordered_json::array();
  for (const auto& row : report.ledger) {
    ordered_json j;
    j["check"] = row.check;
    j["r"] = row.r;
    if (!row.subject.empty()) j["vertex"] = row.subject;
    j["lhs"] = value_json(row.lhs);
    j["rel"] = row.relation;
    j["rhs"] = value_json(row.rhs);
    j["ok"] = row.ok;
    out["ledger"].push_back(std::move(j));
  }
  if (report.counterexample) out["counterexample"] = *report.counterexample;
  return out.dump(indent);
}

std::string to_json(const GrowthRelation& relation, int indent) {
  ordered_json out;
  out["kind"] = std::string(to_string(relation.kind));
  out["holds"] = relation.holds;
  out["threshold_R"] = relation.threshold;
  out["common_horizon"] = relation.common_horizon;
  out["horizon_mismatch"] = relation.horizon_mismatch;
  if (relation.first_violation) {
    out["first_violation"] = {{"r", relation.first_violation->radius},
                              {"side", relation.first_violation->side},
                              {"details", relation.first_violation->details}};
  }
  return out.dump(indent);
}

std::string to_text(const TheoremReport& report) {
  std::ostringstream out;
  out << "claim:      " << report.claim << '\n'
      << "status:     " << to_string(report.status) << '\n'
      << "hypothesis: " << (report.hypothesis ? "holds" : "fails") << '\n'
      << "conclusion: " << (report.conclusion ? "holds" : "fails") << '\n'
      << "range:      " << report.range << '\n';
  if (report.counterexample) out << "counterexample: " << *report.counterexample << '\n';

  std::vector<std::vector<std::string>> cells{{"check", "r", "vertex", "lhs", "rel", "rhs", "ok"}};
  for (const auto& row : report.ledger) {
    cells.push_back({row.check, std::to_string(row.r), row.subject.empty() ? "-" : row.subject, to_string(row.lhs),
                     row.relation, to_string(row.rhs), row.ok ? "yes" : "NO"});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace curvegraph
