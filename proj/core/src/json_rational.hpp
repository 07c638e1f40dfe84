#pragma once

#include <vector>

#include "curvegraph/curvature.hpp"
#include "curvegraph/rational.hpp"
#include "json.hpp"

namespace curvegraph::detail {

inline nlohmann::ordered_json rational_array(const std::vector<Rational>& values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& q : values) out.push_back(to_string(q));
  return out;
}

inline nlohmann::ordered_json ollivier_json(const WeightedGraph& g, const OllivierResult& result) {
  nlohmann::ordered_json out;
  out["x"] = g.label(result.x);
  out["y"] = g.label(result.y);
  out["d"] = result.distance;
  out["k"] = to_string(result.value);
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < result.support.size(); ++i) witness[g.label(result.support[i])] = to_string(result.witness[i]);
  out["witness"] = std::move(witness);
  return out;
}

}  // namespace curvegraph::detail
