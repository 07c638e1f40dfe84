#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "curvegraph/birth_death_chain.hpp"
#include "curvegraph/curvature.hpp"
#include "curvegraph/graph.hpp"

namespace curvegraph {

// Graph files:  {"vertices":[{"id":"w","m":"1/1"},...],
//                "edges":[{"u":"w","v":"x","b":"1/1"},...]}
// Chain files:  {"m":["1/1",...],"b":["1/1",...]}
//
// Rationals are strings "p/q" (or "p"); plain JSON integers are also accepted
// on input. Floating-point numbers are rejected. Output always uses "p/q".
//
// Every parse failure is an Error whose message starts with the source name
// and the byte offset or JSON pointer of the offending value.

using Document = std::variant<WeightedGraph, BirthDeathChain>;

/// Detects the format from the top-level keys.
Document parse_document(std::string_view text, std::string_view source = "<input>");
WeightedGraph parse_graph(std::string_view text, std::string_view source = "<input>");
BirthDeathChain parse_chain(std::string_view text, std::string_view source = "<input>");

/// Graphs pass through; chains become path graphs on "0".."R".
WeightedGraph document_graph(const Document& doc);

std::string to_json(const WeightedGraph& g, int indent = 2);
std::string to_json(const BirthDeathChain& chain, int indent = 2);
std::string to_json(const WeightedGraph& g, const OllivierResult& result, int indent = 2);

}  // namespace curvegraph
