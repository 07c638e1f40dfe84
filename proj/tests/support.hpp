#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>

#include "curvegraph/graph.hpp"
#include "curvegraph/rational.hpp"

namespace testing_support {

using curvegraph::Rational;

inline Rational Q(const char* text) { return curvegraph::parse_rational(text); }

inline curvegraph::WeightedGraph build(std::initializer_list<std::pair<const char*, const char*>> vertices,
                                       std::initializer_list<std::tuple<const char*, const char*, const char*>> edges) {
  curvegraph::RawGraph raw;
  for (const auto& [id, m] : vertices) raw.vertices.push_back({id, Q(m)});
  for (const auto& [u, v, b] : edges) raw.edges.push_back({u, v, Q(b)});
  return curvegraph::validate_graph(raw);
}

// Path 0 - 1 - ... - n with unit weights and measures.
inline curvegraph::WeightedGraph path(std::size_t n) {
  curvegraph::RawGraph raw;
  for (std::size_t i = 0; i <= n; ++i) raw.vertices.push_back({std::to_string(i), Rational(1)});
  for (std::size_t i = 0; i < n; ++i) raw.edges.push_back({std::to_string(i), std::to_string(i + 1), Rational(1)});
  return curvegraph::validate_graph(raw);
}

}  // namespace testing_support

#define EXPECT_ERROR_KIND(statement, expected_kind)                       \
  do {                                                                    \
    try {                                                                 \
      statement;                                                          \
      ADD_FAILURE() << "expected " << curvegraph::to_string(expected_kind); \
    } catch (const curvegraph::Error& e) {                                \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                     \
    }                                                                     \
  } while (false)
