#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvegraph/rational.hpp"

namespace curvegraph {

/// Vertex label as it appears in graph files.
using VertexId = std::string;

/// Position of a vertex inside a WeightedGraph. Indices follow label order,
/// so iterating 0..size()-1 is the deterministic vertex order.
using VertexIndex = std::size_t;

/// Total order on labels: integer-looking labels first, compared numerically,
/// then all other labels in byte order. Ties between spellings of the same
/// integer ("07" vs "7") fall back to byte order.
bool label_less(std::string_view a, std::string_view b);

struct LabelLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return label_less(a, b); }
};

struct VertexRecord {
  VertexId id;
  Rational measure;
};

struct EdgeRecord {
  VertexId u;
  VertexId v;
  Rational weight;
};

/// Unvalidated vertex and edge lists, as read from a file or built by hand.
struct RawGraph {
  std::vector<VertexRecord> vertices;
  std::vector<EdgeRecord> edges;
};

struct Neighbor {
  VertexIndex index;
  Rational weight;
};

/// Finite, connected, symmetric edge-weighted graph with a positive vertex
/// measure. Immutable once built by validate_graph().
class WeightedGraph {
 public:
  std::size_t size() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexId& label(VertexIndex v) const { return labels_.at(v); }
  const std::vector<VertexId>& labels() const { return labels_; }

  /// Throws Error{unknown_vertex}.
  VertexIndex index(std::string_view label) const;
  std::optional<VertexIndex> find(std::string_view label) const;

  const Rational& measure(VertexIndex v) const { return measures_.at(v); }

  /// Neighbors sorted by index; every listed weight is positive.
  std::span<const Neighbor> neighbors(VertexIndex v) const { return adjacency_.at(v); }

  /// b(u, v); zero when the vertices are not adjacent.
  Rational weight(VertexIndex u, VertexIndex v) const;
  bool adjacent(VertexIndex u, VertexIndex v) const;

  /// One record per unordered pair, u before v in label order, sorted.
  std::vector<EdgeRecord> edges() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

 private:
  friend WeightedGraph validate_graph(const RawGraph& raw);

  std::vector<VertexId> labels_;
  std::map<VertexId, VertexIndex, LabelLess> index_;
  std::vector<Rational> measures_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Checks every graph axiom and builds the graph. Zero-weight edge records are
/// dropped before any other edge check.
WeightedGraph validate_graph(const RawGraph& raw);

/// Total function V -> Q, indexed like the graph it belongs to.
class GraphFunction {
 public:
  GraphFunction() = default;
  explicit GraphFunction(std::vector<Rational> values) : values_(std::move(values)) {}

  /// Throws Error{partial_function} if some vertex of g has no value, and
  /// Error{unknown_vertex} for labels outside g.
  static GraphFunction from_labels(const WeightedGraph& g, const std::map<VertexId, Rational>& values);
  static GraphFunction constant(const WeightedGraph& g, const Rational& c);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](VertexIndex v) const { return values_[v]; }
  Rational& operator[](VertexIndex v) { return values_[v]; }

 private:
  std::vector<Rational> values_;
};

/// Breadth-first hop counts from `source` to every vertex.
std::vector<std::size_t> hop_distances(const WeightedGraph& g, VertexIndex source);

/// Combinatorial distance: number of edges on a shortest path.
std::size_t distance(const WeightedGraph& g, VertexIndex x, VertexIndex y);
std::size_t distance(const WeightedGraph& g, std::string_view x, std::string_view y);

/// Spheres S_0..S_horizon around a root. Balls are unions of spheres and are
/// not stored.
struct RootedDecomposition {
  VertexIndex root = 0;
  std::vector<std::size_t> dist;
  std::vector<std::vector<VertexIndex>> spheres;

  /// Eccentricity of the root.
  std::size_t horizon() const { return spheres.size() - 1; }
  /// Outer data (k_+, S_{r+1}) exists only strictly inside the horizon.
  bool has_outer(std::size_t r) const { return r < horizon(); }
  std::size_t radius_of(VertexIndex v) const { return dist.at(v); }
  Rational sphere_volume(const WeightedGraph& g, std::size_t r) const;
  Rational ball_volume(const WeightedGraph& g, std::size_t r) const;
};

RootedDecomposition rooted_decomposition(const WeightedGraph& g, VertexIndex root);
RootedDecomposition rooted_decomposition(const WeightedGraph& g, std::string_view root);

/// Deg(x) = (1/m(x)) * sum_y b(x, y).
Rational degree(const WeightedGraph& g, VertexIndex x);

/// Formal Laplacian (1/m(x)) * sum_y b(x, y) (f(x) - f(y)).
Rational laplacian(const WeightedGraph& g, const GraphFunction& f, VertexIndex x);

/// Laplacian of d(root, .) at x. Equals k_-(x) - k_+(x); undefined (throws
/// HorizonExceeded) on the outermost sphere, where the ball may be cut off.
Rational laplacian_of_distance(const WeightedGraph& g, const RootedDecomposition& decomp, VertexIndex x);

}  // namespace curvegraph
