#include "curvegraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>

#include "curvegraph/error.hpp"

namespace curvegraph {
namespace {

constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();

struct IntegerLabel {
  bool negative;
  std::string_view magnitude;  // no leading zeros, "0" for zero
};

std::optional<IntegerLabel> as_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  if (s == "0") negative = false;
  return IntegerLabel{negative, s};
}

// -1, 0, 1
int compare_magnitude(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  const int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

int compare_integers(const IntegerLabel& a, const IntegerLabel& b) {
  if (a.negative != b.negative) return a.negative ? -1 : 1;
  const int c = compare_magnitude(a.magnitude, b.magnitude);
  return a.negative ? -c : c;
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  const auto ia = as_integer(a);
  const auto ib = as_integer(b);
  if (ia && ib) {
    const int c = compare_integers(*ia, *ib);
    if (c != 0) return c < 0;
    return a < b;
  }
  if (ia.has_value() != ib.has_value()) return ia.has_value();
  return a < b;
}

VertexIndex WeightedGraph::index(std::string_view label) const {
  const auto found = find(label);
  if (!found) throw Error(ErrorKind::unknown_vertex, "unknown vertex \"" + std::string(label) + "\"");
  return *found;
}

std::optional<VertexIndex> WeightedGraph::find(std::string_view label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational WeightedGraph::weight(VertexIndex u, VertexIndex v) const {
  const auto& adj = adjacency_.at(u);
  const auto it = std::lower_bound(adj.begin(), adj.end(), v,
                                   [](const Neighbor& n, VertexIndex key) { return n.index < key; });
  if (it != adj.end() && it->index == v) return it->weight;
  return Rational(0);
}

bool WeightedGraph::adjacent(VertexIndex u, VertexIndex v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), Neighbor{v, Rational(0)},
                            [](const Neighbor& a, const Neighbor& b) { return a.index < b.index; });
}

std::vector<EdgeRecord> WeightedGraph::edges() const {
  std::vector<EdgeRecord> out;
  out.reserve(edge_count_);
  for (VertexIndex u = 0; u < size(); ++u) {
    for (const auto& n : adjacency_[u]) {
      if (n.index > u) out.push_back({labels_[u], labels_[n.index], n.weight});
    }
  }
  return out;
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.labels_ != b.labels_ || a.measures_ != b.measures_) return false;
  for (VertexIndex v = 0; v < a.size(); ++v) {
    const auto& na = a.adjacency_[v];
    const auto& nb = b.adjacency_[v];
    if (na.size() != nb.size()) return false;
    for (std::size_t i = 0; i < na.size(); ++i) {
      if (na[i].index != nb[i].index || na[i].weight != nb[i].weight) return false;
    }
  }
  return true;
}

WeightedGraph validate_graph(const RawGraph& raw) {
  if (raw.vertices.empty()) throw Error(ErrorKind::empty_graph, "graph has no vertices");

  WeightedGraph g;
  std::vector<const VertexRecord*> sorted;
  sorted.reserve(raw.vertices.size());
  for (const auto& rec : raw.vertices) {
    if (rec.measure <= 0) {
      throw Error(ErrorKind::non_positive_measure,
                  "vertex \"" + rec.id + "\" has measure " + to_string(rec.measure) + " <= 0");
    }
    sorted.push_back(&rec);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const VertexRecord* a, const VertexRecord* b) { return label_less(a->id, b->id); });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i - 1]->id == sorted[i]->id) {
      throw Error(ErrorKind::duplicate_vertex, "vertex \"" + sorted[i]->id + "\" listed twice");
    }
    g.labels_.push_back(sorted[i]->id);
    g.measures_.push_back(sorted[i]->measure);
    g.index_.emplace(sorted[i]->id, i);
  }

  // (min index, max index) -> weight
  std::map<std::pair<VertexIndex, VertexIndex>, Rational> weights;
  for (const auto& e : raw.edges) {
    if (e.weight < 0) {
      throw Error(ErrorKind::non_positive_edge_weight,
                  "edge (" + e.u + ", " + e.v + ") has negative weight " + to_string(e.weight));
    }
    const VertexIndex u = g.index(e.u);
    const VertexIndex v = g.index(e.v);
    if (e.weight == 0) continue;
    if (u == v) throw Error(ErrorKind::self_loop, "self-loop at \"" + e.u + "\"");
    const auto key = std::minmax(u, v);
    const auto [it, inserted] = weights.emplace(key, e.weight);
    if (!inserted && it->second != e.weight) {
      throw Error(ErrorKind::asymmetric_duplicate_edge,
                  "edge (" + e.u + ", " + e.v + ") listed with weights " + to_string(it->second) + " and " +
                      to_string(e.weight));
    }
  }

  g.adjacency_.assign(g.size(), {});
  for (const auto& [key, w] : weights) {
    g.adjacency_[key.first].push_back({key.second, w});
    g.adjacency_[key.second].push_back({key.first, w});
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end(), [](const Neighbor& a, const Neighbor& b) { return a.index < b.index; });
  }
  g.edge_count_ = weights.size();

  const auto reach = hop_distances(g, 0);
  for (VertexIndex v = 0; v < g.size(); ++v) {
    if (reach[v] == unreached) {
      throw Error(ErrorKind::disconnected_graph,
                  "vertex \"" + g.labels_[v] + "\" is not reachable from \"" + g.labels_[0] + "\"");
    }
  }
  return g;
}

GraphFunction GraphFunction::from_labels(const WeightedGraph& g, const std::map<VertexId, Rational>& values) {
  std::vector<Rational> out(g.size());
  std::vector<bool> seen(g.size(), false);
  for (const auto& [label, value] : values) {
    const VertexIndex v = g.index(label);
    out[v] = value;
    seen[v] = true;
  }
  for (VertexIndex v = 0; v < g.size(); ++v) {
    if (!seen[v]) throw Error(ErrorKind::partial_function, "function has no value at \"" + g.label(v) + "\"");
  }
  return GraphFunction(std::move(out));
}

GraphFunction GraphFunction::constant(const WeightedGraph& g, const Rational& c) {
  return GraphFunction(std::vector<Rational>(g.size(), c));
}

std::vector<std::size_t> hop_distances(const WeightedGraph& g, VertexIndex source) {
  std::vector<std::size_t> dist(g.size(), unreached);
  std::deque<VertexIndex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const VertexIndex u = queue.front();
    queue.pop_front();
    for (const auto& n : g.neighbors(u)) {
      if (dist[n.index] == unreached) {
        dist[n.index] = dist[u] + 1;
        queue.push_back(n.index);
      }
    }
  }
  return dist;
}

std::size_t distance(const WeightedGraph& g, VertexIndex x, VertexIndex y) {
  if (x >= g.size() || y >= g.size()) throw Error(ErrorKind::unknown_vertex, "vertex index out of range");
  return hop_distances(g, x)[y];
}

std::size_t distance(const WeightedGraph& g, std::string_view x, std::string_view y) {
  return distance(g, g.index(x), g.index(y));
}

Rational RootedDecomposition::sphere_volume(const WeightedGraph& g, std::size_t r) const {
  Rational total(0);
  for (VertexIndex v : spheres.at(r)) total += g.measure(v);
  return total;
}

Rational RootedDecomposition::ball_volume(const WeightedGraph& g, std::size_t r) const {
  Rational total(0);
  for (std::size_t s = 0; s <= r && s < spheres.size(); ++s) total += sphere_volume(g, s);
  return total;
}

RootedDecomposition rooted_decomposition(const WeightedGraph& g, VertexIndex root) {
  if (root >= g.size()) throw Error(ErrorKind::unknown_vertex, "root index out of range");
  RootedDecomposition d;
  d.root = root;
  d.dist = hop_distances(g, root);
  const std::size_t horizon = *std::max_element(d.dist.begin(), d.dist.end());
  d.spheres.assign(horizon + 1, {});
  for (VertexIndex v = 0; v < g.size(); ++v) d.spheres[d.dist[v]].push_back(v);
  return d;
}

RootedDecomposition rooted_decomposition(const WeightedGraph& g, std::string_view root) {
  return rooted_decomposition(g, g.index(root));
}

Rational degree(const WeightedGraph& g, VertexIndex x) {
  Rational total(0);
  for (const auto& n : g.neighbors(x)) total += n.weight;
  return total / g.measure(x);
}

Rational laplacian(const WeightedGraph& g, const GraphFunction& f, VertexIndex x) {
  if (f.size() != g.size()) {
    throw Error(ErrorKind::partial_function, "function is not defined on every vertex of the graph");
  }
  if (x >= g.size()) throw Error(ErrorKind::unknown_vertex, "vertex index out of range");
  Rational total(0);
  for (const auto& n : g.neighbors(x)) total += n.weight * (f[x] - f[n.index]);
  return total / g.measure(x);
}

Rational laplacian_of_distance(const WeightedGraph& g, const RootedDecomposition& decomp, VertexIndex x) {
  const std::size_t r = decomp.radius_of(x);
  if (!decomp.has_outer(r)) {
    throw Error(ErrorKind::horizon_exceeded,
                "vertex \"" + g.label(x) + "\" lies on the outermost sphere r=" + std::to_string(r));
  }
  std::vector<Rational> dist(g.size());
  for (VertexIndex v = 0; v < g.size(); ++v) dist[v] = Rational(static_cast<long>(decomp.dist[v]));
  return laplacian(g, GraphFunction(std::move(dist)), x);
}

}  // namespace curvegraph
