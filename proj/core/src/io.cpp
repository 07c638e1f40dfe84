#include "curvegraph/io.hpp"

#include "curvegraph/chains.hpp"
#include "curvegraph/error.hpp"
#include "json.hpp"
#include "json_rational.hpp"

namespace curvegraph {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(std::string_view source, const std::string& pointer, const std::string& what) {
  throw Error(ErrorKind::parse_error, std::string(source) + ": " + (pointer.empty() ? "/" : pointer) + ": " + what);
}

json parse_text(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse_error,
                std::string(source) + ": invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Rational rational_at(const json& value, std::string_view source, const std::string& pointer) {
  if (value.is_number_integer()) return Rational(mpz_class(value.dump(), 10));
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const Error& e) {
      schema_error(source, pointer, e.what());
    }
  }
  if (value.is_number_float()) schema_error(source, pointer, "floating-point values are not exact; use \"p/q\"");
  schema_error(source, pointer, "expected a rational string \"p/q\" or an integer");
}

std::string label_at(const json& value, std::string_view source, const std::string& pointer) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_unsigned()) return value.dump();
  schema_error(source, pointer, "expected a vertex id (string or nonnegative integer)");
}

const json& field(const json& object, const char* key, std::string_view source, const std::string& pointer) {
  if (!object.is_object()) schema_error(source, pointer, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) schema_error(source, pointer, std::string("missing key \"") + key + "\"");
  return *it;
}

const json& array_field(const json& object, const char* key, std::string_view source, const std::string& pointer) {
  const json& value = field(object, key, source, pointer);
  if (!value.is_array()) schema_error(source, pointer + "/" + key, "expected an array");
  return value;
}

template <typename Fn>
auto with_source(std::string_view source, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse_error) throw;
    throw Error(e.kind(), std::string(source) + ": " + e.what());
  }
}

WeightedGraph graph_from_json(const json& doc, std::string_view source) {
  RawGraph raw;
  const json& vertices = array_field(doc, "vertices", source, "");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string at = "/vertices/" + std::to_string(i);
    raw.vertices.push_back({label_at(field(vertices[i], "id", source, at), source, at + "/id"),
                            rational_at(field(vertices[i], "m", source, at), source, at + "/m")});
  }
  const json& edges = array_field(doc, "edges", source, "");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = "/edges/" + std::to_string(i);
    raw.edges.push_back({label_at(field(edges[i], "u", source, at), source, at + "/u"),
                         label_at(field(edges[i], "v", source, at), source, at + "/v"),
                         rational_at(field(edges[i], "b", source, at), source, at + "/b")});
  }
  return with_source(source, [&] { return validate_graph(raw); });
}

BirthDeathChain chain_from_json(const json& doc, std::string_view source) {
  std::vector<Rational> m, b;
  const json& ms = array_field(doc, "m", source, "");
  for (std::size_t i = 0; i < ms.size(); ++i) m.push_back(rational_at(ms[i], source, "/m/" + std::to_string(i)));
  const json& bs = array_field(doc, "b", source, "");
  for (std::size_t i = 0; i < bs.size(); ++i) b.push_back(rational_at(bs[i], source, "/b/" + std::to_string(i)));
  return with_source(source, [&] { return BirthDeathChain(std::move(m), std::move(b)); });
}

}  // namespace

Document parse_document(std::string_view text, std::string_view source) {
  const json doc = parse_text(text, source);
  if (doc.is_object() && doc.contains("vertices")) return graph_from_json(doc, source);
  if (doc.is_object() && doc.contains("m")) return chain_from_json(doc, source);
  schema_error(source, "", "expected a graph {\"vertices\",\"edges\"} or a chain {\"m\",\"b\"}");
}

WeightedGraph parse_graph(std::string_view text, std::string_view source) {
  return graph_from_json(parse_text(text, source), source);
}

BirthDeathChain parse_chain(std::string_view text, std::string_view source) {
  return chain_from_json(parse_text(text, source), source);
}

WeightedGraph document_graph(const Document& doc) {
  if (const auto* g = std::get_if<WeightedGraph>(&doc)) return *g;
  return bdc_as_graph(std::get<BirthDeathChain>(doc));
}

std::string to_json(const WeightedGraph& g, int indent) {
  ordered_json out;
  out["vertices"] = ordered_json::array();
  for (VertexIndex v = 0; v < g.size(); ++v) {
    out["vertices"].push_back({{"id", g.label(v)}, {"m", to_string(g.measure(v))}});
  }
  out["edges"] = ordered_json::array();
  for (const auto& e : g.edges()) out["edges"].push_back({{"u", e.u}, {"v", e.v}, {"b", to_string(e.weight)}});
  return out.dump(indent);
}

std::string to_json(const BirthDeathChain& chain, int indent) {
  ordered_json out;
  out["m"] = detail::rational_array(chain.measures());
  out["b"] = detail::rational_array(chain.weights());
  return out.dump(indent);
}

std::string to_json(const WeightedGraph& g, const OllivierResult& result, int indent) {
  return detail::ollivier_json(g, result).dump(indent);
}

}  // namespace curvegraph
