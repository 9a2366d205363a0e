#include "dirichlet/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dirichlet {
namespace {

using nlohmann::json;

std::optional<int> find_edge(const Graph& g, std::string_view key) {
  if (auto e = g.edge_index_by_key(key)) return e;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.label(g.edge(e).b) + "-" + g.label(g.edge(e).a) == key) return e;
  }
  return std::nullopt;
}

Rational rational_of(const json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(BigInt(v.dump()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float()) return parse_rational(v.dump());
  throw Error(ErrorCode::MalformedInput, what + " must be a number or a rational string");
}

EdgeWeights weights_of(const Graph& g, const json& obj, const std::string& name) {
  if (!obj.is_object()) throw Error(ErrorCode::MalformedInput, "\"" + name + "\" must be an object");
  std::vector<std::optional<Rational>> exact(g.edge_count());
  std::vector<double> floats(g.edge_count(), 0.0);
  bool any_float = false;
  for (const auto& [key, value] : obj.items()) {
    auto e = find_edge(g, key);
    if (!e) throw Error(ErrorCode::MalformedInput, "\"" + name + "\" names unknown edge " + key);
    if (value.is_number_float()) {
      any_float = true;
      floats[*e] = value.get<double>();
      exact[*e] = Rational(0);
    } else {
      exact[*e] = rational_of(value, name + " entry " + key);
      floats[*e] = exact[*e]->get_d();
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!exact[e]) throw Error(ErrorCode::MalformedInput, "\"" + name + "\" is missing edge " + g.edge_key(e));
  }
  if (any_float) return floats;
  std::vector<Rational> out;
  for (auto& x : exact) out.push_back(*x);
  return out;
}

json weights_json(const Graph& g, const EdgeWeights& w) {
  json out = json::object();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (is_exact(w)) {
      out[g.edge_key(e)] = format_rational(std::get<std::vector<Rational>>(w)[e]);
    } else {
      out[g.edge_key(e)] = std::get<std::vector<double>>(w)[e];
    }
  }
  return out;
}

}  // namespace

NetworkDocument parse_network(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::MalformedInput, "network file must be a JSON object");
  for (const char* key : {"vertices", "edges", "boundary"}) {
    if (!doc.contains(key)) throw Error(ErrorCode::MalformedInput, std::string("missing key \"") + key + "\"");
  }
  const json& vs = doc["vertices"];
  const json& es = doc["edges"];
  const json& bs = doc["boundary"];
  if (!vs.is_array() || !es.is_array() || !bs.is_object()) {
    throw Error(ErrorCode::MalformedInput, "vertices and edges must be arrays, boundary an object");
  }
  std::vector<std::string> vertices;
  for (const auto& v : vs) {
    if (!v.is_string()) throw Error(ErrorCode::MalformedInput, "vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw Error(ErrorCode::MalformedInput, "each edge must be a pair of vertex labels");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  std::vector<std::string> boundary;
  std::vector<Rational> values;
  for (const auto& [label, value] : bs.items()) {
    boundary.push_back(label);
    values.push_back(rational_of(value, "boundary value of " + label));
  }

  NetworkDocument out{validate_network(Graph(vertices, edges), boundary, values), {}, {}};
  if (doc.contains("conductances")) out.conductances = weights_of(out.net.graph(), doc["conductances"], "conductances");
  if (doc.contains("energies")) out.energies = weights_of(out.net.graph(), doc["energies"], "energies");
  return out;
}

NetworkDocument read_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_network(buffer.str());
}

std::string write_network(const NetworkInstance& net, const std::optional<EdgeWeights>& conductances,
                          const std::optional<EdgeWeights>& energies) {
  const Graph& g = net.graph();
  json doc;
  doc["vertices"] = g.labels();
  doc["edges"] = json::array();
  for (const auto& [a, b] : g.labelled_edges()) doc["edges"].push_back({a, b});
  doc["boundary"] = json::object();
  for (int r = 0; r < net.m(); ++r) {
    doc["boundary"][g.label(net.boundary()[r])] = format_rational(net.boundary_values()[r]);
  }
  if (conductances) doc["conductances"] = weights_json(g, *conductances);
  if (energies) doc["energies"] = weights_json(g, *energies);
  return doc.dump(2);
}

EdgeWeights override_weights(const Graph& g, const std::optional<EdgeWeights>& base, std::string_view overrides) {
  EdgeWeights out = base ? *base : EdgeWeights(std::vector<Rational>(g.edge_count(), Rational(1)));
  std::size_t pos = 0;
  while (pos < overrides.size()) {
    std::size_t comma = overrides.find(',', pos);
    if (comma == std::string_view::npos) comma = overrides.size();
    std::string_view item = overrides.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    std::size_t eq = item.rfind('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::MalformedInput, "weight override must look like key=value: " + std::string(item));
    }
    auto e = find_edge(g, item.substr(0, eq));
    if (!e) throw Error(ErrorCode::MalformedInput, "unknown edge in override: " + std::string(item.substr(0, eq)));
    Rational value = parse_rational(item.substr(eq + 1));
    if (auto* exact = std::get_if<std::vector<Rational>>(&out)) {
      (*exact)[*e] = value;
    } else {
      std::get<std::vector<double>>(out)[*e] = value.get_d();
    }
  }
  return out;
}

std::string orientation_json(const Graph& g, const Orientation& o) {
  json out = json::object();
  for (int e = 0; e < g.edge_count(); ++e) out[g.edge_key(e)] = g.label(o.tail(g, e)) + ">" + g.label(o.head(g, e));
  return out.dump();
}

}  // namespace dirichlet
