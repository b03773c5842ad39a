#include "inflap/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace inflap::io {

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

bool lengths_are_exact(const json& graph) {
  if (!graph.contains("edges") || !graph["edges"].is_array()) return true;
  for (const auto& e : graph["edges"]) {
    if (!e.contains("length")) continue;
    const auto& len = e["length"];
    if (!len.is_string() && !len.is_number_integer()) return false;
  }
  return true;
}

json scalar_to_json(const Rational& x) { return format_rational(x); }

json scalar_to_json(double x) { return x; }

template <class T>
T scalar_from_json(const json& j) {
  try {
    if (j.is_string()) {
      const Rational q = parse_rational(j.get<std::string>());
      if constexpr (is_exact_v<T>) {
        return q;
      } else {
        return q.get_d();
      }
    }
    if (j.is_number_integer()) return T(j.get<long>());
    if (j.is_number()) return from_double<T>(j.get<double>());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad number: ") + e.what());
  }
  throw InputError("expected a number or a numeric string, got " + j.dump());
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j[key];
}

std::string text_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

template <class T>
json graph_to_json(const MetricGraph<T>& g) {
  json out;
  out["vertices"] = json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) out["vertices"].push_back(g.vertex_name(v));
  out["edges"] = json::array();
  for (const auto& e : g.edges()) {
    out["edges"].push_back({{"id", e.id},
                            {"from", g.vertex_name(e.from)},
                            {"to", g.vertex_name(e.to)},
                            {"length", scalar_to_json(e.length)}});
  }
  out["boundary"] = json::array();
  for (VertexId v : g.boundary_vertices()) out["boundary"].push_back(g.vertex_name(v));
  return out;
}

template <class T>
GraphPtr<T> graph_from_json(const json& j) {
  MetricGraph<T> g;
  const auto& vertices = field(j, "vertices");
  if (!vertices.is_array()) throw InputError("'vertices' must be an array");
  for (const auto& v : vertices) {
    if (!v.is_string()) throw InputError("vertex names must be strings");
    const auto name = v.get<std::string>();
    if (g.find_vertex(name)) throw InputError("duplicate vertex '" + name + "'");
    g.add_vertex(name);
  }
  auto vertex = [&](const std::string& name) {
    auto v = g.find_vertex(name);
    if (!v) throw InputError("unknown vertex '" + name + "'");
    return *v;
  };
  const auto& edges = field(j, "edges");
  if (!edges.is_array()) throw InputError("'edges' must be an array");
  for (const auto& e : edges) {
    const auto id = text_field(e, "id");
    if (g.find_edge(id)) throw InputError("duplicate edge '" + id + "'");
    g.add_edge(id, vertex(text_field(e, "from")), vertex(text_field(e, "to")),
               scalar_from_json<T>(field(e, "length")));
  }
  const auto& boundary = field(j, "boundary");
  if (!boundary.is_array()) throw InputError("'boundary' must be an array");
  for (const auto& b : boundary) {
    if (!b.is_string()) throw InputError("boundary entries must be vertex names");
    g.mark_boundary(vertex(b.get<std::string>()));
  }
  const auto problems = validate(g);
  if (!problems.empty()) {
    std::string msg = "invalid graph:";
    for (const auto& p : problems) msg += " [" + p.invariant + ": " + p.element + "]";
    throw InputError(msg);
  }
  return share(std::move(g));
}

AnyGraph any_graph_from_json(const json& j) {
  if (lengths_are_exact(j)) return graph_from_json<Rational>(j);
  return graph_from_json<double>(j);
}

template <class T>
json function_to_json(const PLFunction<T>& u, const json& graph_ref) {
  const auto& g = u.graph();
  json out;
  out["graph"] = graph_ref;
  json edges = json::object();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    json ks = json::array();
    for (const auto& k : u.knots(e)) ks.push_back({scalar_to_json(k.t), scalar_to_json(k.v)});
    edges[g.edge(e).id] = std::move(ks);
  }
  out["edges"] = std::move(edges);
  return out;
}

template <class T>
PLFunction<T> function_from_json(const json& j, const GraphPtr<T>& g) {
  const auto& edges = field(j, "edges");
  if (!edges.is_object()) throw InputError("'edges' must map edge ids to breakpoint lists");
  std::vector<std::vector<Knot<T>>> knots(g->num_edges());
  std::set<EdgeId> seen;
  for (const auto& [id, list] : edges.items()) {
    auto e = g->find_edge(id);
    if (!e) throw InputError("function refers to unknown edge '" + id + "'");
    if (!list.is_array()) throw InputError("breakpoints of '" + id + "' must be an array");
    for (const auto& pair : list) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("breakpoints are [t, value] pairs");
      knots[*e].push_back({scalar_from_json<T>(pair[0]), scalar_from_json<T>(pair[1])});
    }
    seen.insert(*e);
  }
  if (seen.size() != g->num_edges()) throw InputError("function does not cover every edge");
  try {
    return PLFunction<T>(g, std::move(knots));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid function: ") + e.what());
  }
}

json resolve_graph(const json& function_doc, const std::filesystem::path& base_dir) {
  const auto& ref = field(function_doc, "graph");
  if (ref.is_object()) return ref;
  if (!ref.is_string()) throw InputError("'graph' must be a path or an inline graph");
  std::filesystem::path p = ref.get<std::string>();
  if (p.is_relative()) p = base_dir / p;
  return read_json(p.string());
}

template <class T>
BoundaryData<T> boundary_data_from_json(const json& j, const MetricGraph<T>& g) {
  const auto& data = field(j, "g");
  if (!data.is_object()) throw InputError("'g' must map boundary vertices to values");
  BoundaryData<T> out;
  for (const auto& [name, value] : data.items()) {
    auto v = g.find_vertex(name);
    if (!v) throw InputError("boundary data for unknown vertex '" + name + "'");
    if (!g.is_boundary(*v)) throw InputError("vertex '" + name + "' is not a boundary vertex");
    out[*v] = scalar_from_json<T>(value);
  }
  return out;
}

namespace {

Point2 point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError("points are [x, y] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Point2> ring_from_json(const json& j) {
  if (!j.is_array() || j.size() < 3) throw InputError("polygon rings need at least 3 points");
  std::vector<Point2> ring;
  for (const auto& p : j) ring.push_back(point_from_json(p));
  return ring;
}

}  // namespace

Domain domain_from_json(const json& j) {
  const auto shape = text_field(j, "shape");
  if (shape == "disk") {
    Disk d;
    d.radius = field(j, "radius").get<double>();
    if (j.contains("center")) d.center = point_from_json(j["center"]);
    if (!(d.radius > 0)) throw InputError("disk radius must be positive");
    return d;
  }
  if (shape == "polygon") {
    Polygon p;
    p.outer = ring_from_json(field(j, "vertices"));
    if (j.contains("holes")) {
      for (const auto& h : j["holes"]) p.holes.push_back(ring_from_json(h));
    }
    return p;
  }
  throw InputError("unknown shape '" + shape + "' (expected disk or polygon)");
}

template <class T>
std::string function_to_csv(const PLFunction<T>& u) {
  std::ostringstream out;
  out << "edge_id,t,value\n";
  const auto& g = u.graph();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (const auto& k : u.knots(e)) out << g.edge(e).id << ',' << to_text(k.t) << ',' << to_text(k.v) << '\n';
  }
  return out.str();
}

#define INFLAP_INSTANTIATE(T)                                                          \
  template T scalar_from_json<T>(const json&);                                         \
  template json graph_to_json(const MetricGraph<T>&);                                  \
  template GraphPtr<T> graph_from_json<T>(const json&);                                \
  template json function_to_json(const PLFunction<T>&, const json&);                   \
  template PLFunction<T> function_from_json(const json&, const GraphPtr<T>&);          \
  template BoundaryData<T> boundary_data_from_json(const json&, const MetricGraph<T>&); \
  template std::string function_to_csv(const PLFunction<T>&);

INFLAP_INSTANTIATE(Rational)
INFLAP_INSTANTIATE(double)
#undef INFLAP_INSTANTIATE

}  // namespace inflap::io
