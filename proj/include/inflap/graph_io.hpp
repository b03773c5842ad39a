#pragma once

// JSON and CSV formats.
//
//   graph     {"vertices": ["O", ...],
//              "edges": [{"id": "e0", "from": "O", "to": "V0", "length": "1"}, ...],
//              "boundary": ["V0", ...]}
//             Lengths given as strings ("3", "1/3", "0.25") or integers load
//             exactly; any JSON float switches the whole graph to double.
//   function  {"graph": "<path relative to this file>" | {inline graph},
//              "edges": {"e0": [[t, value], ...], ...}, ...}
//             Exact graphs write t and values as "p/q" strings, double graphs
//             as JSON numbers with round-trip precision.
//   boundary  {"g": {"V0": "0", "V1": 1, ...}}
//   domain    {"shape": "disk", "radius": 1, "center": [0, 0]}
//             {"shape": "polygon", "vertices": [[x, y], ...], "holes": [[[x, y], ...]]}
//   CSV       edge_id,t,value

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "inflap/eikonal.hpp"
#include "inflap/euclid_grid.hpp"
#include "inflap/pl_function.hpp"

namespace inflap::io {

using nlohmann::json;

/// Malformed or inconsistent input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a JSON document from a file, or from stdin for "-".
json read_json(const std::string& path);

/// Writes text to a file, or to stdout for "-".
void write_text(const std::string& path, const std::string& text);

/// True when every edge length is a string or an integer.
bool lengths_are_exact(const json& graph);

/// "p/q" strings for exact values, plain numbers for doubles.
json scalar_to_json(const Rational& x);
json scalar_to_json(double x);

template <class T>
T scalar_from_json(const json& j);

template <class T>
json graph_to_json(const MetricGraph<T>& g);

template <class T>
GraphPtr<T> graph_from_json(const json& j);

using AnyGraph = std::variant<GraphPtr<Rational>, GraphPtr<double>>;

AnyGraph any_graph_from_json(const json& j);

/// `graph_ref` is stored verbatim under "graph" (a relative path or an
/// inline graph document).
template <class T>
json function_to_json(const PLFunction<T>& u, const json& graph_ref);

template <class T>
PLFunction<T> function_from_json(const json& j, const GraphPtr<T>& g);

/// The graph document a function file refers to; relative paths resolve
/// against `base_dir`.
json resolve_graph(const json& function_doc, const std::filesystem::path& base_dir);

template <class T>
BoundaryData<T> boundary_data_from_json(const json& j, const MetricGraph<T>& g);

Domain domain_from_json(const json& j);

/// Every knot of u as a CSV row.
template <class T>
std::string function_to_csv(const PLFunction<T>& u);

}  // namespace inflap::io
