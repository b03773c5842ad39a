#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "inflap/dumbbell.hpp"
#include "inflap/graph_io.hpp"
#include "inflap/perron.hpp"
#include "support/generators.hpp"

using namespace inflap;
using namespace inflap::testing;
using io::json;

namespace {

json dumbbell_json() { return io::graph_to_json(*dumbbell_graph<Rational>()); }

}  // namespace

TEST_CASE("graph documents round-trip") {
  const json doc = dumbbell_json();
  CHECK(io::lengths_are_exact(doc));
  const auto any = io::any_graph_from_json(doc);
  REQUIRE(std::holds_alternative<GraphPtr<Rational>>(any));
  const auto& g = *std::get<GraphPtr<Rational>>(any);
  CHECK(g.num_vertices() == 8);
  CHECK(g.num_edges() == 7);
  CHECK(g.boundary_vertices().size() == 5);
  CHECK(io::graph_to_json(g) == doc);

  json floaty = doc;
  floaty["edges"][0]["length"] = 1.5;
  CHECK_FALSE(io::lengths_are_exact(floaty));
  CHECK(std::holds_alternative<GraphPtr<double>>(io::any_graph_from_json(floaty)));

  json decimal = doc;
  decimal["edges"][0]["length"] = "0.25";
  const auto dg = std::get<GraphPtr<Rational>>(io::any_graph_from_json(decimal));
  CHECK(dg->edge(0).length == ratio<Rational>(1, 4));
}

TEST_CASE("malformed graphs are reported, not accepted") {
  const json good = dumbbell_json();
  auto broken = [&](auto&& mutate) {
    json j = good;
    mutate(j);
    return j;
  };
  CHECK_THROWS_AS(io::any_graph_from_json(broken([](json& j) { j.erase("edges"); })), io::InputError);
  CHECK_THROWS_AS(io::any_graph_from_json(broken([](json& j) { j["edges"][0]["to"] = "nowhere"; })),
                  io::InputError);
  CHECK_THROWS_AS(io::any_graph_from_json(broken([](json& j) { j["edges"][0]["length"] = "-1"; })),
                  io::InputError);
  CHECK_THROWS_AS(io::any_graph_from_json(broken([](json& j) { j["edges"][0]["length"] = "abc"; })),
                  io::InputError);
  CHECK_THROWS_AS(io::any_graph_from_json(broken([](json& j) { j["boundary"] = json::array(); })),
                  io::InputError);
  CHECK_THROWS_AS(io::any_graph_from_json(broken([](json& j) { j["vertices"].push_back("O"); })),
                  io::InputError);
  CHECK_THROWS_AS(io::any_graph_from_json(broken([](json& j) { j["edges"].push_back(j["edges"][0]); })),
                  io::InputError);
}

TEST_CASE("function files re-ingest bit-identically") {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph<Rational>(rng);
    const auto u = random_cone_minimum(g, rng);
    const json doc = io::function_to_json(u, io::graph_to_json(*g));
    const json reparsed = json::parse(doc.dump());
    CHECK(io::function_from_json(reparsed, g) == u);
  }
  // Double graphs: solver output with arbitrary binary64 values.
  const auto dd = share(convert_graph<double>(*dumbbell_graph<Rational>()));
  const auto ev = principal_eigenvalue(dd);
  SolverConfig<double> cfg;
  cfg.h = 1.0 / 16;
  const auto r = solve_ground_state(dd, ev.lambda, std::span<const GraphPoint<double>>(ev.ridge.points), cfg);
  const auto u = to_pl_function(r.u);
  const json doc = io::function_to_json(u, io::graph_to_json(*dd));
  CHECK(io::function_from_json(json::parse(doc.dump(1)), dd) == u);
  CHECK(restrict_to_nodes(io::function_from_json(json::parse(doc.dump()), dd), r.u.disc).values == r.u.values);
}

TEST_CASE("function files: graph references and errors") {
  const auto dir = std::filesystem::temp_directory_path() / "inflap_io_test";
  std::filesystem::create_directories(dir / "sub");
  const json gdoc = dumbbell_json();
  io::write_text((dir / "g.json").string(), gdoc.dump());
  const auto g = std::get<GraphPtr<Rational>>(io::any_graph_from_json(gdoc));
  const json fdoc = io::function_to_json(dumbbell_ground_state(g), "../g.json");
  CHECK(io::resolve_graph(fdoc, dir / "sub") == gdoc);
  const json inline_doc = io::function_to_json(dumbbell_ground_state(g), gdoc);
  CHECK(io::resolve_graph(inline_doc, dir) == gdoc);
  CHECK_THROWS_AS(io::resolve_graph(fdoc, dir / "missing"), io::InputError);

  json partial = fdoc;
  partial["edges"].erase("e0");
  CHECK_THROWS_AS(io::function_from_json(partial, g), io::InputError);
  json unknown = fdoc;
  unknown["edges"]["zz"] = json::array();
  CHECK_THROWS_AS(io::function_from_json(unknown, g), io::InputError);
  json discontinuous = fdoc;
  discontinuous["edges"]["e0"][0][1] = "7";
  CHECK_THROWS_AS(io::function_from_json(discontinuous, g), io::InputError);
  CHECK_THROWS_AS(io::read_json((dir / "absent.json").string()), io::InputError);
  {
    std::ofstream bad(dir / "bad.json");
    bad << "{ not json";
  }
  CHECK_THROWS_AS(io::read_json((dir / "bad.json").string()), io::InputError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("boundary data and domains") {
  const auto g = dumbbell_graph<Rational>();
  const auto data = io::boundary_data_from_json<Rational>(json::parse(R"({"g": {"V0": "1/2", "V+2": 3}})"), *g);
  CHECK(data.at(*g->find_vertex("V0")) == ratio<Rational>(1, 2));
  CHECK(data.at(*g->find_vertex("V+2")) == 3);
  CHECK_THROWS_AS(io::boundary_data_from_json<Rational>(json::parse(R"({"g": {"O": 0}})"), *g), io::InputError);
  CHECK_THROWS_AS(io::boundary_data_from_json<Rational>(json::parse(R"({"g": {"Q": 0}})"), *g), io::InputError);

  const auto disk = io::domain_from_json(json::parse(R"({"shape": "disk", "radius": 2, "center": [1, 0]})"));
  REQUIRE(std::holds_alternative<Disk>(disk));
  CHECK(std::get<Disk>(disk).radius == 2);
  CHECK(std::get<Disk>(disk).center[0] == 1);
  const auto poly = io::domain_from_json(json::parse(
      R"({"shape": "polygon", "vertices": [[0,0],[1,0],[1,1],[0,1]], "holes": [[[0.4,0.4],[0.6,0.4],[0.5,0.6]]]})"));
  REQUIRE(std::holds_alternative<Polygon>(poly));
  CHECK(std::get<Polygon>(poly).holes.size() == 1);
  CHECK_THROWS_AS(io::domain_from_json(json::parse(R"({"shape": "disk", "radius": 0})")), io::InputError);
  CHECK_THROWS_AS(io::domain_from_json(json::parse(R"({"shape": "blob"})")), io::InputError);
  CHECK_THROWS_AS(io::domain_from_json(json::parse(R"({"shape": "polygon", "vertices": [[0,0],[1,0]]})")),
                  io::InputError);
}

TEST_CASE("CSV export lists every knot") {
  const auto g = dumbbell_graph<Rational>();
  const auto u = dumbbell_ground_state(g);
  const std::string csv = io::function_to_csv(u);
  CHECK(csv.rfind("edge_id,t,value\n", 0) == 0);
  std::size_t rows = 0;
  for (EdgeId e = 0; e < g->num_edges(); ++e) rows += u.knots(e).size();
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == rows + 1);
  CHECK(csv.find("e+3,1,1\n") != std::string::npos);
}
