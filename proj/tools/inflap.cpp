// inflap: command-line front end.
//
// Exit codes: 0 success, 1 malformed input (or a check whose hypotheses the
// input does not meet), 2 solver non-convergence or a failed verification.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "inflap/cone_harmonic.hpp"
#include "inflap/dumbbell.hpp"
#include "inflap/eikonal.hpp"
#include "inflap/euclid_grid.hpp"
#include "inflap/graph_io.hpp"
#include "inflap/perron.hpp"

namespace fs = std::filesystem;
using namespace inflap;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kInput = 1;
constexpr int kFailed = 2;

struct Globals {
  double tol = 1e-12;
  std::string h = "1/64";
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string format = "json";
  bool human = false;
  unsigned threads = 1;
};

void render_human(const json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto all_scalar = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& v) { return v.is_primitive(); });
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        os << pad << k << ": " << scalar(v) << '\n';
      } else if (v.is_array() && all_scalar(v)) {
        os << pad << k << ":";
        for (const auto& x : v) os << ' ' << scalar(x);
        os << '\n';
      } else {
        os << pad << k << ":\n";
        render_human(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive()) {
        os << pad << "- " << scalar(v) << '\n';
      } else {
        os << pad << "-\n";
        render_human(v, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar(j) << '\n';
  }
}

/// Reports go to stdout unless an artifact already occupies it.
void emit_report(const Globals& g, const json& report, bool artifact_on_stdout) {
  std::ostream& os = artifact_on_stdout ? std::cerr : std::cout;
  if (g.human) {
    render_human(report, os, 0);
  } else {
    os << report.dump(2) << '\n';
  }
}

template <class T>
std::string text_of(const T& x) {
  return to_text(x);
}

template <class T>
const char* mode_name() {
  return is_exact_v<T> ? "exact" : "double";
}

template <class T>
T parse_scalar(const std::string& s) {
  try {
    const Rational q = parse_rational(s);
    if constexpr (is_exact_v<T>) {
      return q;
    } else {
      return q.get_d();
    }
  } catch (const std::invalid_argument&) {
    throw io::InputError("'" + s + "' is not a number");
  }
}

template <class T>
json witnesses_json(const MetricGraph<T>& g, const std::vector<Witness<T>>& ws, std::size_t limit = 20) {
  json out = json::array();
  for (std::size_t i = 0; i < ws.size() && i < limit; ++i) {
    out.push_back({{"at", ws[i].point.describe(g)}, {"defect", to_double(ws[i].defect)}});
  }
  return out;
}

template <class T>
json ridge_json(const MetricGraph<T>& g, const RidgeSet<T>& r) {
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back(p.describe(g));
  return pts;
}

// ---------------------------------------------------------------- loading

struct LoadedGraph {
  io::AnyGraph graph;
  json doc;
  std::string path;  // "-" for stdin
};

LoadedGraph load_graph(const std::string& path) {
  LoadedGraph out;
  out.doc = io::read_json(path);
  out.graph = io::any_graph_from_json(out.doc);
  out.path = path;
  return out;
}

/// Graph reference to store in a function file written to `out`.
json graph_ref_for(const LoadedGraph& g, const std::string& out) {
  if (g.path == "-" || out == "-") return g.doc;
  const fs::path target = fs::absolute(out).parent_path();
  return fs::relative(fs::absolute(g.path), target).generic_string();
}

template <class T>
using Fn = PLFunction<T>;
using AnyFunction = std::variant<Fn<Rational>, Fn<double>>;

struct LoadedFunction {
  AnyFunction fn;
  json doc;
  json graph_doc;
};

LoadedFunction load_function(const std::string& path, const json* shared_graph_doc = nullptr,
                             const io::AnyGraph* shared_graph = nullptr) {
  json doc = io::read_json(path);
  const fs::path base = path == "-" ? fs::current_path() : fs::absolute(path).parent_path();
  json gdoc = io::resolve_graph(doc, base);
  io::AnyGraph graph = (shared_graph && shared_graph_doc && *shared_graph_doc == gdoc)
                           ? *shared_graph
                           : io::any_graph_from_json(gdoc);
  LoadedFunction out{std::visit(
                         [&](const auto& gp) -> AnyFunction {
                           return io::function_from_json(doc, gp);
                         },
                         graph),
                     std::move(doc), std::move(gdoc)};
  return out;
}

template <class T>
void write_function(const Globals& g, const PLFunction<T>& u, const json& graph_ref, json extra = {}) {
  if (g.format == "csv") {
    io::write_text(g.out, io::function_to_csv(u));
    return;
  }
  json doc = io::function_to_json(u, graph_ref);
  if (extra.is_object()) {
    for (const auto& [k, v] : extra.items()) doc[k] = v;
  }
  io::write_text(g.out, doc.dump(1) + "\n");
}

template <class T>
std::vector<GraphPoint<T>> parse_constraint(const MetricGraph<T>& g, const RidgeSet<T>& ridge,
                                            const std::string& text) {
  if (text == "all") return ridge.points;
  if (text == "none" || text.empty()) return {};
  std::vector<GraphPoint<T>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_point(g, item));
  return out;
}

// ---------------------------------------------------------------- commands

int cmd_eigen(const Globals& gl, const std::string& graph_path) {
  auto lg = load_graph(graph_path);
  return std::visit(
      [&](const auto& gp) {
        using T = typename std::decay_t<decltype(*gp)>::scalar_type;
        const auto ev = principal_eigenvalue(gp);
        if (gl.human) {
          std::cout << "R_inf=" << to_double(ev.ridge.value) << "\n"
                    << "lambda=" << to_double(ev.lambda) << "\n"
                    << "ridge=";
          for (std::size_t i = 0; i < ev.ridge.points.size(); ++i) {
            std::cout << (i ? "," : "") << ev.ridge.points[i].describe(*gp);
          }
          std::cout << "\n";
          return kOk;
        }
        json r{{"command", "eigen"},
               {"mode", mode_name<T>()},
               {"R_inf", text_of(ev.ridge.value)},
               {"lambda", text_of(ev.lambda)},
               {"R_inf_decimal", to_double(ev.ridge.value)},
               {"lambda_decimal", to_double(ev.lambda)},
               {"ridge", ridge_json(*gp, ev.ridge)}};
        emit_report(gl, r, false);
        return kOk;
      },
      lg.graph);
}

struct SolveOptions {
  std::string lambda;
  std::string constraint = "all";
  bool from_above = false;
  bool jacobi = false;
  bool no_polish = false;
  std::size_t max_iters = 1000000;
};

int cmd_solve(const Globals& gl, const std::string& graph_path, const SolveOptions& so) {
  auto lg = load_graph(graph_path);
  return std::visit(
      [&](const auto& gp) {
        using T = typename std::decay_t<decltype(*gp)>::scalar_type;
        const auto ev = principal_eigenvalue(gp);
        const double lambda = so.lambda.empty() ? to_double(ev.lambda) : to_double(parse_scalar<T>(so.lambda));
        const auto constraint = parse_constraint(*gp, ev.ridge, so.constraint);
        SolverConfig<T> cfg;
        cfg.h = parse_scalar<T>(gl.h);
        cfg.tol = gl.tol;
        cfg.max_iters = so.max_iters;
        cfg.mode = so.jacobi ? SweepMode::kJacobi : SweepMode::kGaussSeidel;
        cfg.threads = gl.threads;
        cfg.start = so.from_above ? Start::kFromAbove : Start::kFromBelow;
        cfg.polish = !so.no_polish;
        const auto res = solve_ground_state(gp, lambda, std::span<const GraphPoint<T>>(constraint), cfg);
        const double slack = 2 * to_double(cfg.h);
        const auto inc = incenter_bound_check(res.u, lambda, slack);

        json constraint_json = json::array();
        for (const auto& y : constraint) constraint_json.push_back(y.describe(*gp));
        write_function(gl, to_pl_function(res.u), graph_ref_for(lg, gl.out),
                       {{"h", gl.h},
                        {"lambda", lambda},
                        {"constraint", constraint_json},
                        {"start", so.from_above ? "above" : "below"}});

        json checks = json::array();
        for (const auto& c : inc.checks) {
          checks.push_back({{"at", c.point.describe(*gp)},
                            {"value", c.value},
                            {"subslope", c.subslope},
                            {"required", c.required},
                            {"bound", c.bound},
                            {"supersolution", c.supersolution},
                            {"within_bound", c.within_bound}});
        }
        const bool ok = res.converged && inc.status == Status::kPass;
        json r{{"command", "solve"},
               {"status", ok ? "PASS" : "FAIL"},
               {"lambda", lambda},
               {"Lambda_inf", to_double(ev.lambda)},
               {"R_inf", to_double(ev.ridge.value)},
               {"nodes", res.u.disc->size()},
               {"converged", res.converged},
               {"diverged", res.diverged},
               {"iterations", res.iterations},
               {"max_update", res.max_update},
               {"residual_sup", res.residual_sup},
               {"max_backstep", res.max_backstep},
               {"polished", res.polished},
               {"incenter_bound", {{"status", std::string(to_string(inc.status))}, {"checks", checks}}}};
        if (lambda > to_double(ev.lambda)) {
          r["note"] = "lambda exceeds Lambda_inf = 1/R_inf: no positive supersolution satisfies the incenter bound";
        }
        emit_report(gl, r, gl.out == "-");
        return ok ? kOk : kFailed;
      },
      lg.graph);
}

int cmd_residual(const Globals& gl, const std::string& graph_path, const std::string& fn_path,
                 const std::string& lambda_text, const std::string& h_override) {
  auto lg = load_graph(graph_path);
  auto lf = load_function(fn_path, &lg.doc, &lg.graph);
  return std::visit(
      [&](const auto& gp) {
        using T = typename std::decay_t<decltype(*gp)>::scalar_type;
        const auto* u = std::get_if<Fn<T>>(&lf.fn);
        if (!u || u->graph_ptr() != gp) throw io::InputError("function is not defined on the given graph");
        const auto ev = principal_eigenvalue(gp);
        std::string h = h_override.empty() ? (lf.doc.contains("h") ? lf.doc["h"].get<std::string>() : gl.h) : h_override;
        double lambda = to_double(ev.lambda);
        if (!lambda_text.empty()) {
          lambda = to_double(parse_scalar<T>(lambda_text));
        } else if (lf.doc.contains("lambda")) {
          lambda = lf.doc["lambda"].get<double>();
        }
        std::vector<GraphPoint<T>> constraint;
        if (lf.doc.contains("constraint")) {
          for (const auto& c : lf.doc["constraint"]) constraint.push_back(parse_point(*gp, c.get<std::string>()));
        }
        const auto disc = discretize(gp, parse_scalar<T>(h), std::span<const GraphPoint<T>>(constraint));
        const auto nodes = restrict_to_nodes(*u, disc);
        const auto rep = residual_report(nodes, lambda);
        std::vector<std::size_t> order(rep.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) {
          return std::abs(rep[a].residual) > std::abs(rep[b].residual);
        });
        json worst = json::array();
        double sup = 0.0;
        for (std::size_t k = 0; k < order.size(); ++k) {
          const auto& x = rep[order[k]];
          sup = std::max(sup, std::abs(x.residual));
          if (k < 10 && x.residual != 0.0) {
            worst.push_back({{"at", disc->node(order[k]).point.describe(*gp)},
                             {"residual", x.residual},
                             {"midrange", x.midrange},
                             {"eikonal", x.eikonal}});
          }
        }
        json r{{"command", "residual"}, {"lambda", lambda}, {"h", h},
               {"nodes", disc->size()}, {"residual_sup", sup}, {"worst", worst}};
        emit_report(gl, r, false);
        return kOk;
      },
      lg.graph);
}

int cmd_mcshane(const Globals& gl, const std::string& graph_path, const std::string& data_path,
                const std::string& lambda_text) {
  auto lg = load_graph(graph_path);
  const json data = io::read_json(data_path);
  return std::visit(
      [&](const auto& gp) {
        using T = typename std::decay_t<decltype(*gp)>::scalar_type;
        const T lambda = parse_scalar<T>(lambda_text);
        const auto g = io::boundary_data_from_json<T>(data, *gp);
        const auto u = mcshane_extension(gp, g, lambda);
        write_function(gl, u, graph_ref_for(lg, gl.out));
        json att = json::array();
        for (const auto& a : boundary_attainment(u, g)) {
          att.push_back({{"vertex", gp->vertex_name(a.vertex)},
                         {"prescribed", text_of(a.prescribed)},
                         {"value", text_of(a.value)},
                         {"attained", a.attained}});
        }
        const auto monge = monge_classify(u, lambda);
        json r{{"command", "mcshane"}, {"mode", mode_name<T>()}, {"lambda", text_of(lambda)},
               {"monge_class", std::string(to_string(monge.cls))}, {"attainment", att}};
        emit_report(gl, r, gl.out == "-");
        return kOk;
      },
      lg.graph);
}

int cmd_classify(const Globals& gl, const std::string& fn_path, const std::string& lambda_text) {
  auto lf = load_function(fn_path);
  return std::visit(
      [&](const auto& u) {
        using T = typename std::decay_t<decltype(u.graph())>::scalar_type;
        const auto rep = monge_classify(u, parse_scalar<T>(lambda_text));
        json r{{"command", "classify"},
               {"class", std::string(to_string(rep.cls))},
               {"points_checked", rep.points_checked},
               {"below", witnesses_json(u.graph(), rep.below)},
               {"above", witnesses_json(u.graph(), rep.above)}};
        emit_report(gl, r, false);
        return kOk;
      },
      lf.fn);
}

int status_exit(Status s) {
  switch (s) {
    case Status::kPass:
      return kOk;
    case Status::kFail:
      return kFailed;
    case Status::kInapplicable:
      return kInput;
  }
  return kInput;
}

int cmd_compare(const Globals& gl, const std::string& u_path, const std::string& v_path,
                const std::string& lambda_text, std::size_t samples) {
  auto lu = load_function(u_path);
  const io::AnyGraph shared = std::visit([](const auto& f) -> io::AnyGraph { return f.graph_ptr(); }, lu.fn);
  auto lv = load_function(v_path, &lu.graph_doc, &shared);
  return std::visit(
      [&](const auto& u) {
        using T = typename std::decay_t<decltype(u.graph())>::scalar_type;
        const auto* v = std::get_if<Fn<T>>(&lv.fn);
        if (!v || v->graph_ptr() != u.graph_ptr()) {
          throw io::InputError("the two functions must live on the same graph");
        }
        const auto rep = comparison_harness(u, *v, parse_scalar<T>(lambda_text), samples, gl.seed);
        json r{{"command", "compare"},
               {"status", std::string(to_string(rep.status))},
               {"reason", rep.reason},
               {"points_checked", rep.points_checked},
               {"witnesses", witnesses_json(u.graph(), rep.witnesses)}};
        emit_report(gl, r, false);
        return status_exit(rep.status);
      },
      lu.fn);
}

int cmd_verify_super(const Globals& gl, const std::string& fn_path, std::size_t trials) {
  auto lf = load_function(fn_path);
  return std::visit(
      [&](const auto& u) {
        const auto exact = is_inf_superharmonic_exact(u);
        const auto sampled = cone_comparison_sampled(u, trials, gl.seed);
        json ce = nullptr;
        if (sampled.counterexample) {
          const auto& c = *sampled.counterexample;
          ce = {{"apex", c.apex.describe(u.graph())},
                {"kappa", to_double(c.kappa)},
                {"offset", to_double(c.offset)},
                {"point", c.point.describe(u.graph())},
                {"defect", to_double(c.defect)}};
        }
        const bool ok = exact.pass && sampled.pass;
        json r{{"command", "verify-super"},
               {"status", ok ? "PASS" : "FAIL"},
               {"exact", {{"pass", exact.pass}, {"violations", witnesses_json(u.graph(), exact.violations)}}},
               {"sampled",
                {{"pass", sampled.pass}, {"trials", sampled.trials}, {"skipped", sampled.skipped}, {"counterexample", ce}}}};
        if (gl.human) {
          std::cout << (ok ? "PASS" : "FAIL") << "\n";
        }
        emit_report(gl, r, false);
        return ok ? kOk : kFailed;
      },
      lf.fn);
}

int cmd_harnack(const Globals& gl, const std::string& fn_path, const std::string& center,
                const std::string& outer, const std::string& inner, std::size_t samples) {
  auto lf = load_function(fn_path);
  return std::visit(
      [&](const auto& u) {
        using T = typename std::decay_t<decltype(u.graph())>::scalar_type;
        const auto x0 = parse_point(u.graph(), center);
        const auto rep = harnack_check(u, x0, parse_scalar<T>(outer), parse_scalar<T>(inner), samples, gl.seed);
        json wit = json::array();
        for (std::size_t i = 0; i < rep.witnesses.size() && i < 20; ++i) {
          wit.push_back({{"x", rep.witnesses[i].first.describe(u.graph())},
                         {"y", rep.witnesses[i].second.describe(u.graph())}});
        }
        json r{{"command", "harnack"},
               {"status", std::string(to_string(rep.status))},
               {"reason", rep.reason},
               {"pairs", rep.pairs},
               {"max_ratio", rep.max_ratio},
               {"witnesses", wit}};
        emit_report(gl, r, false);
        return status_exit(rep.status);
      },
      lf.fn);
}

int cmd_regularity(const Globals& gl, const std::string& fn_path, std::size_t samples) {
  auto lf = load_function(fn_path);
  return std::visit(
      [&](const auto& u) {
        const auto rep = regularity_checks(u, samples, gl.seed);
        json r{{"command", "regularity"},
               {"status", std::string(to_string(rep.status))},
               {"reason", rep.reason},
               {"lipschitz_pairs", rep.lipschitz_pairs},
               {"lipschitz_violations", witnesses_json(u.graph(), rep.lipschitz_violations)},
               {"slope_mismatches", witnesses_json(u.graph(), rep.slope_mismatches)},
               {"semicontinuity_violations", witnesses_json(u.graph(), rep.semicontinuity_violations)}};
        emit_report(gl, r, false);
        return status_exit(rep.status);
      },
      lf.fn);
}

int cmd_grid(const Globals& gl, const std::string& domain_path, double h, int stencil,
             int boundary_radius, bool solve) {
  const Domain domain = io::domain_from_json(io::read_json(domain_path));
  GridOptions opt;
  opt.boundary_radius = boundary_radius;
  GridGraph grid;
  try {
    grid = build_grid_graph(domain, h, stencil, opt);
  } catch (const std::invalid_argument& e) {
    throw io::InputError(e.what());
  }
  const auto& gp = grid.graph;
  io::write_text(gl.out, io::graph_to_json(*gp).dump(1) + "\n");
  const auto ev = principal_eigenvalue(gp);
  json r{{"command", "grid"},
         {"nodes", gp->num_vertices()},
         {"edges", gp->num_edges()},
         {"boundary_nodes", gp->boundary_vertices().size()},
         {"R_inf", ev.ridge.value},
         {"lambda", ev.lambda},
         {"ridge", ridge_json(*gp, ev.ridge)}};
  int code = kOk;
  if (solve) {
    double longest = 0.0;
    for (const auto& e : gp->edges()) longest = std::max(longest, e.length);
    SolverConfig<double> cfg;
    cfg.h = longest * (1 + 1e-9);
    cfg.tol = gl.tol;
    cfg.threads = gl.threads;
    const auto res = solve_ground_state(gp, ev.lambda, std::span<const GraphPoint<double>>(ev.ridge.points), cfg);
    r["converged"] = res.converged;
    r["iterations"] = res.iterations;
    r["residual_sup"] = res.residual_sup;
    if (const auto* disk = std::get_if<Disk>(&domain)) {
      double dist = 0.0;
      for (std::size_t i = 0; i < res.u.disc->size(); ++i) {
        const auto& p = res.u.disc->node(i).point;
        if (!p.is_vertex()) continue;
        const auto c = grid.coords[p.vertex()];
        const double cone = 1.0 - std::hypot(c[0] - disk->center[0], c[1] - disk->center[1]) / disk->radius;
        dist = std::max(dist, std::abs(res.u.values[i] - cone));
      }
      r["cone_sup_distance"] = dist;
    }
    if (!res.converged) code = kFailed;
  }
  emit_report(gl, r, gl.out == "-");
  return code;
}

int cmd_example(const Globals& gl, const std::string& name, const std::string& out_dir) {
  if (name != "dumbbell") throw io::InputError("unknown example '" + name + "' (available: dumbbell)");
  const auto g = dumbbell_graph<Rational>();
  const std::string graph_text = io::graph_to_json(*g).dump(1) + "\n";
  if (out_dir.empty()) {
    io::write_text("-", graph_text);
    return kOk;
  }
  fs::create_directories(out_dir);
  const fs::path dir = out_dir;
  io::write_text((dir / "dumbbell_graph.json").string(), graph_text);
  io::write_text((dir / "u_inf.json").string(),
                 io::function_to_json(dumbbell_ground_state(g), "dumbbell_graph.json").dump(1) + "\n");
  io::write_text((dir / "u_inf_Y.json").string(),
                 io::function_to_json(dumbbell_ground_state_plus(g), "dumbbell_graph.json").dump(1) + "\n");
  (void)gl;
  std::cerr << "wrote dumbbell_graph.json, u_inf.json, u_inf_Y.json to " << dir.string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinity-Laplacian ground states and eikonal tools on metric graphs"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--tol", gl.tol, "solver stopping tolerance on the max update")->capture_default_str();
  app.add_option("--h", gl.h, "node spacing (decimal or p/q)")->capture_default_str();
  app.add_option("--seed", gl.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--out", gl.out, "output file, - for stdout")->capture_default_str();
  app.add_option("--format", gl.format, "artifact format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_flag("--human", gl.human, "human-readable reports");
  app.add_option("--threads", gl.threads, "threads for Jacobi sweeps")->capture_default_str();

  std::string graph_path;
  std::string fn_path;
  std::string fn2_path;
  std::string lambda_text;
  std::size_t samples = 100;

  auto* eigen = app.add_subcommand("eigen", "inradius, principal eigenvalue and high ridge");
  eigen->add_option("graph", graph_path, "graph JSON, - for stdin")->required();

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "ground state by the monotone scheme");
  solve->add_option("graph", graph_path)->required();
  solve->add_option("--lambda", so.lambda, "eigenvalue parameter (default Lambda_inf)");
  solve->add_option("--constraint", so.constraint, "all | none | comma-separated ridge points")->capture_default_str();
  solve->add_flag("--from-above", so.from_above, "descend from min(1, lambda d) instead of ascending from 0");
  solve->add_flag("--jacobi", so.jacobi, "Jacobi rounds (parallel with --threads)");
  solve->add_flag("--no-polish", so.no_polish, "plain sweeps only");
  solve->add_option("--max-iters", so.max_iters)->capture_default_str();

  std::string h_override;
  auto* residual = app.add_subcommand("residual", "scheme residual of a function at the nodes");
  residual->add_option("graph", graph_path)->required();
  residual->add_option("function", fn_path)->required();
  residual->add_option("--lambda", lambda_text);
  residual->add_option("--node-h", h_override, "node spacing (default: the file's h, else --h)");

  std::string data_path;
  auto* mcshane = app.add_subcommand("mcshane", "McShane extension of boundary data");
  mcshane->add_option("graph", graph_path)->required();
  mcshane->add_option("data", data_path, "boundary data JSON")->required();
  mcshane->add_option("--lambda", lambda_text)->required();

  auto* classify = app.add_subcommand("classify", "Monge classification for |grad^- u| = lambda");
  classify->add_option("function", fn_path)->required();
  classify->add_option("--lambda", lambda_text)->required();

  auto* compare = app.add_subcommand("compare", "comparison principle harness");
  compare->add_option("sub", fn_path)->required();
  compare->add_option("super", fn2_path)->required();
  compare->add_option("--lambda", lambda_text)->required();
  compare->add_option("--samples", samples)->capture_default_str();

  std::size_t trials = 200;
  auto* verify = app.add_subcommand("verify-super", "infinity-superharmonicity: exact and sampled");
  verify->add_option("function", fn_path)->required();
  verify->add_option("--trials", trials)->capture_default_str();

  std::string center;
  std::string outer;
  std::string inner;
  auto* harnack = app.add_subcommand("harnack", "Harnack inequality u(y) <= 3 u(x)");
  harnack->add_option("function", fn_path)->required();
  harnack->add_option("--center", center)->required();
  harnack->add_option("--R", outer)->required();
  harnack->add_option("--r", inner)->required();
  harnack->add_option("--samples", samples)->capture_default_str();

  auto* regularity = app.add_subcommand("regularity", "Lipschitz and slope regularity checks");
  regularity->add_option("function", fn_path)->required();
  regularity->add_option("--samples", samples)->capture_default_str();

  std::string domain_path;
  double grid_h = 0.02;
  int stencil = 3;
  int boundary_radius = 1;
  bool grid_solve = false;
  auto* grid = app.add_subcommand("grid", "grid metric graph of a planar domain");
  grid->add_option("domain", domain_path)->required();
  grid->add_option("--spacing", grid_h, "lattice spacing")->capture_default_str();
  grid->add_option("--stencil", stencil)->capture_default_str();
  grid->add_option("--boundary-radius", boundary_radius)->capture_default_str();
  grid->add_flag("--solve", grid_solve, "also compute the ground state (and its distance to the cone on a disk)");

  std::string example_name;
  std::string out_dir;
  auto* example = app.add_subcommand("example", "bundled examples");
  example->add_option("name", example_name)->required();
  example->add_option("--out-dir", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*eigen) return cmd_eigen(gl, graph_path);
    if (*solve) return cmd_solve(gl, graph_path, so);
    if (*residual) return cmd_residual(gl, graph_path, fn_path, lambda_text, h_override);
    if (*mcshane) return cmd_mcshane(gl, graph_path, data_path, lambda_text);
    if (*classify) return cmd_classify(gl, fn_path, lambda_text);
    if (*compare) return cmd_compare(gl, fn_path, fn2_path, lambda_text, samples);
    if (*verify) return cmd_verify_super(gl, fn_path, trials);
    if (*harnack) return cmd_harnack(gl, fn_path, center, outer, inner, samples);
    if (*regularity) return cmd_regularity(gl, fn_path, samples);
    if (*grid) return cmd_grid(gl, domain_path, grid_h, stencil, boundary_radius, grid_solve);
    if (*example) return cmd_example(gl, example_name, out_dir);
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const InvalidPoint& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
