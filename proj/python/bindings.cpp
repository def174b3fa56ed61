// Python bindings. Graphs cross the boundary as (n, [(u, v), ...]).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bcds/bcds_solver.hpp"
#include "bcds/cli.hpp"
#include "bcds/edge_vertex.hpp"
#include "bcds/errors.hpp"
#include "bcds/generators.hpp"
#include "bcds/io.hpp"
#include "bcds/oracles.hpp"
#include "bcds/tree.hpp"

namespace py = pybind11;
using namespace bcds;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Graph to_graph(int n, const EdgeList& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back(make_edge(a, b));
  return Graph::from_edges(n, edges);
}

EdgeList to_pairs(const EdgeSet& es) {
  EdgeList out;
  for (const Edge& e : es) out.emplace_back(e.u, e.v);
  return out;
}

py::dict edge_solution(const EdgeSolution& s) {
  py::dict d;
  d["edges"] = to_pairs(s.edges);
  d["dominated"] = s.dominated;
  return d;
}

py::dict oracle_dict(const OracleResult& r) {
  py::dict d;
  d["optimum"] = r.optimum_value;
  d["witness_vertices"] = r.witness_vertices;
  d["witness_edges"] = to_pairs(r.witness_edges);
  d["enumerated"] = r.enumerated_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(_bcds, m) {
  m.doc() = "Budgeted connected and edge-vertex domination";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  // Register the subclass after its base so it is matched first.
  py::register_exception<DisconnectedError>(m, "DisconnectedError", input_error.ptr());

  m.def(
      "closed_neighborhood",
      [](int n, const EdgeList& edges, const VertexSet& s) { return closed_neighborhood(to_graph(n, edges), normalize(s)); },
      py::arg("n"), py::arg("edges"), py::arg("vertices"));

  m.def(
      "greedy_dominating_set",
      [](int n, const EdgeList& edges) {
        const ProfitLabeling lab = greedy_dominating_set(to_graph(n, edges));
        py::dict d;
        d["dominating_set"] = lab.dominating_set;
        d["pick_order"] = lab.pick_order;
        d["profit"] = lab.profit;
        return d;
      },
      py::arg("n"), py::arg("edges"));

  m.def(
      "solve_bcds",
      [](int n, const EdgeList& edges, int k, const std::string& c, const std::string& backend, const std::string& search) {
        BcdsConfig cfg;
        cfg.c = parse_rational(c);
        if (backend != "exact" && backend != "heuristic") throw InputError("backend must be 'exact' or 'heuristic'");
        if (search != "linear" && search != "binary") throw InputError("search must be 'linear' or 'binary'");
        cfg.backend = backend == "heuristic" ? QstBackend::heuristic : QstBackend::exact;
        cfg.search = search == "binary" ? OptSearch::binary : OptSearch::linear;
        const BcdsSolution s = solve_bcds(to_graph(n, edges), k, cfg);
        py::dict d;
        d["vertices"] = s.vertices;
        d["dominated"] = s.dominated;
        d["profit"] = s.profit;
        d["opt_guess_used"] = s.opt_guess_used;
        d["fallback"] = s.fallback;
        d["tree_size"] = s.stage.tree_size;
        d["piece_count"] = s.stage.piece_count ? py::object(py::int_(*s.stage.piece_count)) : py::object(py::none());
        return d;
      },
      py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("c") = "7/8", py::arg("backend") = "exact",
      py::arg("search") = "linear");

  m.def(
      "solve_bevd", [](int n, const EdgeList& edges, int k) { return edge_solution(solve_bevd(to_graph(n, edges), k)); },
      py::arg("n"), py::arg("edges"), py::arg("k"));
  m.def(
      "solve_pevd",
      [](int n, const EdgeList& edges, int quota) { return edge_solution(solve_pevd(to_graph(n, edges), quota)); },
      py::arg("n"), py::arg("edges"), py::arg("quota"));

  m.def(
      "qst_exact",
      [](int n, const EdgeList& edges, const std::vector<Profit>& profit, Profit quota) {
        const Graph g = to_graph(n, edges);
        const SteinerTree t = qst_exact({g, profit, quota});
        return py::make_tuple(t.vertices, to_pairs(t.edges), t.total_profit);
      },
      py::arg("n"), py::arg("edges"), py::arg("profit"), py::arg("quota"));

  m.def(
      "oracle",
      [](const std::string& problem, int n, const EdgeList& edges, int bound) {
        const Graph g = to_graph(n, edges);
        if (problem == "bcds") return oracle_dict(oracle_bcds(g, bound));
        if (problem == "bevd") return oracle_dict(oracle_bevd(g, bound));
        if (problem == "pevd") return oracle_dict(oracle_pevd(g, bound));
        throw InputError("unknown problem '" + problem + "'");
      },
      py::arg("problem"), py::arg("n"), py::arg("edges"), py::arg("bound"),
      "Exhaustive optimum; `bound` is k for bcds/bevd and the quota for pevd.");

  m.def(
      "decompose_tree",
      [](int n, const EdgeList& edges, int k) {
        const Decomposition d = decompose_eligible(RootedTree::from_graph(to_graph(n, edges)), k);
        return py::make_tuple(d.pieces, d.replicated);
      },
      py::arg("n"), py::arg("edges"), py::arg("k"));

  m.def(
      "random_connected",
      [](int n, double p, std::uint64_t seed) {
        const Graph g = gen_random_connected(n, p, seed);
        return py::make_tuple(g.num_vertices(), to_pairs(g.edges()));
      },
      py::arg("n"), py::arg("p"), py::arg("seed"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one CLI command in-process; returns (exit_code, stdout, stderr).");
}
