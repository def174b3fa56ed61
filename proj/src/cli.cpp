#include "bcds/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcds/bcds_solver.hpp"
#include "bcds/edge_vertex.hpp"
#include "bcds/errors.hpp"
#include "bcds/generators.hpp"
#include "bcds/io.hpp"
#include "bcds/oracles.hpp"
#include "bcds/tree.hpp"

namespace bcds::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

Json edges_json(const EdgeSet& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json ratio_json(const Rational& r) {
  return Json{{"exact", to_fraction_string(r)}, {"decimal", round6(to_double(r))}};
}

Graph load_connected(const std::string& path) {
  Graph g = read_instance_file(path);
  require_connected(g);
  return g;
}

QstBackend parse_backend(const std::string& name) {
  return name == "heuristic" ? QstBackend::heuristic : QstBackend::exact;
}

std::string read_text_or_literal(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw InputError("cannot open '" + arg + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

/// Options shared by the subcommands; CLI11 binds into these.
struct Options {
  std::string instance;
  std::string out_path;
  int k = 0;
  int quota = -1;
  std::string c = "7/8";
  std::string backend = "exact";
  std::string search = "linear";
  int qst_cap = 16;
  std::string profits = "gds";
  bool folklore = false;
  std::string problem;
  int n = 0;
  int n_min = -1;
  int k_min = -1;
  double p = 0.3;
  std::uint64_t seed = 1;
  int trials = 10;
  std::string sets;
  int q = 0;
  std::string map_path;
};

BcdsConfig bcds_config(const Options& o) {
  BcdsConfig cfg;
  cfg.c = parse_rational(o.c);
  cfg.backend = parse_backend(o.backend);
  cfg.search = o.search == "binary" ? OptSearch::binary : OptSearch::linear;
  cfg.qst_size_cap = o.qst_cap;
  cfg.validate();
  return cfg;
}

std::string solve_bcds_cmd(const Options& o) {
  const Graph g = load_connected(o.instance);
  const BcdsConfig cfg = bcds_config(o);
  const BcdsSolution sol = solve_bcds(g, o.k, cfg);
  Json stage = {{"tree_size", sol.stage.tree_size},
                {"tree_profit", sol.stage.tree_profit},
                {"quota", sol.stage.quota},
                {"piece_count", sol.stage.piece_count ? Json(*sol.stage.piece_count) : Json(nullptr)},
                {"size_bound", bicriteria_size_bound(cfg.c, o.k)},
                {"probes", sol.stage.probes},
                {"consistent_guesses", sol.stage.consistent_guesses}};
  Json doc = {{"schema", kSchema},
              {"vertices", sol.vertices},
              {"dominated", sol.dominated},
              {"profit", sol.profit},
              {"k", o.k},
              {"c", to_fraction_string(cfg.c)},
              {"c_decimal", round6(to_double(cfg.c))},
              {"backend", o.backend},
              {"search", o.search},
              {"opt_guess_used", sol.opt_guess_used},
              {"fallback", sol.fallback},
              {"stage_log", stage}};
  return doc.dump(2) + "\n";
}

Json edge_solution_json(const EdgeSolution& sol) {
  return Json{{"schema", kSchema}, {"edges", edges_json(sol.edges)}, {"dominated", sol.dominated}};
}

std::string solve_bevd_cmd(const Options& o) {
  const Graph g = load_connected(o.instance);
  Json doc = edge_solution_json(solve_bevd(g, o.k));
  doc["k"] = o.k;
  return doc.dump(2) + "\n";
}

std::string solve_pevd_cmd(const Options& o) {
  const Graph g = load_connected(o.instance);
  Json doc = edge_solution_json(solve_pevd(g, o.quota));
  doc["quota"] = o.quota;
  return doc.dump(2) + "\n";
}

std::vector<Profit> profits_for(const Graph& g, const std::string& mode) {
  if (mode == "unit") return std::vector<Profit>(static_cast<std::size_t>(g.num_vertices()), 1);
  return greedy_dominating_set(g).profit;
}

std::string solve_qst_cmd(const Options& o) {
  const Graph g = load_connected(o.instance);
  const std::vector<Profit> profit = profits_for(g, o.profits);
  QstInstance inst{g, profit, o.quota};
  const SteinerTree t = o.backend == "heuristic" ? qst_heuristic(inst) : qst_exact(inst, o.qst_cap);
  Json doc = {{"schema", kSchema},       {"backend", o.backend},  {"profits", o.profits},
              {"quota", o.quota},        {"vertices", t.vertices}, {"edges", edges_json(t.edges)},
              {"edge_count", t.edge_count()}, {"total_profit", t.total_profit}};
  return doc.dump(2) + "\n";
}

std::string decompose_tree_cmd(const Options& o) {
  const Graph g = read_instance_file(o.instance);
  if (!g.is_connected() || g.num_edges() + 1 != g.num_vertices()) throw InputError("instance is not a tree");
  const RootedTree t = RootedTree::from_graph(g);
  Json doc = {{"schema", kSchema}};
  if (o.folklore) {
    auto [smaller, larger] = split_folklore(t);
    VertexSet shared;
    std::set_intersection(smaller.begin(), smaller.end(), larger.begin(), larger.end(), std::back_inserter(shared));
    doc["method"] = "folklore";
    doc["pieces"] = Json::array({smaller, larger});
    doc["replicated"] = shared;
  } else {
    const Decomposition d = decompose_eligible(t, o.k);
    doc["method"] = "eligible";
    doc["k"] = o.k;
    doc["pieces"] = d.pieces;
    doc["replicated"] = d.replicated;
  }
  return doc.dump(2) + "\n";
}

std::string oracle_cmd(const Options& o) {
  const Graph g = load_connected(o.instance);
  OracleResult r;
  Json doc = {{"schema", kSchema}, {"problem", o.problem}};
  if (o.problem == "bcds") {
    r = oracle_bcds(g, o.k);
    doc["k"] = o.k;
  } else if (o.problem == "bevd") {
    r = oracle_bevd(g, o.k);
    doc["k"] = o.k;
  } else if (o.problem == "pevd") {
    r = oracle_pevd(g, o.quota);
    doc["quota"] = o.quota;
  } else {
    const std::vector<Profit> profit = profits_for(g, o.profits);
    r = oracle_qst(g, profit, o.quota);
    doc["quota"] = o.quota;
    doc["profits"] = o.profits;
  }
  doc["optimum"] = r.optimum_value;
  if (o.problem == "bevd" || o.problem == "pevd") {
    doc["witness"] = edges_json(r.witness_edges);
  } else {
    doc["witness"] = r.witness_vertices;
  }
  doc["enumerated"] = r.enumerated_count;
  return doc.dump(2) + "\n";
}

std::string gen_random_cmd(const Options& o) { return format_instance(gen_random_connected(o.n, o.p, o.seed)); }

std::string gen_reduction_cmd(const Options& o) {
  const SetSystem sys = parse_set_system_json(read_text_or_literal(o.sets));
  const std::optional<int> q = o.q > 0 ? std::optional<int>(o.q) : std::nullopt;
  const ReductionInstance red = o.problem == "bcds" ? gen_mc_to_bcds(sys, q) : gen_mc_to_bevd(sys, q);

  Json roles = Json::array();
  for (std::size_t id = 0; id < red.roles.size(); ++id) {
    const VertexRole& r = red.roles[id];
    Json entry = {{"id", id}, {"kind", to_string(r.kind)}};
    if (r.kind == VertexKind::set) entry["set"] = r.set_index;
    if (r.kind == VertexKind::element) {
      entry["element"] = r.element;
      entry["copy"] = r.copy;
    }
    roles.push_back(std::move(entry));
  }
  Json map = {{"schema", kSchema}, {"reduction", o.problem}, {"q", red.q}, {"elements", red.elements}, {"roles", roles}};
  if (!o.map_path.empty()) {
    write_file(o.map_path, map.dump(2) + "\n");
    return format_instance(red.graph);
  }
  return "# map " + map.dump() + "\n" + format_instance(red.graph);
}

std::string ratio_sweep_cmd(const Options& o) {
  if (o.trials < 1) throw InputError("--trials must be positive");
  if (o.n < 1) throw InputError("--n must be positive");
  const int n_min = o.n_min < 0 ? o.n : o.n_min;
  if (n_min < 1 || n_min > o.n) throw InputError("--n-min must lie in [1, n]");
  const bool budgeted = o.problem != "pevd";
  if (budgeted && o.k < 1) throw InputError("--k must be positive");
  const int k_min = o.k_min < 0 ? o.k : o.k_min;
  if (budgeted && (k_min < 1 || k_min > o.k)) throw InputError("--k-min must lie in [1, k]");

  BcdsConfig cfg;
  Json bound_doc;
  if (o.problem == "bcds") {
    cfg = bcds_config(o);
    const double bound = bcds_ratio_bound(cfg.c);
    bound_doc = {{"exact", "(1-e^(-" + to_fraction_string(cfg.c) + "))/" + std::to_string(ceil_int(8 * cfg.c) + 4)},
                 {"decimal", round6(bound)}};
  } else if (o.problem == "bevd") {
    bound_doc = {{"exact", "1-1/e"}, {"decimal", round6(-std::expm1(-1.0))}};
  } else {
    bound_doc = {{"exact", "min(H(quota),H(2*maxdeg))"}, {"decimal", nullptr}};
  }

  std::mt19937_64 master(o.seed);
  Json trials = Json::array();
  double min_ratio = 0;
  double max_ratio = 0;
  double sum_ratio = 0;
  int violations = 0;
  bool all_feasible = true;
  for (int i = 0; i < o.trials; ++i) {
    const std::uint64_t trial_seed = master();
    const int n = n_min + static_cast<int>(uniform_below(master, static_cast<std::uint64_t>(o.n - n_min + 1)));
    const int k = budgeted ? std::min(n, k_min + static_cast<int>(uniform_below(master, static_cast<std::uint64_t>(o.k - k_min + 1)))) : 0;
    const Graph g = gen_random_connected(n, o.p, trial_seed);

    Json row = {{"index", i}, {"seed", trial_seed}, {"n", n}, {"m", g.num_edges()}};
    double ratio = 0;
    bool feasible = true;
    bool meets = true;
    if (o.problem == "bcds") {
      const BcdsSolution sol = solve_bcds(g, k, cfg);
      const OracleResult opt = oracle_bcds(g, k);
      feasible = static_cast<int>(sol.vertices.size()) <= k && is_connected_induced(g, sol.vertices);
      ratio = static_cast<double>(sol.dominated) / static_cast<double>(opt.optimum_value);
      meets = ratio >= bcds_ratio_bound(cfg.c);
      row["k"] = k;
      row["solver"] = sol.dominated;
      row["oracle"] = opt.optimum_value;
      row["vertices"] = sol.vertices;
    } else if (o.problem == "bevd") {
      const EdgeSolution sol = solve_bevd(g, k);
      const OracleResult opt = oracle_bevd(g, k);
      feasible = static_cast<int>(sol.edges.size()) <= k;
      ratio = opt.optimum_value == 0 ? 1.0 : static_cast<double>(sol.dominated) / static_cast<double>(opt.optimum_value);
      // 632120/1000000 rounds 1 - 1/e down; compare exactly.
      meets = std::int64_t{sol.dominated} * 1'000'000 >= std::int64_t{632'120} * opt.optimum_value;
      row["k"] = k;
      row["solver"] = sol.dominated;
      row["oracle"] = opt.optimum_value;
    } else {
      const int quota = o.quota < 1 ? n : std::min(o.quota, n);
      if (g.num_edges() == 0) continue;
      const EdgeSolution sol = solve_pevd(g, quota);
      const OracleResult opt = oracle_pevd(g, quota);
      const Rational bound = std::min(harmonic(quota), harmonic(2 * g.max_degree()));
      feasible = sol.dominated >= quota;
      ratio = static_cast<double>(sol.edges.size()) / static_cast<double>(opt.optimum_value);
      meets = Rational(static_cast<std::int64_t>(sol.edges.size())) <= bound * opt.optimum_value;
      row["quota"] = quota;
      row["solver"] = sol.edges.size();
      row["oracle"] = opt.optimum_value;
      row["bound"] = ratio_json(bound);
    }
    row["ratio"] = round6(ratio);
    row["feasible"] = feasible;
    row["meets_bound"] = meets;
    trials.push_back(std::move(row));

    all_feasible = all_feasible && feasible;
    violations += meets ? 0 : 1;
    min_ratio = trials.size() == 1 ? ratio : std::min(min_ratio, ratio);
    max_ratio = trials.size() == 1 ? ratio : std::max(max_ratio, ratio);
    sum_ratio += ratio;
  }
  const double mean = trials.empty() ? 0.0 : sum_ratio / static_cast<double>(trials.size());
  Json doc = {{"schema", kSchema},
              {"problem", o.problem},
              {"seed", o.seed},
              {"bound", bound_doc},
              {"trials", trials},
              {"summary",
               {{"count", trials.size()},
                {"min_ratio", round6(min_ratio)},
                {"mean_ratio", round6(mean)},
                {"max_ratio", round6(max_ratio)},
                {"all_feasible", all_feasible},
                {"bound_violations", violations}}}};
  if (o.problem == "bcds") {
    doc["c"] = to_fraction_string(cfg.c);
    doc["note"] = "the ratio guarantee needs k >= 16c+14; below that the ratio is reported, not guaranteed";
  }
  return doc.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Budgeted connected and edge-vertex domination toolkit", "bcds"};
  app.require_subcommand(1);
  Options o;
  std::function<std::string(const Options&)> action;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "Write the report to this file instead of stdout");
  };
  auto with_instance = [&](CLI::App* sub) {
    sub->add_option("instance", o.instance, "Instance file ('p <n> <m>' then edge lines)")->required();
  };
  const std::vector<std::string> backends{"exact", "heuristic"};

  {
    auto* sub = app.add_subcommand("solve-bcds", "Budgeted connected dominating set");
    with_instance(sub);
    sub->add_option("--k", o.k, "Budget")->required();
    sub->add_option("--c", o.c, "Quota parameter c in (0,1], e.g. 7/8")->capture_default_str();
    sub->add_option("--backend", o.backend, "Quota Steiner backend")->check(CLI::IsMember(backends))->capture_default_str();
    sub->add_option("--search", o.search, "Optimum-guess search")->check(CLI::IsMember({"linear", "binary"}))->capture_default_str();
    sub->add_option("--qst-cap", o.qst_cap, "Vertex cap for the exact QST backend")->capture_default_str();
    common(sub);
    sub->callback([&] { action = solve_bcds_cmd; });
  }
  {
    auto* sub = app.add_subcommand("solve-bevd", "Budgeted edge-vertex domination");
    with_instance(sub);
    sub->add_option("--k", o.k, "Edge budget")->required();
    common(sub);
    sub->callback([&] { action = solve_bevd_cmd; });
  }
  {
    auto* sub = app.add_subcommand("solve-pevd", "Partial edge-vertex domination");
    with_instance(sub);
    sub->add_option("--quota", o.quota, "Vertices to dominate")->required();
    common(sub);
    sub->callback([&] { action = solve_pevd_cmd; });
  }
  {
    auto* sub = app.add_subcommand("solve-qst", "Quota Steiner tree with unit edge costs");
    with_instance(sub);
    sub->add_option("--quota", o.quota, "Profit quota")->required();
    sub->add_option("--profits", o.profits, "Vertex profits: greedy labelling or all ones")
        ->check(CLI::IsMember({"gds", "unit"}))
        ->capture_default_str();
    sub->add_option("--backend", o.backend, "exact or heuristic")->check(CLI::IsMember(backends))->capture_default_str();
    sub->add_option("--qst-cap", o.qst_cap, "Vertex cap for the exact backend")->capture_default_str();
    common(sub);
    sub->callback([&] { action = solve_qst_cmd; });
  }
  {
    auto* sub = app.add_subcommand("decompose-tree", "Eligible-subtree (or folklore) decomposition of a tree");
    with_instance(sub);
    auto* k = sub->add_option("--k", o.k, "Maximum piece size");
    auto* folklore = sub->add_flag("--folklore", o.folklore, "Single two-way split instead");
    k->excludes(folklore);
    common(sub);
    sub->callback([&] {
      if (!o.folklore && o.k < 1) throw CLI::ValidationError("--k", "required unless --folklore is given");
      action = decompose_tree_cmd;
    });
  }
  {
    auto* sub = app.add_subcommand("oracle", "Exhaustive optimum for small instances");
    sub->add_option("problem", o.problem, "bcds | bevd | pevd | qst")
        ->required()
        ->check(CLI::IsMember({"bcds", "bevd", "pevd", "qst"}));
    with_instance(sub);
    sub->add_option("--k", o.k, "Budget (bcds, bevd)");
    sub->add_option("--quota", o.quota, "Quota (pevd, qst)");
    sub->add_option("--profits", o.profits, "Profits for qst")->check(CLI::IsMember({"gds", "unit"}))->capture_default_str();
    common(sub);
    sub->callback([&] {
      const bool budgeted = o.problem == "bcds" || o.problem == "bevd";
      if (budgeted && o.k < 1) throw CLI::ValidationError("--k", "required for " + o.problem);
      if (!budgeted && o.quota < 0) throw CLI::ValidationError("--quota", "required for " + o.problem);
      action = oracle_cmd;
    });
  }
  {
    auto* sub = app.add_subcommand("gen-random", "Seeded random connected graph");
    sub->add_option("--n", o.n, "Vertices")->required();
    sub->add_option("--p", o.p, "Extra edge probability")->capture_default_str();
    sub->add_option("--seed", o.seed, "Seed")->capture_default_str();
    common(sub);
    sub->callback([&] { action = gen_random_cmd; });
  }
  {
    auto* sub = app.add_subcommand("gen-reduction", "Max-coverage reduction graph");
    sub->add_option("problem", o.problem, "bcds | bevd")->required()->check(CLI::IsMember({"bcds", "bevd"}));
    sub->add_option("--sets", o.sets, "Set system JSON (literal or file path)")->required();
    sub->add_option("--q", o.q, "Copies per element (default m^2)");
    sub->add_option("--map", o.map_path, "Write the vertex-role map here instead of a header comment");
    common(sub);
    sub->callback([&] { action = gen_reduction_cmd; });
  }
  {
    auto* sub = app.add_subcommand("ratio-sweep", "Solver vs oracle over a seeded family");
    sub->add_option("problem", o.problem, "bcds | bevd | pevd")->required()->check(CLI::IsMember({"bcds", "bevd", "pevd"}));
    sub->add_option("--n", o.n, "Maximum vertices per instance")->required();
    sub->add_option("--n-min", o.n_min, "Minimum vertices (default: --n)");
    sub->add_option("--k", o.k, "Maximum budget (bcds, bevd)");
    sub->add_option("--k-min", o.k_min, "Minimum budget (default: --k)");
    sub->add_option("--quota", o.quota, "Quota for pevd (default: n)");
    sub->add_option("--p", o.p, "Extra edge probability")->capture_default_str();
    sub->add_option("--trials", o.trials, "Instances")->capture_default_str();
    sub->add_option("--seed", o.seed, "Master seed")->capture_default_str();
    sub->add_option("--c", o.c, "Quota parameter for bcds")->capture_default_str();
    sub->add_option("--backend", o.backend, "QST backend for bcds")->check(CLI::IsMember(backends))->capture_default_str();
    common(sub);
    sub->callback([&] { action = ratio_sweep_cmd; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    const std::string report = action(o);
    if (o.out_path.empty()) {
      out << report;
    } else {
      write_file(o.out_path, report);
    }
    return kOk;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kCapacity;
  }
}

}  // namespace bcds::cli
