#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

#include "bcds/cli.hpp"
#include "bcds/errors.hpp"
#include "bcds/generators.hpp"
#include "bcds/io.hpp"

using namespace bcds;

namespace {

const std::string kData = BCDS_TEST_DATA_DIR;
const std::string kGolden = BCDS_GOLDEN_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file " << path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data(const std::string& name) { return kData + "/" + name; }

}  // namespace

TEST_CASE("instance parsing") {
  const Graph g = parse_instance("# comment\n\np 3 2\n0 1  # trailing\n1 2\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.edges() == EdgeSet{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(parse_instance("0 1\n"), InputError);
  CHECK_THROWS_AS(parse_instance("p 3 2\n0 1\n"), InputError);
  CHECK_THROWS_AS(parse_instance("p 3 1\n0 x\n"), InputError);
  CHECK_THROWS_AS(parse_instance("p 3 1\n0 0\n"), InputError);
  CHECK_THROWS_AS(parse_instance("p 3 1\n0 3\n"), InputError);
  CHECK_THROWS_AS(read_instance_file(data("does-not-exist.txt")), InputError);
}

TEST_CASE("canonical instance text round-trips bit-exactly") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_random_connected(1 + static_cast<int>(seed), 0.3, seed);
    const std::string text = format_instance(g);
    CHECK(parse_instance(text) == g);
    CHECK(format_instance(parse_instance(text)) == text);
  }
  const std::string canonical = slurp(data("random10.txt"));
  CHECK(format_instance(parse_instance(canonical)) == canonical);
}

TEST_CASE("set system JSON") {
  const SetSystem s = parse_set_system_json(slurp(data("sets3.json")));
  CHECK(s.universe_size == 4);
  CHECK(s.sets.size() == 3);
  CHECK(parse_set_system_json(format_set_system_json(s)).sets == s.sets);
  CHECK_THROWS_AS(parse_set_system_json("{\"n\": 2, \"sets\": [[5]]}"), InputError);
  CHECK_THROWS_AS(parse_set_system_json("not json"), InputError);
}

TEST_CASE("CLI reports match golden files") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"solve_bevd_star.json", {"solve-bevd", "--k", "1", data("star4.txt")}},
      {"solve_pevd_path5.json", {"solve-pevd", "--quota", "5", data("path5.txt")}},
      {"oracle_bcds_path5.json", {"oracle", "bcds", data("path5.txt"), "--k", "2"}},
      {"solve_bcds_random10.json", {"solve-bcds", "--k", "3", data("random10.txt")}},
      {"solve_qst_random10.json", {"solve-qst", "--quota", "6", data("random10.txt")}},
      {"decompose_tree12.json", {"decompose-tree", "--k", "4", data("tree12.txt")}},
      {"gen_random_8.txt", {"gen-random", "--n", "8", "--p", "0.4", "--seed", "3"}},
      {"gen_reduction_bevd.txt", {"gen-reduction", "bevd", "--sets", data("sets3.json"), "--q", "2"}},
      {"ratio_sweep_bevd.json", {"ratio-sweep", "bevd", "--n", "10", "--k", "2", "--trials", "20", "--seed", "1"}},
      {"ratio_sweep_bcds.json", {"ratio-sweep", "bcds", "--n", "9", "--n-min", "4", "--k", "3", "--k-min", "1", "--trials", "6", "--seed", "2"}},
  };
  for (const auto& [golden, args] : cases) {
    CAPTURE(golden);
    const Run r = run(args);
    CHECK(r.code == cli::kOk);
    CHECK(r.out == slurp(kGolden + "/" + golden));
    CHECK(run(args).out == r.out);  // byte-identical on repeat
  }
}

TEST_CASE("CLI examples") {
  CHECK(run({"solve-bevd", "--k", "1", data("star4.txt")}).out.find("\"dominated\": 5") != std::string::npos);
  CHECK(run({"oracle", "bcds", data("path5.txt"), "--k", "2"}).out.find("\"optimum\": 4") != std::string::npos);
  const Run sweep = run({"ratio-sweep", "bevd", "--n", "10", "--k", "2", "--trials", "20", "--seed", "1"});
  CHECK(sweep.out.find("\"bound_violations\": 0") != std::string::npos);
  CHECK(sweep.out.find("\"all_feasible\": true") != std::string::npos);
}

TEST_CASE("CLI exit codes") {
  CHECK(run({"solve-bevd", "--k", "1", data("does-not-exist.txt")}).code == cli::kInputError);
  CHECK(run({"solve-bcds", "--k", "9", data("star4.txt")}).code == cli::kInputError);
  CHECK(run({"solve-bcds", "--k", "2", "--c", "3/2", data("star4.txt")}).code == cli::kInputError);
  CHECK(run({"oracle", "pevd", data("star4.txt"), "--quota", "6"}).code == cli::kInfeasible);
  CHECK(run({"solve-qst", "--quota", "9", data("star4.txt")}).code == cli::kInfeasible);
  CHECK(run({"solve-qst", "--quota", "2", "--qst-cap", "3", data("star4.txt")}).code == cli::kCapacity);
  CHECK(run({"solve-bevd", "--bogus", data("star4.txt")}).code == cli::kUsage);
  CHECK(run({"no-such-command"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"decompose-tree", data("random10.txt"), "--k", "3"}).code == cli::kInputError);
}

TEST_CASE("CLI --out and --map write files") {
  const auto dir = std::filesystem::temp_directory_path() / "bcds_cli_test";
  std::filesystem::create_directories(dir);
  const std::string out = (dir / "report.json").string();
  const std::string map = (dir / "map.json").string();
  const Run r = run({"gen-reduction", "bcds", "--sets", R"({"n": 2, "sets": [[0], [0, 1]]})", "--q", "4", "--out", out,
                     "--map", map});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  const Graph g = parse_instance(slurp(out));
  CHECK(g.num_vertices() == 10);
  CHECK(g.num_edges() == 13);
  CHECK(slurp(map).find("\"reduction\": \"bcds\"") != std::string::npos);
  std::filesystem::remove_all(dir);
}
