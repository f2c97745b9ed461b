#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "conebb/cli.hpp"
#include "conebb/output.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace conebb;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("conebb_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string s; std::getline(in, s);) out.push_back(s);
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string f; std::getline(ss, f, ',');) out.push_back(f);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

int run_main(std::vector<std::string> args) {
  args.insert(args.begin(), "conebb");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli::main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("run writes result.json, trace.csv and front.csv") {
  const fs::path out = scratch("run");
  SolveResult r;
  cli::RunConfig cfg = cli::parse_run_args({"--problem", "tp1", "--cone", "poly", "--epsilon", "0.75", "--seed", "7",
                                            "--out", out.string()});
  CHECK(cli::run(cfg, &r) == cli::kConverged);

  const auto front = lines(out / "front.csv");
  REQUIRE_FALSE(front.empty());
  CHECK(front[0] == "f1,f2,x1,x2");
  CHECK(front.size() - 1 == r.upper_bounds.size());

  const auto trace = lines(out / "trace.csv");
  CHECK(trace[0] == "k,boxes_before,boxes_after_feasibility,boxes_retained,omega_k,gap,elapsed_ms");
  CHECK(trace.size() - 1 == r.trace.size());
  const auto last = split(trace.back());
  REQUIRE(last.size() == 7);
  CHECK(std::stoull(last[3]) == r.trace.back().boxes_retained);

  const auto doc = nlohmann::json::parse(slurp(out / "result.json"));
  CHECK(doc["status"] == "converged");
  CHECK(doc["upper_bounds"].size() == r.upper_bounds.size());
  CHECK(doc["solutions"].size() == r.solutions.size());
  CHECK(doc["boxes"].size() == r.boxes.size());
  CHECK(doc["params"]["problem"] == "tp1");
  CHECK(doc["params"]["cone"]["epsilon"] == 0.75);
  fs::remove_all(out);
}

TEST_CASE("front.csv is byte-identical across reruns") {
  const fs::path a = scratch("det_a");
  const fs::path b = scratch("det_b");
  CHECK(run_main({"run", "--problem", "tp1", "--epsilon", "0", "--seed", "7", "--out", a.string()}) == 0);
  CHECK(run_main({"run", "--problem", "tp1", "--epsilon", "0", "--seed", "7", "--out", b.string()}) == 0);
  CHECK(slurp(a / "front.csv") == slurp(b / "front.csv"));
  CHECK(slurp(a / "result.json") == slurp(b / "result.json"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("invalid configurations exit 4 before solving") {
  const fs::path out = scratch("bad");
  CHECK(run_main({"run", "--problem", "pe1", "--cone", "icecream", "--w", "1,1,1", "--theta", "0.3", "--out",
                  out.string()}) == cli::kInvalidConfig);
  CHECK_FALSE(fs::exists(out / "result.json"));
  CHECK(run_main({"run", "--problem", "nope", "--out", out.string()}) == cli::kInvalidConfig);
  CHECK(run_main({"run", "--problem", "tp1", "--epsilon", "1.5", "--out", out.string()}) == cli::kInvalidConfig);
  CHECK(run_main({"run", "--problem", "tp1", "--cone", "icecream", "--w", "1,1,1", "--out", out.string()}) ==
        cli::kInvalidConfig);
  CHECK(run_main({"run", "--problem", "tp1", "--tol-gap", "0", "--out", out.string()}) == cli::kInvalidConfig);
  CHECK(run_main({"run", "--problem", "tp1", "--bogus"}) == cli::kInvalidConfig);
  fs::remove_all(out);
}

TEST_CASE("cone resolution") {
  const auto circ = cli::resolve(cli::parse_run_args({"--problem", "pe1", "--cone", "icecream", "--epsilon", "0.75",
                                                      "--theta", "circumscribed"}));
  const auto& ic = std::get<IceCream>(circ.params.cone.params());
  CHECK(ic.w == Vector{0.5, 0.5, 0.5});
  CHECK(ic.theta == theta_circumscribed(0.75, 3));
  const auto ins = cli::resolve(
      cli::parse_run_args({"--problem", "pe3", "--cone", "icecream", "--epsilon", "0.75", "--theta", "inscribed"}));
  CHECK(std::get<IceCream>(ins.params.cone.params()).theta == theta_inscribed(0.75, 3));
  // m=3, eps=0: inscribed cone sits inside the orthant
  CHECK_THROWS_AS((void)cli::resolve(cli::parse_run_args({"--problem", "pe1", "--cone", "icecream", "--theta", "inscribed"})),
                  cli::ConfigError);
  CHECK_THROWS_AS((void)cli::resolve(cli::parse_run_args(
                      {"--problem", "tp1", "--cone", "icecream", "--w", "1,2", "--theta", "0.5"})),
                  cli::ConfigError);
  const auto num = cli::resolve(cli::parse_run_args({"--problem", "tp1", "--cone", "icecream", "--w", "1,2", "--theta",
                                                     "1.2", "--tol-gap", "0.2", "--pop", "4", "--gens", "3"}));
  CHECK(std::get<IceCream>(num.params.cone.params()).w == Vector{1, 2});
  CHECK(num.params.tol_gap == 0.2);
  CHECK(num.params.sampler.population == 4);
  CHECK(num.params.sampler.generations == 3);
  CHECK_THROWS_AS((void)cli::resolve(cli::parse_run_args({"--problem", "tp1", "--cone", "icecream"})),
                  cli::ConfigError);
}

TEST_CASE("iteration cap maps to exit 2, infeasibility handling to 3") {
  const fs::path out = scratch("cap");
  CHECK(run_main({"run", "--problem", "tp1", "--max-iters", "2", "--out", out.string()}) == cli::kMaxIterations);
  CHECK(lines(out / "trace.csv").size() == 3);
  fs::remove_all(out);
}

TEST_CASE("compare") {
  const fs::path out = scratch("cmp");
  CHECK(run_main({"compare", "--a", "--problem tp1 --epsilon 0.75 --seed 7", "--b", "--problem tp1 --epsilon 0 --seed 7",
                  "--out", out.string()}) == 0);
  const auto rows = lines(out / "compare.csv");
  REQUIRE(rows.size() > 1);
  CHECK(rows[0] == "k,boxes_retained_a,boxes_retained_b");
  CHECK(fs::exists(out / "a" / "front.csv"));
  CHECK(fs::exists(out / "b" / "front.csv"));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = split(rows[i]);
    REQUIRE(f.size() == 3);
    if (!f[1].empty() && !f[2].empty()) CHECK(std::stoull(f[1]) <= std::stoull(f[2]));
  }

  const fs::path same = scratch("cmp_same");
  CHECK(run_main({"compare", "--a", "--problem tp2 --seed 3", "--b", "--problem tp2 --seed 3", "--out",
                  same.string()}) == 0);
  const auto same_rows = lines(same / "compare.csv");
  REQUIRE(same_rows.size() > 1);
  for (std::size_t i = 1; i < same_rows.size(); ++i) {
    const auto f = split(same_rows[i]);
    CHECK(f[1] == f[2]);
  }

  CHECK(run_main({"compare", "--a", "--problem tp1", "--b", "--problem tp2", "--out", out.string()}) ==
        cli::kInvalidConfig);
  fs::remove_all(out);
  fs::remove_all(same);
}

TEST_CASE("list prints every problem") {
  CHECK(run_main({"list"}) == 0);
}

TEST_CASE("output formatting") {
  CHECK(output::format_double(0.1) == "0.10000000000000001");
  CHECK(output::format_double(2.0) == "2");
  std::vector<IterationTrace> a(2), b(3);
  for (int i = 0; i < 3; ++i) {
    if (i < 2) {
      a[i].k = i + 1;
      a[i].boxes_retained = 10 + i;
    }
    b[i].k = i + 1;
    b[i].boxes_retained = 20 + i;
  }
  const fs::path p = scratch("cmpcsv.csv");
  output::write_compare_csv(p, a, b);
  const auto rows = lines(p);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1] == "1,10,20");
  CHECK(rows[3] == "3,,22");
  fs::remove(p);
}
