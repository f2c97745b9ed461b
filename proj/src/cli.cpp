#include "conebb/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "conebb/output.hpp"
#include "conebb/parallel.hpp"

namespace conebb::cli {

namespace {

void add_run_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--problem", cfg.problem, "Problem name")->required();
  app.add_option("--preset", cfg.preset, "Problem preset");
  app.add_option("--cone", cfg.cone, "Cone kind")->check(CLI::IsMember({"poly", "icecream"}));
  app.add_option("--epsilon", cfg.epsilon, "Polyhedral cone parameter in [0,1)");
  app.add_option("--w", cfg.w, "Ice-cream direction, comma separated")->delimiter(',');
  app.add_option("--theta", cfg.theta, "Ice-cream half-angle (radians) or circumscribed|inscribed");
  app.add_option("--tol-gap", cfg.tol_gap, "Bound-gap tolerance");
  app.add_option("--tol-width", cfg.tol_width, "Box diameter tolerance");
  app.add_option("--seed", cfg.seed, "Sampler seed");
  app.add_option("--pop", cfg.population, "Sampler population");
  app.add_option("--gens", cfg.generations, "Sampler generations");
  app.add_flag("!--no-normalize", cfg.normalize, "Compare objectives on the raw scale");
  app.add_option("--threads", cfg.threads, "Worker threads (default: $CONEBB_THREADS)");
  app.add_option("--out", cfg.out_dir, "Output directory");
  app.add_option("--max-iters", cfg.max_iterations, "Iteration cap");
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

OrderingCone make_cone(const RunConfig& cfg, std::size_t m) {
  if (cfg.cone == "poly") return OrderingCone::polyhedral(cfg.epsilon);

  Vector w = cfg.w.empty() ? Vector(m, 0.5) : Vector(cfg.w.begin(), cfg.w.end());
  if (w.size() != m) {
    throw ConfigError("--w has " + std::to_string(w.size()) + " entries, problem has " + std::to_string(m) +
                      " objectives");
  }
  double theta = 0.0;
  if (cfg.theta == "circumscribed") {
    theta = theta_circumscribed(cfg.epsilon, m);
  } else if (cfg.theta == "inscribed") {
    theta = theta_inscribed(cfg.epsilon, m);
  } else if (cfg.theta.empty()) {
    throw ConfigError("--cone icecream requires --theta");
  } else {
    try {
      std::size_t used = 0;
      theta = std::stod(cfg.theta, &used);
      if (used != cfg.theta.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ConfigError("--theta must be a number or circumscribed|inscribed");
    }
  }
  return OrderingCone::ice_cream(std::move(w), theta);
}

nlohmann::json echo(const RunConfig& cfg, const ResolvedRun& rr) {
  nlohmann::json cone;
  if (const auto* pe = std::get_if<PolyhedralEpsilon>(&rr.params.cone.params())) {
    cone = {{"kind", "poly"}, {"epsilon", pe->epsilon}};
  } else {
    const auto& ic = std::get<IceCream>(rr.params.cone.params());
    cone = {{"kind", "icecream"}, {"w", ic.w}, {"theta", ic.theta}};
  }
  const auto& spec = rr.preset.spec;
  return {{"problem", cfg.problem},
          {"preset", cfg.preset},
          {"problem_params", {{"k1", spec.k1}, {"k2", spec.k2}, {"knees", spec.knees}, {"num_vars", rr.problem.num_vars()}}},
          {"cone", cone},
          {"tol_gap", rr.params.tol_gap},
          {"tol_width", rr.params.tol_width},
          {"seed", rr.params.sampler.seed},
          {"population", rr.params.sampler.population},
          {"generations", rr.params.sampler.generations},
          {"normalize", rr.params.normalize},
          {"max_iterations", rr.params.max_iterations}};
}

int exit_code(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return kConverged;
    case SolveStatus::MaxIterations: return kMaxIterations;
    case SolveStatus::Empty:
    case SolveStatus::Infeasible: return kInfeasible;
  }
  return kInfeasible;
}

}  // namespace

RunConfig parse_run_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app("conebb run");
  add_run_options(app, cfg);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

ResolvedRun resolve(const RunConfig& cfg) {
  try {
    problems::Preset preset = problems::preset(cfg.problem, cfg.preset);
    Problem problem = problems::build(preset.spec);
    SolverParams params;
    params.tol_gap = cfg.tol_gap.value_or(preset.tol_gap);
    params.tol_width = cfg.tol_width.value_or(preset.tol_width);
    params.cone = make_cone(cfg, problem.num_objectives());
    params.sampler.seed = cfg.seed;
    if (cfg.population) params.sampler.population = *cfg.population;
    if (cfg.generations) params.sampler.generations = *cfg.generations;
    params.normalize = cfg.normalize;
    params.max_iterations = cfg.max_iterations;
    params.threads = cfg.threads.value_or(default_thread_count());
    validate(params, problem.num_objectives());
    return {std::move(preset), std::move(problem), std::move(params)};
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int run(const RunConfig& cfg, SolveResult* out) {
  std::optional<ResolvedRun> resolved;
  try {
    resolved.emplace(resolve(cfg));
  } catch (const ConfigError& e) {
    std::cerr << "conebb: invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  }
  const ResolvedRun& rr = *resolved;

  SolveResult result = solve(rr.problem, rr.params);
  for (const auto& w : result.warnings) std::cerr << "conebb: warning: " << w << '\n';
  if (!result.diagnostic.empty()) std::cerr << "conebb: " << result.diagnostic << '\n';

  try {
    std::filesystem::create_directories(cfg.out_dir);
    output::write_json(cfg.out_dir / "result.json", output::result_to_json(result, echo(cfg, rr)));
    output::write_trace_csv(cfg.out_dir / "trace.csv", result.trace);
    output::write_front_csv(cfg.out_dir / "front.csv", result, rr.problem.num_objectives(),
                            rr.problem.num_vars());
  } catch (const std::exception& e) {
    std::cerr << "conebb: " << e.what() << '\n';
    return kIoError;
  }
  const int code = exit_code(result.status);
  if (out != nullptr) *out = std::move(result);
  return code;
}

int compare(RunConfig a, RunConfig b, const std::filesystem::path& out_dir) {
  try {
    const auto ra = resolve(a);
    const auto rb = resolve(b);
    const auto& sa = ra.preset.spec;
    const auto& sb = rb.preset.spec;
    if (sa.name != sb.name || sa.k1 != sb.k1 || sa.k2 != sb.k2 || sa.knees != sb.knees ||
        ra.problem.num_vars() != rb.problem.num_vars()) {
      throw ConfigError("compare: both runs must use the same problem");
    }
  } catch (const ConfigError& e) {
    std::cerr << "conebb: invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  }

  a.out_dir = out_dir / "a";
  b.out_dir = out_dir / "b";
  SolveResult res_a;
  SolveResult res_b;
  const int code_a = run(a, &res_a);
  if (code_a == kIoError) return code_a;
  const int code_b = run(b, &res_b);
  if (code_b == kIoError) return code_b;
  try {
    output::write_compare_csv(out_dir / "compare.csv", res_a.trace, res_b.trace);
  } catch (const std::exception& e) {
    std::cerr << "conebb: " << e.what() << '\n';
    return kIoError;
  }
  if (code_a == kInfeasible || code_b == kInfeasible) return kInfeasible;
  if (code_a == kMaxIterations || code_b == kMaxIterations) return kMaxIterations;
  return kConverged;
}

int main(int argc, char** argv) {
  CLI::App app("Cone-dominance branch and bound for multiobjective problems");
  app.require_subcommand(1);

  RunConfig run_cfg;
  auto* run_cmd = app.add_subcommand("run", "Solve one configuration");
  add_run_options(*run_cmd, run_cfg);

  std::string a_flags;
  std::string b_flags;
  std::filesystem::path compare_out = ".";
  auto* cmp_cmd = app.add_subcommand("compare", "Solve two configurations and align their box counts");
  cmp_cmd->add_option("--a", a_flags, "Flags of run A, quoted")->required();
  cmp_cmd->add_option("--b", b_flags, "Flags of run B, quoted")->required();
  cmp_cmd->add_option("--out", compare_out, "Output directory");

  app.add_subcommand("list", "List problems and presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidConfig;
  }

  try {
    if (run_cmd->parsed()) return run(run_cfg);
    if (cmp_cmd->parsed()) {
      return compare(parse_run_args(split_words(a_flags)), parse_run_args(split_words(b_flags)), compare_out);
    }
    for (const auto& name : problems::names()) {
      std::cout << name << ':';
      for (const auto& p : problems::presets(name)) std::cout << ' ' << p.name;
      std::cout << '\n';
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "conebb: invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "conebb: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace conebb::cli
