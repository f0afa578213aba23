#include "mmplan/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "mmplan/backhaul.hpp"
#include "mmplan/export.hpp"
#include "mmplan/optimizer.hpp"
#include "mmplan/scenario.hpp"
#include "mmplan/sizing.hpp"

#ifndef MMPLAN_DATA_DIR
#define MMPLAN_DATA_DIR "data/scenarios"
#endif
#ifndef MMPLAN_VERSION
#define MMPLAN_VERSION "0.0.0"
#endif

namespace mmplan {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliError {
  int code;
  std::string message;
};

struct Options {
  std::string scenario;
  std::string layout;
  std::uint64_t seed = 1;
  std::optional<int> iters;
  std::optional<int> pop;
  std::string mode;      // empty: noise-limited, or the layout's setting
  std::string blockage;  // empty: on iff the scenario has obstacles, or the layout's setting
  std::string out = "out";
  bool svg = false;
  unsigned threads = 0;
};

Scenario load_checked(const std::string& ref, fs::path& resolved) {
  resolved = resolve_scenario(ref);
  try {
    return load_scenario(resolved);
  } catch (const ScenarioParseError& e) {
    throw CliError{kExitInvalidScenario, e.what()};
  } catch (const ScenarioValidationError& e) {
    throw CliError{kExitInvalidScenario, e.what()};
  }
}

EvalSettings settings_from(const Options& o, const Scenario& s, const EvalSettings* fallback) {
  EvalSettings st;
  if (!o.mode.empty()) {
    st.interference = parse_interference_mode(o.mode);
  } else if (fallback != nullptr) {
    st.interference = fallback->interference;
  }
  if (!o.blockage.empty()) {
    st.blockage = o.blockage == "on";
  } else {
    st.blockage = fallback != nullptr ? fallback->blockage : !s.area.obstacles.empty();
  }
  return st;
}

void check_sizing(const Scenario& s) {
  if (users_per_bs(s.capacity) < 1) {
    throw CliError{kExitInfeasibleSizing, "a base station cannot host a single user at RB_th resource blocks"};
  }
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_plan(const Options& o, PlanMode mode, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  fs::path scenario_path;
  Scenario s = load_checked(o.scenario, scenario_path);
  check_sizing(s);
  if (o.iters) s.ga.n_iterations = *o.iters;
  if (o.pop) s.ga.n_pop = *o.pop;
  if (s.ga.n_pop < 2 || s.ga.n_iterations < 0) throw CliError{kExitBadArgs, "--pop must be >= 2 and --iters >= 0"};

  const SizingReport sizing = compute_sizing(s);
  if (mode == PlanMode::Joint) {
    const long capacity = static_cast<long>(s.area.faps.size()) * s.costs.splitter_capacity;
    if (std::max<long>(1, sizing.n_cap) > capacity) {
      throw CliError{kExitFiberInfeasible, "the FAPs cannot host the minimum number of W-BSs"};
    }
  }
  const EvalSettings settings = settings_from(o, s, nullptr);
  for (const auto& w : s.warnings) out << "warning: " << w << '\n';

  Evaluator evaluator(s, sample_users(s, s.area.rng_seed), build_pixel_grid(s), settings);
  Nsga2 ga(evaluator, mode, s.ga, o.seed, thread_count(o.threads));
  ga.run();

  const fs::path dir(o.out);
  fs::create_directories(dir);
  write_text(dir / "pareto.csv", pareto_csv(ga, mode));
  write_text(dir / "history.csv", history_csv(ga.history()));
  const auto front = ga.first_front();
  for (std::size_t k = 0; k < front.size(); ++k) {
    const Chromosome& c = ga.population()[front[k]];
    Layout l;
    l.scenario = o.scenario;
    l.mode = mode;
    l.settings = settings;
    l.deployment = c.deployment;
    if (mode == PlanMode::Joint) {
      l.plan = c.plan;
      l.z_genes = c.z;
    }
    const std::string stem = "layout-" + std::to_string(k);
    write_text(dir / (stem + ".json"), layout_to_json(l, *c.report).dump(2) + "\n");
    if (mode == PlanMode::Joint) {
      write_text(dir / ("fiber-" + std::to_string(k) + ".json"),
                 fiber_plan_to_json(c.plan, c.deployment, s).dump(2) + "\n");
    }
    if (o.svg) write_text(dir / (stem + ".svg"), layout_svg(s, c.deployment, *c.report, l.plan));
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json manifest{{"tool", "mmplan"},
                {"version", MMPLAN_VERSION},
                {"command", mode == PlanMode::Joint ? "jointplan" : "plan"},
                {"scenario", o.scenario},
                {"scenario_path", fs::absolute(scenario_path).string()},
                {"seed", o.seed},
                {"mode", to_string(settings.interference)},
                {"blockage", settings.blockage},
                {"ga", scenario_to_json(s).at("ga")},
                {"threads", thread_count(o.threads)},
                {"out", o.out},
                {"sizing", {{"users_per_bs", sizing.users_per_bs}, {"n_cap", sizing.n_cap}, {"n_cov", sizing.n_cov}}},
                {"front1_size", front.size()},
                {"wall_seconds", seconds}};
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
  out << "front 1: " << front.size() << " solutions, " << ga.history().back().feasible
      << " feasible members; outputs in " << dir.string() << '\n';
  return kExitOk;
}

struct Loaded {
  Layout layout;
  Scenario scenario;
  EvalSettings settings;
};

Loaded load_for_layout(const Options& o) {
  Loaded l;
  try {
    l.layout = load_layout(o.layout);
  } catch (const std::exception& e) {
    throw CliError{kExitBadArgs, e.what()};
  }
  const std::string ref = o.scenario.empty() ? l.layout.scenario : o.scenario;
  if (ref.empty()) throw CliError{kExitBadArgs, "no scenario given and none recorded in the layout"};
  fs::path resolved;
  l.scenario = load_checked(ref, resolved);
  check_sizing(l.scenario);
  l.settings = settings_from(o, l.scenario, &l.layout.settings);
  return l;
}

EvaluationReport evaluate_layout(const Loaded& l, const Evaluator& evaluator) {
  if (l.layout.plan) return evaluate_joint(evaluator, l.layout.deployment, *l.layout.plan);
  return evaluator.evaluate(l.layout.deployment);
}

int cmd_evaluate(const Options& o, std::ostream& out) {
  const Loaded l = load_for_layout(o);
  const Scenario& s = l.scenario;
  Evaluator evaluator(s, sample_users(s, s.area.rng_seed), build_pixel_grid(s), l.settings);
  const EvaluationReport r = evaluate_layout(l, evaluator);
  const fs::path dir(o.out);
  fs::create_directories(dir);
  write_text(dir / "report.json", report_to_json(r, evaluator).dump(2) + "\n");
  write_text(dir / "users.csv", users_csv(r, evaluator.users()));
  if (o.svg) write_text(dir / "layout.svg", layout_svg(s, l.layout.deployment, r, l.layout.plan));
  out << "F1=" << r.objectives.f1 << " F2=" << format_number(r.objectives.f2);
  if (l.layout.plan) out << " F3=" << format_number(r.objectives.f3);
  out << " penalty=" << format_number(r.penalty) << '\n';
  return kExitOk;
}

int cmd_coverage(const Options& o, std::ostream& out) {
  const Loaded l = load_for_layout(o);
  const Scenario& s = l.scenario;
  Evaluator evaluator(s, sample_users(s, s.area.rng_seed), build_pixel_grid(s), l.settings);
  const EvaluationReport r = evaluate_layout(l, evaluator);
  const fs::path dir(o.out);
  fs::create_directories(dir);
  const bool with_snr = l.settings.interference == InterferenceMode::Interference;
  write_text(dir / "cdf.csv", coverage_cdf_csv(r, with_snr));
  out << "wrote " << (dir / "cdf.csv").string() << '\n';
  return kExitOk;
}

int cmd_sizing(const Options& o, std::ostream& out) {
  fs::path resolved;
  const Scenario s = load_checked(o.scenario, resolved);
  check_sizing(s);
  const SizingReport r = compute_sizing(s);
  const json doc{{"users_per_bs", r.users_per_bs},
                 {"per_subarea", r.per_subarea_bs},
                 {"n_cap", r.n_cap},
                 {"n_cov", r.n_cov},
                 {"n_init", r.n_init}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

fs::path resolve_scenario(const std::string& ref) {
  if (fs::is_regular_file(ref)) return ref;
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("MMPLAN_DATA_DIR")) dirs.emplace_back(env);
  dirs.emplace_back(MMPLAN_DATA_DIR);
  for (const auto& d : dirs) {
    const fs::path p = d / (ref + ".json");
    if (fs::is_regular_file(p)) return p;
  }
  throw CliError{kExitBadArgs, "scenario not found: " + ref};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mmWave two-tier cell and fiber backhaul planner", "mmplan"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub, bool needs_scenario) {
    auto* opt = sub->add_option("--scenario", o.scenario, "scenario file or bundled scenario name");
    if (needs_scenario) opt->required();
    sub->add_option("--mode", o.mode, "interference model")->check(CLI::IsMember({"noise-limited", "interference"}));
    sub->add_option("--blockage", o.blockage, "obstacle-aware association")->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--out", o.out, "output directory");
    sub->add_flag("--svg", o.svg, "also write an SVG layout drawing");
  };
  const auto add_run = [&](CLI::App* sub) {
    add_common(sub, true);
    sub->add_option("--seed", o.seed, "optimizer seed");
    sub->add_option("--iters", o.iters, "number of generations");
    sub->add_option("--pop", o.pop, "population size");
    sub->add_option("--threads", o.threads, "evaluation threads (0: all cores)");
  };

  auto* plan = app.add_subcommand("plan", "cell planning: minimize [F1, F2]");
  add_run(plan);
  auto* joint = app.add_subcommand("jointplan", "joint cell and fiber planning: minimize [F1, F2 + F3]");
  add_run(joint);
  auto* evaluate = app.add_subcommand("evaluate", "evaluate a stored layout");
  add_common(evaluate, false);
  evaluate->add_option("--layout", o.layout, "layout JSON from a planning run")->required();
  auto* coverage = app.add_subcommand("coverage", "SINR/SNR and rate tail fractions for a stored layout");
  add_common(coverage, false);
  coverage->add_option("--layout", o.layout, "layout JSON from a planning run")->required();
  auto* sizing = app.add_subcommand("sizing", "capacity and coverage base station counts");
  sizing->add_option("--scenario", o.scenario, "scenario file or bundled scenario name")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  try {
    if (plan->parsed()) return cmd_plan(o, PlanMode::Cell, out);
    if (joint->parsed()) return cmd_plan(o, PlanMode::Joint, out);
    if (evaluate->parsed()) return cmd_evaluate(o, out);
    if (coverage->parsed()) return cmd_coverage(o, out);
    if (sizing->parsed()) return cmd_sizing(o, out);
  } catch (const CliError& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArgs;
  }
  return kExitBadArgs;
}

}  // namespace mmplan
