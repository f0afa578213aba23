#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmplan/backhaul.hpp"
#include "mmplan/eval.hpp"
#include "mmplan/optimizer.hpp"
#include "mmplan/scenario.hpp"

namespace mmplan {

/// Shortest decimal text that parses back to the same double.
std::string format_number(double v);

std::string to_string(InterferenceMode mode);
InterferenceMode parse_interference_mode(const std::string& s);

struct Layout {
  std::string scenario;  // scenario reference as given on the command line
  PlanMode mode = PlanMode::Cell;
  EvalSettings settings;
  Deployment deployment;
  std::optional<FiberPlan> plan;
  std::vector<bool> z_genes;
  nlohmann::json objectives;  // as stored at export time
};

nlohmann::json layout_to_json(const Layout& layout, const EvaluationReport& report);
Layout layout_from_json(const nlohmann::json& doc);
Layout load_layout(const std::filesystem::path& path);

nlohmann::json objectives_to_json(const EvaluationReport& report);
nlohmann::json report_to_json(const EvaluationReport& report, const Evaluator& evaluator);
nlohmann::json fiber_plan_to_json(const FiberPlan& plan, const Deployment& deployment, const Scenario& scenario);

std::string pareto_csv(const Nsga2& optimizer, PlanMode mode);
std::string history_csv(const std::vector<IterationStats>& history);
std::string users_csv(const EvaluationReport& report, const UserSet& users);

/// Long-format tail fractions: metric,x,fraction with metric in {sinr_db, snr_db, rate_mbps}.
std::string coverage_cdf_csv(const EvaluationReport& report, bool with_snr);

std::string layout_svg(const Scenario& scenario, const Deployment& deployment, const EvaluationReport& report,
                       const std::optional<FiberPlan>& plan);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace mmplan
