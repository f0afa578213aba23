#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mmplan/eval.hpp"
#include "mmplan/geometry.hpp"
#include "mmplan/scenario.hpp"

namespace mmplan {

/// FAP selection and W-BS -> FAP assignment. assignment[b] == kNone means W-BS b
/// has no distribution fiber (an equality violation).
struct FiberPlan {
  std::vector<bool> z;
  std::vector<std::size_t> assignment;

  std::size_t unassigned() const;
  std::vector<int> fap_loads() const;
};

struct FiberCost {
  double splitters = 0.0;     // C_s per selected FAP
  double feeder = 0.0;        // C_f * FAP->CO length per selected FAP
  double distribution = 0.0;  // C_d * W-BS->FAP length per assigned W-BS

  double total() const { return splitters + feeder + distribution; }
};

FiberCost fiber_cost_breakdown(const FiberPlan& plan, std::span<const Point> wbs, std::span<const Point> faps,
                               Point central_office, const CostParams& costs);
double fiber_cost(const FiberPlan& plan, std::span<const Point> wbs, std::span<const Point> faps,
                  Point central_office, const CostParams& costs);

/// Greedy repair: W-BSs in ascending order of distance to their nearest allowed FAP,
/// each to the nearest allowed FAP with residual capacity. Only FAPs that end up
/// used are selected. `allowed` (one flag per FAP) restricts the candidates; empty
/// means every FAP is a candidate.
FiberPlan repair_assignment(std::span<const Point> wbs, std::span<const Point> faps, int capacity,
                            const std::vector<bool>& allowed = {});

double objective_f2_joint(const Deployment& deployment, const FiberPlan& plan, std::span<const Point> faps,
                          Point central_office, const CostParams& costs);

/// Fiber constraints: every W-BS on exactly one FAP (equality), the FAP is
/// selected (inequality), per-FAP load within the splitter capacity (inequality).
std::vector<Violation> fiber_constraints(const FiberPlan& plan, std::size_t n_faps, int capacity);

/// Cell evaluation plus fiber cost and constraints; the second objective becomes F2 + F3.
EvaluationReport evaluate_joint(const Evaluator& evaluator, const Deployment& deployment, const FiberPlan& plan);

double mean_distribution_length(const FiberPlan& plan, std::span<const Point> wbs, std::span<const Point> faps);

}  // namespace mmplan
