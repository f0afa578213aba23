#include "mmplan/backhaul.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mmplan {

std::size_t FiberPlan::unassigned() const {
  return static_cast<std::size_t>(std::count(assignment.begin(), assignment.end(), kNone));
}

std::vector<int> FiberPlan::fap_loads() const {
  std::vector<int> load(z.size(), 0);
  for (std::size_t f : assignment) {
    if (f != kNone && f < load.size()) ++load[f];
  }
  return load;
}

FiberCost fiber_cost_breakdown(const FiberPlan& plan, std::span<const Point> wbs, std::span<const Point> faps,
                               Point central_office, const CostParams& costs) {
  FiberCost c;
  for (std::size_t b = 0; b < plan.assignment.size() && b < wbs.size(); ++b) {
    const std::size_t f = plan.assignment[b];
    if (f != kNone) c.distribution += costs.c_d * distance(wbs[b], faps[f]);
  }
  for (std::size_t f = 0; f < plan.z.size(); ++f) {
    if (!plan.z[f]) continue;
    c.splitters += costs.c_s;
    c.feeder += costs.c_f * distance(faps[f], central_office);
  }
  return c;
}

double fiber_cost(const FiberPlan& plan, std::span<const Point> wbs, std::span<const Point> faps,
                  Point central_office, const CostParams& costs) {
  return fiber_cost_breakdown(plan, wbs, faps, central_office, costs).total();
}

FiberPlan repair_assignment(std::span<const Point> wbs, std::span<const Point> faps, int capacity,
                            const std::vector<bool>& allowed) {
  FiberPlan plan;
  plan.z.assign(faps.size(), false);
  plan.assignment.assign(wbs.size(), kNone);
  const auto candidate = [&](std::size_t f) { return allowed.empty() || allowed[f]; };

  std::vector<double> nearest(wbs.size(), std::numeric_limits<double>::infinity());
  for (std::size_t b = 0; b < wbs.size(); ++b) {
    for (std::size_t f = 0; f < faps.size(); ++f) {
      if (candidate(f)) nearest[b] = std::min(nearest[b], distance(wbs[b], faps[f]));
    }
  }
  std::vector<std::size_t> order(wbs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nearest[a] < nearest[b]; });

  std::vector<int> residual(faps.size(), capacity);
  for (std::size_t b : order) {
    std::size_t best = kNone;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < faps.size(); ++f) {
      if (!candidate(f) || residual[f] <= 0) continue;
      const double d = distance(wbs[b], faps[f]);
      if (d < best_d) {
        best_d = d;
        best = f;
      }
    }
    if (best == kNone) continue;
    plan.assignment[b] = best;
    plan.z[best] = true;
    --residual[best];
  }
  return plan;
}

double objective_f2_joint(const Deployment& deployment, const FiberPlan& plan, std::span<const Point> faps,
                          Point central_office, const CostParams& costs) {
  return objective_f2(deployment, costs) + fiber_cost(plan, deployment.wbs, faps, central_office, costs);
}

std::vector<Violation> fiber_constraints(const FiberPlan& plan, std::size_t n_faps, int capacity) {
  Violation assigned{"fiber_assignment", ConstraintKind::Equality};
  assigned.magnitude = static_cast<double>(plan.unassigned());
  assigned.relative = assigned.magnitude;

  Violation selected{"fiber_selected", ConstraintKind::Inequality};
  for (std::size_t f : plan.assignment) {
    if (f == kNone) continue;
    if (f >= n_faps || !plan.z[f]) selected.magnitude += 1.0;
  }
  selected.relative = selected.magnitude;

  Violation load{"fap_capacity", ConstraintKind::Inequality};
  for (int l : plan.fap_loads()) {
    const double excess = std::max(l - capacity, 0);
    load.magnitude += excess;
    load.relative += excess / capacity;
  }
  return {assigned, selected, load};
}

EvaluationReport evaluate_joint(const Evaluator& evaluator, const Deployment& deployment, const FiberPlan& plan) {
  const Scenario& s = evaluator.scenario();
  EvaluationReport r = evaluator.evaluate(deployment);
  r.objectives.f3 = fiber_cost(plan, deployment.wbs, s.area.faps, s.area.central_office, s.costs);
  auto extra = fiber_constraints(plan, s.area.faps.size(), s.costs.splitter_capacity);
  r.violations.insert(r.violations.end(), extra.begin(), extra.end());
  evaluator.finalize(r, true);
  return r;
}

double mean_distribution_length(const FiberPlan& plan, std::span<const Point> wbs, std::span<const Point> faps) {
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t b = 0; b < plan.assignment.size() && b < wbs.size(); ++b) {
    if (plan.assignment[b] == kNone) continue;
    sum += distance(wbs[b], faps[plan.assignment[b]]);
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

}  // namespace mmplan
