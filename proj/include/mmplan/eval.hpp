#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mmplan/geometry.hpp"
#include "mmplan/radio.hpp"
#include "mmplan/scenario.hpp"

namespace mmplan {

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// BS positions. Global BS index: W-BSs first (0..W-1), then U-BSs (W..W+U-1).
struct Deployment {
  std::vector<Point> wbs;
  std::vector<Point> ubs;

  std::size_t size() const { return wbs.size() + ubs.size(); }
  bool empty() const { return wbs.empty() && ubs.empty(); }
  bool is_wbs(std::size_t bs) const { return bs < wbs.size(); }
  Point position(std::size_t bs) const { return is_wbs(bs) ? wbs[bs] : ubs[bs - wbs.size()]; }

  friend bool operator==(const Deployment&, const Deployment&) = default;
};

enum class InterferenceMode { NoiseLimited, Interference };

struct EvalSettings {
  bool blockage = false;
  InterferenceMode interference = InterferenceMode::NoiseLimited;
};

struct Association {
  std::vector<std::size_t> user_to_bs;   // kNone: every link blocked
  std::vector<std::size_t> pixel_to_bs;  // kNone: pixel excluded
  std::vector<std::size_t> ubs_to_wbs;   // W-BS index; kNone: no reachable W-BS
};

/// Nearest candidate per point with lowest-index tie-break. With a grid, candidates
/// whose Bresenham trace is blocked count as infinitely far; kNone when all are.
std::vector<std::size_t> nearest_candidates(std::span<const Point> points, std::span<const Point> candidates,
                                            const PixelGrid* blockage_grid);

Association associate(const Deployment& deployment, std::span<const Point> users, const PixelGrid& grid,
                      bool blockage_mode);

struct CoverageIndicators {
  std::vector<bool> user;
  std::vector<double> user_sinr_db;  // mean-mixture SINR; -inf when unassociated
  std::vector<double> user_snr_db;   // same without interference
  std::vector<bool> pixel;
  std::vector<bool> pixel_included;
  std::vector<bool> backhaul;        // per U-BS
  std::vector<double> backhaul_sinr_db;
};

CoverageIndicators coverage_indicators(const Deployment& deployment, const Association& association,
                                       std::span<const Point> users, const PixelGrid& grid, const RadioParams& radio,
                                       const EvalSettings& settings);

struct BandwidthAllocation {
  std::vector<double> bw_hz;
  std::vector<double> rate_bps;
  std::vector<double> access_load_hz;  // per BS, own users
  std::vector<double> relay_load_hz;   // per W-BS, access load of its backhauled U-BSs
};

/// Smallest RB-quantized bandwidth that meets the demand, floored at RB_th RBs;
/// +inf when the link has no spectral efficiency.
double required_bandwidth_hz(double demand_bps, double sinr_db, const CapacityParams& capacity);

/// Greedy cheapest-user-first allocation per W-BS group (the W-BS plus the U-BSs it
/// backhauls), honoring both the U-BS sector budget and the W-BS access+relay budget.
/// Users of U-BSs without backhaul coverage are not served.
BandwidthAllocation allocate_bandwidth(const Deployment& deployment, const Association& association,
                                       const CoverageIndicators& coverage, const UserSet& users,
                                       const CapacityParams& capacity);

long objective_f1(std::span<const double> rates, std::span<const double> demands);
double objective_f2(const Deployment& deployment, const CostParams& costs);

enum class ConstraintKind { Inequality, Equality };

struct Violation {
  std::string name;
  ConstraintKind kind = ConstraintKind::Inequality;
  double magnitude = 0.0;  // raw, in the constraint's own units
  double relative = 0.0;   // normalized shortfall/deviation fed to the penalty
};

std::vector<Violation> evaluate_constraints(const Deployment& deployment, const Association& association,
                                            const CoverageIndicators& coverage, const BandwidthAllocation& allocation,
                                            const CapacityParams& capacity, std::size_t n_users);

double penalty_term(std::span<const Violation> violations, const PenaltyConfig& config);
std::vector<double> penalize(std::span<const double> objectives, std::span<const Violation> violations,
                             const PenaltyConfig& config);

struct Objectives {
  long f1 = 0;
  double f2 = 0.0;
  double f3 = 0.0;  // fiber cost; zero outside joint planning
};

struct EvaluationReport {
  Association association;
  CoverageIndicators coverage;
  BandwidthAllocation allocation;
  Objectives objectives;
  std::vector<Violation> violations;
  double penalty = 0.0;
  std::vector<double> penalized;  // [F1, F2] or [F1, F2 + F3], each plus the penalty

  bool feasible() const { return penalty == 0.0; }
  long served_users() const;
};

/// Shares one scenario realization (users, pixel grid) across many evaluations.
class Evaluator {
 public:
  Evaluator(Scenario scenario, UserSet users, PixelGrid grid, EvalSettings settings);

  EvaluationReport evaluate(const Deployment& deployment) const;

  /// Recomputes penalty and penalized objectives after violations or F3 change.
  void finalize(EvaluationReport& report, bool joint) const;

  const Scenario& scenario() const { return scenario_; }
  const UserSet& users() const { return users_; }
  const PixelGrid& grid() const { return grid_; }
  const EvalSettings& settings() const { return settings_; }

 private:
  Scenario scenario_;
  UserSet users_;
  PixelGrid grid_;
  EvalSettings settings_;
};

}  // namespace mmplan
