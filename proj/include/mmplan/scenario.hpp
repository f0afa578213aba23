#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmplan/geometry.hpp"

namespace mmplan {

class ScenarioParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ScenarioValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A region with its own user distribution. The region is a rectangle minus
/// optional rectangular holes (used for the outer ring around dense squares).
struct Subarea {
  std::string name;
  Rect region;
  std::vector<Rect> holes;
  std::optional<double> lambda_per_km2;
  std::optional<long> user_count;
  std::optional<double> demand_bps;  // per-subarea override of the uniform demand

  double area_m2() const;
  double area_km2() const;
  bool contains(Point p) const;
  /// Authoritative mean user count: user_count when present, else lambda * area.
  double expected_users() const;
};

struct AreaSpec {
  Rect bounds;
  std::vector<Subarea> subareas;
  std::vector<Rect> obstacles;
  std::vector<Point> faps;
  Point central_office;
  std::uint64_t rng_seed = 1;
};

/// Link-level constants. Defaults are the simulation table values.
struct RadioParams {
  double alpha_db = 70.0;
  double beta_access_los = 2.0;
  double beta_access_nlos = 3.3;
  double beta_backhaul_los = 2.0;
  double beta_backhaul_nlos = 3.5;
  double sigma_access_los_db = 5.2;
  double sigma_access_nlos_db = 7.2;
  double sigma_backhaul_los_db = 4.2;
  double sigma_backhaul_nlos_db = 7.9;
  double a_los = 0.006;  // 1/m; P_los(200 m) ~ 0.30
  double p_a_w = 1.0;
  double p_b_w = 1.26;
  double ag_bs_access_dbi = 18.0;
  double ag_bs_backhaul_dbi = 52.0;
  double ag_ue_dbi = 18.0;
  double noise_figure_db = 10.0;
  double noise_bandwidth_hz = 50.0e6;  // RB_th * BW_RB
  double tau = 1.0e-5;
  double gamma_th_access_db = 10.0;
  double gamma_th_backhaul_db = 55.0;
  double rho_th_access = 0.9;
  double rho_th_backhaul = 0.9;
  double sidelobe_gain_dbi = 0.0;  // interference mode only
  double h_ue_m = 1.5;
  double h_bs_m = 2.5;
};

struct CapacityParams {
  int n_sectors = 3;
  double bw_sector_hz = 4.0e9;
  double bw_rb_hz = 1.0e6;
  int rb_th = 50;
  double r_demand_bps = 180.0e6;
  int n_lim = 3;
  double delta_cov = 0.9;
  double delta_cap = 0.9;
  double cell_radius_m = 100.0;

  double bs_budget_hz() const { return n_sectors * bw_sector_hz; }
};

struct CostParams {
  double c_w = 2.0;
  double c_u = 1.0;
  double c_s = 0.05;
  double c_f = 0.01;
  double c_d = 0.02;
  int splitter_capacity = 4;
};

enum class DimPolicy { MinDim, MaxDim };
enum class ParentSelection { Uniform, Tournament };
enum class FiberAssignmentMode { Repair, Genetic };

struct GaParams {
  int n_pop = 100;
  int n_iterations = 300;
  double epsilon = 0.15;
  double mutation_rate = 0.15;
  double crossover_pool_fraction = 0.9;
  double mutation_pool_fraction = 0.4;
  DimPolicy dim_policy = DimPolicy::MinDim;
  double structural_mutation_prob = 0.1;
  ParentSelection parent_selection = ParentSelection::Uniform;
  FiberAssignmentMode fiber_assignment = FiberAssignmentMode::Repair;
};

struct PenaltyConfig {
  double sigma_inequality = 1.0e6;
  double sigma_equality = 1.0e6;
};

struct Scenario {
  std::string name;
  AreaSpec area;
  RadioParams radio;
  CapacityParams capacity;
  CostParams costs;
  GaParams ga;
  PenaltyConfig penalty;
  double pixel_size_m = 10.0;
  double omega = 1.0 / 3.0;  // carried from the parameter table; no formula uses it
  std::vector<std::string> warnings;
};

struct UserSet {
  std::vector<Point> positions;
  std::vector<double> demands;
  std::vector<std::size_t> subarea;  // generating subarea per user

  std::size_t size() const { return positions.size(); }
};

struct PixelGrid {
  Rect bounds;
  double pixel_size_m = 0.0;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<Point> centers;  // row-major, index = iy * nx + ix
  std::vector<bool> excluded;  // center strictly inside an obstacle

  std::size_t size() const { return centers.size(); }
  std::size_t included_count() const;
  /// Cell containing p; points outside the tiled region are clamped to the border cells.
  std::pair<long, long> cell_of(Point p) const;
  bool cell_blocked(long ix, long iy) const { return excluded[static_cast<std::size_t>(iy) * nx + ix]; }
};

Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::filesystem::path& path);
nlohmann::json scenario_to_json(const Scenario& scenario);

/// Throws ScenarioValidationError naming the first violated invariant.
void validate_scenario(const Scenario& scenario);

UserSet sample_users(const Scenario& scenario, std::uint64_t seed);
PixelGrid build_pixel_grid(const Scenario& scenario, double pixel_size_m);
inline PixelGrid build_pixel_grid(const Scenario& scenario) {
  return build_pixel_grid(scenario, scenario.pixel_size_m);
}

}  // namespace mmplan
