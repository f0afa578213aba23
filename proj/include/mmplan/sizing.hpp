#pragma once

#include <vector>

#include "mmplan/scenario.hpp"

namespace mmplan {

struct SizingReport {
  long users_per_bs = 0;
  std::vector<long> per_subarea_bs;
  long n_cap = 0;
  long n_cov = 0;
  long n_init = 0;  // max(n_cap, n_cov)
  bool feasible = true;  // false when a single user's minimum bandwidth exceeds a BS budget
};

/// floor(N_s * BW_s / (RB_th * BW_RB)).
long users_per_bs(const CapacityParams& capacity);

/// Per-subarea ceil(users / users_per_bs) and their sum. Requires users_per_bs >= 1.
std::pair<std::vector<long>, long> capacity_bs_counts(const Scenario& scenario, long users_per_bs);

/// ceil(S_T / ((3 sqrt(3) / 2) R_BS^2)) with hexagonal cells.
long coverage_bs_count(const Scenario& scenario);

double hexagon_cell_area_m2(double radius_m);

SizingReport compute_sizing(const Scenario& scenario);

}  // namespace mmplan
