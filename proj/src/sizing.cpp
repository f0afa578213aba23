#include "mmplan/sizing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmplan {

namespace {
// Guards ceil() against representation noise such as 600.0000000001 / 240.
constexpr double kCeilSlack = 1e-9;

long robust_ceil(double x) { return static_cast<long>(std::ceil(x - kCeilSlack)); }
}  // namespace

long users_per_bs(const CapacityParams& c) {
  const double total = static_cast<double>(c.n_sectors) * c.bw_sector_hz;
  const double per_user = static_cast<double>(c.rb_th) * c.bw_rb_hz;
  return static_cast<long>(std::floor(total / per_user + kCeilSlack));
}

std::pair<std::vector<long>, long> capacity_bs_counts(const Scenario& s, long per_bs) {
  if (per_bs < 1) throw std::invalid_argument("capacity_bs_counts: users_per_bs must be >= 1");
  std::vector<long> counts;
  long total = 0;
  for (const auto& sub : s.area.subareas) {
    const long n = std::max(0L, robust_ceil(sub.expected_users() / static_cast<double>(per_bs)));
    counts.push_back(n);
    total += n;
  }
  return {counts, total};
}

double hexagon_cell_area_m2(double radius_m) { return 1.5 * std::sqrt(3.0) * radius_m * radius_m; }

long coverage_bs_count(const Scenario& s) {
  return robust_ceil(s.area.bounds.area() / hexagon_cell_area_m2(s.capacity.cell_radius_m));
}

SizingReport compute_sizing(const Scenario& s) {
  SizingReport r;
  r.users_per_bs = users_per_bs(s.capacity);
  r.n_cov = coverage_bs_count(s);
  if (r.users_per_bs < 1) {
    r.feasible = false;
    r.per_subarea_bs.assign(s.area.subareas.size(), 0);
    r.n_init = r.n_cov;
    return r;
  }
  auto [per_subarea, n_cap] = capacity_bs_counts(s, r.users_per_bs);
  r.per_subarea_bs = std::move(per_subarea);
  r.n_cap = n_cap;
  r.n_init = std::max(r.n_cap, r.n_cov);
  return r;
}

}  // namespace mmplan
