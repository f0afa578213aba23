#include "mmplan/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mmplan/units.hpp"

namespace mmplan {

namespace {

constexpr double kBudgetSlackHz = 1e-6;

double interference_w(Point at, std::span<const Point> transmitters, std::size_t skip_a, std::size_t skip_b,
                      const LinkModel& model, double tx_power_w, double gains_db, const PixelGrid* blockage_grid) {
  double total = 0.0;
  for (std::size_t k = 0; k < transmitters.size(); ++k) {
    if (k == skip_a || k == skip_b) continue;
    const bool blocked = blockage_grid != nullptr && !line_of_sight(at, transmitters[k], *blockage_grid);
    const double pl_db = model.mean_path_loss_db(distance(at, transmitters[k]), blocked);
    total += tx_power_w * units::db_to_linear(gains_db - pl_db);
  }
  return total;
}

std::vector<Point> all_positions(const Deployment& d) {
  std::vector<Point> p(d.wbs);
  p.insert(p.end(), d.ubs.begin(), d.ubs.end());
  return p;
}

}  // namespace

std::vector<std::size_t> nearest_candidates(std::span<const Point> points, std::span<const Point> candidates,
                                            const PixelGrid* blockage_grid) {
  std::vector<std::size_t> out(points.size(), kNone);
  if (candidates.empty()) return out;
  std::vector<bool> rejected(candidates.size());
  for (std::size_t n = 0; n < points.size(); ++n) {
    const Point p = points[n];
    std::fill(rejected.begin(), rejected.end(), false);
    while (true) {
      std::size_t best = kNone;
      double best_d2 = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (rejected[k]) continue;
        const double d2 = squared_distance(p, candidates[k]);
        if (d2 < best_d2) {
          best_d2 = d2;
          best = k;
        }
      }
      if (best == kNone) break;
      if (blockage_grid == nullptr || line_of_sight(p, candidates[best], *blockage_grid)) {
        out[n] = best;
        break;
      }
      rejected[best] = true;
    }
  }
  return out;
}

Association associate(const Deployment& deployment, std::span<const Point> users, const PixelGrid& grid,
                      bool blockage_mode) {
  const PixelGrid* blockage = blockage_mode ? &grid : nullptr;
  const std::vector<Point> bs = all_positions(deployment);

  Association a;
  a.user_to_bs = nearest_candidates(users, bs, blockage);

  std::vector<Point> pixel_points;
  std::vector<std::size_t> pixel_ids;
  pixel_points.reserve(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    if (grid.excluded[p]) continue;
    pixel_points.push_back(grid.centers[p]);
    pixel_ids.push_back(p);
  }
  const auto pixel_nearest = nearest_candidates(pixel_points, bs, blockage);
  a.pixel_to_bs.assign(grid.size(), kNone);
  for (std::size_t i = 0; i < pixel_ids.size(); ++i) a.pixel_to_bs[pixel_ids[i]] = pixel_nearest[i];

  a.ubs_to_wbs = nearest_candidates(deployment.ubs, deployment.wbs, blockage);
  return a;
}

CoverageIndicators coverage_indicators(const Deployment& deployment, const Association& association,
                                       std::span<const Point> users, const PixelGrid& grid, const RadioParams& radio,
                                       const EvalSettings& settings) {
  const LinkModel access(radio, LinkKind::Access);
  const LinkModel backhaul(radio, LinkKind::Backhaul);
  const std::vector<Point> bs = all_positions(deployment);
  const bool with_interference = settings.interference == InterferenceMode::Interference;
  const PixelGrid* blockage = settings.blockage ? &grid : nullptr;
  const double sidelobe_pair_db = 2.0 * radio.sidelobe_gain_dbi;

  const auto access_sinr = [&](Point at, std::size_t serving, double& snr_db) {
    const double d = distance(at, bs[serving]);
    double interference = 0.0;
    if (with_interference) {
      interference = interference_w(at, bs, serving, kNone, access, radio.p_a_w, sidelobe_pair_db, blockage);
    }
    const MeanSinr m = access.mean_sinr(d, false, interference);
    snr_db = with_interference ? access.mean_sinr(d, false, 0.0).mixture_db() : m.mixture_db();
    return m;
  };

  CoverageIndicators c;
  const std::size_t n_users = users.size();
  c.user.assign(n_users, false);
  c.user_sinr_db.assign(n_users, -std::numeric_limits<double>::infinity());
  c.user_snr_db.assign(n_users, -std::numeric_limits<double>::infinity());
  for (std::size_t n = 0; n < n_users; ++n) {
    const std::size_t b = association.user_to_bs[n];
    if (b == kNone) continue;
    const MeanSinr m = access_sinr(users[n], b, c.user_snr_db[n]);
    c.user_sinr_db[n] = m.mixture_db();
    c.user[n] = coverage_probability(m, radio.gamma_th_access_db, access.sigma_los(), access.sigma_nlos()) >=
                radio.rho_th_access;
  }

  c.pixel.assign(grid.size(), false);
  c.pixel_included.assign(grid.size(), false);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const std::size_t b = association.pixel_to_bs[p];
    if (b == kNone) continue;  // inside an obstacle, or unreachable by every BS under blockage
    c.pixel_included[p] = true;
    double snr_unused = 0.0;
    const MeanSinr m = access_sinr(grid.centers[p], b, snr_unused);
    c.pixel[p] = coverage_probability(m, radio.gamma_th_access_db, access.sigma_los(), access.sigma_nlos()) >=
                 radio.rho_th_access;
  }

  const std::size_t n_w = deployment.wbs.size();
  c.backhaul.assign(deployment.ubs.size(), false);
  c.backhaul_sinr_db.assign(deployment.ubs.size(), -std::numeric_limits<double>::infinity());
  for (std::size_t u = 0; u < deployment.ubs.size(); ++u) {
    const std::size_t w = association.ubs_to_wbs[u];
    if (w == kNone) continue;
    const Point at = deployment.ubs[u];
    double interference = 0.0;
    if (with_interference) {
      interference = interference_w(at, bs, w, n_w + u, backhaul, radio.p_a_w, sidelobe_pair_db, blockage);
    }
    const MeanSinr m = backhaul.mean_sinr(distance(at, deployment.wbs[w]), false, interference);
    c.backhaul_sinr_db[u] = m.mixture_db();
    c.backhaul[u] = coverage_probability(m, radio.gamma_th_backhaul_db, backhaul.sigma_los(),
                                         backhaul.sigma_nlos()) >= radio.rho_th_backhaul;
  }
  return c;
}

double required_bandwidth_hz(double demand_bps, double sinr_db, const CapacityParams& capacity) {
  const double floor_hz = static_cast<double>(capacity.rb_th) * capacity.bw_rb_hz;
  const double spectral_eff = std::log2(1.0 + units::db_to_linear(sinr_db));
  if (demand_bps <= 0.0) return floor_hz;
  if (!(spectral_eff > 0.0)) return std::numeric_limits<double>::infinity();
  double rbs = std::ceil(demand_bps / (capacity.bw_rb_hz * spectral_eff));
  while (rbs * capacity.bw_rb_hz * spectral_eff < demand_bps) rbs += 1.0;
  return std::max(floor_hz, rbs * capacity.bw_rb_hz);
}

BandwidthAllocation allocate_bandwidth(const Deployment& deployment, const Association& association,
                                       const CoverageIndicators& coverage, const UserSet& users,
                                       const CapacityParams& capacity) {
  const std::size_t n_users = users.size();
  const std::size_t n_w = deployment.wbs.size();
  const double budget = capacity.bs_budget_hz();

  BandwidthAllocation out;
  out.bw_hz.assign(n_users, 0.0);
  out.rate_bps.assign(n_users, 0.0);
  out.access_load_hz.assign(deployment.size(), 0.0);
  out.relay_load_hz.assign(n_w, 0.0);

  // Group covered users by the W-BS whose budget ultimately carries them.
  struct Candidate {
    double required;
    std::size_t user;
    std::size_t bs;
  };
  std::vector<std::vector<Candidate>> groups(n_w);
  for (std::size_t n = 0; n < n_users; ++n) {
    const std::size_t b = association.user_to_bs[n];
    if (b == kNone || !coverage.user[n]) continue;
    std::size_t group = b;
    if (!deployment.is_wbs(b)) {
      const std::size_t u = b - n_w;
      if (association.ubs_to_wbs[u] == kNone || !coverage.backhaul[u]) continue;
      group = association.ubs_to_wbs[u];
    }
    const double req = required_bandwidth_hz(users.demands[n], coverage.user_sinr_db[n], capacity);
    if (std::isfinite(req)) groups[group].push_back({req, n, b});
  }

  for (std::size_t w = 0; w < n_w; ++w) {
    auto& g = groups[w];
    std::sort(g.begin(), g.end(), [](const Candidate& a, const Candidate& b) {
      return a.required < b.required || (a.required == b.required && a.user < b.user);
    });
    double group_used = 0.0;
    for (const Candidate& cand : g) {
      if (group_used + cand.required > budget + kBudgetSlackHz) continue;
      if (cand.bs != w && out.access_load_hz[cand.bs] + cand.required > budget + kBudgetSlackHz) continue;
      group_used += cand.required;
      out.access_load_hz[cand.bs] += cand.required;
      if (cand.bs != w) out.relay_load_hz[w] += cand.required;
      out.bw_hz[cand.user] = cand.required;
    }
  }

  for (std::size_t n = 0; n < n_users; ++n) {
    if (out.bw_hz[n] > 0.0) {
      out.rate_bps[n] = out.bw_hz[n] * std::log2(1.0 + units::db_to_linear(coverage.user_sinr_db[n]));
    }
  }
  return out;
}

long objective_f1(std::span<const double> rates, std::span<const double> demands) {
  long unsatisfied = 0;
  for (std::size_t n = 0; n < rates.size(); ++n) {
    if (rates[n] < demands[n]) ++unsatisfied;
  }
  return unsatisfied;
}

double objective_f2(const Deployment& d, const CostParams& costs) {
  return static_cast<double>(d.wbs.size()) * costs.c_w + static_cast<double>(d.ubs.size()) * costs.c_u;
}

std::vector<Violation> evaluate_constraints(const Deployment& deployment, const Association& association,
                                            const CoverageIndicators& coverage, const BandwidthAllocation& allocation,
                                            const CapacityParams& capacity, std::size_t n_users) {
  const std::size_t n_w = deployment.wbs.size();
  const double budget = capacity.bs_budget_hz();
  std::vector<Violation> v;

  // Pixel coverage: sum of covered pixels >= delta_cov |P|.
  {
    const auto included = static_cast<double>(
        std::count(coverage.pixel_included.begin(), coverage.pixel_included.end(), true));
    double covered = 0.0;
    for (std::size_t p = 0; p < coverage.pixel.size(); ++p) covered += coverage.pixel[p] ? 1.0 : 0.0;
    const double target = capacity.delta_cov * included;
    Violation x{"pixel_coverage", ConstraintKind::Inequality};
    x.magnitude = std::max(target - covered, 0.0);
    x.relative = target > 0.0 ? std::max(1.0 - covered / target, 0.0) : 0.0;
    v.push_back(x);
  }

  // Every U-BS backhauled by exactly one W-BS.
  std::vector<long> fanout(n_w, 0);
  {
    Violation x{"ubs_backhaul", ConstraintKind::Equality};
    for (std::size_t u = 0; u < deployment.ubs.size(); ++u) {
      const bool linked = association.ubs_to_wbs[u] != kNone && coverage.backhaul[u];
      if (linked) ++fanout[association.ubs_to_wbs[u]];
      x.magnitude += linked ? 0.0 : 1.0;
    }
    x.relative = x.magnitude;
    v.push_back(x);
  }

  // W-BS fan-out <= N_lim.
  {
    Violation x{"wbs_fanout", ConstraintKind::Inequality};
    for (long load : fanout) {
      const double excess = std::max(static_cast<double>(load - capacity.n_lim), 0.0);
      x.magnitude += excess;
      x.relative += capacity.n_lim > 0 ? excess / capacity.n_lim : excess;
    }
    v.push_back(x);
  }

  // U-BS access budget.
  {
    Violation x{"ubs_capacity", ConstraintKind::Inequality};
    for (std::size_t u = 0; u < deployment.ubs.size(); ++u) {
      const double excess = std::max(allocation.access_load_hz[n_w + u] - budget, 0.0);
      x.magnitude += excess;
      x.relative += excess / budget;
    }
    v.push_back(x);
  }

  // W-BS access + relayed backhaul budget.
  {
    Violation x{"wbs_capacity", ConstraintKind::Inequality};
    for (std::size_t w = 0; w < n_w; ++w) {
      const double excess = std::max(allocation.access_load_hz[w] + allocation.relay_load_hz[w] - budget, 0.0);
      x.magnitude += excess;
      x.relative += excess / budget;
    }
    v.push_back(x);
  }

  // Served users >= delta_cap |N|.
  {
    const auto served = static_cast<double>(
        std::count_if(allocation.bw_hz.begin(), allocation.bw_hz.end(), [](double bw) { return bw > 0.0; }));
    const double target = capacity.delta_cap * static_cast<double>(n_users);
    Violation x{"capacity_coverage", ConstraintKind::Inequality};
    x.magnitude = std::max(target - served, 0.0);
    x.relative = target > 0.0 ? std::max(1.0 - served / target, 0.0) : 0.0;
    v.push_back(x);
  }
  return v;
}

double penalty_term(std::span<const Violation> violations, const PenaltyConfig& config) {
  double p = 0.0;
  for (const auto& x : violations) {
    p += (x.kind == ConstraintKind::Inequality ? config.sigma_inequality : config.sigma_equality) * x.relative;
  }
  return p;
}

std::vector<double> penalize(std::span<const double> objectives, std::span<const Violation> violations,
                             const PenaltyConfig& config) {
  const double p = penalty_term(violations, config);
  std::vector<double> out(objectives.begin(), objectives.end());
  for (double& f : out) f += p;
  return out;
}

long EvaluationReport::served_users() const {
  return std::count_if(allocation.bw_hz.begin(), allocation.bw_hz.end(), [](double bw) { return bw > 0.0; });
}

Evaluator::Evaluator(Scenario scenario, UserSet users, PixelGrid grid, EvalSettings settings)
    : scenario_(std::move(scenario)), users_(std::move(users)), grid_(std::move(grid)), settings_(settings) {}

EvaluationReport Evaluator::evaluate(const Deployment& deployment) const {
  EvaluationReport r;
  r.association = associate(deployment, users_.positions, grid_, settings_.blockage);
  r.coverage =
      coverage_indicators(deployment, r.association, users_.positions, grid_, scenario_.radio, settings_);
  r.allocation = allocate_bandwidth(deployment, r.association, r.coverage, users_, scenario_.capacity);
  r.objectives.f1 = objective_f1(r.allocation.rate_bps, users_.demands);
  r.objectives.f2 = objective_f2(deployment, scenario_.costs);
  r.violations = evaluate_constraints(deployment, r.association, r.coverage, r.allocation, scenario_.capacity,
                                      users_.size());
  finalize(r, false);
  return r;
}

void Evaluator::finalize(EvaluationReport& r, bool joint) const {
  const std::vector<double> raw{static_cast<double>(r.objectives.f1),
                                joint ? r.objectives.f2 + r.objectives.f3 : r.objectives.f2};
  r.penalty = penalty_term(r.violations, scenario_.penalty);
  r.penalized = penalize(raw, r.violations, scenario_.penalty);
}

}  // namespace mmplan
