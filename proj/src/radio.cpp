#include "mmplan/radio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "mmplan/units.hpp"

namespace mmplan {

double path_loss_exponent(LinkState state, LinkKind kind, const RadioParams& radio) {
  if (kind == LinkKind::Access) return state == LinkState::Los ? radio.beta_access_los : radio.beta_access_nlos;
  return state == LinkState::Los ? radio.beta_backhaul_los : radio.beta_backhaul_nlos;
}

double shadowing_sigma_db(LinkState state, LinkKind kind, const RadioParams& radio) {
  if (kind == LinkKind::Access) {
    return state == LinkState::Los ? radio.sigma_access_los_db : radio.sigma_access_nlos_db;
  }
  return state == LinkState::Los ? radio.sigma_backhaul_los_db : radio.sigma_backhaul_nlos_db;
}

double path_loss_db(double distance_m, LinkState state, LinkKind kind, const RadioParams& radio,
                    double shadowing_db) {
  const double d = std::max(distance_m, 1.0);
  return radio.alpha_db + 10.0 * path_loss_exponent(state, kind, radio) * std::log10(d) + shadowing_db;
}

double p_los(double distance_m, double a_los) { return std::exp(-a_los * distance_m); }

double noise_power_dbm(double bandwidth_hz, double noise_figure_db) {
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

LinkBudget access_budget(const RadioParams& radio, double distance_m, LinkState state, double interference_w) {
  LinkBudget b;
  b.tx_power_w = radio.p_a_w;
  b.tx_gain_dbi = radio.ag_bs_access_dbi;
  b.rx_gain_dbi = radio.ag_ue_dbi;
  b.distance_m = distance_m;
  b.kind = LinkKind::Access;
  b.state = state;
  b.external_interference_w = interference_w;
  return b;
}

LinkBudget backhaul_budget(const RadioParams& radio, double distance_m, LinkState state, double interference_w) {
  LinkBudget b;
  b.tx_power_w = radio.p_b_w;
  b.tx_gain_dbi = radio.ag_bs_backhaul_dbi;
  b.rx_gain_dbi = radio.ag_bs_backhaul_dbi;
  b.distance_m = distance_m;
  b.kind = LinkKind::Backhaul;
  b.state = state;
  b.self_interference_w = radio.tau * radio.p_a_w;
  b.external_interference_w = interference_w;
  return b;
}

double received_power_w(const LinkBudget& b, const RadioParams& radio) {
  const double pl_db = path_loss_db(b.distance_m, b.state, b.kind, radio, b.shadowing_db);
  return b.tx_power_w * units::db_to_linear(b.tx_gain_dbi + b.rx_gain_dbi - pl_db);
}

double sinr_access_linear(const LinkBudget& b, double noise_w, const RadioParams& radio) {
  return received_power_w(b, radio) / (noise_w + b.external_interference_w);
}

double sinr_backhaul_linear(const LinkBudget& b, double noise_w, const RadioParams& radio) {
  return received_power_w(b, radio) / (noise_w + b.self_interference_w + b.external_interference_w);
}

double coverage_probability(const MeanSinr& mean, double gamma_th_db, double sigma_los_db, double sigma_nlos_db) {
  // Shadowing enters the path loss, so SINR_dB = mean - zeta and
  // P(SINR_dB >= th) = Q((th - mean) / sigma).
  const auto tail = [gamma_th_db](double mean_db, double sigma) {
    if (sigma <= 0.0) return mean_db >= gamma_th_db ? 1.0 : 0.0;
    return q_function((gamma_th_db - mean_db) / sigma);
  };
  double p = 0.0;
  if (mean.p_los > 0.0) p += mean.p_los * tail(mean.los_db, sigma_los_db);
  if (mean.p_los < 1.0) p += (1.0 - mean.p_los) * tail(mean.nlos_db, sigma_nlos_db);
  return p;
}

LinkModel::LinkModel(const RadioParams& radio, LinkKind kind)
    : kind_(kind),
      alpha_db_(radio.alpha_db),
      beta_los_(path_loss_exponent(LinkState::Los, kind, radio)),
      beta_nlos_(path_loss_exponent(LinkState::Nlos, kind, radio)),
      sigma_los_(shadowing_sigma_db(LinkState::Los, kind, radio)),
      sigma_nlos_(shadowing_sigma_db(LinkState::Nlos, kind, radio)),
      a_los_(radio.a_los),
      noise_w_(units::dbm_to_watt(noise_power_dbm(radio.noise_bandwidth_hz, radio.noise_figure_db))) {
  if (kind == LinkKind::Access) {
    eirp_plus_rx_dbw_ = units::watt_to_dbw(radio.p_a_w) + radio.ag_bs_access_dbi + radio.ag_ue_dbi;
    self_interference_w_ = 0.0;
  } else {
    eirp_plus_rx_dbw_ = units::watt_to_dbw(radio.p_b_w) + 2.0 * radio.ag_bs_backhaul_dbi;
    self_interference_w_ = radio.tau * radio.p_a_w;
  }
}

MeanSinr LinkModel::mean_sinr(double distance_m, bool blocked, double interference_w) const {
  const double log_d = std::log10(std::max(distance_m, 1.0));
  const double floor_db = units::watt_to_dbw(noise_w_ + self_interference_w_ + interference_w);
  MeanSinr m;
  m.p_los = blocked ? 0.0 : p_los(distance_m, a_los_);
  m.los_db = eirp_plus_rx_dbw_ - (alpha_db_ + 10.0 * beta_los_ * log_d) - floor_db;
  m.nlos_db = eirp_plus_rx_dbw_ - (alpha_db_ + 10.0 * beta_nlos_ * log_d) - floor_db;
  return m;
}

double LinkModel::coverage(double distance_m, bool blocked, double gamma_th_db, double interference_w) const {
  return coverage_probability(mean_sinr(distance_m, blocked, interference_w), gamma_th_db, sigma_los_, sigma_nlos_);
}

double LinkModel::mean_path_loss_db(double distance_m, bool blocked) const {
  const double log_d = std::log10(std::max(distance_m, 1.0));
  const double p = blocked ? 0.0 : p_los(distance_m, a_los_);
  return alpha_db_ + 10.0 * (p * beta_los_ + (1.0 - p) * beta_nlos_) * log_d;
}

bool line_of_sight(Point p1, Point p2, const PixelGrid& grid) {
  auto [x0, y0] = grid.cell_of(p1);
  auto [x1, y1] = grid.cell_of(p2);
  if (std::pair(x1, y1) < std::pair(x0, y0)) {
    std::swap(x0, x1);
    std::swap(y0, y1);
  }
  const long dx = std::labs(x1 - x0);
  const long dy = -std::labs(y1 - y0);
  const long sx = x0 < x1 ? 1 : -1;
  const long sy = y0 < y1 ? 1 : -1;
  long err = dx + dy;
  while (true) {
    if (grid.cell_blocked(x0, y0)) return false;
    if (x0 == x1 && y0 == y1) return true;
    const long e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

}  // namespace mmplan
