#pragma once

#include "mmplan/geometry.hpp"
#include "mmplan/scenario.hpp"

namespace mmplan {

enum class LinkState { Los, Nlos };
enum class LinkKind { Access, Backhaul };

/// Close-in path loss in dB; distances below 1 m are clamped to 1 m.
double path_loss_db(double distance_m, LinkState state, LinkKind kind, const RadioParams& radio,
                    double shadowing_db = 0.0);

double path_loss_exponent(LinkState state, LinkKind kind, const RadioParams& radio);
double shadowing_sigma_db(LinkState state, LinkKind kind, const RadioParams& radio);

/// Probability that a link of the given length is line-of-sight.
double p_los(double distance_m, double a_los);

/// Thermal noise over a bandwidth: -174 dBm/Hz + 10 log10(BW) + NF.
double noise_power_dbm(double bandwidth_hz, double noise_figure_db);

/// Standard normal upper tail.
double q_function(double x);

struct LinkBudget {
  double tx_power_w = 0.0;
  double tx_gain_dbi = 0.0;
  double rx_gain_dbi = 0.0;
  double distance_m = 1.0;
  LinkKind kind = LinkKind::Access;
  LinkState state = LinkState::Los;
  double self_interference_w = 0.0;
  double external_interference_w = 0.0;
  double shadowing_db = 0.0;
};

LinkBudget access_budget(const RadioParams& radio, double distance_m, LinkState state,
                         double interference_w = 0.0);
LinkBudget backhaul_budget(const RadioParams& radio, double distance_m, LinkState state,
                           double interference_w = 0.0);

double received_power_w(const LinkBudget& budget, const RadioParams& radio);
double sinr_access_linear(const LinkBudget& budget, double noise_w, const RadioParams& radio);
double sinr_backhaul_linear(const LinkBudget& budget, double noise_w, const RadioParams& radio);

/// Mean (shadowing-free) SINR per link state plus the state mixture weight.
struct MeanSinr {
  double p_los = 1.0;  // already 0 when the link is blocked by an obstacle
  double los_db = 0.0;
  double nlos_db = 0.0;

  /// p_los-weighted mean of the per-state dB values.
  double mixture_db() const { return p_los * los_db + (1.0 - p_los) * nlos_db; }
};

/// P(SINR >= threshold) over lognormal shadowing and the LOS/NLOS mixture.
double coverage_probability(const MeanSinr& mean, double gamma_th_db, double sigma_los_db, double sigma_nlos_db);

/// Precomputed link constants for one link kind.
class LinkModel {
 public:
  LinkModel(const RadioParams& radio, LinkKind kind);

  /// Mean SINR at a distance; `blocked` forces the NLOS state.
  MeanSinr mean_sinr(double distance_m, bool blocked, double interference_w = 0.0) const;
  double coverage(double distance_m, bool blocked, double gamma_th_db, double interference_w = 0.0) const;

  /// Mean-mixture path loss (dB) used for interfering links.
  double mean_path_loss_db(double distance_m, bool blocked) const;

  double noise_w() const { return noise_w_; }
  double floor_w() const { return noise_w_ + self_interference_w_; }
  LinkKind kind() const { return kind_; }
  double sigma_los() const { return sigma_los_; }
  double sigma_nlos() const { return sigma_nlos_; }

 private:
  LinkKind kind_;
  double eirp_plus_rx_dbw_;  // tx power + both antenna gains
  double alpha_db_;
  double beta_los_;
  double beta_nlos_;
  double sigma_los_;
  double sigma_nlos_;
  double a_los_;
  double noise_w_;
  double self_interference_w_;
};

/// True when the Bresenham trace between the cells of p1 and p2 touches no
/// obstacle cell. Symmetric: endpoints are put in canonical order first.
bool line_of_sight(Point p1, Point p2, const PixelGrid& grid);

}  // namespace mmplan
