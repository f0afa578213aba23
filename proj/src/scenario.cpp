#include "mmplan/scenario.hpp"

#include "mmplan/units.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace mmplan {

using nlohmann::json;

namespace {

constexpr double kAreaTolerance = 1e-6;

[[noreturn]] void invalid(const std::string& what) { throw ScenarioValidationError(what); }

Rect parse_rect(const json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 4) throw ScenarioParseError(where + ": rectangle array needs [x_min, x_max, y_min, y_max]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
  }
  if (!j.is_object()) throw ScenarioParseError(where + ": rectangle must be an object or array");
  return {j.at("x_min").get<double>(), j.at("x_max").get<double>(), j.at("y_min").get<double>(),
          j.at("y_max").get<double>()};
}

json rect_to_json(const Rect& r) {
  return {{"x_min", r.x_min}, {"x_max", r.x_max}, {"y_min", r.y_min}, {"y_max", r.y_max}};
}

Point parse_point(const json& j, const std::string& where) {
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object()) return {j.at("x").get<double>(), j.at("y").get<double>()};
  throw ScenarioParseError(where + ": point must be [x, y] or {\"x\", \"y\"}");
}

// Reads `section.key` into `target` when present, rejecting unknown keys.
class SectionReader {
 public:
  SectionReader(const json& doc, std::string name) : name_(std::move(name)) {
    if (doc.contains(name_)) {
      section_ = &doc.at(name_);
      if (!section_->is_object()) throw ScenarioParseError("section '" + name_ + "' must be an object");
    }
  }

  template <typename T>
  SectionReader& read(const char* key, T& target) {
    known_.insert(key);
    if (section_ != nullptr && section_->contains(key)) {
      try {
        target = section_->at(key).get<T>();
      } catch (const json::exception& e) {
        throw ScenarioParseError(name_ + "." + key + ": " + e.what());
      }
    }
    return *this;
  }

  void finish() const {
    if (section_ == nullptr) return;
    for (const auto& [key, value] : section_->items()) {
      if (!known_.contains(key)) throw ScenarioParseError("unknown key '" + name_ + "." + key + "'");
    }
  }

 private:
  std::string name_;
  const json* section_ = nullptr;
  std::set<std::string> known_;
};

DimPolicy parse_dim_policy(const std::string& s) {
  if (s == "min") return DimPolicy::MinDim;
  if (s == "max") return DimPolicy::MaxDim;
  throw ScenarioParseError("ga.dim_policy must be 'min' or 'max'");
}

ParentSelection parse_parent_selection(const std::string& s) {
  if (s == "uniform") return ParentSelection::Uniform;
  if (s == "tournament") return ParentSelection::Tournament;
  throw ScenarioParseError("ga.parent_selection must be 'uniform' or 'tournament'");
}

FiberAssignmentMode parse_fiber_assignment(const std::string& s) {
  if (s == "repair") return FiberAssignmentMode::Repair;
  if (s == "genetic") return FiberAssignmentMode::Genetic;
  throw ScenarioParseError("ga.fiber_assignment must be 'repair' or 'genetic'");
}

bool inside_any_obstacle(const std::vector<Rect>& obstacles, Point p) {
  return std::any_of(obstacles.begin(), obstacles.end(), [p](const Rect& r) { return r.strictly_contains(p); });
}

}  // namespace

double Subarea::area_m2() const {
  double a = region.area();
  for (const auto& h : holes) a -= h.area();
  return a;
}

double Subarea::area_km2() const { return area_m2() / units::kSquareMetersPerSquareKm; }

bool Subarea::contains(Point p) const {
  if (!region.contains(p)) return false;
  return std::none_of(holes.begin(), holes.end(), [p](const Rect& h) { return h.strictly_contains(p); });
}

double Subarea::expected_users() const {
  if (user_count) return static_cast<double>(*user_count);
  if (lambda_per_km2) return *lambda_per_km2 * area_km2();
  return 0.0;
}

std::size_t PixelGrid::included_count() const {
  return static_cast<std::size_t>(std::count(excluded.begin(), excluded.end(), false));
}

std::pair<long, long> PixelGrid::cell_of(Point p) const {
  auto ix = static_cast<long>(std::floor((p.x - bounds.x_min) / pixel_size_m));
  auto iy = static_cast<long>(std::floor((p.y - bounds.y_min) / pixel_size_m));
  ix = std::clamp(ix, 0L, static_cast<long>(nx) - 1);
  iy = std::clamp(iy, 0L, static_cast<long>(ny) - 1);
  return {ix, iy};
}

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) throw ScenarioParseError("scenario document must be an object");
  Scenario s;
  s.name = doc.value("name", std::string("unnamed"));

  try {
    const json& area = doc.at("area");
    s.area.bounds = parse_rect(area.at("bounds"), "area.bounds");
    s.area.central_office =
        area.contains("central_office") ? parse_point(area.at("central_office"), "area.central_office")
                                        : s.area.bounds.center();
    s.area.rng_seed = area.value("rng_seed", std::uint64_t{1});
    s.pixel_size_m = area.value("pixel_size_m", s.pixel_size_m);
    for (const auto& [key, value] : area.items()) {
      static const std::set<std::string> known{"bounds", "central_office", "rng_seed", "pixel_size_m"};
      if (!known.contains(key)) throw ScenarioParseError("unknown key 'area." + key + "'");
    }

    for (const auto& sj : doc.at("subareas")) {
      Subarea sub;
      sub.name = sj.value("name", std::string("subarea") + std::to_string(s.area.subareas.size() + 1));
      sub.region = parse_rect(sj.at("rect"), "subareas[].rect");
      if (sj.contains("holes")) {
        for (const auto& h : sj.at("holes")) sub.holes.push_back(parse_rect(h, "subareas[].holes"));
      }
      if (sj.contains("user_count")) sub.user_count = sj.at("user_count").get<long>();
      if (sj.contains("lambda_per_km2")) sub.lambda_per_km2 = sj.at("lambda_per_km2").get<double>();
      if (sj.contains("demand_bps")) sub.demand_bps = sj.at("demand_bps").get<double>();
      s.area.subareas.push_back(std::move(sub));
    }

    if (doc.contains("obstacles")) {
      for (const auto& o : doc.at("obstacles")) s.area.obstacles.push_back(parse_rect(o, "obstacles[]"));
    }

    if (doc.contains("faps")) {
      const json& faps = doc.at("faps");
      if (faps.is_array()) {
        for (const auto& f : faps) s.area.faps.push_back(parse_point(f, "faps[]"));
      } else if (faps.is_object() && faps.contains("random_count")) {
        // Pre-deployed FAPs scattered uniformly outside obstacles.
        const auto count = faps.at("random_count").get<long>();
        std::mt19937_64 rng(faps.value("seed", s.area.rng_seed));
        std::uniform_real_distribution<double> ux(s.area.bounds.x_min, s.area.bounds.x_max);
        std::uniform_real_distribution<double> uy(s.area.bounds.y_min, s.area.bounds.y_max);
        while (static_cast<long>(s.area.faps.size()) < count) {
          const Point p{ux(rng), uy(rng)};
          if (!inside_any_obstacle(s.area.obstacles, p)) s.area.faps.push_back(p);
        }
      } else {
        throw ScenarioParseError("faps must be a list of points or {\"random_count\": n, \"seed\": s}");
      }
    }
  } catch (const json::exception& e) {
    throw ScenarioParseError(std::string("malformed scenario: ") + e.what());
  }

  SectionReader radio(doc, "radio");
  auto& r = s.radio;
  radio.read("alpha_db", r.alpha_db)
      .read("beta_access_los", r.beta_access_los)
      .read("beta_access_nlos", r.beta_access_nlos)
      .read("beta_backhaul_los", r.beta_backhaul_los)
      .read("beta_backhaul_nlos", r.beta_backhaul_nlos)
      .read("sigma_access_los_db", r.sigma_access_los_db)
      .read("sigma_access_nlos_db", r.sigma_access_nlos_db)
      .read("sigma_backhaul_los_db", r.sigma_backhaul_los_db)
      .read("sigma_backhaul_nlos_db", r.sigma_backhaul_nlos_db)
      .read("a_los", r.a_los)
      .read("p_a_w", r.p_a_w)
      .read("p_b_w", r.p_b_w)
      .read("ag_bs_access_dbi", r.ag_bs_access_dbi)
      .read("ag_bs_backhaul_dbi", r.ag_bs_backhaul_dbi)
      .read("ag_ue_dbi", r.ag_ue_dbi)
      .read("noise_figure_db", r.noise_figure_db)
      .read("noise_bandwidth_hz", r.noise_bandwidth_hz)
      .read("tau", r.tau)
      .read("gamma_th_access_db", r.gamma_th_access_db)
      .read("gamma_th_backhaul_db", r.gamma_th_backhaul_db)
      .read("rho_th_access", r.rho_th_access)
      .read("rho_th_backhaul", r.rho_th_backhaul)
      .read("sidelobe_gain_dbi", r.sidelobe_gain_dbi)
      .read("h_ue_m", r.h_ue_m)
      .read("h_bs_m", r.h_bs_m)
      .finish();

  SectionReader cap(doc, "capacity");
  auto& c = s.capacity;
  cap.read("n_sectors", c.n_sectors)
      .read("bw_sector_hz", c.bw_sector_hz)
      .read("bw_rb_hz", c.bw_rb_hz)
      .read("rb_th", c.rb_th)
      .read("r_demand_bps", c.r_demand_bps)
      .read("n_lim", c.n_lim)
      .read("delta_cov", c.delta_cov)
      .read("delta_cap", c.delta_cap)
      .read("cell_radius_m", c.cell_radius_m)
      .finish();

  SectionReader costs(doc, "costs");
  auto& k = s.costs;
  costs.read("c_w", k.c_w)
      .read("c_u", k.c_u)
      .read("c_s", k.c_s)
      .read("c_f", k.c_f)
      .read("c_d", k.c_d)
      .read("splitter_capacity", k.splitter_capacity)
      .finish();

  SectionReader ga(doc, "ga");
  auto& g = s.ga;
  std::string dim_policy = g.dim_policy == DimPolicy::MinDim ? "min" : "max";
  std::string parent_selection = "uniform";
  std::string fiber_assignment = "repair";
  ga.read("n_pop", g.n_pop)
      .read("n_iterations", g.n_iterations)
      .read("epsilon", g.epsilon)
      .read("mutation_rate", g.mutation_rate)
      .read("crossover_pool_fraction", g.crossover_pool_fraction)
      .read("mutation_pool_fraction", g.mutation_pool_fraction)
      .read("dim_policy", dim_policy)
      .read("structural_mutation_prob", g.structural_mutation_prob)
      .read("parent_selection", parent_selection)
      .read("fiber_assignment", fiber_assignment)
      .finish();
  g.dim_policy = parse_dim_policy(dim_policy);
  g.parent_selection = parse_parent_selection(parent_selection);
  g.fiber_assignment = parse_fiber_assignment(fiber_assignment);

  SectionReader penalty(doc, "penalty");
  penalty.read("sigma_inequality", s.penalty.sigma_inequality)
      .read("sigma_equality", s.penalty.sigma_equality)
      .finish();

  s.omega = doc.value("omega", s.omega);

  for (const auto& [key, value] : doc.items()) {
    static const std::set<std::string> known{"name",  "area",  "subareas", "obstacles", "faps",   "radio",
                                             "capacity", "costs", "ga",       "penalty",   "omega"};
    if (!known.contains(key)) throw ScenarioParseError("unknown top-level key '" + key + "'");
  }

  validate_scenario(s);

  for (const auto& sub : s.area.subareas) {
    if (sub.user_count && sub.lambda_per_km2) {
      const double implied = *sub.lambda_per_km2 * sub.area_km2();
      const double count = static_cast<double>(*sub.user_count);
      if (std::abs(implied - count) > std::max(1.0, 0.01 * count)) {
        std::ostringstream msg;
        msg << "subarea '" << sub.name << "': lambda*area = " << implied << " disagrees with user_count = "
            << *sub.user_count << "; user_count is used";
        s.warnings.push_back(msg.str());
      }
    }
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError("cannot open scenario file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ScenarioParseError("'" + path.string() + "': " + e.what());
  }
  return parse_scenario(doc);
}

json scenario_to_json(const Scenario& s) {
  json doc;
  doc["name"] = s.name;
  doc["area"] = {{"bounds", rect_to_json(s.area.bounds)},
                 {"central_office", {s.area.central_office.x, s.area.central_office.y}},
                 {"rng_seed", s.area.rng_seed},
                 {"pixel_size_m", s.pixel_size_m}};
  doc["subareas"] = json::array();
  for (const auto& sub : s.area.subareas) {
    json sj{{"name", sub.name}, {"rect", rect_to_json(sub.region)}};
    if (!sub.holes.empty()) {
      sj["holes"] = json::array();
      for (const auto& h : sub.holes) sj["holes"].push_back(rect_to_json(h));
    }
    if (sub.user_count) sj["user_count"] = *sub.user_count;
    if (sub.lambda_per_km2) sj["lambda_per_km2"] = *sub.lambda_per_km2;
    if (sub.demand_bps) sj["demand_bps"] = *sub.demand_bps;
    doc["subareas"].push_back(sj);
  }
  doc["obstacles"] = json::array();
  for (const auto& o : s.area.obstacles) doc["obstacles"].push_back(rect_to_json(o));
  doc["faps"] = json::array();
  for (const auto& f : s.area.faps) doc["faps"].push_back({f.x, f.y});
  const auto& r = s.radio;
  doc["radio"] = {{"alpha_db", r.alpha_db},
                  {"beta_access_los", r.beta_access_los},
                  {"beta_access_nlos", r.beta_access_nlos},
                  {"beta_backhaul_los", r.beta_backhaul_los},
                  {"beta_backhaul_nlos", r.beta_backhaul_nlos},
                  {"sigma_access_los_db", r.sigma_access_los_db},
                  {"sigma_access_nlos_db", r.sigma_access_nlos_db},
                  {"sigma_backhaul_los_db", r.sigma_backhaul_los_db},
                  {"sigma_backhaul_nlos_db", r.sigma_backhaul_nlos_db},
                  {"a_los", r.a_los},
                  {"p_a_w", r.p_a_w},
                  {"p_b_w", r.p_b_w},
                  {"ag_bs_access_dbi", r.ag_bs_access_dbi},
                  {"ag_bs_backhaul_dbi", r.ag_bs_backhaul_dbi},
                  {"ag_ue_dbi", r.ag_ue_dbi},
                  {"noise_figure_db", r.noise_figure_db},
                  {"noise_bandwidth_hz", r.noise_bandwidth_hz},
                  {"tau", r.tau},
                  {"gamma_th_access_db", r.gamma_th_access_db},
                  {"gamma_th_backhaul_db", r.gamma_th_backhaul_db},
                  {"rho_th_access", r.rho_th_access},
                  {"rho_th_backhaul", r.rho_th_backhaul},
                  {"sidelobe_gain_dbi", r.sidelobe_gain_dbi},
                  {"h_ue_m", r.h_ue_m},
                  {"h_bs_m", r.h_bs_m}};
  const auto& c = s.capacity;
  doc["capacity"] = {{"n_sectors", c.n_sectors},     {"bw_sector_hz", c.bw_sector_hz},
                     {"bw_rb_hz", c.bw_rb_hz},       {"rb_th", c.rb_th},
                     {"r_demand_bps", c.r_demand_bps}, {"n_lim", c.n_lim},
                     {"delta_cov", c.delta_cov},     {"delta_cap", c.delta_cap},
                     {"cell_radius_m", c.cell_radius_m}};
  const auto& k = s.costs;
  doc["costs"] = {{"c_w", k.c_w}, {"c_u", k.c_u}, {"c_s", k.c_s},
                  {"c_f", k.c_f}, {"c_d", k.c_d}, {"splitter_capacity", k.splitter_capacity}};
  const auto& g = s.ga;
  doc["ga"] = {{"n_pop", g.n_pop},
               {"n_iterations", g.n_iterations},
               {"epsilon", g.epsilon},
               {"mutation_rate", g.mutation_rate},
               {"crossover_pool_fraction", g.crossover_pool_fraction},
               {"mutation_pool_fraction", g.mutation_pool_fraction},
               {"dim_policy", g.dim_policy == DimPolicy::MinDim ? "min" : "max"},
               {"structural_mutation_prob", g.structural_mutation_prob},
               {"parent_selection", g.parent_selection == ParentSelection::Uniform ? "uniform" : "tournament"},
               {"fiber_assignment", g.fiber_assignment == FiberAssignmentMode::Repair ? "repair" : "genetic"}};
  doc["penalty"] = {{"sigma_inequality", s.penalty.sigma_inequality},
                    {"sigma_equality", s.penalty.sigma_equality}};
  doc["omega"] = s.omega;
  return doc;
}

void validate_scenario(const Scenario& s) {
  const Rect& b = s.area.bounds;
  if (!b.valid()) invalid("area.bounds must have x_max > x_min and y_max > y_min");

  double covered = 0.0;
  for (std::size_t i = 0; i < s.area.subareas.size(); ++i) {
    const Subarea& sub = s.area.subareas[i];
    const std::string tag = "subarea '" + sub.name + "'";
    if (!sub.region.valid()) invalid(tag + " has an empty rectangle");
    if (!b.contains(sub.region)) invalid(tag + " is not contained in the area bounds");
    for (const auto& h : sub.holes) {
      if (!h.valid() || !sub.region.contains(h)) invalid(tag + " has a hole outside its rectangle");
    }
    if (!sub.user_count && !sub.lambda_per_km2) invalid(tag + " needs user_count or lambda_per_km2");
    if (sub.user_count && *sub.user_count < 0) invalid(tag + " has negative user_count");
    if (sub.lambda_per_km2 && *sub.lambda_per_km2 < 0.0) invalid(tag + " has negative lambda");
    if (sub.demand_bps && *sub.demand_bps < 0.0) invalid(tag + " has negative demand");
    if (sub.area_m2() <= 0.0) invalid(tag + " has no area left after holes");
    covered += sub.area_m2();

    for (std::size_t j = 0; j < i; ++j) {
      const Subarea& other = s.area.subareas[j];
      const Rect overlap = intersection(sub.region, other.region);
      if (!overlap.valid()) continue;
      const auto in_hole = [&overlap](const Subarea& a) {
        return std::any_of(a.holes.begin(), a.holes.end(), [&overlap](const Rect& h) { return h.contains(overlap); });
      };
      if (!in_hole(sub) && !in_hole(other)) {
        invalid("subareas '" + other.name + "' and '" + sub.name + "' overlap");
      }
    }
  }
  if (covered > b.area() * (1.0 + kAreaTolerance)) invalid("total subarea area exceeds the area bounds");

  for (const auto& o : s.area.obstacles) {
    if (!o.valid() || !b.contains(o)) invalid("every obstacle must be a non-empty rectangle inside the bounds");
  }
  for (const auto& f : s.area.faps) {
    if (!b.contains(f)) invalid("every FAP must lie inside the bounds");
  }
  if (!b.contains(s.area.central_office)) invalid("central office must lie inside the bounds");

  const auto& r = s.radio;
  if (r.tau < 0.0 || r.tau > 1.0) invalid("radio.tau must lie in [0, 1]");
  if (!(r.rho_th_access > 0.0 && r.rho_th_access < 1.0)) invalid("radio.rho_th_access must lie in (0, 1)");
  if (!(r.rho_th_backhaul > 0.0 && r.rho_th_backhaul < 1.0)) invalid("radio.rho_th_backhaul must lie in (0, 1)");
  if (r.p_a_w <= 0.0 || r.p_b_w <= 0.0) invalid("radio transmit powers must be positive");
  if (r.a_los < 0.0) invalid("radio.a_los must be nonnegative");
  if (r.noise_bandwidth_hz <= 0.0) invalid("radio.noise_bandwidth_hz must be positive");
  for (double sigma : {r.sigma_access_los_db, r.sigma_access_nlos_db, r.sigma_backhaul_los_db,
                       r.sigma_backhaul_nlos_db}) {
    if (sigma < 0.0) invalid("radio shadowing deviations must be nonnegative");
  }

  const auto& c = s.capacity;
  if (c.n_sectors < 1) invalid("capacity.n_sectors must be >= 1");
  if (c.bw_sector_hz <= 0.0 || c.bw_rb_hz <= 0.0) invalid("capacity bandwidths must be positive");
  if (c.rb_th < 1) invalid("capacity.rb_th must be >= 1");
  if (c.r_demand_bps < 0.0) invalid("capacity.r_demand_bps must be nonnegative");
  if (c.n_lim < 0) invalid("capacity.n_lim must be nonnegative");
  if (!(c.delta_cov > 0.0 && c.delta_cov <= 1.0)) invalid("capacity.delta_cov must lie in (0, 1]");
  if (!(c.delta_cap > 0.0 && c.delta_cap <= 1.0)) invalid("capacity.delta_cap must lie in (0, 1]");
  if (c.cell_radius_m <= 0.0) invalid("capacity.cell_radius_m must be positive");

  const auto& k = s.costs;
  if (k.c_w < 0 || k.c_u < 0 || k.c_s < 0 || k.c_f < 0 || k.c_d < 0) invalid("costs must be nonnegative");
  if (k.splitter_capacity < 1) invalid("costs.splitter_capacity must be >= 1");

  const auto& g = s.ga;
  if (g.n_pop < 2) invalid("ga.n_pop must be >= 2");
  if (g.n_iterations < 0) invalid("ga.n_iterations must be nonnegative");
  if (g.epsilon < 0.0 || g.mutation_rate < 0.0) invalid("ga.epsilon and ga.mutation_rate must be nonnegative");
  for (double f : {g.crossover_pool_fraction, g.mutation_pool_fraction}) {
    if (!(f > 0.0 && f <= 1.0)) invalid("ga pool fractions must lie in (0, 1]");
  }
  if (g.structural_mutation_prob < 0.0 || g.structural_mutation_prob > 1.0) {
    invalid("ga.structural_mutation_prob must lie in [0, 1]");
  }
  if (s.penalty.sigma_inequality < 0.0 || s.penalty.sigma_equality < 0.0) invalid("penalty sigmas must be >= 0");
  if (s.pixel_size_m <= 0.0) invalid("area.pixel_size_m must be positive");
}

UserSet sample_users(const Scenario& s, std::uint64_t seed) {
  constexpr long kMaxAttemptsPerUser = 100000;
  std::mt19937_64 rng(seed);
  UserSet users;
  for (std::size_t i = 0; i < s.area.subareas.size(); ++i) {
    const Subarea& sub = s.area.subareas[i];
    long count = 0;
    if (sub.user_count) {
      count = *sub.user_count;
    } else {
      const double mean = sub.lambda_per_km2.value_or(0.0) * sub.area_km2();
      if (mean > 0.0) count = std::poisson_distribution<long>(mean)(rng);
    }
    std::uniform_real_distribution<double> ux(sub.region.x_min, sub.region.x_max);
    std::uniform_real_distribution<double> uy(sub.region.y_min, sub.region.y_max);
    const double demand = sub.demand_bps.value_or(s.capacity.r_demand_bps);
    for (long n = 0; n < count; ++n) {
      long attempts = 0;
      Point p{ux(rng), uy(rng)};
      while (!sub.contains(p) || inside_any_obstacle(s.area.obstacles, p)) {
        if (++attempts > kMaxAttemptsPerUser) {
          throw ScenarioValidationError("subarea '" + sub.name + "' has no free space for users");
        }
        p = {ux(rng), uy(rng)};
      }
      users.positions.push_back(p);
      users.demands.push_back(demand);
      users.subarea.push_back(i);
    }
  }
  return users;
}

PixelGrid build_pixel_grid(const Scenario& s, double pixel_size_m) {
  if (!(pixel_size_m > 0.0)) throw ScenarioValidationError("pixel size must be positive");
  const Rect& b = s.area.bounds;
  PixelGrid grid;
  grid.bounds = b;
  grid.pixel_size_m = pixel_size_m;
  // Trailing partial rows/columns are dropped.
  grid.nx = static_cast<std::size_t>(std::floor(b.width() / pixel_size_m + 1e-9));
  grid.ny = static_cast<std::size_t>(std::floor(b.height() / pixel_size_m + 1e-9));
  if (grid.nx == 0 || grid.ny == 0) throw ScenarioValidationError("pixel size larger than the area extent");
  grid.centers.reserve(grid.nx * grid.ny);
  grid.excluded.reserve(grid.nx * grid.ny);
  for (std::size_t iy = 0; iy < grid.ny; ++iy) {
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const Point c{b.x_min + (static_cast<double>(ix) + 0.5) * pixel_size_m,
                    b.y_min + (static_cast<double>(iy) + 0.5) * pixel_size_m};
      grid.centers.push_back(c);
      grid.excluded.push_back(inside_any_obstacle(s.area.obstacles, c));
    }
  }
  return grid;
}

}  // namespace mmplan
