// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmplan/backhaul.hpp"
#include "mmplan/cli.hpp"
#include "mmplan/eval.hpp"
#include "mmplan/optimizer.hpp"
#include "mmplan/radio.hpp"
#include "mmplan/ranking.hpp"
#include "mmplan/scenario.hpp"
#include "mmplan/sizing.hpp"
#include "mmplan/units.hpp"

using namespace mmplan;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string data_path(const std::string& name) { return std::string(MMPLAN_TEST_DATA_DIR) + "/" + name + ".json"; }

json load_doc(const std::string& name) {
  std::ifstream in(data_path(name));
  return json::parse(in);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Scenario I with its users scaled down; subarea 0 is the outer ring, 1 the dense center.
Scenario desk_scenario1(long outer, long center) {
  json doc = load_doc("scenario1");
  doc["subareas"][0]["user_count"] = outer;
  doc["subareas"][1]["user_count"] = center;
  for (auto& sub : doc["subareas"]) sub.erase("lambda_per_km2");
  doc["capacity"]["delta_cov"] = 0.8;
  doc["capacity"]["delta_cap"] = 0.8;
  return parse_scenario(doc);
}

Evaluator make_evaluator(const Scenario& s, EvalSettings settings = {}) {
  return Evaluator(s, sample_users(s, s.area.rng_seed), build_pixel_grid(s), settings);
}

GaParams ga_params(const Scenario& s, int n_pop, int iters) {
  GaParams ga = s.ga;
  ga.n_pop = n_pop;
  ga.n_iterations = iters;
  return ga;
}

struct FrontView {
  std::vector<Chromosome> members;  // FR_1 sorted by penalized cost, then F1
};

FrontView front_of(const Nsga2& ga) {
  FrontView v;
  for (std::size_t i : ga.first_front()) v.members.push_back(ga.population()[i]);
  return v;
}

const Chromosome* min_f1(const FrontView& f) {
  const Chromosome* best = nullptr;
  for (const Chromosome& m : f.members) {
    const Chromosome* c = &m;
    if (best == nullptr || c->objectives()[0] < best->objectives()[0] ||
        (c->objectives()[0] == best->objectives()[0] && c->objectives()[1] < best->objectives()[1])) {
      best = c;
    }
  }
  return best;
}

// F1 nonincreasing along cost; cheapest feasible uses no more BSs than the min-F1 member.
bool tradeoff_holds(const FrontView& f, std::string& why) {
  for (std::size_t i = 1; i < f.members.size(); ++i) {
    if (f.members[i].objectives()[0] > f.members[i - 1].objectives()[0]) {
      why = "F1 increases along cost";
      return false;
    }
  }
  const Chromosome* cheapest = nullptr;
  for (const Chromosome& c : f.members) {
    if (c.report->feasible()) {
      cheapest = &c;
      break;
    }
  }
  const Chromosome* best = min_f1(f);
  if (cheapest != nullptr && cheapest->deployment.size() > best->deployment.size()) {
    why = "cheapest feasible has more BSs than min-F1";
    return false;
  }
  return true;
}

std::vector<FrontView> g_fronts;  // final fronts collected from the GA runs for A5

// ---------------------------------------------------------------------------

Outcome a1_sizing() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::pair<long, long> expected[] = {{5, 10}, {10, 10}, {13, 39}};
  const char* names[] = {"scenario1", "scenario2", "scenario3"};
  std::ostringstream detail;
  bool pass = true;
  for (int i = 0; i < 3; ++i) {
    const SizingReport r = compute_sizing(load_scenario(data_path(names[i])));
    const bool ok = r.n_cap == expected[i].first && r.n_cov == expected[i].second;
    pass = pass && ok;
    detail << names[i] << "=(" << r.n_cap << "," << r.n_cov << ")" << (ok ? "" : "!") << " ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail << "expected (5,10) (10,10) (13,39), " << fmt("%.3f s", secs);
  return {pass && secs < 1.0, detail.str()};
}

std::vector<std::vector<std::size_t>> brute_fronts(const std::vector<ObjectiveVector>& pts) {
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<bool> done(pts.size(), false);
  std::size_t left = pts.size();
  while (left > 0) {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (done[i]) continue;
      bool dominated = false;
      for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
        if (done[j] || j == i) continue;
        bool no_worse = true;
        bool better = false;
        for (std::size_t k = 0; k < pts[i].size(); ++k) {
          no_worse = no_worse && pts[j][k] <= pts[i][k];
          better = better || pts[j][k] < pts[i][k];
        }
        dominated = no_worse && better;
      }
      if (!dominated) f.push_back(i);
    }
    for (std::size_t i : f) done[i] = true;
    left -= f.size();
    fronts.push_back(f);
  }
  return fronts;
}

Outcome a2_sorting() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    const std::size_t k = 2 + rng() % 2;
    std::uniform_int_distribution<int> v(0, 9);
    std::vector<ObjectiveVector> pts(n, ObjectiveVector(k));
    for (auto& p : pts) {
      for (auto& x : p) x = v(rng);
    }
    for (std::size_t d = 0; d < n / 5; ++d) pts[rng() % n] = pts[rng() % n];
    auto got = non_dominated_sort(pts);
    auto want = brute_fronts(pts);
    for (auto& f : got) std::sort(f.begin(), f.end());
    if (got != want) ++mismatches;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {mismatches == 0 && secs < 10.0,
          std::to_string(mismatches) + " mismatches over 200 populations, " + fmt("%.3f s", secs)};
}

Outcome a3_crowding() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  double worst = 0.0;
  bool boundary_ok = true;
  bool affine_ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 30;
    const std::size_t k = 2 + rng() % 2;
    std::vector<ObjectiveVector> f(n, ObjectiveVector(k));
    for (auto& p : f) {
      for (auto& x : p) x = u(rng);
    }
    const auto got = crowding_distance(f);
    // Direct evaluation: for each objective, neighbors in sorted order.
    std::vector<double> want(n, 0.0);
    for (std::size_t m = 0; m < k; ++m) {
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f[a][m] < f[b][m]; });
      const double range = f[order.back()][m] - f[order.front()][m];
      want[order.front()] = want[order.back()] = INFINITY;
      for (std::size_t i = 1; i + 1 < n; ++i) {
        want[order[i]] += (f[order[i + 1]][m] - f[order[i - 1]][m]) / range;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (std::isinf(want[i]) || std::isinf(got[i])) {
        boundary_ok = boundary_ok && std::isinf(want[i]) && std::isinf(got[i]);
        continue;
      }
      worst = std::max(worst, std::abs(got[i] - want[i]) / std::max(1.0, std::abs(want[i])));
    }
    // Power-of-two scales and integer shifts keep every difference exact.
    std::vector<ObjectiveVector> g = f;
    for (auto& p : g) {
      for (std::size_t m = 0; m < k; ++m) p[m] = p[m] * std::ldexp(1.0, static_cast<int>(m) + 1) + 3.0;
    }
    affine_ok = affine_ok && crowding_distance(g) == got;
  }
  return {worst <= 1e-12 && boundary_ok && affine_ok,
          "max rel err " + fmt("%.2e", worst) + ", boundary " + (boundary_ok ? "inf" : "WRONG") + ", affine " +
              (affine_ok ? "exact" : "DIFFERS")};
}

Outcome a4_feasibility() {
  const auto t0 = std::chrono::steady_clock::now();
  const Scenario s = desk_scenario1(120, 80);
  const Evaluator ev = make_evaluator(s);
  Nsga2 ga(ev, PlanMode::Cell, ga_params(s, 60, 200), 42);
  ga.run();
  const FrontView f = front_of(ga);
  g_fronts.push_back(f);
  long feasible_front = 0;
  bool fanout_ok = true;
  for (const Chromosome& c : ga.population()) {
    if (!c.report->feasible()) continue;
    std::vector<int> fan(c.deployment.wbs.size(), 0);
    for (std::size_t w : c.report->association.ubs_to_wbs) {
      if (w != kNone) ++fan[w];
    }
    for (int x : fan) fanout_ok = fanout_ok && x <= s.capacity.n_lim;
  }
  for (const Chromosome& c : f.members) feasible_front += c.report->feasible() ? 1 : 0;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {feasible_front >= 1 && fanout_ok && secs <= 300.0,
          std::to_string(feasible_front) + "/" + std::to_string(f.members.size()) +
              " FR_1 members feasible, fan-out " + (fanout_ok ? "<= N_lim" : "EXCEEDED") + ", " +
              fmt("%.1f s", secs)};
}

bool inside(const Rect& r, Point p) { return p.x >= r.x_min && p.x <= r.x_max && p.y >= r.y_min && p.y <= r.y_max; }

Outcome a6_congestion() {
  const Scenario s = load_scenario(data_path("scenario1"));
  const Rect dense = s.area.subareas[1].region;
  const double area_fraction = dense.area() / s.area.bounds.area();
  const Evaluator ev = make_evaluator(s);
  int hits = 0;
  std::ostringstream detail;
  for (int run = 0; run < 10; ++run) {
    Nsga2 ga(ev, PlanMode::Cell, ga_params(s, 40, 80), 600 + run);
    ga.run();
    const FrontView f = front_of(ga);
    g_fronts.push_back(f);
    const Chromosome* best = min_f1(f);
    const auto& w = best->deployment.wbs;
    const double frac =
        static_cast<double>(std::count_if(w.begin(), w.end(), [&](Point p) { return inside(dense, p); })) /
        static_cast<double>(w.size());
    hits += frac > area_fraction ? 1 : 0;
    detail << fmt("%.2f", frac) << " ";
  }
  return {hits >= 8, std::to_string(hits) + "/10 runs above " + fmt("%.3f", area_fraction) + " (" +
                         detail.str().substr(0, detail.str().size() - 1) + ")"};
}

Outcome a5_tradeoff() {
  int bad = 0;
  std::string why;
  for (const FrontView& f : g_fronts) bad += tradeoff_holds(f, why) ? 0 : 1;
  return {bad == 0 && !g_fronts.empty(), std::to_string(g_fronts.size() - bad) + "/" + std::to_string(g_fronts.size()) +
                                             " final fronts ordered" + (bad ? " (" + why + ")" : "")};
}

Outcome a7_fiber() {
  // Oracle: splitters at chosen FAPs, feeder CO->FAP, distribution FAP->W-BS.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> c(0.0, 200.0);
  const CostParams costs;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t nw = 1 + rng() % 6;
    const std::size_t nf = 1 + rng() % 5;
    std::vector<Point> wbs(nw);
    std::vector<Point> faps(nf);
    for (auto& p : wbs) p = {c(rng), c(rng)};
    for (auto& p : faps) p = {c(rng), c(rng)};
    const Point co{c(rng), c(rng)};
    FiberPlan plan;
    plan.z.assign(nf, false);
    plan.assignment.resize(nw);
    for (auto& a : plan.assignment) {
      a = rng() % nf;
      plan.z[a] = true;
    }
    double want = 0.0;
    for (std::size_t j = 0; j < nf; ++j) {
      if (!plan.z[j]) continue;
      want += costs.c_s + costs.c_f * std::hypot(faps[j].x - co.x, faps[j].y - co.y);
    }
    for (std::size_t i = 0; i < nw; ++i) {
      const Point f = faps[plan.assignment[i]];
      want += costs.c_d * std::hypot(wbs[i].x - f.x, wbs[i].y - f.y);
    }
    worst = std::max(worst, std::abs(fiber_cost(plan, wbs, faps, co, costs) - want));
  }

  const Scenario s = desk_scenario1(120, 80);
  const Evaluator ev = make_evaluator(s);
  int hits = 0;
  std::ostringstream detail;
  for (int run = 0; run < 10; ++run) {
    Nsga2 ga(ev, PlanMode::Joint, ga_params(s, 40, 60), 700 + run);
    ga.run();
    const FrontView f = front_of(ga);
    g_fronts.push_back(f);
    const Chromosome* low_cost = &f.members.front();
    const Chromosome* high_cov = min_f1(f);
    const double lo = mean_distribution_length(low_cost->plan, low_cost->deployment.wbs, s.area.faps);
    const double hi = mean_distribution_length(high_cov->plan, high_cov->deployment.wbs, s.area.faps);
    hits += lo < hi ? 1 : 0;
    detail << fmt("%.0f", lo) << "<" << fmt("%.0f", hi) << " ";
  }
  std::string d = detail.str();
  d.pop_back();
  return {worst <= 1e-9 && hits >= 8,
          "oracle max err " + fmt("%.1e", worst) + "; " + std::to_string(hits) + "/10 runs shorter (" + d + ")"};
}

Outcome a8_radio() {
  const RadioParams r;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ud(1.0, 2000.0);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    double a = ud(rng);
    double b = ud(rng);
    if (a > b) std::swap(a, b);
    if (p_los(a, r.a_los) < p_los(b, r.a_los)) ++violations;
    for (auto st : {LinkState::Los, LinkState::Nlos}) {
      for (auto kind : {LinkKind::Access, LinkKind::Backhaul}) {
        if (path_loss_db(a, st, kind, r) > path_loss_db(b, st, kind, r)) ++violations;
      }
    }
  }
  const bool pl1 = path_loss_db(1.0, LinkState::Los, LinkKind::Access, r) == 70.0 &&
                   path_loss_db(1.0, LinkState::Nlos, LinkKind::Backhaul, r) == 70.0;

  std::uniform_real_distribution<double> dist(1.0, 300.0);
  std::uniform_real_distribution<double> uth(-5.0, 60.0);
  std::uniform_real_distribution<double> uu(0.0, 1.0);
  std::normal_distribution<double> z(0.0, 1.0);
  const double noise = units::dbm_to_watt(noise_power_dbm(r.noise_bandwidth_hz, r.noise_figure_db));
  int within = 0;
  double worst_z = 0.0;
  for (int point = 0; point < 20; ++point) {
    const auto kind = point % 2 == 0 ? LinkKind::Access : LinkKind::Backhaul;
    const double d = kind == LinkKind::Access ? dist(rng) : dist(rng) / 10.0;
    const double th = kind == LinkKind::Access ? uth(rng) : 40.0 + uth(rng) / 2.0;
    const double pl = p_los(d, r.a_los);
    const int draws = 1000000;
    int hits = 0;
    for (int i = 0; i < draws; ++i) {
      const LinkState st = uu(rng) < pl ? LinkState::Los : LinkState::Nlos;
      LinkBudget b = kind == LinkKind::Access ? access_budget(r, d, st) : backhaul_budget(r, d, st);
      b.shadowing_db = shadowing_sigma_db(st, kind, r) * z(rng);
      const double sinr = kind == LinkKind::Access ? sinr_access_linear(b, noise, r) : sinr_backhaul_linear(b, noise, r);
      hits += units::linear_to_db(sinr) >= th ? 1 : 0;
    }
    const double mc = static_cast<double>(hits) / draws;
    const double p = LinkModel(r, kind).coverage(d, false, th);
    const double se = std::sqrt(std::max(p * (1 - p), 1e-12) / draws);
    const double zs = std::abs(mc - p) / se;
    worst_z = std::max(worst_z, zs);
    within += std::abs(mc - p) <= 3.0 * se + 1e-9 ? 1 : 0;
  }
  return {violations == 0 && pl1 && within == 20,
          std::to_string(violations) + " monotonicity violations, PL(1 m) " + (pl1 ? "= 70 dB" : "WRONG") + ", " +
              std::to_string(within) + "/20 MC points within 3 SE (max " + fmt("%.2f", worst_z) + " SE)"};
}

Outcome a9_blockage() {
  const Scenario s = load_scenario(data_path("blockage"));
  const Evaluator ev = make_evaluator(s, {true, InterferenceMode::NoiseLimited});
  Nsga2 ga(ev, PlanMode::Cell, ga_params(s, 40, 80), 9);
  ga.run();
  const PixelGrid& g = ev.grid();
  long crossings = 0;
  long pixel_errors = 0;
  long feasible = 0;
  for (const Chromosome& c : ga.population()) {
    const EvaluationReport& rep = *c.report;
    for (std::size_t p = 0; p < g.size(); ++p) {
      if (g.excluded[p] && (rep.coverage.pixel_included[p] || rep.coverage.pixel[p])) ++pixel_errors;
      if (!g.excluded[p] && !rep.coverage.pixel_included[p]) ++pixel_errors;
    }
    if (!rep.feasible()) continue;
    ++feasible;
    const auto& links = rep.association.ubs_to_wbs;
    for (std::size_t u = 0; u < links.size(); ++u) {
      if (links[u] == kNone) continue;
      if (!line_of_sight(c.deployment.wbs[links[u]], c.deployment.ubs[u], g)) ++crossings;
    }
  }
  const long excluded = static_cast<long>(std::count(g.excluded.begin(), g.excluded.end(), true));
  return {crossings == 0 && pixel_errors == 0 && feasible > 0 && excluded > 0,
          std::to_string(feasible) + " feasible members, " + std::to_string(crossings) + " blocked backhaul links, " +
              std::to_string(excluded) + " enclosed pixels, " + std::to_string(pixel_errors) + " denominator errors"};
}

double ks_uniform(std::vector<double> x, double lo, double hi) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double cdf = (x[i] - lo) / (hi - lo);
    d = std::max({d, cdf - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - cdf});
  }
  return d;
}

Outcome a10_operators() {
  Rng rng(10);
  std::ostringstream detail;
  bool pass = true;

  // Mode frequencies: chi-square, 2 dof, 1% critical value 9.210.
  const int draws = 90000;
  double count[3] = {0, 0, 0};
  std::vector<double> mu;
  for (int i = 0; i < draws; ++i) {
    count[static_cast<int>(draw_blend_mode(rng))] += 1;
    mu.push_back(draw_blend_weight(0.15, rng));
  }
  double chi = 0.0;
  for (double c : count) chi += (c - draws / 3.0) * (c - draws / 3.0) / (draws / 3.0);
  pass = pass && chi < 9.210;
  detail << "modes chi2=" << fmt("%.2f", chi);

  // Blend weight: KS against U(-eps, 1 + eps), 1% critical value 1.628 / sqrt(n).
  const double ks = ks_uniform(mu, -0.15, 1.15) * std::sqrt(static_cast<double>(draws));
  pass = pass && ks < 1.628;
  detail << ", mu KS*sqrt(n)=" << fmt("%.3f", ks);

  // Move spread: variance test on the displacement, normal approximation at 1%.
  const Rect bounds{0, 10000, 0, 10000};
  Deployment d;
  d.wbs = {{5000, 5000}};
  const int moves = 20000;
  double ss = 0.0;
  for (int i = 0; i < moves; ++i) {
    const Deployment m = real_mutation(d, 0.02, bounds, 0.0, {1}, rng);
    ss += std::pow(m.wbs[0].x - 5000, 2) + std::pow(m.wbs[0].y - 5000, 2);
  }
  // Both coordinates of one BS move, so ss / 2n estimates sigma^2 with sigma = 200.
  const double var = ss / (2.0 * moves);
  const double zvar = (var / 40000.0 - 1.0) / std::sqrt(2.0 / (2.0 * moves));
  pass = pass && std::abs(zvar) < 2.576;
  detail << ", sigma=" << fmt("%.1f", std::sqrt(var)) << " (200)";

  // Binary crossover: each child bit comes from either parent with probability 1/2.
  const std::size_t len = 10;
  const std::vector<bool> ones(len, true);
  const std::vector<bool> zeros(len, false);
  std::vector<double> freq(len, 0.0);
  const int bx = 50000;
  for (int i = 0; i < bx; ++i) {
    const auto c = binary_crossover(ones, zeros, rng);
    for (std::size_t k = 0; k < len; ++k) freq[k] += c[k] ? 1 : 0;
  }
  double chi_x = 0.0;
  for (double f : freq) chi_x += std::pow(f - bx / 2.0, 2) / (bx / 4.0);
  pass = pass && chi_x < 23.209;  // 10 dof at 1%
  detail << ", xover chi2=" << fmt("%.2f", chi_x);

  // Binary mutation: one uniformly placed flip.
  std::vector<double> flips(len, 0.0);
  bool single = true;
  const int bm = 50000;
  for (int i = 0; i < bm; ++i) {
    const auto m = binary_mutation(zeros, rng);
    single = single && std::count(m.begin(), m.end(), true) == 1;
    flips[std::find(m.begin(), m.end(), true) - m.begin()] += 1;
  }
  double chi_m = 0.0;
  for (double f : flips) chi_m += std::pow(f - bm / 10.0, 2) / (bm / 10.0);
  pass = pass && single && chi_m < 21.666;  // 9 dof at 1%
  detail << ", flip chi2=" << fmt("%.2f", chi_m);
  return {pass, detail.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome a11_determinism() {
  const fs::path root = fs::temp_directory_path() / "mmplan-acceptance";
  fs::remove_all(root);
  fs::create_directories(root);
  json doc = load_doc("scenario1");
  doc["subareas"][0]["user_count"] = 120;
  doc["subareas"][1]["user_count"] = 80;
  for (auto& sub : doc["subareas"]) sub.erase("lambda_per_km2");
  std::ofstream(root / "s.json") << doc.dump();
  const std::string scen = (root / "s.json").string();
  int compared = 0;
  int differing = 0;
  int failures = 0;
  for (const char* cmd : {"plan", "jointplan"}) {
    std::vector<fs::path> outs;
    for (const char* threads : {"1", "1", "4"}) {
      const fs::path out = root / (std::string(cmd) + "-" + std::to_string(outs.size()));
      std::ostringstream o;
      std::ostringstream e;
      failures += run_cli({cmd, "--scenario", scen, "--seed", "11", "--iters", "15", "--pop", "20", "--threads",
                           threads, "--out", out.string()},
                          o, e) != 0;
      std::ostringstream o2;
      failures += run_cli({"coverage", "--layout", (out / "layout-0.json").string(), "--mode", "interference",
                           "--out", (out / "cov").string()},
                          o2, e) != 0;
      failures += run_cli({"evaluate", "--layout", (out / "layout-0.json").string(), "--out", (out / "eval").string()},
                          o2, e) != 0;
      outs.push_back(out);
    }
    for (const fs::path& f : {fs::path("pareto.csv"), fs::path("history.csv"), fs::path("cov") / "cdf.csv",
                              fs::path("eval") / "users.csv"}) {
      for (std::size_t k = 1; k < outs.size(); ++k) {
        ++compared;
        differing += slurp(outs[0] / f) != slurp(outs[k] / f) || slurp(outs[0] / f).empty();
      }
    }
  }
  return {failures == 0 && differing == 0, std::to_string(compared - differing) + "/" + std::to_string(compared) +
                                               " CSV pairs byte-identical (serial and 4 threads)"};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Outcome a12_sinr_vs_snr() {
  // Scenario III with a tenth of the users and a 50 m pixel grid.
  json doc = load_doc("scenario3");
  for (auto& sub : doc["subareas"]) {
    sub["user_count"] = sub["user_count"].get<long>() / 10;
    sub.erase("lambda_per_km2");
  }
  doc["area"]["pixel_size_m"] = 50;
  const Scenario s = parse_scenario(doc);
  const Evaluator ev = make_evaluator(s, {false, InterferenceMode::Interference});
  Nsga2 ga(ev, PlanMode::Cell, ga_params(s, 30, 40), 12);
  ga.run();
  const FrontView front = front_of(ga);
  const Chromosome* best = min_f1(front);
  std::vector<double> sinr;
  std::vector<double> snr;
  for (std::size_t n = 0; n < best->report->coverage.user_sinr_db.size(); ++n) {
    if (best->report->association.user_to_bs[n] == kNone) continue;
    sinr.push_back(best->report->coverage.user_sinr_db[n]);
    snr.push_back(best->report->coverage.user_snr_db[n]);
  }
  const double gap = median(snr) - median(sinr);
  return {std::abs(gap) <= 3.0, "median SNR " + fmt("%.2f", median(snr)) + " dB, SINR " + fmt("%.2f", median(sinr)) +
                                    " dB, gap " + fmt("%.3f", gap) + " dB over " + std::to_string(sinr.size()) +
                                    " users, " + std::to_string(best->deployment.size()) + " BSs"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::set<std::string> only(argv + 1, argv + argc);  // optional criterion filter, e.g. A4 A6
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"A1", a1_sizing},       {"A2", a2_sorting},   {"A3", a3_crowding},     {"A4", a4_feasibility},
      {"A6", a6_congestion},   {"A7", a7_fiber},     {"A5", a5_tradeoff},     {"A8", a8_radio},
      {"A9", a9_blockage},     {"A10", a10_operators}, {"A11", a11_determinism}, {"A12", a12_sinr_vs_snr}};
  std::vector<std::pair<std::string, Outcome>> results;
  for (const auto& [id, fn] : criteria) {
    if (!only.empty() && !only.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << id << " done in " << fmt("%.1f s", secs) << "\n";
    results.emplace_back(id, o);
  }
  // Report in criterion order; A5 runs after the GA criteria that feed it.
  std::sort(results.begin(), results.end(),
            [](const auto& a, const auto& b) { return std::stoi(a.first.substr(1)) < std::stoi(b.first.substr(1)); });
  int failed = 0;
  for (const auto& [id, o] : results) {
    std::cout << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << "\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
