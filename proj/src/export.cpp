#include "mmplan/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mmplan {

using nlohmann::json;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_string(InterferenceMode mode) {
  return mode == InterferenceMode::Interference ? "interference" : "noise-limited";
}

InterferenceMode parse_interference_mode(const std::string& s) {
  if (s == "noise-limited") return InterferenceMode::NoiseLimited;
  if (s == "interference") return InterferenceMode::Interference;
  throw std::invalid_argument("unknown interference mode: " + s);
}

namespace {

json points_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (const Point& p : pts) a.push_back({p.x, p.y});
  return a;
}

std::vector<Point> points_from(const json& a) {
  std::vector<Point> out;
  for (const auto& p : a) out.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  return out;
}

json index_json(std::size_t i) { return i == kNone ? json(nullptr) : json(i); }

std::vector<std::size_t> indices_from(const json& a) {
  std::vector<std::size_t> out;
  for (const auto& v : a) out.push_back(v.is_null() ? kNone : v.get<std::size_t>());
  return out;
}

std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

}  // namespace

json objectives_to_json(const EvaluationReport& r) {
  return {{"f1", r.objectives.f1},
          {"f2", r.objectives.f2},
          {"f3", r.objectives.f3},
          {"penalty", r.penalty},
          {"penalized", r.penalized},
          {"feasible", r.feasible()}};
}

json layout_to_json(const Layout& layout, const EvaluationReport& report) {
  json doc;
  doc["scenario"] = layout.scenario;
  doc["mode"] = layout.mode == PlanMode::Joint ? "joint" : "cell";
  doc["settings"] = {{"interference", to_string(layout.settings.interference)},
                     {"blockage", layout.settings.blockage}};
  doc["wbs"] = points_json(layout.deployment.wbs);
  doc["ubs"] = points_json(layout.deployment.ubs);
  json links = json::array();
  for (std::size_t u = 0; u < layout.deployment.ubs.size(); ++u) {
    links.push_back({{"ubs", u},
                     {"wbs", index_json(report.association.ubs_to_wbs[u])},
                     {"covered", static_cast<bool>(report.coverage.backhaul[u])}});
  }
  doc["backhaul_links"] = links;
  if (layout.plan) {
    doc["z_genes"] = layout.z_genes;
    json a = json::array();
    for (std::size_t f : layout.plan->assignment) a.push_back(index_json(f));
    doc["fiber"] = {{"z", layout.plan->z}, {"assignment", a}};
  }
  doc["objectives"] = objectives_to_json(report);
  return doc;
}

Layout layout_from_json(const json& doc) {
  Layout l;
  l.scenario = doc.value("scenario", std::string());
  l.mode = doc.value("mode", std::string("cell")) == "joint" ? PlanMode::Joint : PlanMode::Cell;
  if (doc.contains("settings")) {
    const json& s = doc.at("settings");
    l.settings.interference = parse_interference_mode(s.value("interference", std::string("noise-limited")));
    l.settings.blockage = s.value("blockage", false);
  }
  l.deployment.wbs = points_from(doc.at("wbs"));
  l.deployment.ubs = points_from(doc.at("ubs"));
  if (doc.contains("fiber")) {
    FiberPlan p;
    p.z = doc.at("fiber").at("z").get<std::vector<bool>>();
    p.assignment = indices_from(doc.at("fiber").at("assignment"));
    l.plan = std::move(p);
    l.z_genes = doc.value("z_genes", std::vector<bool>{});
  }
  l.objectives = doc.value("objectives", json::object());
  return l;
}

Layout load_layout(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open layout file " + path.string());
  try {
    return layout_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw std::runtime_error("invalid layout file " + path.string() + ": " + e.what());
  }
}

json report_to_json(const EvaluationReport& r, const Evaluator& evaluator) {
  json doc = objectives_to_json(r);
  const auto& cov = r.coverage;
  const auto included = std::count(cov.pixel_included.begin(), cov.pixel_included.end(), true);
  const auto covered_pixels = std::count(cov.pixel.begin(), cov.pixel.end(), true);
  doc["users"] = evaluator.users().size();
  doc["covered_users"] = std::count(cov.user.begin(), cov.user.end(), true);
  doc["served_users"] = r.served_users();
  doc["pixels_included"] = included;
  doc["pixels_covered"] = covered_pixels;
  doc["ubs_backhauled"] = std::count(cov.backhaul.begin(), cov.backhaul.end(), true);
  json v = json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"name", x.name},
                 {"kind", x.kind == ConstraintKind::Equality ? "equality" : "inequality"},
                 {"magnitude", x.magnitude},
                 {"relative", x.relative}});
  }
  doc["violations"] = v;
  return doc;
}

json fiber_plan_to_json(const FiberPlan& plan, const Deployment& deployment, const Scenario& scenario) {
  const auto& faps = scenario.area.faps;
  const Point co = scenario.area.central_office;
  json selected = json::array();
  for (std::size_t f = 0; f < plan.z.size(); ++f) {
    if (!plan.z[f]) continue;
    selected.push_back({{"fap", f}, {"x", faps[f].x}, {"y", faps[f].y}, {"feeder_m", distance(faps[f], co)}});
  }
  json links = json::array();
  for (std::size_t b = 0; b < plan.assignment.size(); ++b) {
    const std::size_t f = plan.assignment[b];
    links.push_back({{"wbs", b},
                     {"fap", index_json(f)},
                     {"distribution_m", f == kNone ? 0.0 : distance(deployment.wbs[b], faps[f])}});
  }
  const FiberCost c = fiber_cost_breakdown(plan, deployment.wbs, faps, co, scenario.costs);
  return {{"central_office", {co.x, co.y}},
          {"selected_faps", selected},
          {"assignment", links},
          {"cost", {{"splitters", c.splitters}, {"feeder", c.feeder}, {"distribution", c.distribution}, {"total", c.total()}}}};
}

std::string pareto_csv(const Nsga2& optimizer, PlanMode mode) {
  std::ostringstream out;
  const bool joint = mode == PlanMode::Joint;
  out << "id,F1,F2," << (joint ? "F3," : "") << "penalty,N_WBS,N_UBS\n";
  std::size_t k = 0;
  for (std::size_t i : optimizer.first_front()) {
    const Chromosome& c = optimizer.population()[i];
    const auto& r = *c.report;
    out << k++ << ',' << r.objectives.f1 << ',' << format_number(r.objectives.f2) << ',';
    if (joint) out << format_number(r.objectives.f3) << ',';
    out << format_number(r.penalty) << ',' << c.deployment.wbs.size() << ',' << c.deployment.ubs.size() << '\n';
  }
  return out.str();
}

std::string history_csv(const std::vector<IterationStats>& history) {
  std::ostringstream out;
  out << "iteration,best_f1,median_f1,best_f2,median_f2,feasible_count,front1_size\n";
  for (const auto& h : history) {
    out << h.iteration << ',' << (h.best_f1 ? std::to_string(*h.best_f1) : "") << ',' << opt(h.median_f1) << ','
        << opt(h.best_f2) << ',' << opt(h.median_f2) << ',' << h.feasible << ',' << h.front1 << '\n';
  }
  return out.str();
}

std::string users_csv(const EvaluationReport& r, const UserSet& users) {
  std::ostringstream out;
  out << "id,x,y,bs,covered,bw_hz,rate_bps,satisfied\n";
  for (std::size_t n = 0; n < users.size(); ++n) {
    const std::size_t bs = r.association.user_to_bs[n];
    out << n << ',' << format_number(users.positions[n].x) << ',' << format_number(users.positions[n].y) << ','
        << (bs == kNone ? std::string("-1") : std::to_string(bs)) << ',' << (r.coverage.user[n] ? 1 : 0) << ','
        << format_number(r.allocation.bw_hz[n]) << ',' << format_number(r.allocation.rate_bps[n]) << ','
        << (r.allocation.rate_bps[n] >= users.demands[n] ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string coverage_cdf_csv(const EvaluationReport& r, bool with_snr) {
  std::ostringstream out;
  out << "metric,x,fraction\n";
  const auto n = static_cast<double>(r.coverage.user_sinr_db.size());
  const auto tail = [&](const std::vector<double>& v, double x) {
    if (n == 0.0) return 0.0;
    return static_cast<double>(std::count_if(v.begin(), v.end(), [x](double s) { return s >= x; })) / n;
  };
  for (int t = -20; t <= 80; ++t) out << "sinr_db," << t << ',' << format_number(tail(r.coverage.user_sinr_db, t)) << '\n';
  if (with_snr) {
    for (int t = -20; t <= 80; ++t) out << "snr_db," << t << ',' << format_number(tail(r.coverage.user_snr_db, t)) << '\n';
  }
  for (int m = 0; m <= 2000; m += 20) {
    out << "rate_mbps," << m << ',' << format_number(tail(r.allocation.rate_bps, m * 1e6)) << '\n';
  }
  return out.str();
}

std::string layout_svg(const Scenario& scenario, const Deployment& d, const EvaluationReport& report,
                       const std::optional<FiberPlan>& plan) {
  const Rect& b = scenario.area.bounds;
  const double pad = 10.0;
  // SVG y grows downward; flip so the drawing matches plan coordinates.
  const auto X = [&](double x) { return format_number(x - b.x_min + pad); };
  const auto Y = [&](double y) { return format_number(b.y_max - y + pad); };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_number(b.width() + 2 * pad) << "\" height=\""
    << format_number(b.height() + 2 * pad) << "\">\n";
  s << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << format_number(b.width()) << "\" height=\""
    << format_number(b.height()) << "\" fill=\"white\" stroke=\"black\"/>\n";
  for (const Rect& o : scenario.area.obstacles) {
    s << "<rect x=\"" << X(o.x_min) << "\" y=\"" << Y(o.y_max) << "\" width=\"" << format_number(o.width())
      << "\" height=\"" << format_number(o.height()) << "\" fill=\"gray\"/>\n";
  }
  for (std::size_t f = 0; f < scenario.area.faps.size(); ++f) {
    const Point p = scenario.area.faps[f];
    const bool used = plan && f < plan->z.size() && plan->z[f];
    s << "<rect x=\"" << X(p.x - 3) << "\" y=\"" << Y(p.y + 3) << "\" width=\"6\" height=\"6\" fill=\""
      << (used ? "green" : "none") << "\" stroke=\"green\"/>\n";
  }
  if (plan) {
    for (std::size_t w = 0; w < plan->assignment.size() && w < d.wbs.size(); ++w) {
      if (plan->assignment[w] == kNone) continue;
      const Point f = scenario.area.faps[plan->assignment[w]];
      s << "<line x1=\"" << X(d.wbs[w].x) << "\" y1=\"" << Y(d.wbs[w].y) << "\" x2=\"" << X(f.x) << "\" y2=\""
        << Y(f.y) << "\" stroke=\"green\" stroke-dasharray=\"4 2\"/>\n";
    }
  }
  for (std::size_t u = 0; u < d.ubs.size(); ++u) {
    const std::size_t w = report.association.ubs_to_wbs[u];
    if (w == kNone) continue;
    s << "<line x1=\"" << X(d.ubs[u].x) << "\" y1=\"" << Y(d.ubs[u].y) << "\" x2=\"" << X(d.wbs[w].x) << "\" y2=\""
      << Y(d.wbs[w].y) << "\" stroke=\"" << (report.coverage.backhaul[u] ? "blue" : "red") << "\"/>\n";
  }
  for (const Point& p : d.wbs) {
    s << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"5\" fill=\"blue\"/>\n";
  }
  for (const Point& p : d.ubs) {
    s << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"4\" fill=\"orange\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace mmplan
