#include "mmplan/operators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mmplan {

namespace {

Point uniform_point(const Rect& bounds, Rng& rng) {
  std::uniform_real_distribution<double> ux(bounds.x_min, bounds.x_max);
  std::uniform_real_distribution<double> uy(bounds.y_min, bounds.y_max);
  const double x = ux(rng);
  return {x, uy(rng)};
}

std::vector<Point> random_subset(const std::vector<Point>& v, std::size_t k, Rng& rng) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  std::vector<Point> out;
  out.reserve(k);
  for (std::size_t i : idx) out.push_back(v[i]);
  return out;
}

void blend(std::vector<Point>& a, std::vector<Point>& b, double epsilon, const Rect& bounds, Rng& rng,
           CrossoverTrace* trace) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double mx = draw_blend_weight(epsilon, rng);
    const double my = draw_blend_weight(epsilon, rng);
    if (trace != nullptr) {
      trace->weights.push_back(mx);
      trace->weights.push_back(my);
    }
    const Point pa = a[i];
    const Point pb = b[i];
    a[i] = bounds.clamp({mx * pa.x + (1.0 - mx) * pb.x, my * pa.y + (1.0 - my) * pb.y});
    b[i] = bounds.clamp({(1.0 - mx) * pa.x + mx * pb.x, (1.0 - my) * pa.y + my * pb.y});
  }
}

}  // namespace

BlendMode draw_blend_mode(Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0:
      return BlendMode::WPreserve;
    case 1:
      return BlendMode::UPreserve;
    default:
      return BlendMode::FullBlend;
  }
}

double draw_blend_weight(double epsilon, Rng& rng) {
  std::uniform_real_distribution<double> u(-epsilon, 1.0 + epsilon);
  return u(rng);
}

void align_lists(std::vector<Point>& a, std::vector<Point>& b, DimPolicy policy, const Rect& bounds, Rng& rng) {
  if (a.size() == b.size()) return;
  std::vector<Point>& longer = a.size() > b.size() ? a : b;
  std::vector<Point>& shorter = a.size() > b.size() ? b : a;
  if (policy == DimPolicy::MinDim) {
    longer = random_subset(longer, shorter.size(), rng);
  } else {
    while (shorter.size() < longer.size()) shorter.push_back(uniform_point(bounds, rng));
  }
}

std::pair<Deployment, Deployment> real_crossover(const Deployment& p1, const Deployment& p2, double epsilon,
                                                 DimPolicy policy, const Rect& bounds, Rng& rng,
                                                 CrossoverTrace* trace) {
  Deployment c1 = p1;
  Deployment c2 = p2;
  align_lists(c1.wbs, c2.wbs, policy, bounds, rng);
  align_lists(c1.ubs, c2.ubs, policy, bounds, rng);

  const BlendMode mode = draw_blend_mode(rng);
  if (trace != nullptr) {
    trace->mode = mode;
    trace->weights.clear();
  }
  if (mode != BlendMode::WPreserve) blend(c1.wbs, c2.wbs, epsilon, bounds, rng, trace);
  if (mode != BlendMode::UPreserve) blend(c1.ubs, c2.ubs, epsilon, bounds, rng, trace);
  for (Point& p : c1.wbs) p = bounds.clamp(p);
  for (Point& p : c1.ubs) p = bounds.clamp(p);
  for (Point& p : c2.wbs) p = bounds.clamp(p);
  for (Point& p : c2.ubs) p = bounds.clamp(p);
  return {std::move(c1), std::move(c2)};
}

Deployment real_mutation(const Deployment& d, double mu, const Rect& bounds, double structural_prob,
                         const MutationLimits& limits, Rng& rng, MutationKind* kind) {
  Deployment out = d;
  std::bernoulli_distribution structural(structural_prob);
  MutationKind k = MutationKind::Move;
  if (structural(rng)) {
    std::bernoulli_distribution coin(0.5);
    const bool add = coin(rng);
    if (add) {
      k = MutationKind::AddBs;
      const Point p = uniform_point(bounds, rng);
      if (coin(rng) || out.wbs.empty()) {
        out.wbs.push_back(p);
      } else {
        out.ubs.push_back(p);
      }
    } else if (out.size() > limits.min_total && out.size() > 1) {
      // Removable: every U-BS, and W-BSs while more than one remains.
      const std::size_t first = out.wbs.size() > 1 ? 0 : out.wbs.size();
      if (first < out.size()) {
        k = MutationKind::RemoveBs;
        std::uniform_int_distribution<std::size_t> pick(first, out.size() - 1);
        const std::size_t j = pick(rng);
        if (out.is_wbs(j)) {
          out.wbs.erase(out.wbs.begin() + static_cast<long>(j));
        } else {
          out.ubs.erase(out.ubs.begin() + static_cast<long>(j - d.wbs.size()));
        }
      }
    }
  }
  if (k == MutationKind::Move && !out.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
    const std::size_t j = pick(rng);
    Point& p = out.is_wbs(j) ? out.wbs[j] : out.ubs[j - out.wbs.size()];
    if (mu > 0.0) {
      std::normal_distribution<double> nx(0.0, mu * bounds.width());
      std::normal_distribution<double> ny(0.0, mu * bounds.height());
      const double dx = nx(rng);
      p = bounds.clamp({p.x + dx, p.y + ny(rng)});
    }
  }
  if (kind != nullptr) *kind = k;
  return out;
}

std::vector<bool> binary_crossover(const std::vector<bool>& z1, const std::vector<bool>& z2, Rng& rng) {
  if (z1.size() != z2.size()) throw std::invalid_argument("binary_crossover: length mismatch");
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> child(z1.size());
  for (std::size_t i = 0; i < z1.size(); ++i) child[i] = coin(rng) ? z1[i] : z2[i];
  return child;
}

std::vector<bool> binary_mutation(const std::vector<bool>& z, Rng& rng) {
  std::vector<bool> out = z;
  if (out.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
  const std::size_t i = pick(rng);
  out[i] = !out[i];
  return out;
}

}  // namespace mmplan
