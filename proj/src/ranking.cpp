#include "mmplan/ranking.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mmplan {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  bool strictly = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly = true;
  }
  return strictly;
}

std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const ObjectiveVector> points) {
  const std::size_t n = points.size();
  std::vector<std::vector<std::size_t>> dominated_by(n);  // S_p
  std::vector<std::size_t> counter(n, 0);                 // n_p
  std::vector<std::vector<std::size_t>> fronts;

  std::vector<std::size_t> current;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      if (dominates(points[p], points[q])) {
        dominated_by[p].push_back(q);
      } else if (dominates(points[q], points[p])) {
        ++counter[p];
      }
    }
    if (counter[p] == 0) current.push_back(p);
  }

  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t p : current) {
      for (std::size_t q : dominated_by[p]) {
        if (--counter[q] == 0) next.push_back(q);
      }
    }
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front) {
  const std::size_t n = front.size();
  std::vector<double> d(n, 0.0);
  if (n == 0) return d;
  const double inf = std::numeric_limits<double>::infinity();
  const std::size_t k_count = front[0].size();
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < k_count; ++k) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return front[a][k] < front[b][k]; });
    d[order.front()] = inf;
    d[order.back()] = inf;
    const double range = front[order.back()][k] - front[order.front()][k];
    if (!(range > 0.0)) continue;
    for (std::size_t j = 1; j + 1 < n; ++j) {
      d[order[j]] += (front[order[j + 1]][k] - front[order[j - 1]][k]) / range;
    }
  }
  return d;
}

Ranking rank_population(std::span<const ObjectiveVector> points) {
  Ranking r;
  r.fronts = non_dominated_sort(points);
  r.front_of.assign(points.size(), 0);
  r.crowding.assign(points.size(), 0.0);
  std::vector<ObjectiveVector> members;
  for (std::size_t f = 0; f < r.fronts.size(); ++f) {
    members.clear();
    for (std::size_t i : r.fronts[f]) {
      r.front_of[i] = f;
      members.push_back(points[i]);
    }
    const auto d = crowding_distance(members);
    for (std::size_t j = 0; j < d.size(); ++j) r.crowding[r.fronts[f][j]] = d[j];
  }
  return r;
}

std::vector<std::size_t> survivor_order(const Ranking& ranking) {
  std::vector<std::size_t> order(ranking.front_of.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ranking.front_of[a] != ranking.front_of[b]) return ranking.front_of[a] < ranking.front_of[b];
    return ranking.crowding[a] > ranking.crowding[b];
  });
  return order;
}

}  // namespace mmplan
