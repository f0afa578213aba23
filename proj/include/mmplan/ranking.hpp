#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mmplan {

using ObjectiveVector = std::vector<double>;

/// a dominates b: no worse everywhere, strictly better somewhere (minimization).
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Fronts as index lists, FR_1 first. Members of each front keep ascending index order.
std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const ObjectiveVector> points);

/// Crowding distance of each member of one front. Boundary members are +inf; an
/// objective with zero range adds nothing.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> front);

struct Ranking {
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> front_of;  // 0-based front index per member
  std::vector<double> crowding;
};

Ranking rank_population(std::span<const ObjectiveVector> points);

/// All members sorted by (front ascending, crowding descending), ties by index.
std::vector<std::size_t> survivor_order(const Ranking& ranking);

}  // namespace mmplan
