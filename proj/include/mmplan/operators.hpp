#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "mmplan/eval.hpp"
#include "mmplan/geometry.hpp"
#include "mmplan/scenario.hpp"

namespace mmplan {

using Rng = std::mt19937_64;

enum class BlendMode { WPreserve, UPreserve, FullBlend };

BlendMode draw_blend_mode(Rng& rng);
double draw_blend_weight(double epsilon, Rng& rng);  // mu ~ U(-eps, 1 + eps)

/// Records the random choices of one crossover, for statistical checks.
struct CrossoverTrace {
  BlendMode mode = BlendMode::FullBlend;
  std::vector<double> weights;  // every drawn mu, in draw order
};

/// Brings two position lists to a common length: MinDim keeps a uniformly random
/// subset (original order) of the longer one, MaxDim pads the shorter with uniform
/// positions inside bounds.
void align_lists(std::vector<Point>& a, std::vector<Point>& b, DimPolicy policy, const Rect& bounds, Rng& rng);

/// c1 = M.a + (1-M).b, c2 = (1-M).a + M.b with W-BS blended only with W-BS and
/// U-BS with U-BS. Children are clamped to bounds.
std::pair<Deployment, Deployment> real_crossover(const Deployment& p1, const Deployment& p2, double epsilon,
                                                 DimPolicy policy, const Rect& bounds, Rng& rng,
                                                 CrossoverTrace* trace = nullptr);

struct MutationLimits {
  std::size_t min_total = 1;  // removal never goes below this many BSs
};

enum class MutationKind { Move, AddBs, RemoveBs };

/// Gaussian move of one random column (sigma = mu * extent per axis), or with
/// probability structural_prob an add/remove of one BS. Removal keeps at least one
/// W-BS and min_total BSs; when no removal is allowed the move is applied instead.
Deployment real_mutation(const Deployment& d, double mu, const Rect& bounds, double structural_prob,
                         const MutationLimits& limits, Rng& rng, MutationKind* kind = nullptr);

/// Element-wise fair-coin selection between two equal-length vectors.
std::vector<bool> binary_crossover(const std::vector<bool>& z1, const std::vector<bool>& z2, Rng& rng);

/// Flips exactly one uniformly chosen element.
std::vector<bool> binary_mutation(const std::vector<bool>& z, Rng& rng);

}  // namespace mmplan
