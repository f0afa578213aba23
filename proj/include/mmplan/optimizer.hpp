#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mmplan/backhaul.hpp"
#include "mmplan/eval.hpp"
#include "mmplan/operators.hpp"
#include "mmplan/ranking.hpp"
#include "mmplan/scenario.hpp"
#include "mmplan/sizing.hpp"

namespace mmplan {

enum class PlanMode { Cell, Joint };

struct Chromosome {
  Deployment deployment;
  std::vector<bool> z;                  // FAP selection genes, joint mode only
  std::vector<std::size_t> fap_genes;   // per W-BS, genetic fiber assignment only
  FiberPlan plan;                       // decoded fiber plan, joint mode only
  std::shared_ptr<const EvaluationReport> report;

  bool evaluated() const { return report != nullptr; }
  const ObjectiveVector& objectives() const { return report->penalized; }
};

struct InitLimits {
  long total_min = 1;   // max(1, n_cap)
  long total_mid = 1;   // n_init
  long jitter = 1;      // total drawn from mid +- jitter
};

InitLimits init_limits(const SizingReport& sizing);

std::vector<Chromosome> init_population(const Scenario& scenario, const SizingReport& sizing, const GaParams& ga,
                                        PlanMode mode, Rng& rng);

/// Decodes the fiber plan of a chromosome and evaluates it.
void evaluate_chromosome(Chromosome& c, const Evaluator& evaluator, PlanMode mode,
                         FiberAssignmentMode fiber = FiberAssignmentMode::Repair);

struct IterationStats {
  int iteration = 0;
  std::optional<long> best_f1;       // over zero-penalty members
  std::optional<double> median_f1;
  std::optional<double> best_f2;     // F2, or F2 + F3 in joint mode
  std::optional<double> median_f2;
  std::size_t feasible = 0;
  std::size_t front1 = 0;
};

class Nsga2 {
 public:
  Nsga2(const Evaluator& evaluator, PlanMode mode, GaParams ga, std::uint64_t seed, unsigned threads = 1);

  void initialize();
  void step();
  /// initialize() followed by ga.n_iterations steps.
  void run();

  const std::vector<Chromosome>& population() const { return population_; }
  const Ranking& ranking() const { return ranking_; }
  const std::vector<IterationStats>& history() const { return history_; }
  const SizingReport& sizing() const { return sizing_; }
  /// FR_1 member indices, sorted by penalized cost ascending then F1.
  std::vector<std::size_t> first_front() const;

 private:
  std::size_t pick_parent(const std::vector<std::size_t>& pool);
  void evaluate_batch(std::vector<Chromosome>& batch) const;
  void record(int iteration);

  const Evaluator& evaluator_;
  PlanMode mode_;
  GaParams ga_;
  Rng rng_;
  unsigned threads_;
  SizingReport sizing_;
  std::vector<Chromosome> population_;
  Ranking ranking_;
  std::vector<IterationStats> history_;
  int iteration_ = 0;
};

}  // namespace mmplan
