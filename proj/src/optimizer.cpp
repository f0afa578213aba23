#include "mmplan/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace mmplan {

namespace {

Point uniform_point(const Rect& bounds, Rng& rng) {
  std::uniform_real_distribution<double> ux(bounds.x_min, bounds.x_max);
  std::uniform_real_distribution<double> uy(bounds.y_min, bounds.y_max);
  const double x = ux(rng);
  return {x, uy(rng)};
}

std::size_t pool_size(double fraction, std::size_t n) {
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9)), 1, n);
}

// A child W-BS takes the FAP gene of the closest W-BS in its source parent.
std::vector<std::size_t> inherit_fap_genes(const std::vector<Point>& child, const Chromosome& parent, std::size_t n_faps,
                                           Rng& rng) {
  std::vector<std::size_t> genes(child.size(), 0);
  std::uniform_int_distribution<std::size_t> any(0, n_faps == 0 ? 0 : n_faps - 1);
  for (std::size_t i = 0; i < child.size(); ++i) {
    const auto& pw = parent.deployment.wbs;
    if (pw.empty() || parent.fap_genes.size() != pw.size()) {
      genes[i] = any(rng);
      continue;
    }
    std::size_t best = 0;
    for (std::size_t j = 1; j < pw.size(); ++j) {
      if (squared_distance(child[i], pw[j]) < squared_distance(child[i], pw[best])) best = j;
    }
    genes[i] = parent.fap_genes[best];
  }
  return genes;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

InitLimits init_limits(const SizingReport& sizing) {
  InitLimits l;
  l.total_min = std::max<long>(1, sizing.n_cap);
  l.total_mid = std::max(l.total_min, sizing.n_init);
  l.jitter = std::max<long>(1, std::lround(0.2 * static_cast<double>(l.total_mid)));
  return l;
}

std::vector<Chromosome> init_population(const Scenario& scenario, const SizingReport& sizing, const GaParams& ga,
                                        PlanMode mode, Rng& rng) {
  const InitLimits l = init_limits(sizing);
  const Rect& bounds = scenario.area.bounds;
  const std::size_t n_faps = scenario.area.faps.size();
  std::uniform_int_distribution<long> jitter(-l.jitter, l.jitter);
  std::bernoulli_distribution coin(0.5);

  std::vector<Chromosome> pop(static_cast<std::size_t>(ga.n_pop));
  for (Chromosome& c : pop) {
    const long total = std::max(l.total_min, l.total_mid + jitter(rng));
    std::uniform_int_distribution<long> w_count(std::min(l.total_min, total), total);
    const long n_w = w_count(rng);
    for (long i = 0; i < total; ++i) {
      (i < n_w ? c.deployment.wbs : c.deployment.ubs).push_back(uniform_point(bounds, rng));
    }
    if (mode == PlanMode::Joint) {
      c.z.resize(n_faps);
      for (std::size_t f = 0; f < n_faps; ++f) c.z[f] = coin(rng);
      if (ga.fiber_assignment == FiberAssignmentMode::Genetic && n_faps > 0) {
        std::uniform_int_distribution<std::size_t> any(0, n_faps - 1);
        for (std::size_t b = 0; b < c.deployment.wbs.size(); ++b) c.fap_genes.push_back(any(rng));
      }
    }
  }
  return pop;
}

void evaluate_chromosome(Chromosome& c, const Evaluator& evaluator, PlanMode mode, FiberAssignmentMode fiber) {
  if (mode == PlanMode::Cell) {
    c.report = std::make_shared<const EvaluationReport>(evaluator.evaluate(c.deployment));
    return;
  }
  const Scenario& s = evaluator.scenario();
  if (fiber == FiberAssignmentMode::Genetic) {
    c.plan.z = c.z;
    c.plan.assignment = c.fap_genes;
    c.plan.assignment.resize(c.deployment.wbs.size(), kNone);
  } else {
    c.plan = repair_assignment(c.deployment.wbs, s.area.faps, s.costs.splitter_capacity, c.z);
  }
  c.report = std::make_shared<const EvaluationReport>(evaluate_joint(evaluator, c.deployment, c.plan));
}

Nsga2::Nsga2(const Evaluator& evaluator, PlanMode mode, GaParams ga, std::uint64_t seed, unsigned threads)
    : evaluator_(evaluator),
      mode_(mode),
      ga_(ga),
      rng_(seed),
      threads_(std::max(1u, threads)),
      sizing_(compute_sizing(evaluator.scenario())) {}

void Nsga2::evaluate_batch(std::vector<Chromosome>& batch) const {
  const std::size_t workers = std::min<std::size_t>(threads_, batch.size());
  if (workers <= 1) {
    for (Chromosome& c : batch) evaluate_chromosome(c, evaluator_, mode_, ga_.fiber_assignment);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < batch.size(); i = next++) {
        evaluate_chromosome(batch[i], evaluator_, mode_, ga_.fiber_assignment);
      }
    });
  }
  for (auto& th : pool) th.join();
}

void Nsga2::initialize() {
  population_ = init_population(evaluator_.scenario(), sizing_, ga_, mode_, rng_);
  evaluate_batch(population_);
  std::vector<ObjectiveVector> objs;
  for (const auto& c : population_) objs.push_back(c.objectives());
  ranking_ = rank_population(objs);
  history_.clear();
  iteration_ = 0;
  record(0);
}

std::size_t Nsga2::pick_parent(const std::vector<std::size_t>& pool) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const std::size_t a = pool[pick(rng_)];
  if (ga_.parent_selection == ParentSelection::Uniform) return a;
  const std::size_t b = pool[pick(rng_)];
  const auto better = [&](std::size_t x, std::size_t y) {
    if (ranking_.front_of[x] != ranking_.front_of[y]) return ranking_.front_of[x] < ranking_.front_of[y];
    return ranking_.crowding[x] > ranking_.crowding[y];
  };
  return better(b, a) ? b : a;
}

void Nsga2::step() {
  const Scenario& s = evaluator_.scenario();
  const Rect& bounds = s.area.bounds;
  const std::size_t n = population_.size();
  const std::size_t n_faps = s.area.faps.size();
  const bool joint = mode_ == PlanMode::Joint;
  const bool genetic_c = joint && ga_.fiber_assignment == FiberAssignmentMode::Genetic;

  const std::vector<std::size_t> order = survivor_order(ranking_);
  const std::size_t n_c = pool_size(ga_.crossover_pool_fraction, n);
  const std::size_t n_m = pool_size(ga_.mutation_pool_fraction, n);
  const std::vector<std::size_t> crossover_pool(order.begin(), order.begin() + static_cast<long>(n_c));
  const std::vector<std::size_t> mutation_pool(order.begin(), order.begin() + static_cast<long>(n_m));

  std::vector<Chromosome> offspring;
  offspring.reserve(n_c + n_m + 1);
  while (offspring.size() < n_c) {
    const Chromosome& a = population_[pick_parent(crossover_pool)];
    const Chromosome& b = population_[pick_parent(crossover_pool)];
    auto [d1, d2] = real_crossover(a.deployment, b.deployment, ga_.epsilon, ga_.dim_policy, bounds, rng_);
    Chromosome c1;
    Chromosome c2;
    c1.deployment = std::move(d1);
    c2.deployment = std::move(d2);
    if (joint) {
      c1.z = binary_crossover(a.z, b.z, rng_);
      c2.z = binary_crossover(a.z, b.z, rng_);
      if (genetic_c) {
        c1.fap_genes = inherit_fap_genes(c1.deployment.wbs, a, n_faps, rng_);
        c2.fap_genes = inherit_fap_genes(c2.deployment.wbs, b, n_faps, rng_);
      }
    }
    offspring.push_back(std::move(c1));
    if (offspring.size() < n_c) offspring.push_back(std::move(c2));
  }

  const MutationLimits limits{static_cast<std::size_t>(std::max<long>(1, sizing_.n_cap))};
  for (std::size_t i = 0; i < n_m; ++i) {
    const Chromosome& p = population_[pick_parent(mutation_pool)];
    Chromosome m;
    m.deployment = real_mutation(p.deployment, ga_.mutation_rate, bounds, ga_.structural_mutation_prob, limits, rng_);
    if (joint) {
      m.z = binary_mutation(p.z, rng_);
      if (genetic_c) {
        m.fap_genes = inherit_fap_genes(m.deployment.wbs, p, n_faps, rng_);
        if (!m.fap_genes.empty() && n_faps > 0) {
          std::uniform_int_distribution<std::size_t> which(0, m.fap_genes.size() - 1);
          std::uniform_int_distribution<std::size_t> any(0, n_faps - 1);
          const std::size_t w = which(rng_);
          m.fap_genes[w] = any(rng_);
        }
      }
    }
    offspring.push_back(std::move(m));
  }

  evaluate_batch(offspring);

  std::vector<Chromosome> combined = std::move(population_);
  combined.insert(combined.end(), std::make_move_iterator(offspring.begin()),
                  std::make_move_iterator(offspring.end()));
  std::vector<ObjectiveVector> objs;
  objs.reserve(combined.size());
  for (const auto& c : combined) objs.push_back(c.objectives());
  const std::vector<std::size_t> keep = survivor_order(rank_population(objs));

  population_.clear();
  objs.clear();
  for (std::size_t i = 0; i < n && i < keep.size(); ++i) {
    population_.push_back(std::move(combined[keep[i]]));
    objs.push_back(population_.back().objectives());
  }
  ranking_ = rank_population(objs);
  record(++iteration_);
}

void Nsga2::run() {
  initialize();
  for (int i = 0; i < ga_.n_iterations; ++i) step();
}

std::vector<std::size_t> Nsga2::first_front() const {
  if (ranking_.fronts.empty()) return {};
  std::vector<std::size_t> f = ranking_.fronts.front();
  std::stable_sort(f.begin(), f.end(), [&](std::size_t a, std::size_t b) {
    const auto& oa = population_[a].objectives();
    const auto& ob = population_[b].objectives();
    if (oa[1] != ob[1]) return oa[1] < ob[1];
    return oa[0] < ob[0];
  });
  return f;
}

void Nsga2::record(int iteration) {
  IterationStats st;
  st.iteration = iteration;
  st.front1 = ranking_.fronts.empty() ? 0 : ranking_.fronts.front().size();
  std::vector<double> f1;
  std::vector<double> f2;
  for (const auto& c : population_) {
    if (!c.report->feasible()) continue;
    f1.push_back(static_cast<double>(c.report->objectives.f1));
    f2.push_back(c.report->objectives.f2 + c.report->objectives.f3);
  }
  st.feasible = f1.size();
  if (!f1.empty()) {
    st.best_f1 = static_cast<long>(*std::min_element(f1.begin(), f1.end()));
    st.best_f2 = *std::min_element(f2.begin(), f2.end());
    st.median_f1 = median(f1);
    st.median_f2 = median(f2);
  }
  history_.push_back(st);
}

}  // namespace mmplan
