#include <doctest.h>

#include <algorithm>

#include "mmplan/optimizer.hpp"
#include "support.hpp"

using namespace mmplan;

namespace {

Evaluator small_evaluator(const std::string& name, double pixel, long scale_users = 0) {
  Scenario s = load_scenario(mmtest::data_path(name));
  if (scale_users > 0) {
    long total = 0;
    for (const auto& sub : s.area.subareas) total += *sub.user_count;
    for (auto& sub : s.area.subareas) {
      sub.user_count = *sub.user_count * scale_users / total;
      sub.lambda_per_km2.reset();
    }
  }
  return Evaluator(s, sample_users(s, s.area.rng_seed), build_pixel_grid(s, pixel), {});
}

GaParams small_ga(int pop, int iters) {
  GaParams g;
  g.n_pop = pop;
  g.n_iterations = iters;
  return g;
}

}  // namespace

TEST_CASE("initial population size, counts and determinism") {
  const Scenario s = load_scenario(mmtest::data_path("scenario1"));
  const SizingReport sizing = compute_sizing(s);
  GaParams ga;
  Rng rng(1);
  const auto pop = init_population(s, sizing, ga, PlanMode::Cell, rng);
  REQUIRE(pop.size() == 100);
  double mean_total = 0.0;
  for (const auto& c : pop) {
    CHECK(static_cast<long>(c.deployment.size()) >= std::max<long>(1, sizing.n_cap));
    CHECK(static_cast<long>(c.deployment.wbs.size()) >= std::min<long>(sizing.n_cap, c.deployment.size()));
    CHECK(c.z.empty());
    mean_total += static_cast<double>(c.deployment.size());
  }
  mean_total /= 100.0;
  CHECK(mean_total == doctest::Approx(10.0).epsilon(0.1));

  Rng again(1);
  const auto pop2 = init_population(s, sizing, ga, PlanMode::Cell, again);
  for (std::size_t i = 0; i < pop.size(); ++i) CHECK(pop2[i].deployment == pop[i].deployment);
  Rng joint(1);
  for (const auto& c : init_population(s, sizing, ga, PlanMode::Joint, joint)) {
    CHECK(c.z.size() == s.area.faps.size());
  }
}

TEST_CASE("zero iterations returns the ranked initial population") {
  const Evaluator ev = small_evaluator("scenario1", 25.0, 100);
  Nsga2 ga(ev, PlanMode::Cell, small_ga(20, 0), 3);
  ga.run();
  CHECK(ga.population().size() == 20);
  CHECK(ga.history().size() == 1);
  CHECK(ga.ranking().front_of.size() == 20);
  for (const auto& c : ga.population()) CHECK(c.evaluated());
}

TEST_CASE("generations keep ranking structure and the trade-off shape") {
  const Evaluator ev = small_evaluator("scenario1", 25.0, 200);
  Nsga2 ga(ev, PlanMode::Cell, small_ga(30, 25), 5);
  ga.initialize();
  for (int it = 0; it < 25; ++it) {
    std::vector<ObjectiveVector> before;
    for (std::size_t i : ga.ranking().fronts[0]) before.push_back(ga.population()[i].objectives());
    ga.step();
    const auto& pop = ga.population();
    const auto& r = ga.ranking();
    CHECK(pop.size() == 30);
    for (std::size_t a = 0; a < pop.size(); ++a) {
      for (std::size_t b = 0; b < pop.size(); ++b) {
        if (r.front_of[a] < r.front_of[b]) CHECK_FALSE(dominates(pop[b].objectives(), pop[a].objectives()));
      }
    }
    // Elitism: while FR_1 fits in the population, every old FR_1 point survives
    // or is dominated by the new FR_1.
    if (r.fronts[0].size() >= pop.size()) continue;
    for (const auto& old : before) {
      bool kept = false;
      for (std::size_t i : r.fronts[0]) {
        const auto& now = pop[i].objectives();
        kept = kept || now == old || dominates(now, old);
      }
      CHECK(kept);
    }
  }
  const auto front = ga.first_front();
  for (std::size_t k = 1; k < front.size(); ++k) {
    const auto& prev = ga.population()[front[k - 1]].objectives();
    const auto& cur = ga.population()[front[k]].objectives();
    CHECK(cur[1] >= prev[1]);
    CHECK(cur[0] <= prev[0]);
  }
  CHECK(ga.history().size() == 26);
}

TEST_CASE("parallel and serial runs are identical") {
  const Evaluator ev = small_evaluator("scenario1", 25.0, 150);
  Nsga2 serial(ev, PlanMode::Joint, small_ga(16, 6), 11, 1);
  Nsga2 parallel(ev, PlanMode::Joint, small_ga(16, 6), 11, 4);
  serial.run();
  parallel.run();
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(serial.population()[i].deployment == parallel.population()[i].deployment);
    CHECK(serial.population()[i].objectives() == parallel.population()[i].objectives());
    CHECK(serial.population()[i].z == parallel.population()[i].z);
  }
}

TEST_CASE("joint mode decodes a valid fiber plan") {
  const Evaluator ev = small_evaluator("scenario1", 25.0, 100);
  Nsga2 ga(ev, PlanMode::Joint, small_ga(16, 4), 2);
  ga.run();
  const auto& faps = ev.scenario().area.faps;
  for (const auto& c : ga.population()) {
    CHECK(c.z.size() == faps.size());
    CHECK(c.plan.assignment.size() == c.deployment.wbs.size());
    for (std::size_t b = 0; b < c.plan.assignment.size(); ++b) {
      const std::size_t f = c.plan.assignment[b];
      if (f == kNone) continue;
      CHECK(c.z[f]);       // repair only uses allowed FAPs
      CHECK(c.plan.z[f]);  // and selects what it uses
    }
    CHECK(c.report->objectives.f3 >= 0.0);
  }
}

TEST_CASE("genetic fiber assignment runs and reports its violations") {
  const Evaluator ev = small_evaluator("scenario1", 25.0, 100);
  GaParams g = small_ga(16, 4);
  g.fiber_assignment = FiberAssignmentMode::Genetic;
  Nsga2 ga(ev, PlanMode::Joint, g, 2);
  ga.run();
  for (const auto& c : ga.population()) {
    CHECK(c.fap_genes.size() == c.deployment.wbs.size());
    const auto& v = c.report->violations;
    CHECK(std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.name == "fap_capacity"; }));
  }
}

TEST_CASE("tournament selection and max dimension policy run") {
  const Evaluator ev = small_evaluator("scenario1", 25.0, 100);
  GaParams g = small_ga(12, 3);
  g.parent_selection = ParentSelection::Tournament;
  g.dim_policy = DimPolicy::MaxDim;
  Nsga2 ga(ev, PlanMode::Cell, g, 4);
  ga.run();
  CHECK(ga.population().size() == 12);
  CHECK_FALSE(ga.first_front().empty());
}
