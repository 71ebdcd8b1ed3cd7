#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "mobp/construct.hpp"
#include "mobp/instances.hpp"
#include "mobp/oracle.hpp"
#include "support/reference.hpp"

namespace mobp {
namespace {

std::vector<std::vector<std::size_t>> members(const Solution& s) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& bin : s.bins()) out.push_back(bin.members());
  return out;
}

Instance random_small_instance(Rng& rng, std::size_t n, int attributes, std::int64_t capacity = 100) {
  std::vector<Instance::ItemSpec> specs;
  for (std::size_t i = 0; i < n; ++i) {
    specs.push_back({rng.uniform(1, capacity), std::string(1, static_cast<char>('A' + rng.below(attributes)))});
  }
  return Instance(capacity, specs);
}

TEST(OrderItems, WeightOrders) {
  Instance inst(10, {{3, "A"}, {9, "A"}, {5, "A"}});
  Rng rng(1);
  EXPECT_EQ(order_items(inst, Ordering::DecreasingWeight, rng), (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_EQ(order_items(inst, Ordering::IncreasingWeight, rng), (std::vector<std::size_t>{0, 2, 1}));
}

TEST(OrderItems, TiesByAscendingId) {
  Instance inst(10, {{4, "A"}, {4, "B"}, {7, "A"}, {4, "C"}});
  Rng rng(1);
  EXPECT_EQ(order_items(inst, Ordering::DecreasingWeight, rng), (std::vector<std::size_t>{2, 0, 1, 3}));
  EXPECT_EQ(order_items(inst, Ordering::IncreasingWeight, rng), (std::vector<std::size_t>{0, 1, 3, 2}));
}

TEST(OrderItems, RandomOrderIsSeededPermutation) {
  const Instance inst = generate(50, 3);
  Rng a(42), b(42);
  const auto pa = order_items(inst, Ordering::RandomOrder, a);
  EXPECT_EQ(pa, order_items(inst, Ordering::RandomOrder, b));
  auto sorted = pa;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) ASSERT_EQ(sorted[i], i);
  Rng c(43);
  EXPECT_NE(pa, order_items(inst, Ordering::RandomOrder, c));
}

TEST(DrawUMax, IntegralLevelsAreCertain) {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(draw_u_max(Rational(1), rng), 1);
    ASSERT_EQ(draw_u_max(Rational(2), rng), 2);
  }
  EXPECT_THROW(draw_u_max(Rational(1, 2), rng), std::invalid_argument);
}

TEST(DrawUMax, FractionalLevelFollowsBernoulliLaw) {
  Rng rng(2024);
  const Rational u(13, 10);
  int ceil_count = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const auto v = draw_u_max(u, rng);
    ASSERT_TRUE(v == 1 || v == 2);
    ceil_count += v == 2 ? 1 : 0;
  }
  const double fraction = static_cast<double>(ceil_count) / draws;
  EXPECT_GE(fraction, 0.28);
  EXPECT_LE(fraction, 0.32);
}

TEST(BestFitBin, PicksTightestResidual) {
  // residuals 5, 3, 10 under c = 12
  Instance inst(12, {{7, "A"}, {9, "A"}, {2, "A"}, {3, "A"}});
  Solution s(inst);
  for (std::size_t i = 0; i < 3; ++i) s.open_bin(inst.item(i));
  EXPECT_EQ(best_fit_bin(s, inst.item(3), 1), std::optional<std::size_t>(1));
}

TEST(BestFitBin, TiesGoToLowestIndex) {
  Instance inst(10, {{6, "A"}, {6, "A"}, {2, "A"}});
  Solution s(inst);
  s.open_bin(inst.item(0));
  s.open_bin(inst.item(1));
  EXPECT_EQ(best_fit_bin(s, inst.item(2), 1), std::optional<std::size_t>(0));
}

TEST(BestFitBin, NewBinWhenNothingFits) {
  Instance inst(10, {{6, "A"}, {7, "A"}, {5, "A"}});
  Solution s(inst);
  s.open_bin(inst.item(0));
  s.open_bin(inst.item(1));
  EXPECT_EQ(best_fit_bin(s, inst.item(2), 5), std::nullopt);
}

TEST(BestFitBin, AttributeCapExcludesMixing) {
  // c = 10, items (4,A), (3,B), (3,B), u_max = 1 throughout.
  Instance inst(10, {{4, "A"}, {3, "B"}, {3, "B"}});
  Solution s(inst);
  ASSERT_EQ(best_fit_bin(s, inst.item(0), 1), std::nullopt);
  s.open_bin(inst.item(0));
  EXPECT_EQ(best_fit_bin(s, inst.item(1), 1), std::nullopt);  // {A} bin excluded
  EXPECT_EQ(best_fit_bin(s, inst.item(1), 2), std::optional<std::size_t>(0));
  s.open_bin(inst.item(1));
  EXPECT_EQ(best_fit_bin(s, inst.item(2), 1), std::optional<std::size_t>(1));  // the {B} bin
  s.assign(1, inst.item(2));
  const ObjectiveVector z = evaluate(s);
  EXPECT_EQ(z, (ObjectiveVector{2, Rational(1)}));

  // The exhaustive oracle confirms (2, 1.000) is the efficient homogeneous outcome.
  const auto exact = exact_pareto(inst);
  EXPECT_TRUE(exact.contains(z));
  EXPECT_EQ(exact.sorted_vectors(), (std::vector<ObjectiveVector>{{2, Rational(1)}, {1, Rational(2)}}));
}

TEST(RandomFitBin, SingleAndNoCandidate) {
  Instance inst(10, {{6, "A"}, {3, "B"}, {3, "A"}, {9, "A"}});
  Solution s(inst);
  s.open_bin(inst.item(0));
  s.open_bin(inst.item(1));
  Rng rng(8);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(random_fit_bin(s, inst.item(2), 1, rng), std::optional<std::size_t>(0));
  EXPECT_EQ(random_fit_bin(s, inst.item(3), 5, rng), std::nullopt);
}

TEST(RandomFitBin, UniformAmongTwoCandidates) {
  Instance inst(10, {{2, "A"}, {5, "A"}, {1, "A"}});
  Solution s(inst);
  s.open_bin(inst.item(0));
  s.open_bin(inst.item(1));
  Rng rng(77);
  const int trials = 10000;
  int first = 0;
  for (int i = 0; i < trials; ++i) {
    const auto b = random_fit_bin(s, inst.item(2), 1, rng);
    ASSERT_TRUE(b.has_value());
    first += *b == 0 ? 1 : 0;
  }
  const double share = static_cast<double>(first) / trials;
  EXPECT_GE(share, 0.48);
  EXPECT_LE(share, 0.52);
}

TEST(ConstructSolution, LevelOneIsHomogeneous) {
  for (Heuristic h : {Heuristic::BestFit, Heuristic::RandomFit}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Instance inst = generate(100, seed);
      SweepParams params;
      params.heuristic = h;
      params.ordering = Ordering::RandomOrder;
      Rng rng(seed);
      const Solution s = construct_solution(inst, params, Rational(1), rng);
      ASSERT_EQ(validate(s), std::nullopt);
      ASSERT_EQ(evaluate_z2(s), Rational(1));
    }
  }
}

TEST(ConstructSolution, SlackCapReproducesClassicBestFit) {
  Rng gen(123);
  for (int round = 0; round < 50; ++round) {
    const Instance inst = random_small_instance(gen, 40, 4);
    const auto u_bar = Rational(static_cast<std::int64_t>(inst.attribute_count()));
    for (Ordering o : {Ordering::DecreasingWeight, Ordering::IncreasingWeight, Ordering::RandomOrder}) {
      SweepParams params;
      params.ordering = o;
      Rng order_rng(static_cast<std::uint64_t>(round));
      const auto order = order_items(inst, o, order_rng);
      Rng rng(1);
      const Solution s = construct_solution(inst, params, u_bar, order, rng);
      ASSERT_EQ(members(s), reference::classic_best_fit(inst, order)) << "round " << round;
    }
  }
}

TEST(ConstructSolution, DeterministicPerSeed) {
  const Instance inst = generate(100, 4);
  for (Heuristic h : {Heuristic::BestFit, Heuristic::RandomFit}) {
    SweepParams params;
    params.heuristic = h;
    params.ordering = Ordering::RandomOrder;
    Rng a(99), b(99);
    EXPECT_EQ(construct_solution(inst, params, Rational(27, 10), a),
              construct_solution(inst, params, Rational(27, 10), b));
  }
}

TEST(LevelCount, MatchesDirectLoop) {
  for (std::int64_t u_bar = 1; u_bar <= 6; ++u_bar) {
    for (const Rational step : {Rational(1, 10), Rational(1, 3), Rational(1, 4), Rational(1), Rational(3, 2),
                                Rational(7, 10)}) {
      std::int64_t loops = 0;
      LevelState state{Rational(1), u_bar};
      do {
        ++loops;
        state.u = state.u + step;
      } while (!state.done());
      ASSERT_EQ(level_count(u_bar, step), loops) << u_bar << " " << step;
    }
  }
  EXPECT_EQ(level_count(5, Rational(1, 10)), 41);
}

TEST(RunSweep, SingleAttributeRunsOneLevel) {
  Instance inst(100, {{50, "A"}, {60, "A"}, {40, "A"}, {30, "A"}});
  SweepParams params;
  params.solutions_per_level = 7;
  int visited = 0;
  const auto archive = run_sweep(inst, params, [&](const Solution& s, const ObjectiveVector& z) {
    ++visited;
    EXPECT_EQ(validate(s), std::nullopt);
    EXPECT_EQ(z.z2, Rational(1));
  });
  EXPECT_EQ(visited, 7);
  EXPECT_EQ(archive.sorted_vectors(), (std::vector<ObjectiveVector>{{2, Rational(1)}}));
}

TEST(RunSweep, VisitsEveryLevelAndRepetition) {
  const Instance inst = generate(20, 1);
  SweepParams params;
  params.solutions_per_level = 3;
  params.step = Rational(1, 4);
  int visited = 0;
  run_sweep(inst, params, [&](const Solution&, const ObjectiveVector&) { ++visited; });
  EXPECT_EQ(visited, 3 * level_count(static_cast<std::int64_t>(inst.attribute_count()), params.step));
}

TEST(RunSweep, BenchmarkArchiveHasHomogeneousExtreme) {
  const Instance inst = generate(100, 7);
  SweepParams params;
  params.rng_seed = 7;
  const auto archive = run_sweep(inst, params);
  const auto vectors = archive.sorted_vectors();
  ASSERT_FALSE(vectors.empty());
  EXPECT_EQ(vectors.front().z2, Rational(1));
  for (const auto& a : vectors) {
    for (const auto& b : vectors) ASSERT_FALSE(dominates(a, b));
  }
  for (const auto& entry : archive.entries()) {
    ASSERT_EQ(validate(entry.payload), std::nullopt);
    ASSERT_EQ(evaluate(entry.payload), entry.vector);
  }
}

TEST(RunSweep, TwoHundredItemArchiveShape) {
  const Instance inst = generate(200, 7);
  SweepParams params;
  params.rng_seed = 7;
  const auto vectors = run_sweep(inst, params).sorted_vectors();
  EXPECT_GE(vectors.size(), 2u);
  EXPECT_LE(vectors.size(), 4u);
  const std::int64_t lb = inst.trivial_lower_bound();
  EXPECT_GE(vectors.back().z1, lb + 1);
  EXPECT_LE(vectors.back().z1, lb + 2);
}

TEST(RunSweep, ThreadCountDoesNotChangeResult) {
  const Instance inst = generate(60, 2);
  for (Heuristic h : {Heuristic::BestFit, Heuristic::RandomFit}) {
    SweepParams params;
    params.heuristic = h;
    params.ordering = Ordering::RandomOrder;
    params.solutions_per_level = 10;
    params.rng_seed = 5;
    const auto serial = run_sweep(inst, params);
    params.threads = 3;
    const auto parallel = run_sweep(inst, params);
    ASSERT_EQ(serial.size(), parallel.size());
    for (const auto& entry : serial.entries()) {
      const auto it = std::find_if(parallel.entries().begin(), parallel.entries().end(),
                                   [&](const auto& e) { return e.vector == entry.vector; });
      ASSERT_NE(it, parallel.entries().end());
      EXPECT_EQ(it->payload, entry.payload);
    }
  }
}

TEST(RunSweep, RejectsBadParameters) {
  const Instance inst = generate(10, 1);
  SweepParams params;
  params.step = Rational(0);
  EXPECT_THROW(run_sweep(inst, params), std::invalid_argument);
  params.step = Rational(1, 10);
  params.solutions_per_level = 0;
  EXPECT_THROW(run_sweep(inst, params), std::invalid_argument);
}

}  // namespace
}  // namespace mobp
