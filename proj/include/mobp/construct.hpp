/**
 * @file construct.hpp
 * @brief Heterogeneousness-controlled Best-Fit / Random-Fit construction
 *        and the level sweep that builds a Pareto archive.
 *
 * The sweep raises a level u from 1 to the number of attributes in steps
 * of `step`. At each level it constructs `solutions_per_level` packings.
 * For every item a cap u_max is drawn by randomized rounding of u, and the
 * item may only enter bins whose distinct-attribute count stays within
 * the cap after insertion. Every packing is offered to the archive.
 */

#ifndef MOBP_CONSTRUCT_HPP
#define MOBP_CONSTRUCT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "archive.hpp"
#include "model.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace mobp {

enum class Heuristic { BestFit, RandomFit };
enum class Ordering { DecreasingWeight, IncreasingWeight, RandomOrder };

inline std::string_view to_string(Heuristic h) {
  return h == Heuristic::BestFit ? "best-fit" : "random-fit";
}

inline std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::DecreasingWeight: return "decreasing";
    case Ordering::IncreasingWeight: return "increasing";
    case Ordering::RandomOrder: return "random";
  }
  return "?";
}

struct SweepParams {
  Rational step{1, 10};
  int solutions_per_level = 100;
  std::uint64_t rng_seed = 0;
  Heuristic heuristic = Heuristic::BestFit;
  Ordering ordering = Ordering::DecreasingWeight;
  /// Worker threads for the (level, repetition) grid; the result does not depend on it.
  unsigned threads = 1;

  /// Throws std::invalid_argument on a non-positive step or repetition count.
  void check() const {
    if (step <= Rational(0)) throw std::invalid_argument("step must be positive");
    if (solutions_per_level < 1) throw std::invalid_argument("solutions per level must be >= 1");
  }
  /// Steps above 1 are legal but skip integer levels.
  [[nodiscard]] bool step_is_unusual() const { return step > Rational(1); }
};

/// Position of the sweep: current level u and the instance's maximum
/// heterogeneousness u_bar (number of distinct attributes).
struct LevelState {
  Rational u{1};
  std::int64_t u_bar = 1;

  [[nodiscard]] bool done() const { return u > Rational(u_bar); }
};

/// Number of levels 1, 1+s, 1+2s, ... not exceeding u_bar.
inline std::int64_t level_count(std::int64_t u_bar, const Rational& step) {
  return ((Rational(u_bar - 1) * Rational(step.den(), step.num())).floor()) + 1;
}

/**
 * Item permutation. Weight orders break ties by ascending id; RandomOrder
 * is a uniform shuffle drawn from `rng`.
 */
inline std::vector<std::size_t> order_items(const Instance& instance, Ordering ordering, Rng& rng) {
  std::vector<std::size_t> ids(instance.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  const auto& items = instance.items();
  switch (ordering) {
    case Ordering::DecreasingWeight:
      std::stable_sort(ids.begin(), ids.end(),
                       [&](std::size_t a, std::size_t b) { return items[a].weight > items[b].weight; });
      break;
    case Ordering::IncreasingWeight:
      std::stable_sort(ids.begin(), ids.end(),
                       [&](std::size_t a, std::size_t b) { return items[a].weight < items[b].weight; });
      break;
    case Ordering::RandomOrder:
      rng.shuffle(std::span<std::size_t>(ids));
      break;
  }
  return ids;
}

/// floor(u) with probability 1 - frac(u), ceil(u) with probability frac(u).
inline std::int64_t draw_u_max(const Rational& u, Rng& rng) {
  if (u < Rational(1)) throw std::invalid_argument("draw_u_max: level must be >= 1");
  if (u.is_integer()) return u.num();
  return rng.bernoulli(u.fraction()) ? u.ceil() : u.floor();
}

/// True if `item` fits bin `bin` by capacity and keeps its heterogeneousness <= u_max.
inline bool admits(const Solution& partial, std::size_t bin, const Item& item, std::int64_t u_max) {
  const Bin& b = partial.bins()[bin];
  return b.load() + item.weight <= partial.instance().capacity() &&
         static_cast<std::int64_t>(b.heterogeneousness_with(item.attribute)) <= u_max;
}

/**
 * Best-Fit choice: the admitting bin with the least residual capacity,
 * lowest index on ties. nullopt means the item goes to a new bin.
 */
inline std::optional<std::size_t> best_fit_bin(const Solution& partial, const Item& item,
                                                std::int64_t u_max) {
  std::optional<std::size_t> best;
  std::int64_t best_residual = 0;
  for (std::size_t b = 0; b < partial.bins().size(); ++b) {
    if (!admits(partial, b, item, u_max)) continue;
    const std::int64_t residual = partial.residual(b);
    if (!best || residual < best_residual) {
      best = b;
      best_residual = residual;
    }
  }
  return best;
}

/// Random-Fit choice: uniform among admitting bins; nullopt if none admits.
inline std::optional<std::size_t> random_fit_bin(const Solution& partial, const Item& item,
                                                  std::int64_t u_max, Rng& rng) {
  std::vector<std::size_t> feasible;
  for (std::size_t b = 0; b < partial.bins().size(); ++b) {
    if (admits(partial, b, item, u_max)) feasible.push_back(b);
  }
  if (feasible.empty()) return std::nullopt;
  return feasible[rng.below(feasible.size())];
}

/// Builds one packing at level u, visiting items in `order`.
inline Solution construct_solution(const Instance& instance, const SweepParams& params,
                                   const Rational& u, std::span<const std::size_t> order, Rng& rng) {
  Solution solution(instance);
  for (std::size_t id : order) {
    const Item& item = instance.item(id);
    const std::int64_t u_max = draw_u_max(u, rng);
    const auto bin = params.heuristic == Heuristic::BestFit ? best_fit_bin(solution, item, u_max)
                                                            : random_fit_bin(solution, item, u_max, rng);
    if (bin) {
      solution.assign(*bin, item);
    } else {
      solution.open_bin(item);
    }
  }
  return solution;
}

/// Builds one packing at level u; the item order is drawn from `rng` first.
inline Solution construct_solution(const Instance& instance, const SweepParams& params,
                                   const Rational& u, Rng& rng) {
  const auto order = order_items(instance, params.ordering, rng);
  return construct_solution(instance, params, u, order, rng);
}

using SolutionVisitor = std::function<void(const Solution&, const ObjectiveVector&)>;

/**
 * Runs the full level sweep and returns the archive of non-dominated packings.
 *
 * Packing (k, m), the m-th repetition at level u = 1 + k*step, uses
 * Rng::substream(rng_seed, k, m) for its item order and all draws. Tasks
 * are folded into the archive in (k, m) order; with threads > 1 the grid
 * is split into contiguous chunks whose archives are merged in chunk
 * order, which yields the same vectors and witnesses as the serial fold.
 *
 * `visit`, when set, sees every constructed packing. It may be called
 * from worker threads.
 */
inline ParetoArchive<Solution> run_sweep(const Instance& instance, const SweepParams& params,
                                         const SolutionVisitor& visit = {}) {
  params.check();
  for (const auto& item : instance.items()) Instance::check_weight(item.weight, instance.capacity(), 0);

  const auto u_bar = static_cast<std::int64_t>(instance.attribute_count());
  const std::int64_t levels = level_count(u_bar, params.step);
  const std::int64_t reps = params.solutions_per_level;
  const std::int64_t tasks = levels * reps;

  auto run_range = [&](std::int64_t begin, std::int64_t end) {
    ParetoArchive<Solution> archive;
    for (std::int64_t t = begin; t < end; ++t) {
      const std::int64_t k = t / reps;
      const Rational u = Rational(1) + Rational(k) * params.step;
      Rng rng = Rng::substream(params.rng_seed, static_cast<std::uint64_t>(k),
                               static_cast<std::uint64_t>(t % reps));
      Solution solution = construct_solution(instance, params, u, rng);
      const ObjectiveVector z = evaluate(solution);
      if (visit) visit(solution, z);
      archive.update(z, std::move(solution));
    }
    return archive;
  };

  const auto workers = static_cast<std::int64_t>(std::clamp<unsigned>(params.threads, 1, 256));
  if (workers == 1 || tasks < 2) return run_range(0, tasks);

  std::vector<ParetoArchive<Solution>> partial(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    for (std::int64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        partial[static_cast<std::size_t>(w)] = run_range(tasks * w / workers, tasks * (w + 1) / workers);
      });
    }
  }
  ParetoArchive<Solution> archive;
  for (const auto& p : partial) archive.absorb(p);
  return archive;
}

}  // namespace mobp

#endif  // MOBP_CONSTRUCT_HPP
