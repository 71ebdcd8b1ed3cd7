/**
 * @file experiment.hpp
 * @brief Runs sweeps over (heuristic x ordering) cells and renders results.
 *
 * results CSV:  heuristic,order,z1,z2,best
 *   One block of rows per cell, cells in the order they were requested,
 *   rows sorted by z1 descending then z2 ascending. z2 has three decimals
 *   rounded half-up from the exact value. best is 1 when no vector of any
 *   cell dominates the row's vector, else 0.
 *
 * timings CSV:  heuristic,order,seconds,solutions
 *   Wall-clock per cell; kept apart so the results file is reproducible.
 */

#ifndef MOBP_EXPERIMENT_HPP
#define MOBP_EXPERIMENT_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "archive.hpp"
#include "construct.hpp"
#include "model.hpp"

namespace mobp {

inline std::optional<Heuristic> parse_heuristic(std::string_view s) {
  if (s == "best-fit") return Heuristic::BestFit;
  if (s == "random-fit") return Heuristic::RandomFit;
  return std::nullopt;
}

inline std::optional<Ordering> parse_ordering(std::string_view s) {
  if (s == "decreasing") return Ordering::DecreasingWeight;
  if (s == "increasing") return Ordering::IncreasingWeight;
  if (s == "random") return Ordering::RandomOrder;
  return std::nullopt;
}

inline constexpr Heuristic kAllHeuristics[] = {Heuristic::BestFit, Heuristic::RandomFit};
inline constexpr Ordering kAllOrderings[] = {Ordering::DecreasingWeight, Ordering::IncreasingWeight,
                                             Ordering::RandomOrder};

struct ExperimentConfig {
  std::vector<Heuristic> heuristics{std::begin(kAllHeuristics), std::end(kAllHeuristics)};
  std::vector<Ordering> orderings{std::begin(kAllOrderings), std::end(kAllOrderings)};
  Rational step{1, 10};
  int solutions_per_level = 100;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct CellResult {
  Heuristic heuristic;
  Ordering ordering;
  std::vector<ObjectiveVector> vectors;  // report order
  double seconds = 0.0;
  std::int64_t solutions = 0;
};

/// One sweep per cell, orderings outer and heuristics inner (table row order).
inline std::vector<CellResult> run_cells(const Instance& instance, const ExperimentConfig& config,
                                         const SolutionVisitor& visit = {}) {
  std::vector<CellResult> cells;
  for (Ordering ordering : config.orderings) {
    for (Heuristic heuristic : config.heuristics) {
      SweepParams params;
      params.step = config.step;
      params.solutions_per_level = config.solutions_per_level;
      params.rng_seed = config.seed;
      params.heuristic = heuristic;
      params.ordering = ordering;
      params.threads = config.threads;

      const auto start = std::chrono::steady_clock::now();
      const auto archive = run_sweep(instance, params, visit);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

      const auto levels = level_count(static_cast<std::int64_t>(instance.attribute_count()), params.step);
      cells.push_back({heuristic, ordering, archive.sorted_vectors(), elapsed.count(),
                       levels * params.solutions_per_level});
    }
  }
  return cells;
}

/// Vectors not dominated by any vector of any cell.
inline std::vector<ObjectiveVector> best_vectors(const std::vector<CellResult>& cells) {
  ParetoArchive<int> pool;
  for (const auto& cell : cells) {
    for (const auto& v : cell.vectors) pool.update(v, 0);
  }
  return pool.sorted_vectors();
}

inline void write_results_csv(std::ostream& os, const std::vector<CellResult>& cells) {
  const auto best = best_vectors(cells);
  os << "heuristic,order,z1,z2,best\n";
  for (const auto& cell : cells) {
    for (const auto& v : cell.vectors) {
      const bool is_best = std::find(best.begin(), best.end(), v) != best.end();
      os << to_string(cell.heuristic) << ',' << to_string(cell.ordering) << ',' << v.z1 << ','
         << v.z2.to_fixed(3) << ',' << (is_best ? 1 : 0) << '\n';
    }
  }
}

inline void write_timings_csv(std::ostream& os, const std::vector<CellResult>& cells) {
  os << "heuristic,order,seconds,solutions\n";
  for (const auto& cell : cells) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << cell.seconds;
    os << to_string(cell.heuristic) << ',' << to_string(cell.ordering) << ',' << secs.str() << ','
       << cell.solutions << '\n';
  }
}

/**
 * Plain-text table: one row group per ordering, one column per heuristic,
 * vectors aligned by z1. Best vectors are marked with '*'.
 */
inline void write_table(std::ostream& os, const std::vector<CellResult>& cells) {
  const auto best = best_vectors(cells);
  std::vector<Heuristic> columns;
  std::vector<Ordering> groups;
  for (const auto& cell : cells) {
    if (std::find(columns.begin(), columns.end(), cell.heuristic) == columns.end()) {
      columns.push_back(cell.heuristic);
    }
    if (std::find(groups.begin(), groups.end(), cell.ordering) == groups.end()) {
      groups.push_back(cell.ordering);
    }
  }
  constexpr int kWidth = 16;
  auto rule = [&] { os << std::string(12 + kWidth * columns.size(), '-') << '\n'; };

  rule();
  os << std::left << std::setw(12) << "order";
  for (Heuristic h : columns) os << std::setw(kWidth) << to_string(h);
  os << '\n';
  rule();
  for (Ordering o : groups) {
    std::vector<std::int64_t> z1s;
    for (const auto& cell : cells) {
      if (cell.ordering != o) continue;
      for (const auto& v : cell.vectors) z1s.push_back(v.z1);
    }
    std::sort(z1s.begin(), z1s.end(), std::greater<>());
    z1s.erase(std::unique(z1s.begin(), z1s.end()), z1s.end());
    bool first = true;
    for (std::int64_t z1 : z1s) {
      os << std::setw(12) << (first ? std::string(to_string(o)) : "");
      first = false;
      for (Heuristic h : columns) {
        std::string text;
        for (const auto& cell : cells) {
          if (cell.ordering != o || cell.heuristic != h) continue;
          for (const auto& v : cell.vectors) {
            if (v.z1 != z1) continue;
            text = v.to_string();
            if (std::find(best.begin(), best.end(), v) != best.end()) text += "*";
          }
        }
        os << std::setw(kWidth) << text;
      }
      os << '\n';
    }
    rule();
  }
  os << std::right;
}

}  // namespace mobp

#endif  // MOBP_EXPERIMENT_HPP
