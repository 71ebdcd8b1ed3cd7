/**
 * @file oracle.hpp
 * @brief Exact Pareto set of tiny instances by exhaustive enumeration.
 */

#ifndef MOBP_ORACLE_HPP
#define MOBP_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "archive.hpp"
#include "model.hpp"

namespace mobp {

inline constexpr std::size_t kDefaultEnumerationCap = 10;

class OracleLimitError : public std::invalid_argument {
 public:
  OracleLimitError(std::size_t n, std::size_t cap)
      : std::invalid_argument("exact enumeration refused: instance has " + std::to_string(n) +
                              " items, cap is " + std::to_string(cap)) {}
};

namespace detail {

// Restricted-growth enumeration: item i joins one of the blocks opened by
// items 0..i-1 or opens the next block. Blocks that would overflow the
// capacity are pruned.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(const Instance& instance)
      : instance_(instance),
        block_of_(instance.size(), 0),
        blocks_(instance.size(), Block{0, std::vector<int>(instance.attribute_count(), 0)}) {}

  ParetoArchive<Solution> run() {
    descend(0);
    return std::move(archive_);
  }

 private:
  struct Block {
    std::int64_t load = 0;
    std::vector<int> counts;
  };

  void descend(std::size_t i) {
    if (i == instance_.size()) {
      record();
      return;
    }
    const Item& item = instance_.item(i);
    const std::size_t a = item.attribute.value;
    // Blocks [0, used_) are non-empty; block used_ is the next fresh one.
    const std::size_t limit = used_;
    for (std::size_t b = 0; b <= limit; ++b) {
      Block& block = blocks_[b];
      if (block.load + item.weight > instance_.capacity()) continue;
      if (b == limit) ++used_;
      block.load += item.weight;
      const bool new_attribute = block.counts[a]++ == 0;
      if (new_attribute) ++heterogeneity_;
      block_of_[i] = b;
      descend(i + 1);
      if (new_attribute) --heterogeneity_;
      --block.counts[a];
      block.load -= item.weight;
      if (b == limit) --used_;
    }
  }

  void record() {
    const auto used = static_cast<std::int64_t>(used_);
    const ObjectiveVector z{used, Rational(heterogeneity_, used)};
    // Only build the witness when the vector can enter the archive.
    for (const auto& entry : archive_.entries()) {
      if (weakly_dominates(entry.vector, z)) return;
    }
    Solution solution(instance_);
    std::vector<std::size_t> bin_index(used_, SIZE_MAX);  // block -> bin
    for (std::size_t id = 0; id < instance_.size(); ++id) {
      auto& slot = bin_index[block_of_[id]];
      if (slot == SIZE_MAX) {
        slot = solution.open_bin(instance_.item(id));
      } else {
        solution.assign(slot, instance_.item(id));
      }
    }
    archive_.update(z, std::move(solution));
  }

  const Instance& instance_;
  std::vector<std::size_t> block_of_;
  std::vector<Block> blocks_;  // fixed size n, never reallocated
  std::size_t used_ = 0;
  std::int64_t heterogeneity_ = 0;
  ParetoArchive<Solution> archive_;
};

}  // namespace detail

/**
 * Exact non-dominated set over all capacity-feasible packings, one witness
 * per vector. Bins are unlabeled, so each set partition is visited once.
 * Throws OracleLimitError when the instance has more than `cap` items.
 */
inline ParetoArchive<Solution> exact_pareto(const Instance& instance,
                                            std::size_t cap = kDefaultEnumerationCap) {
  if (instance.size() > cap) throw OracleLimitError(instance.size(), cap);
  return detail::PartitionEnumerator(instance).run();
}

}  // namespace mobp

#endif  // MOBP_ORACLE_HPP
