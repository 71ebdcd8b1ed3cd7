/**
 * @file archive.hpp
 * @brief Non-dominated archive of evaluated packings.
 */

#ifndef MOBP_ARCHIVE_HPP
#define MOBP_ARCHIVE_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "model.hpp"

namespace mobp {

/**
 * Mutable set of mutually non-dominated objective vectors, each with one
 * witness payload (normally a Solution).
 *
 * Entries never dominate each other and never share a vector. When a
 * candidate repeats a stored vector the stored (first-seen) witness is
 * kept. Storage is a flat vector with linear dominance scans; archives for
 * this problem hold a handful of vectors.
 */
template <typename Payload>
class ParetoArchive {
 public:
  struct Entry {
    ObjectiveVector vector;
    Payload payload;
  };

  /// Evicts entries dominated by `vector`, then inserts it unless an
  /// entry dominates or equals it. Returns whether it was inserted.
  bool update(const ObjectiveVector& vector, Payload payload) {
    for (const auto& entry : entries_) {
      if (entry.vector == vector || dominates(entry.vector, vector)) return false;
    }
    std::erase_if(entries_, [&](const Entry& e) { return dominates(vector, e.vector); });
    entries_.push_back(Entry{vector, std::move(payload)});
    return true;
  }

  /// Folds every entry of `other` into this archive, in `other`'s order.
  void absorb(const ParetoArchive& other) {
    for (const auto& entry : other.entries_) update(entry.vector, entry.payload);
  }

  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }

  /// Vectors ordered by z1 descending, then z2 ascending.
  [[nodiscard]] std::vector<ObjectiveVector> sorted_vectors() const {
    std::vector<ObjectiveVector> out;
    out.reserve(entries_.size());
    for (const auto& entry : entries_) out.push_back(entry.vector);
    std::sort(out.begin(), out.end(), report_order);
    return out;
  }

  [[nodiscard]] bool contains(const ObjectiveVector& vector) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return e.vector == vector; });
  }

  static bool report_order(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.z1 != b.z1) return a.z1 > b.z1;
    return a.z2 < b.z2;
  }

 private:
  std::vector<Entry> entries_;
};

/// Result of folding every entry of `b` into a copy of `a`.
template <typename Payload>
ParetoArchive<Payload> merge(const ParetoArchive<Payload>& a, const ParetoArchive<Payload>& b) {
  ParetoArchive<Payload> out = a;
  out.absorb(b);
  return out;
}

/// CSV rows "z1,z2" in report order, z2 with three decimals.
template <typename Payload>
void write_vectors_csv(std::ostream& os, const ParetoArchive<Payload>& archive) {
  for (const auto& v : archive.sorted_vectors()) os << v.z1 << ',' << v.z2.to_fixed(3) << '\n';
}

}  // namespace mobp

#endif  // MOBP_ARCHIVE_HPP
