/**
 * @file model.hpp
 * @brief Instances, packings and the two objectives of the biobjective
 *        bin-packing problem.
 *
 * Every item carries a weight and a nominal attribute. A packing is
 * evaluated by the number of bins it uses (z1) and by the average number
 * of distinct attributes per used bin (z2). Both are minimized.
 */

#ifndef MOBP_MODEL_HPP
#define MOBP_MODEL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace mobp {

/// Index of an attribute label inside its instance's attribute universe.
struct AttributeId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(const AttributeId&, const AttributeId&) = default;
};

struct Item {
  std::size_t id = 0;
  std::int64_t weight = 0;
  AttributeId attribute;
  friend bool operator==(const Item&, const Item&) = default;
};

/// Raised when instance data violates the model (weights, capacity, counts).
/// `line()` is the 1-based source line for file input, 0 otherwise.
class InstanceError : public std::runtime_error {
 public:
  explicit InstanceError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/**
 * Validated problem data: capacity c and items 0..n-1.
 *
 * Attribute labels are opaque tokens; they are interned in order of first
 * appearance and compared only for equality. The attribute universe holds
 * exactly the labels that occur among the items.
 */
class Instance {
 public:
  struct ItemSpec {
    std::int64_t weight;
    std::string attribute;
  };

  Instance(std::int64_t capacity, const std::vector<ItemSpec>& specs) : capacity_(capacity) {
    if (capacity_ < 1) throw InstanceError("capacity must be a positive integer");
    if (specs.empty()) throw InstanceError("instance must contain at least one item");
    items_.reserve(specs.size());
    for (const auto& spec : specs) {
      check_weight(spec.weight, capacity_, 0);
      items_.push_back(Item{items_.size(), spec.weight, intern(spec.attribute)});
    }
  }

  /// Throws InstanceError unless 1 <= weight <= capacity.
  static void check_weight(std::int64_t weight, std::int64_t capacity, std::size_t line) {
    if (weight < 1) throw InstanceError("item weight must be at least 1", line);
    if (weight > capacity) {
      throw InstanceError("item weight " + std::to_string(weight) + " exceeds bin capacity " +
                              std::to_string(capacity),
                          line);
    }
  }

  [[nodiscard]] std::int64_t capacity() const { return capacity_; }
  [[nodiscard]] std::size_t size() const { return items_.size(); }
  [[nodiscard]] const std::vector<Item>& items() const { return items_; }
  [[nodiscard]] const Item& item(std::size_t id) const { return items_.at(id); }

  [[nodiscard]] std::size_t attribute_count() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& attribute_labels() const { return labels_; }
  [[nodiscard]] const std::string& label(AttributeId a) const { return labels_.at(a.value); }

  [[nodiscard]] std::int64_t total_weight() const {
    std::int64_t sum = 0;
    for (const auto& item : items_) sum += item.weight;
    return sum;
  }

  /// ceil(sum of weights / c): no packing uses fewer bins.
  [[nodiscard]] std::int64_t trivial_lower_bound() const {
    return (total_weight() + capacity_ - 1) / capacity_;
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.capacity_ == b.capacity_ && a.items_ == b.items_ && a.labels_ == b.labels_;
  }

 private:
  AttributeId intern(const std::string& label) {
    if (label.empty()) throw InstanceError("attribute label must not be empty");
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it != labels_.end()) return AttributeId{static_cast<std::uint32_t>(it - labels_.begin())};
    labels_.push_back(label);
    return AttributeId{static_cast<std::uint32_t>(labels_.size() - 1)};
  }

  std::int64_t capacity_;
  std::vector<Item> items_;
  std::vector<std::string> labels_;
};

/// Set of attribute ids drawn from a universe of known size.
class AttributeSet {
 public:
  AttributeSet() = default;
  explicit AttributeSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  [[nodiscard]] bool contains(AttributeId a) const {
    return (words_[a.value / 64] >> (a.value % 64)) & 1U;
  }
  void insert(AttributeId a) {
    auto& word = words_[a.value / 64];
    const std::uint64_t bit = std::uint64_t{1} << (a.value % 64);
    if ((word & bit) == 0) {
      word |= bit;
      ++count_;
    }
  }
  [[nodiscard]] std::size_t size() const { return count_; }

  friend bool operator==(const AttributeSet&, const AttributeSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

/// A used bin. Load and attribute set are maintained alongside the members.
class Bin {
 public:
  explicit Bin(std::size_t universe) : attributes_(universe) {}

  void add(const Item& item) {
    members_.push_back(item.id);
    load_ += item.weight;
    attributes_.insert(item.attribute);
  }

  [[nodiscard]] const std::vector<std::size_t>& members() const { return members_; }
  [[nodiscard]] std::int64_t load() const { return load_; }
  [[nodiscard]] const AttributeSet& attributes() const { return attributes_; }
  /// Number of distinct attributes in the bin (u_i).
  [[nodiscard]] std::size_t heterogeneousness() const { return attributes_.size(); }
  /// Heterogeneousness the bin would have after receiving an item of attribute `a`.
  [[nodiscard]] std::size_t heterogeneousness_with(AttributeId a) const {
    return attributes_.size() + (attributes_.contains(a) ? 0 : 1);
  }

  friend bool operator==(const Bin&, const Bin&) = default;

 private:
  std::vector<std::size_t> members_;
  std::int64_t load_ = 0;
  AttributeSet attributes_;
};

/**
 * A packing of an instance's items. Only used bins are stored.
 *
 * The same type serves as the partial packing during construction; a
 * finished packing assigns every item exactly once (see validate()).
 * The instance must outlive the solution.
 */
class Solution {
 public:
  explicit Solution(const Instance& instance) : instance_(&instance) {}

  [[nodiscard]] const Instance& instance() const { return *instance_; }
  [[nodiscard]] const std::vector<Bin>& bins() const { return bins_; }
  [[nodiscard]] std::int64_t residual(std::size_t bin) const {
    return instance_->capacity() - bins_[bin].load();
  }

  /// Puts `item` into bin `bin` (no feasibility check).
  void assign(std::size_t bin, const Item& item) { bins_.at(bin).add(item); }

  /// Opens a new bin holding `item`; returns its index.
  std::size_t open_bin(const Item& item) {
    bins_.emplace_back(instance_->attribute_count());
    bins_.back().add(item);
    return bins_.size() - 1;
  }

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.instance_ == b.instance_ && a.bins_ == b.bins_;
  }

 private:
  const Instance* instance_;
  std::vector<Bin> bins_;
};

/// Objective values (z1, z2) of a packing.
struct ObjectiveVector {
  std::int64_t z1 = 0;
  Rational z2;

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;

  /// "(22, 1.000)"
  [[nodiscard]] std::string to_string() const {
    return "(" + std::to_string(z1) + ", " + z2.to_fixed(3) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const ObjectiveVector& v) {
    return os << v.to_string();
  }
};

/// Number of used bins.
inline std::int64_t evaluate_z1(const Solution& solution) {
  return static_cast<std::int64_t>(solution.bins().size());
}

/// Average heterogeneousness over used bins, as an exact fraction.
inline Rational evaluate_z2(const Solution& solution) {
  if (solution.bins().empty()) throw std::invalid_argument("evaluate_z2: solution has no bins");
  std::int64_t total = 0;
  for (const auto& bin : solution.bins()) total += static_cast<std::int64_t>(bin.heterogeneousness());
  return {total, evaluate_z1(solution)};
}

inline ObjectiveVector evaluate(const Solution& solution) {
  return {evaluate_z1(solution), evaluate_z2(solution)};
}

/// Pareto dominance for minimization of both objectives.
constexpr bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  return a.z1 <= b.z1 && a.z2 <= b.z2 && (a.z1 < b.z1 || a.z2 < b.z2);
}

/// a is no worse than b in both objectives.
constexpr bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  return a.z1 <= b.z1 && a.z2 <= b.z2;
}

/**
 * Checks a finished packing against the model: every item in exactly one
 * bin, no empty bin, no bin over capacity, and cached loads and attribute
 * sets agreeing with a recount of the members.
 *
 * Returns a description of the first violation, or nullopt.
 */
inline std::optional<std::string> validate(const Solution& solution) {
  const Instance& instance = solution.instance();
  std::vector<int> seen(instance.size(), 0);
  for (std::size_t b = 0; b < solution.bins().size(); ++b) {
    const Bin& bin = solution.bins()[b];
    const std::string where = "bin " + std::to_string(b) + ": ";
    if (bin.members().empty()) return where + "empty bin stored";
    std::int64_t load = 0;
    AttributeSet attrs(instance.attribute_count());
    for (std::size_t id : bin.members()) {
      if (id >= instance.size()) return where + "unknown item id " + std::to_string(id);
      ++seen[id];
      load += instance.item(id).weight;
      attrs.insert(instance.item(id).attribute);
    }
    if (load != bin.load()) return where + "cached load disagrees with members";
    if (!(attrs == bin.attributes())) return where + "cached attributes disagree with members";
    if (load > instance.capacity()) {
      return where + "load " + std::to_string(load) + " exceeds capacity " +
             std::to_string(instance.capacity());
    }
  }
  for (std::size_t id = 0; id < seen.size(); ++id) {
    if (seen[id] != 1) {
      return "item " + std::to_string(id) + " assigned " + std::to_string(seen[id]) + " times";
    }
  }
  return std::nullopt;
}

}  // namespace mobp

#endif  // MOBP_MODEL_HPP
