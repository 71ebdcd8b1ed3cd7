/**
 * @file instances.hpp
 * @brief Benchmark instance generation and the plain-text instance format.
 *
 * File format (UTF-8, one record per line, newline-terminated):
 *
 *     n c
 *     weight attribute      (n lines)
 *
 * Fields are separated by a single space. Attributes are opaque tokens.
 */

#ifndef MOBP_INSTANCES_HPP
#define MOBP_INSTANCES_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"
#include "rng.hpp"

namespace mobp {

inline constexpr std::int64_t kGeneratedCapacity = 1000;
inline constexpr int kItemsPerGroup = 5;
inline constexpr std::array<std::string_view, 5> kGeneratedAttributes = {"A", "B", "C", "D", "E"};

/**
 * Benchmark instance with n items (n a positive multiple of 5) and c = 1000.
 *
 * Items come in groups of five whose weights sum to exactly c: four
 * distinct cut points are drawn uniformly from {1, ..., 999}, sorted, and
 * the five gaps become the weights. Each item independently receives one
 * of the labels A-E with probability 1/5. Grouping guarantees a packing
 * with n/5 full bins.
 */
inline Instance generate(std::size_t n, std::uint64_t seed) {
  if (n == 0 || n % kItemsPerGroup != 0) {
    throw InstanceError("item count must be a positive multiple of 5, got " + std::to_string(n));
  }
  Rng rng(seed);
  std::vector<Instance::ItemSpec> specs;
  specs.reserve(n);
  for (std::size_t g = 0; g < n / kItemsPerGroup; ++g) {
    std::array<std::int64_t, kItemsPerGroup - 1> cuts{};
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      std::int64_t cut = 0;
      do {
        cut = rng.uniform(1, kGeneratedCapacity - 1);
      } while (std::find(cuts.begin(), cuts.begin() + static_cast<std::ptrdiff_t>(i), cut) !=
               cuts.begin() + static_cast<std::ptrdiff_t>(i));
      cuts[i] = cut;
    }
    std::sort(cuts.begin(), cuts.end());
    std::int64_t previous = 0;
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
      const std::int64_t next = i < cuts.size() ? cuts[i] : kGeneratedCapacity;
      specs.push_back({next - previous, ""});
      previous = next;
    }
  }
  for (auto& spec : specs) spec.attribute = std::string(kGeneratedAttributes[rng.below(kGeneratedAttributes.size())]);
  return Instance(kGeneratedCapacity, specs);
}

inline void write_instance(const Instance& instance, std::ostream& os) {
  os << instance.size() << ' ' << instance.capacity() << '\n';
  for (const auto& item : instance.items()) {
    os << item.weight << ' ' << instance.label(item.attribute) << '\n';
  }
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t space = line.find(' ', pos);
    const std::size_t end = space == std::string_view::npos ? line.size() : space;
    fields.push_back(line.substr(pos, end - pos));
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  return fields;
}

inline std::int64_t parse_integer(std::string_view field, std::string_view what, std::size_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw InstanceError(std::string(what) + " is not an integer: '" + std::string(field) + "'", line);
  }
  return value;
}

}  // namespace detail

/// Parses the instance format; throws InstanceError naming the line and cause.
inline Instance read_instance(std::istream& is) {
  std::string line;
  std::size_t line_no = 1;
  auto strip_cr = [](std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
  };

  if (!std::getline(is, line)) throw InstanceError("empty input, expected header 'n c'", line_no);
  strip_cr(line);
  auto header = detail::split_fields(line);
  if (header.size() != 2) throw InstanceError("header must be 'n c'", line_no);
  const std::int64_t n = detail::parse_integer(header[0], "item count", line_no);
  const std::int64_t capacity = detail::parse_integer(header[1], "capacity", line_no);
  if (n < 1) throw InstanceError("item count must be at least 1", line_no);
  if (capacity < 1) throw InstanceError("capacity must be a positive integer", line_no);

  std::vector<Instance::ItemSpec> specs;
  specs.reserve(static_cast<std::size_t>(std::min<std::int64_t>(n, 1 << 20)));
  while (static_cast<std::int64_t>(specs.size()) < n) {
    ++line_no;
    if (!std::getline(is, line)) {
      throw InstanceError("expected " + std::to_string(n) + " items but found " +
                              std::to_string(specs.size()) + " (missing " +
                              std::to_string(n - static_cast<std::int64_t>(specs.size())) + ")",
                          line_no);
    }
    strip_cr(line);
    auto fields = detail::split_fields(line);
    if (fields.size() != 2 || fields[1].empty()) {
      throw InstanceError("item line must be 'weight attribute'", line_no);
    }
    const std::int64_t weight = detail::parse_integer(fields[0], "weight", line_no);
    Instance::check_weight(weight, capacity, line_no);
    specs.push_back({weight, std::string(fields[1])});
  }
  while (std::getline(is, line)) {
    ++line_no;
    strip_cr(line);
    if (!line.empty()) {
      throw InstanceError("unexpected content after " + std::to_string(n) + " items", line_no);
    }
  }
  return Instance(capacity, specs);
}

inline Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open instance file '" + path + "'");
  return read_instance(in);
}

}  // namespace mobp

#endif  // MOBP_INSTANCES_HPP
