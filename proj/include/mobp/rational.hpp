/**
 * @file rational.hpp
 * @brief Exact rational numbers for objective values and sweep levels.
 *
 * Average heterogeneousness and the sweep level are ratios of small
 * integers. Keeping them exact makes dominance tests and the level loop
 * bound free of floating-point drift.
 */

#ifndef MOBP_RATIONAL_HPP
#define MOBP_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mobp {

/// Normalized fraction num/den with den > 0 and gcd(num, den) == 1.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }

  [[nodiscard]] constexpr std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  [[nodiscard]] constexpr std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }
  /// this - floor(this), in [0, 1).
  [[nodiscard]] constexpr Rational fraction() const { return *this - Rational(floor()); }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }
  [[nodiscard]] double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// Decimal rendering with `digits` fractional digits, rounded half-up
  /// (half away from zero for negative values).
  [[nodiscard]] std::string to_fixed(int digits) const {
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const bool negative = num_ < 0;
    const std::int64_t mag = negative ? -num_ : num_;
    const std::int64_t scaled = (2 * mag * scale + den_) / (2 * den_);
    std::string frac = std::to_string(scaled % scale);
    if (digits > 0) frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    std::string out = negative && scaled != 0 ? "-" : "";
    out += std::to_string(scaled / scale);
    if (digits > 0) out += "." + frac;
    return out;
  }

  /// Parses "3", "0.1", "-2.25" or "1/10" exactly.
  static Rational parse(std::string_view text) {
    auto fail = [&]() -> Rational {
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      const auto n = parse_int(text.substr(0, slash));
      const auto d = parse_int(text.substr(slash + 1));
      if (!n || !d || *d == 0) return fail();
      return {*n, *d};
    }
    bool negative = false;
    std::string_view body = text;
    if (body.front() == '-' || body.front() == '+') {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    const auto dot = body.find('.');
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (frac.size() > 15) return fail();
    std::int64_t num = 0;
    std::int64_t den = 1;
    for (std::string_view part : {whole, frac}) {
      for (char ch : part) {
        if (ch < '0' || ch > '9') return fail();
        if (num > (INT64_MAX - 9) / 10) return fail();
        num = num * 10 + (ch - '0');
      }
    }
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return {negative ? -num : num, den};
  }

  friend constexpr Rational operator+(Rational a, Rational b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    return {a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) { return a + Rational(-b.num_, b.den_); }
  friend constexpr Rational operator*(Rational a, Rational b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    return {(a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1)};
  }

  // Normalized form makes field equality exact equality.
  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Cross-multiplication in 128 bits; both denominators are positive.
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static constexpr std::optional<std::int64_t> parse_int(std::string_view s);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

constexpr std::optional<std::int64_t> Rational::parse_int(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || s.size() > 18) return std::nullopt;
  std::int64_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return std::nullopt;
    v = v * 10 + (ch - '0');
  }
  return negative ? -v : v;
}

}  // namespace mobp

#endif  // MOBP_RATIONAL_HPP
