#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace tsg {

// Exact decimal money amount, 4 fractional digits. Rewards, movement costs
// and surplus accounting stay in this type; solvers convert to double only
// where shares ρ/m make exactness impossible.
class Money {
 public:
  static constexpr std::int64_t kScale = 10000;

  constexpr Money() = default;

  static constexpr Money from_units(std::int64_t units) {
    Money m;
    m.units_ = units;
    return m;
  }

  // Nearest representable amount (ties away from zero).
  static Money from_double(double v) {
    return from_units(static_cast<std::int64_t>(std::llround(v * kScale)));
  }

  // Smallest representable amount >= v, with a tiny tolerance so that values
  // already on the grid (up to double rounding noise) are not bumped up.
  static Money from_double_ceil(double v) {
    const double scaled = v * static_cast<double>(kScale);
    return from_units(static_cast<std::int64_t>(std::ceil(scaled - 1e-6)));
  }

  // Parses "12", "-3.5", "0.1250". Rejects more than 4 fractional digits.
  static std::optional<Money> parse(std::string_view s);

  constexpr std::int64_t units() const { return units_; }
  constexpr double to_double() const { return static_cast<double>(units_) / kScale; }
  constexpr bool is_zero() const { return units_ == 0; }
  constexpr bool negative() const { return units_ < 0; }

  std::string str() const {
    char buf[32];
    const std::int64_t a = units_ < 0 ? -units_ : units_;
    std::snprintf(buf, sizeof(buf), "%s%lld.%04lld", units_ < 0 ? "-" : "",
                  static_cast<long long>(a / kScale), static_cast<long long>(a % kScale));
    return buf;
  }

  friend constexpr Money operator+(Money a, Money b) { return from_units(a.units_ + b.units_); }
  friend constexpr Money operator-(Money a, Money b) { return from_units(a.units_ - b.units_); }
  friend constexpr Money operator-(Money a) { return from_units(-a.units_); }
  friend constexpr Money operator*(Money a, std::int64_t k) { return from_units(a.units_ * k); }
  Money& operator+=(Money b) { units_ += b.units_; return *this; }
  Money& operator-=(Money b) { units_ -= b.units_; return *this; }
  friend constexpr auto operator<=>(Money a, Money b) = default;

 private:
  std::int64_t units_ = 0;
};

inline std::optional<Money> Money::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  std::int64_t whole = 0, frac = 0, frac_digits = 0;
  bool any = false, in_frac = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.') {
      if (in_frac) return std::nullopt;
      in_frac = true;
    } else if (c >= '0' && c <= '9') {
      any = true;
      if (in_frac) {
        if (++frac_digits > 4) return std::nullopt;
        frac = frac * 10 + (c - '0');
      } else {
        whole = whole * 10 + (c - '0');
      }
    } else {
      return std::nullopt;
    }
  }
  if (!any) return std::nullopt;
  for (; frac_digits < 4; ++frac_digits) frac *= 10;
  const std::int64_t units = whole * kScale + frac;
  return from_units(neg ? -units : units);
}

}  // namespace tsg
