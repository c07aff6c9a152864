#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace maxmin {

/// An exact rational number in the unit interval [0,1].
///
/// All comparisons are exact. Values normally come from decimal text
/// (denominator a power of ten) or from midpoints of such values, so they
/// always have a terminating decimal expansion, but any reduced fraction
/// inside [0,1] is accepted.
class Scalar {
 public:
  using rational = boost::rational<std::int64_t>;

  constexpr Scalar() = default;

  /// Throws ContractError when num/den lies outside [0,1] or den is zero.
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(const rational& r);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1, 1); }

  /// Parses a finite decimal (".7", "0.35", "1") or a fraction "p/q".
  /// Throws ParseError naming the offending token.
  static Scalar parse(std::string_view text);

  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }
  const rational& value() const { return value_; }

  bool is_zero() const { return value_.numerator() == 0; }
  bool is_one() const { return value_.numerator() == value_.denominator(); }

  /// Exact decimal rendering ("0", "1", "0.35"); falls back to "p/q" when
  /// the expansion does not terminate.
  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_.numerator() == b.value_.numerator() &&
           a.value_.denominator() == b.value_.denominator();
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const __int128 lhs = static_cast<__int128>(a.value_.numerator()) * b.value_.denominator();
    const __int128 rhs = static_cast<__int128>(b.value_.numerator()) * a.value_.denominator();
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  rational value_{0};
};

/// a ⊕ b = max(a, b)
inline Scalar oplus(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
/// a ⊗ b = min(a, b)
inline Scalar otimes(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

/// Exact midpoint (a + b) / 2.
Scalar midpoint(const Scalar& a, const Scalar& b);

/// Sorts and deduplicates `values`, then inserts the exact midpoint between
/// every consecutive pair.
std::vector<Scalar> with_midpoints(std::vector<Scalar> values);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

namespace literals {
/// "0.35"_s
inline Scalar operator""_s(const char* text, std::size_t len) {
  return Scalar::parse(std::string_view(text, len));
}
}  // namespace literals

}  // namespace maxmin

template <>
struct std::hash<maxmin::Scalar> {
  std::size_t operator()(const maxmin::Scalar& s) const noexcept {
    return std::hash<std::int64_t>{}(s.numerator()) * 31u ^
           std::hash<std::int64_t>{}(s.denominator());
  }
};
