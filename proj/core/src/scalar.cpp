#include "maxmin/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "maxmin/errors.hpp"

namespace maxmin {

namespace {

// 10^18 still fits in int64; more fractional digits cannot be held exactly.
constexpr int kMaxFractionDigits = 18;

[[noreturn]] void fail(std::string_view token, std::string_view why) {
  throw ParseError("invalid scalar '" + std::string(token) + "': " + std::string(why));
}

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::int64_t to_int(std::string_view digits, std::string_view token) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) fail(token, "integer overflow");
  return v;
}

}  // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ContractError("scalar with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0 || num > den) {
    throw ContractError("scalar " + std::to_string(num) + "/" + std::to_string(den) +
                        " outside [0,1]");
  }
  value_.assign(num, den);
}

Scalar::Scalar(const rational& r) : Scalar(r.numerator(), r.denominator()) {}

Scalar Scalar::parse(std::string_view text) {
  const std::string_view token = text;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) fail(token, "empty");

  std::int64_t num = 0;
  std::int64_t den = 1;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = text.substr(0, slash);
    const auto q = text.substr(slash + 1);
    if (p.empty() || q.empty() || !all_digits(p) || !all_digits(q)) fail(token, "malformed fraction");
    num = to_int(p, token);
    den = to_int(q, token);
    if (den == 0) fail(token, "zero denominator");
  } else {
    const auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail(token, "no digits");
    if (!all_digits(whole) || !all_digits(frac)) fail(token, "not a decimal number");
    while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
    while (whole.size() > 1 && whole.front() == '0') whole.remove_prefix(1);
    if (frac.size() > kMaxFractionDigits) fail(token, "too many fractional digits");
    if (whole.size() > 1) fail(token, "outside [0,1]");
    const std::int64_t w = whole.empty() ? 0 : whole.front() - '0';
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t f = frac.empty() ? 0 : to_int(frac, token);
    if (w > 1 || (w == 1 && f != 0)) fail(token, "outside [0,1]");
    num = w * den + f;
  }
  if (num > den) fail(token, "outside [0,1]");
  return Scalar(num, den);
}

std::string Scalar::to_string() const {
  const std::int64_t num = numerator();
  const std::int64_t den = denominator();
  if (num == 0) return "0";
  if (num == den) return "1";

  // Terminating iff den = 2^a 5^b; then scale to a power of ten.
  std::int64_t rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  const int digits = std::max(twos, fives);
  if (rest != 1 || digits > kMaxFractionDigits) {
    return std::to_string(num) + "/" + std::to_string(den);
  }
  __int128 scaled = num;
  for (int i = 0; i < digits - twos; ++i) scaled *= 2;
  for (int i = 0; i < digits - fives; ++i) scaled *= 5;
  std::string frac(static_cast<std::size_t>(digits), '0');
  for (int i = digits - 1; i >= 0; --i) {
    frac[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(scaled % 10));
    scaled /= 10;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return "0." + frac;
}

Scalar midpoint(const Scalar& a, const Scalar& b) {
  using rational = Scalar::rational;
  const auto da = a.denominator();
  const auto db = b.denominator();
  const auto lcm = std::lcm(da, db);
  if (lcm > std::numeric_limits<std::int64_t>::max() / 4) {
    throw ContractError("midpoint of " + a.to_string() + " and " + b.to_string() +
                        " exceeds exact precision");
  }
  const std::int64_t num = a.numerator() * (lcm / da) + b.numerator() * (lcm / db);
  return Scalar(rational(num, 2 * lcm));
}

std::vector<Scalar> with_midpoints(std::vector<Scalar> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Scalar> out;
  out.reserve(values.size() * 2);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(midpoint(values[i - 1], values[i]));
    out.push_back(values[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace maxmin
