#include "rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "errors.hpp"

namespace specgeo {

namespace {

using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();

std::int64_t narrow(i128 v) {
  if (v > kMax || v < kMin) {
    raise(Errc::exact_unavailable, "rational arithmetic overflows 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(i128 num, i128 den) {
  if (den == 0) raise(Errc::exact_unavailable, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{narrow(num), narrow(den)};  // already normalized, ctor gcd is trivial
}

std::optional<std::int64_t> isqrt_exact(std::int64_t v) {
  if (v < 0) return std::nullopt;
  const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c) {
    if (c <= 3037000499LL && c * c == v) return c;
  }
  return std::nullopt;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) raise(Errc::exact_unavailable, "rational with zero denominator");
  if (num_ == std::numeric_limits<std::int64_t>::min() ||
      den_ == std::numeric_limits<std::int64_t>::min()) {
    raise(Errc::exact_unavailable, "rational arithmetic overflows 64 bits");
  }
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

double Rational::value() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const { return Rational{-num_, den_}; }

Rational operator+(const Rational& a, const Rational& b) {
  return make(i128{a.num_} * b.den_ + i128{b.num_} * a.den_, i128{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(i128{a.num_} * b.num_, i128{a.den_} * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) raise(Errc::exact_unavailable, "rational division by zero");
  return make(i128{a.num_} * b.den_, i128{a.den_} * b.num_);
}

std::optional<Rational> Rational::sqrt() const {
  if (num_ < 0) return std::nullopt;
  const auto n = isqrt_exact(num_);
  const auto d = isqrt_exact(den_);
  if (!n || !d) return std::nullopt;
  return Rational{*n, *d};
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  const auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
  };

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash));
    const auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational{*num, *den};
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) return std::nullopt;
    std::string digits{text.substr(0, dot)};
    digits += frac;
    const auto num = parse_int(digits);
    if (!num) return std::nullopt;
    std::int64_t den = 1;
    for (size_t i = 0; i < frac.size(); ++i) {
      if (den > std::numeric_limits<std::int64_t>::max() / 10) return std::nullopt;
      den *= 10;
    }
    return Rational{*num, den};
  }

  const auto num = parse_int(text);
  if (!num) return std::nullopt;
  return Rational{*num};
}

}  // namespace specgeo
