#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace specgeo {

/// Exact rational on 64-bit numerator/denominator, normalized with a positive
/// denominator.  Arithmetic goes through 128-bit intermediates and raises
/// exact_unavailable when a result no longer fits, so callers can fall back
/// to floating point.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double value() const;
  bool is_zero() const { return num_ == 0; }
  bool positive() const { return num_ > 0; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;

  /// Exact square root when numerator and denominator are perfect squares.
  std::optional<Rational> sqrt() const;

  /// "n" or "n/d".
  std::string str() const;

  /// Accepts "n", "n/d", and plain decimals such as "-0.125".
  static std::optional<Rational> parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace specgeo
