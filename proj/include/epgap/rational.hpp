#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace epgap {

// Exact rational with a 64-bit numerator and a positive 64-bit denominator,
// always stored in lowest terms. Arithmetic goes through 128-bit
// intermediates and throws std::overflow_error when a reduced result does
// not fit.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t num); // NOLINT: implicit from integers is intended
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const;
  std::string str() const; // "num/den", or "num" when den == 1
  int sign() const { return (num_ > 0) - (num_ < 0); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace epgap
