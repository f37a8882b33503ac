#pragma once

// Exact arithmetic primitives shared by every module: GMP rationals, dyadic
// rationals, rational vectors and the finite-dimensional normed spaces
// l1, l2 and l-infinity.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ordia {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Parses "p", "-p", "p/q" (and a plain decimal such as "0.25") into a
/// canonical rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "p" form.
std::string to_string(const Rational& q);

/// A rational whose reduced denominator is a power of two.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(long value) : value_(value) {}  // NOLINT: implicit from integers
  /// Throws std::invalid_argument if the reduced denominator is not 2^k.
  explicit DyadicRational(const Rational& value);

  static DyadicRational pow2(long exponent);  // 2^exponent, exponent may be negative

  const Rational& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  /// k such that the reduced value is numerator / 2^k.
  std::size_t exponent() const;

  DyadicRational half() const;
  DyadicRational abs() const;

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
  DyadicRational operator-() const;
  DyadicRational& operator+=(const DyadicRational& o);
  DyadicRational& operator-=(const DyadicRational& o);

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

  /// "3/8", "1", "0".
  std::string to_string() const;
  /// "3/2^3", "1/2^0" style used by graph exports.
  std::string to_pow2_string() const;

 private:
  Rational value_{0};
};

DyadicRational min(const DyadicRational& a, const DyadicRational& b);

enum class Norm { L1, L2, LInf };

Norm parse_norm(std::string_view text);
std::string to_string(Norm norm);

/// A finite-dimensional real normed space with rational coordinates.
struct NormedSpace {
  std::size_t dim = 1;
  Norm norm = Norm::L2;

  friend bool operator==(const NormedSpace&, const NormedSpace&) = default;
};

/// The exact "comparable" form of a norm: the norm itself for l1 and
/// l-infinity, the squared norm for l2. Comparisons between comparable values
/// and comparable(r) for a radius r are therefore exact.
Rational norm_comparable(Norm norm, const Vec& v);
Rational radius_comparable(Norm norm, const Rational& r);  // r must be >= 0

/// Exact three-way comparison of ||v|| against r >= 0.
std::strong_ordering compare_norm(Norm norm, const Vec& v, const Rational& r);

/// ||a - b|| compared against r >= 0.
std::strong_ordering compare_dist(Norm norm, const Vec& a, const Vec& b, const Rational& r);

/// The norm value when it is rational (l1, l-infinity). Throws for l2.
Rational norm_exact(Norm norm, const Vec& v);

// Vector helpers. All of them require equal dimensions and throw
// std::invalid_argument otherwise.
Vec zeros(std::size_t dim);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
Vec midpoint(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);

std::string to_string(const Vec& v);

}  // namespace ordia
