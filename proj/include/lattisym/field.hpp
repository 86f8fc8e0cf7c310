#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "lattisym/rational.hpp"

namespace lattisym {

/// Exact element p + q*sqrt2 + r*sqrt3 + s*sqrt6 of the biquadratic field
/// Q(sqrt2, sqrt3).
///
/// {1, sqrt2, sqrt3, sqrt6} is a basis over Q, so the coefficient quadruple is
/// a unique representation: equality and zero tests are coefficientwise.
class FieldElement {
 public:
  enum Component : int { kOne = 0, kSqrt2 = 1, kSqrt3 = 2, kSqrt6 = 3 };

  FieldElement() = default;
  FieldElement(long v) : c_{Rational(v), Rational(0), Rational(0), Rational(0)} {}  // NOLINT
  FieldElement(int v) : FieldElement(static_cast<long>(v)) {}                       // NOLINT
  FieldElement(Rational p) : c_{std::move(p), Rational(0), Rational(0), Rational(0)} {}  // NOLINT
  FieldElement(Rational p, Rational q, Rational r, Rational s)
      : c_{std::move(p), std::move(q), std::move(r), std::move(s)} {}

  static FieldElement sqrt2() { return {0, 1, 0, 0}; }
  static FieldElement sqrt3() { return {0, 0, 1, 0}; }
  static FieldElement sqrt6() { return {0, 0, 0, 1}; }

  const Rational& p() const { return c_[kOne]; }
  const Rational& q() const { return c_[kSqrt2]; }
  const Rational& r() const { return c_[kSqrt3]; }
  const Rational& s() const { return c_[kSqrt6]; }
  const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

  bool is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
  }
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_integer() const { return is_rational() && c_[0].get_den() == 1; }
  /// Number of nonzero coefficients.
  int term_count() const;

  /// Exact sign of the real number represented (-1, 0, +1).
  int sign() const;
  double to_double() const;

  /// Multiplicative inverse, obtained by solving the 4x4 rational system of
  /// multiplication by *this. Throws DivisionByZero for zero.
  FieldElement inverse() const;
  /// Nonnegative square root when it lies in the field.
  std::optional<FieldElement> sqrt() const;

  FieldElement operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
  }
  friend std::partial_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::partial_ordering::less
                 : (s > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  /// Canonical text form: "p + q*sqrt2 + r*sqrt3 + s*sqrt6", zero terms omitted,
  /// "0" for zero.
  std::string to_string() const;
  static FieldElement parse(std::string_view text);

 private:
  std::array<Rational, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

inline FieldElement abs(const FieldElement& x) { return x.sign() < 0 ? -x : x; }

}  // namespace lattisym
