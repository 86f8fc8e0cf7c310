#pragma once

#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "lattisym/errors.hpp"
#include "lattisym/field.hpp"

namespace lattisym {

enum class Mode { kExact, kNumeric };

/// Relative tolerance used for rank and zero decisions in numeric mode.
inline constexpr double kDefaultRelTol = 1e-9;

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<FieldElement> {
  static constexpr bool kExact = true;
  static constexpr Mode kMode = Mode::kExact;

  static FieldElement from_rational(const Rational& q) { return FieldElement(q); }
  static FieldElement from_field(const FieldElement& x) { return x; }
  static FieldElement sqrt2() { return FieldElement::sqrt2(); }
  static double to_double(const FieldElement& x) { return x.to_double(); }
  static double magnitude(const FieldElement& x) { return std::abs(x.to_double()); }
  /// `scale` and `tol` are ignored: exact zero test.
  static bool is_zero(const FieldElement& x, double /*scale*/ = 0.0, double /*tol*/ = 0.0) {
    return x.is_zero();
  }
  static int sign(const FieldElement& x) { return x.sign(); }
  static std::optional<FieldElement> sqrt(const FieldElement& x) { return x.sqrt(); }
  static FieldElement inverse(const FieldElement& x) { return x.inverse(); }
  static std::optional<long> as_integer(const FieldElement& x, double /*tol*/ = 0.0) {
    if (!x.is_integer() || !x.p().get_num().fits_slong_p()) return std::nullopt;
    return x.p().get_num().get_si();
  }
  static std::string to_string(const FieldElement& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool kExact = false;
  static constexpr Mode kMode = Mode::kNumeric;

  static double from_rational(const Rational& q) { return q.get_d(); }
  static double from_field(const FieldElement& x) { return x.to_double(); }
  static double sqrt2() { return std::sqrt(2.0); }
  static double to_double(double x) { return x; }
  static double magnitude(double x) { return std::abs(x); }
  /// |x| <= tol * scale; with scale 0 this is an absolute test against tol.
  static bool is_zero(double x, double scale = 1.0, double tol = kDefaultRelTol) {
    return std::abs(x) <= tol * (scale > 0.0 ? scale : 1.0);
  }
  static int sign(double x) { return (x > 0.0) - (x < 0.0); }
  static std::optional<double> sqrt(double x) {
    if (x < 0.0) return std::nullopt;
    return std::sqrt(x);
  }
  static double inverse(double x) {
    if (x == 0.0) throw DivisionByZero();
    return 1.0 / x;
  }
  static std::optional<long> as_integer(double x, double tol = kDefaultRelTol) {
    const double r = std::round(x);
    if (std::abs(x - r) > tol * (1.0 + std::abs(x))) return std::nullopt;
    return static_cast<long>(r);
  }
  static std::string to_string(double x);
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::kExact; };

}  // namespace lattisym
