#pragma once

#include <complex>
#include <string>
#include <variant>

#include "polyzeta/rational.hpp"

namespace polyzeta {

/// A nonzero complex number used as a color, or as a monoid index of the mulstuffle
/// and duffle alphabets.
///
/// Three canonical representations:
///  - polar: modulus * exp(2 pi i * turn) with rational modulus > 0 and rational
///    turn in [0, 1). Covers nonzero rationals (turn 0 or 1/2) and roots of unity.
///  - gaussian: a + b i with both parts rational and nonzero.
///  - floating: std::complex<double>.
/// Exact values are always normalized to the polar form when it exists, so
/// structural equality of exact colors is value equality. Mixing kinds that have no
/// common exact form falls back to floating.
class Color {
 public:
  struct Polar {
    Rational modulus;
    Rational turn;
  };

  /// The color 1.
  Color();
  static Color rational(const Rational& q);
  static Color root_of_unity(long k, long n);
  static Color polar(const Rational& modulus, const Rational& turn);
  static Color gaussian(const GaussianRational& z);
  static Color floating(std::complex<double> z);

  bool is_exact() const { return !std::holds_alternative<std::complex<double>>(rep_); }
  bool is_polar() const { return std::holds_alternative<Polar>(rep_); }
  bool is_gaussian() const { return std::holds_alternative<GaussianRational>(rep_); }
  bool is_floating() const { return std::holds_alternative<std::complex<double>>(rep_); }
  const Polar& as_polar() const { return std::get<Polar>(rep_); }
  const GaussianRational& as_gaussian() const { return std::get<GaussianRational>(rep_); }
  std::complex<double> as_floating() const { return std::get<std::complex<double>>(rep_); }

  /// True for a nonzero rational; the value is returned by to_rational().
  bool is_rational() const;
  Rational to_rational() const;

  std::complex<double> to_complex() const;

  Color inverse() const;
  Color& operator*=(const Color& o);
  Color& operator/=(const Color& o) { return *this *= o.inverse(); }
  friend Color operator*(Color a, const Color& b) { return a *= b; }
  friend Color operator/(Color a, const Color& b) { return a /= b; }

  /// |c| compared with 1: -1, 0 or +1. Exact for exact colors, within 1e-12 for floating ones.
  int compare_modulus_to_one() const;

  friend bool operator==(const Color& a, const Color& b);
  friend bool operator!=(const Color& a, const Color& b) { return !(a == b); }
  /// Structural total order, for use as a map key.
  friend bool operator<(const Color& a, const Color& b);

 private:
  using Rep = std::variant<Polar, GaussianRational, std::complex<double>>;
  explicit Color(Rep rep) : rep_(std::move(rep)) {}
  static Color normalize(const GaussianRational& z);

  Rep rep_;
};

/// Short human-readable form: "2/3", "-1", "exp(2πi·1/3)", "(1/2+3/4i)", "(0.5-0.7i)".
std::string to_string(const Color& c);

}  // namespace polyzeta
