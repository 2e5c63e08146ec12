#pragma once

#include <complex>
#include <map>
#include <string>

#include "polyzeta/rational.hpp"
#include "polyzeta/word.hpp"

namespace polyzeta {

/// Coefficient-ring adapter. Specialized for Rational, GaussianRational and
/// std::complex<double>.
template <class Scalar>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational from_rational(const Rational& q) { return q; }
  static std::string to_string(const Rational& a) { return polyzeta::to_string(a); }
};

template <>
struct scalar_traits<GaussianRational> {
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational(1); }
  static bool is_zero(const GaussianRational& a) { return a.is_zero(); }
  static GaussianRational from_rational(const Rational& q) { return GaussianRational(q); }
  static std::string to_string(const GaussianRational& a) { return polyzeta::to_string(a); }
};

template <>
struct scalar_traits<std::complex<double>> {
  static std::complex<double> zero() { return {}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static bool is_zero(const std::complex<double>& a) { return a == std::complex<double>{}; }
  static std::complex<double> from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static std::string to_string(const std::complex<double>& a);
};

/// Finite linear combination of words with coefficients in Scalar (the module A<X>).
/// Terms with zero coefficient are never stored, so == is semantic equality.
/// Iteration follows the graded lexicographic word order.
template <class Scalar = Rational>
class Polynomial {
 public:
  using scalar_type = Scalar;
  using traits = scalar_traits<Scalar>;
  using container = std::map<Word, Scalar>;

  Polynomial() = default;
  Polynomial(const Word& w) { add(w, traits::one()); }  // NOLINT(google-explicit-constructor)
  Polynomial(const Word& w, const Scalar& c) { add(w, c); }

  /// The unit 1_{X*}.
  static Polynomial unit() { return Polynomial(Word{}); }

  /// <S|w>: coefficient of w, zero when absent.
  Scalar coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? traits::zero() : it->second;
  }

  void add(const Word& w, const Scalar& c) {
    if (traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const container& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [w, c] : o.terms_) add(w, Scalar(-c));
    return *this;
  }
  Polynomial& operator*=(const Scalar& a) {
    if (traits::is_zero(a)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= a;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-traits::one()); }
  friend Polynomial operator*(const Scalar& a, Polynomial p) { return p *= a; }
  friend Polynomial operator*(Polynomial p, const Scalar& a) { return p *= a; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  container terms_;
};

template <class Scalar>
Scalar coeff(const Polynomial<Scalar>& p, const Word& w) {
  return p.coeff(w);
}

/// Concatenation product extended bilinearly.
template <class Scalar>
Polynomial<Scalar> concat(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  Polynomial<Scalar> out;
  for (const auto& [u, a] : p)
    for (const auto& [v, b] : q) out.add(concat(u, v), Scalar(a * b));
  return out;
}

/// a.P: prepend a letter to every word of P.
template <class Scalar>
Polynomial<Scalar> prepend(const Letter& a, const Polynomial<Scalar>& p) {
  Polynomial<Scalar> out;
  for (const auto& [w, c] : p) out.add(prepend(a, w), c);
  return out;
}

/// Sum of all coefficients; for polynomials with integer coefficients this counts
/// terms with multiplicity.
template <class Scalar>
Scalar coefficient_sum(const Polynomial<Scalar>& p) {
  Scalar total = scalar_traits<Scalar>::zero();
  for (const auto& [w, c] : p) total += c;
  return total;
}

/// Pretty form, e.g. "x0x1 + 2 x1x0 - x2". Zero prints as "0".
template <class Scalar>
std::string to_string(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p) {
    std::string cs = scalar_traits<Scalar>::to_string(c);
    bool negative = !cs.empty() && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (cs != "1") out += cs + (w.empty() ? "" : " ");
    if (!w.empty() || cs == "1") out += to_string(w);
    first = false;
  }
  return out;
}

}  // namespace polyzeta
