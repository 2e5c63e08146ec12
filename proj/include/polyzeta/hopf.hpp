#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyzeta/polynomial.hpp"
#include "polyzeta/star_product.hpp"
#include "polyzeta/word.hpp"

namespace polyzeta {

/// Element of A<X> (x) A<X>, keyed by word pairs, canonical (no zero coefficients).
template <class Scalar = Rational>
class TensorPolynomial {
 public:
  using traits = scalar_traits<Scalar>;
  using key_type = std::pair<Word, Word>;

  TensorPolynomial() = default;

  void add(const Word& left, const Word& right, const Scalar& c) {
    if (traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(key_type{left, right}, c);
    if (!inserted) {
      it->second += c;
      if (traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// p (x) q.
  static TensorPolynomial tensor(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
    TensorPolynomial out;
    for (const auto& [u, a] : p)
      for (const auto& [v, b] : q) out.add(u, v, Scalar(a * b));
    return out;
  }

  Scalar coeff(const Word& left, const Word& right) const {
    auto it = terms_.find(key_type{left, right});
    return it == terms_.end() ? traits::zero() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  TensorPolynomial& operator+=(const TensorPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  friend TensorPolynomial operator+(TensorPolynomial a, const TensorPolynomial& b) { return a += b; }
  friend bool operator==(const TensorPolynomial& a, const TensorPolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const TensorPolynomial& a, const TensorPolynomial& b) { return !(a == b); }

 private:
  std::map<key_type, Scalar> terms_;
};

template <class Scalar>
std::string to_string(const TensorPolynomial<Scalar>& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : t) {
    if (!first) out += " + ";
    std::string cs = scalar_traits<Scalar>::to_string(c);
    if (cs != "1") out += cs + " ";
    out += to_string(k.first) + "⊗" + to_string(k.second);
    first = false;
  }
  return out;
}

/// Deconcatenation: sum over the |w|+1 splittings uv = w of u (x) v.
template <class Scalar = Rational>
TensorPolynomial<Scalar> coproduct(const Word& w) {
  TensorPolynomial<Scalar> out;
  for (std::size_t k = 0; k <= w.size(); ++k) out.add(w.prefix(k), w.suffix(k), scalar_traits<Scalar>::one());
  return out;
}

template <class Scalar>
TensorPolynomial<Scalar> coproduct(const Polynomial<Scalar>& p) {
  TensorPolynomial<Scalar> out;
  for (const auto& [w, c] : p)
    for (std::size_t k = 0; k <= w.size(); ++k) out.add(w.prefix(k), w.suffix(k), c);
  return out;
}

/// epsilon(S) = <S|1>.
template <class Scalar>
Scalar counit(const Polynomial<Scalar>& p) {
  return p.coeff(Word{});
}

/// (u (x) v) * (u' (x) v') = (u * u') (x) (v * v'), extended bilinearly.
template <class Scalar>
TensorPolynomial<Scalar> star(const Bracket& br, const TensorPolynomial<Scalar>& s, const TensorPolynomial<Scalar>& t) {
  TensorPolynomial<Scalar> out;
  for (const auto& [k1, a] : s) {
    for (const auto& [k2, b] : t) {
      auto left = star<Scalar>(br, k1.first, k2.first);
      auto right = star<Scalar>(br, k1.second, k2.second);
      Scalar ab = a * b;
      for (const auto& [u, c] : left)
        for (const auto& [v, d] : right) out.add(u, v, Scalar(ab * c * d));
    }
  }
  return out;
}

/// Concatenation product on tensors, (u (x) v)(u' (x) v') = uu' (x) vv'.
template <class Scalar>
TensorPolynomial<Scalar> concat(const TensorPolynomial<Scalar>& s, const TensorPolynomial<Scalar>& t) {
  TensorPolynomial<Scalar> out;
  for (const auto& [k1, a] : s)
    for (const auto& [k2, b] : t) out.add(concat(k1.first, k2.first), concat(k1.second, k2.second), Scalar(a * b));
  return out;
}

/// All tuples of positive integers summing to n, ordered by number of parts and then
/// lexicographically. compositions(0) is the single empty composition.
std::vector<std::vector<int>> compositions(int n);

/// Antipode by the signed sum over compositions of n = |w| of star products of the
/// consecutive blocks of w. `product` multiplies two polynomials.
template <class Scalar, class Product>
Polynomial<Scalar> antipode_with(Product&& product, const Word& w) {
  if (w.empty()) return Polynomial<Scalar>::unit();
  Polynomial<Scalar> out;
  for (const auto& comp : compositions(static_cast<int>(w.size()))) {
    Polynomial<Scalar> term = Polynomial<Scalar>::unit();
    std::size_t pos = 0;
    for (int part : comp) {
      term = product(term, Polynomial<Scalar>(w.subword(pos, static_cast<std::size_t>(part))));
      pos += static_cast<std::size_t>(part);
    }
    if (comp.size() % 2 == 1) term *= Scalar(-scalar_traits<Scalar>::one());
    out += term;
  }
  return out;
}

template <class Scalar = Rational>
Polynomial<Scalar> antipode(const Bracket& br, const Word& w) {
  return antipode_with<Scalar>([&br](const auto& p, const auto& q) { return star(br, p, q); }, w);
}

/// Antipode by the recursion forced by m(a (x) Id)Delta = mu epsilon:
///   a(1) = 1,  a(w) = -sum_{k=0}^{|w|-1} a(w[0,k)) * w[k,|w|).
/// Returns a(w[0,k)) for k = 0..|w|.
template <class Scalar, class Product>
std::vector<Polynomial<Scalar>> antipode_prefixes_with(Product&& product, const Word& w) {
  std::vector<Polynomial<Scalar>> a;
  a.reserve(w.size() + 1);
  a.push_back(Polynomial<Scalar>::unit());
  for (std::size_t n = 1; n <= w.size(); ++n) {
    Word prefix = w.prefix(n);
    Polynomial<Scalar> sum;
    for (std::size_t k = 0; k < n; ++k) sum += product(a[k], Polynomial<Scalar>(prefix.suffix(k)));
    a.push_back(-sum);
  }
  return a;
}

template <class Scalar = Rational>
std::vector<Polynomial<Scalar>> antipode_prefixes(const Bracket& br, const Word& w) {
  return antipode_prefixes_with<Scalar>([&br](const auto& p, const auto& q) { return star(br, p, q); }, w);
}

template <class Scalar = Rational>
Polynomial<Scalar> antipode_recursive(const Bracket& br, const Word& w) {
  return std::move(antipode_prefixes<Scalar>(br, w).back());
}

/// Outcome of one universally quantified identity checked over a finite range.
struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;
};

struct HopfReport {
  std::string product;
  std::vector<AxiomResult> axioms;
  bool passed() const;
};

/// Every word over `alphabet` of length <= maxlen, in graded lexicographic order.
std::vector<Word> words_up_to(const std::vector<Letter>& alphabet, std::size_t maxlen);

/// Sample alphabet used when none is given: {x0,x1} for shuffle, {y1,y2,y3} for the
/// additive stuffles, {2/3,-1,1/2,3} for mulstuffle and the positional pairing
/// (y1,2/3),(y2,-1),(y3,1/2),(y1,3) for duffle.
std::vector<Letter> default_alphabet(ProductKind kind);

/// Bialgebra axioms on words over `alphabet`:
///  unit, commutativity (|u|+|v| <= maxlen), associativity (|u|+|v|+|w| <= maxlen),
///  coassociativity, counit and Delta(xw) = (x (x) 1)Delta(w) + 1 (x) xw (|w| <= maxlen),
///  Delta(u * v) = Delta(u) * Delta(v) and epsilon(u * v) = epsilon(u)epsilon(v) (|u|+|v| <= maxlen).
/// Each axiom reports its first counterexample in enumeration order.
HopfReport check_bialgebra(const Bracket& br, std::size_t maxlen, const std::vector<Letter>& alphabet);

/// Antipode axioms sum a(u) * v = sum u * a(v) = epsilon(w) 1 over uv = w, and agreement
/// of the composition formula with the recursion, for |w| <= maxlen.
HopfReport check_antipode(const Bracket& br, std::size_t maxlen, const std::vector<Letter>& alphabet);

}  // namespace polyzeta
