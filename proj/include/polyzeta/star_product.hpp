#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyzeta/errors.hpp"
#include "polyzeta/polynomial.hpp"
#include "polyzeta/word.hpp"

namespace polyzeta {

/// q.l: a letter with a rational scale, i.e. an element of AX.
struct ScaledLetter {
  Rational scale;
  Letter letter;
};

bool operator==(const ScaledLetter& a, const ScaledLetter& b);

/// The pairing [.,.] on AX that selects a product in the family of bracket-driven
/// stuffle-like products. nullopt stands for [a,b] = 0.
class Bracket {
 public:
  using Fn = std::function<std::optional<ScaledLetter>(const Letter&, const Letter&)>;

  /// domain == nullopt means the bracket accepts every alphabet kind.
  Bracket(std::string name, std::optional<AlphabetKind> domain, Fn fn)
      : name_(std::move(name)), domain_(domain), fn_(std::move(fn)) {}

  const std::string& name() const { return name_; }
  std::optional<AlphabetKind> domain() const { return domain_; }

  bool accepts(AlphabetKind kind) const { return !domain_ || *domain_ == kind; }
  /// Throws AlphabetMismatch when the word's kind is outside the domain.
  void require(const Word& w) const;

  std::optional<ScaledLetter> operator()(const Letter& a, const Letter& b) const;

 private:
  std::string name_;
  std::optional<AlphabetKind> domain_;
  Fn fn_;
};

/// [a,b] = 0.
Bracket shuffle_bracket();
/// [x_i,x_j] = x_{i+j} on indexed letters.
Bracket stuffle_bracket();
/// [x_i,x_j] = -x_{i+j} on indexed letters.
Bracket minus_stuffle_bracket();
/// [x_g,x_h] = x_{gh} on monoid letters.
Bracket mulstuffle_bracket();
/// [(y_i,e_g),(y_j,e_h)] = (y_{i+j}, e_{gh}) on pair letters.
Bracket duffle_bracket();

enum class ProductKind { shuffle, stuffle, minus_stuffle, mulstuffle, duffle };

inline constexpr ProductKind all_products[] = {ProductKind::shuffle, ProductKind::stuffle,
                                               ProductKind::minus_stuffle, ProductKind::mulstuffle,
                                               ProductKind::duffle};

Bracket bracket_for(ProductKind kind);
/// CLI names: shuffle, stuffle, minusstuffle, mulstuffle, duffle.
std::string to_string(ProductKind kind);
std::optional<ProductKind> parse_product(std::string_view name);

/// u * v for words, by the recursion
///   au * bv = a(u * bv) + b(au * v) + [a,b](u * v),   1 * w = w * 1 = w,
/// evaluated over the (|u|+1) x (|v|+1) table of suffix pairs.
template <class Scalar = Rational>
Polynomial<Scalar> star(const Bracket& br, const Word& u, const Word& v) {
  br.require(u);
  br.require(v);
  if (u.empty()) return Polynomial<Scalar>(v);
  if (v.empty()) return Polynomial<Scalar>(u);
  if (*u.kind() != *v.kind())
    throw AlphabetMismatch("star product of " + to_string(*u.kind()) + " and " + to_string(*v.kind()) + " words");

  const std::size_t n = u.size();
  const std::size_t m = v.size();
  // table[i][j] = u[i:] * v[j:]
  std::vector<std::vector<Polynomial<Scalar>>> table(n + 1, std::vector<Polynomial<Scalar>>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) table[i][m] = Polynomial<Scalar>(u.suffix(i));
  for (std::size_t j = 0; j <= m; ++j) table[n][j] = Polynomial<Scalar>(v.suffix(j));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      Polynomial<Scalar> cell = prepend(u[i], table[i + 1][j]);
      cell += prepend(v[j], table[i][j + 1]);
      if (auto ab = br(u[i], v[j])) {
        cell += scalar_traits<Scalar>::from_rational(ab->scale) * prepend(ab->letter, table[i + 1][j + 1]);
      }
      table[i][j] = std::move(cell);
    }
  }
  return std::move(table[0][0]);
}

/// Bilinear extension to polynomials.
template <class Scalar>
Polynomial<Scalar> star(const Bracket& br, const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  Polynomial<Scalar> out;
  for (const auto& [u, a] : p)
    for (const auto& [v, b] : q) out += Scalar(a * b) * star<Scalar>(br, u, v);
  return out;
}

template <class Scalar>
Polynomial<Scalar> shuffle(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  return star(shuffle_bracket(), p, q);
}
template <class Scalar>
Polynomial<Scalar> stuffle(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  return star(stuffle_bracket(), p, q);
}
template <class Scalar>
Polynomial<Scalar> minus_stuffle(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  return star(minus_stuffle_bracket(), p, q);
}
template <class Scalar>
Polynomial<Scalar> mulstuffle(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  return star(mulstuffle_bracket(), p, q);
}
template <class Scalar>
Polynomial<Scalar> duffle(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  return star(duffle_bracket(), p, q);
}

// Word-level conveniences with exact coefficients.
inline Polynomial<> shuffle(const Word& u, const Word& v) { return star<Rational>(shuffle_bracket(), u, v); }
inline Polynomial<> stuffle(const Word& u, const Word& v) { return star<Rational>(stuffle_bracket(), u, v); }
inline Polynomial<> minus_stuffle(const Word& u, const Word& v) {
  return star<Rational>(minus_stuffle_bracket(), u, v);
}
inline Polynomial<> mulstuffle(const Word& u, const Word& v) { return star<Rational>(mulstuffle_bracket(), u, v); }
inline Polynomial<> duffle(const Word& u, const Word& v) { return star<Rational>(duffle_bracket(), u, v); }

/// [[a,b],c] and [a,[b,c]] with bilinearity; equal when the bracket satisfies
/// associativity on this triple. Returns nullopt for the zero element.
std::optional<ScaledLetter> bracket_left(const Bracket& br, const Letter& a, const Letter& b, const Letter& c);
std::optional<ScaledLetter> bracket_right(const Bracket& br, const Letter& a, const Letter& b, const Letter& c);

/// The given letters plus all brackets among them, closed twice.
std::vector<Letter> bracket_closure(const Bracket& br, const std::vector<Letter>& letters, int depth = 2);

}  // namespace polyzeta
