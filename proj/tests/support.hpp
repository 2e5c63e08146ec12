#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "polyzeta/color.hpp"
#include "polyzeta/polynomial.hpp"
#include "polyzeta/polyzeta_index.hpp"
#include "polyzeta/word.hpp"

namespace test_support {

using namespace polyzeta;

inline Rational q(const char* text) { return parse_rational(text); }
inline Rational frac(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}
inline Color col(const char* text) { return Color::rational(parse_rational(text)); }

inline Word xs(std::initializer_list<long> idx) {
  std::vector<Letter> out;
  for (long i : idx) out.push_back(x(i));
  return Word(std::move(out));
}
inline Word ys(std::initializer_list<long> idx) { return xs(idx); }

inline Word ms(std::initializer_list<const char*> gs) {
  std::vector<Letter> out;
  for (const char* g : gs) out.push_back(mono(col(g)));
  return Word(std::move(out));
}

inline Word ps(std::initializer_list<std::pair<long, const char*>> items) {
  std::vector<Letter> out;
  for (const auto& [i, g] : items) out.push_back(pair(i, col(g)));
  return Word(std::move(out));
}

inline Polynomial<> poly(std::initializer_list<std::pair<long, Word>> terms) {
  Polynomial<> p;
  for (const auto& [c, w] : terms) p.add(w, Rational(c));
  return p;
}

inline PolyzetaParams params(std::vector<int> s, std::vector<Color> xi, std::vector<Rational> t) {
  return PolyzetaParams(std::move(s), std::move(xi), std::move(t));
}
inline PolyzetaParams params(std::vector<int> s, std::vector<Color> xi) {
  std::vector<Rational> t(s.size(), Rational(0));
  return PolyzetaParams(std::move(s), std::move(xi), std::move(t));
}

/// Random word of the given length over the letters.
inline Word random_word(std::mt19937_64& rng, const std::vector<Letter>& letters, std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(letters[pick(rng)]);
  return Word(std::move(out));
}

/// Random nonzero rational p/d with |p/d| <= bound_num/bound_den.
inline Rational random_rational(std::mt19937_64& rng, long den, long max_num) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  long p = 0;
  while (p == 0) p = num(rng);
  return frac(p, den);
}

/// Random exact color: a rational or a root of unity times a rational modulus.
inline Color random_color(std::mt19937_64& rng, long den, long max_num) {
  Rational m = random_rational(rng, den, max_num);
  if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    long n = std::uniform_int_distribution<long>(3, 8)(rng);
    long k = std::uniform_int_distribution<long>(1, n - 1)(rng);
    return Color::root_of_unity(k, n) * Color::rational(abs(m));
  }
  return Color::rational(m);
}

/// Random parameters of depth r whose color prefix products have modulus <= cap_num/den,
/// s1 >= 2 and shifts in [-max_t, max_t] with denominator 10.
inline PolyzetaParams random_convergent(std::mt19937_64& rng, std::size_t r, long den, long cap_num, long max_t) {
  std::vector<int> s;
  std::vector<Color> xi;
  std::vector<Rational> t;
  std::uniform_int_distribution<int> weight(1, 3);
  std::uniform_int_distribution<long> shift(-max_t, max_t);
  Color prev;
  for (std::size_t i = 0; i < r; ++i) {
    s.push_back(i == 0 ? weight(rng) + 1 : weight(rng));
    Color c = random_color(rng, den, cap_num);
    xi.push_back(c / prev);
    prev = c;
    t.push_back(frac(shift(rng), 10));
  }
  return PolyzetaParams(std::move(s), std::move(xi), std::move(t));
}

}  // namespace test_support
