#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyzeta/color.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/word.hpp"

namespace polyzeta {

/// Parameters (s; xi; t) of the colored Hurwitz polyzeta
///   Di(F_{xi,t}; s) = sum_{n1 > ... > nr > 0} xi_1^{n1} ... xi_r^{nr} / ((n1 - t1)^{s1} ... (nr - tr)^{sr}).
/// Depth 0 is the constant 1.
struct PolyzetaParams {
  std::vector<int> s;
  std::vector<Color> xi;
  std::vector<Rational> t;

  PolyzetaParams() = default;
  /// Throws DomainError on unequal lengths or a non-positive s entry.
  PolyzetaParams(std::vector<int> s, std::vector<Color> xi, std::vector<Rational> t);

  std::size_t depth() const { return s.size(); }
  int weight() const;

  /// Prefix products c_i = xi_1 ... xi_i.
  std::vector<Color> cumulative_colors() const;

  /// Condition (E): |c_i| <= 1 and t_i < 1 for every i.
  bool satisfies_E() const;
  /// Color half of (E): |c_i| <= 1 for every i.
  bool colors_bounded() const;
  /// s1 > 1, or s1 == 1 with |xi_1| < 1. True at depth 0.
  bool convergent() const;
  /// t_i < r - i + 1 for every i (1-based), so no denominator n_i - t_i can vanish or
  /// turn negative on the summation range.
  bool shifts_admissible() const;

  friend bool operator==(const PolyzetaParams& a, const PolyzetaParams& b);
  friend bool operator!=(const PolyzetaParams& a, const PolyzetaParams& b) { return !(a == b); }
  friend bool operator<(const PolyzetaParams& a, const PolyzetaParams& b);
};

/// Di(F_{(xi...),(t...)};(s...)) as printed by the CLI.
std::string to_string(const PolyzetaParams& p);

/// Finite formal linear combination with exact coefficients, canonical (no zeros).
template <class T>
class LinComb {
 public:
  LinComb() = default;

  void add(const T& key, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Rational coeff(const T& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coefficient_sum() const {
    Rational total(0);
    for (const auto& [k, c] : terms_) total += c;
    return total;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator*=(const Rational& a) {
    if (sgn(a) == 0) terms_.clear();
    for (auto& [k, c] : terms_) c *= a;
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator*(const Rational& a, LinComb b) { return b *= a; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

 private:
  std::map<T, Rational> terms_;
};

using ParamsLinComb = LinComb<PolyzetaParams>;

std::string to_string(const ParamsLinComb& lc);

/// Consecutive differences tbar_i = t_i - t_{i+1}, tbar_r = t_r, the unique transform
/// whose suffix sums recover t.
std::vector<Rational> tbar(const std::vector<Rational>& t);
/// Suffix sums: the inverse of tbar.
std::vector<Rational> tbar_inverse(const std::vector<Rational>& tbar);

/// x0^{s1-1} x_{c1,tbar1} ... x0^{sr-1} x_{cr,tbar_r} with c_i the prefix color products.
/// Depth 0 maps to the empty word.
Word encode(const PolyzetaParams& p);

/// Inverse reading of an encoded word: s_i = 1 + number of x0 since the previous
/// colored letter, xi_1 = c_1, xi_i = c_i / c_{i-1}, t_i = tbar_i + ... + tbar_r.
/// Throws ShapeError unless the word matches (x0^* XForm)^+ (the empty word decodes to
/// depth 0).
PolyzetaParams decode(const Word& w);

/// Di(p) Di(q) as a combination of polyzetas, through the shuffle of the encodings.
/// Requires both inputs convergent with bounded colors; throws DivergenceError otherwise.
ParamsLinComb shuffle_expand(const PolyzetaParams& p, const PolyzetaParams& q);

/// Recursive duffle on paired tuples (s; colors), generic in the color type:
///   (s1,s; a1,a) # (r1,r; b1,b) = (s1;a1).((s;a) # (r1,r;b1,b)) + (r1;b1).((s1,s;a1,a) # (r;b))
///                                 + (s1+r1; a1 b1).((s;a) # (r;b)).
/// Terms are returned with multiplicity in recursion order.
template <class C>
std::vector<std::pair<std::vector<int>, std::vector<C>>> duffle_tuples(const std::vector<int>& s,
                                                                       const std::vector<C>& a,
                                                                       const std::vector<int>& r,
                                                                       const std::vector<C>& b) {
  using Term = std::pair<std::vector<int>, std::vector<C>>;
  // memo[i][j] = (s[i:],a[i:]) # (r[j:],b[j:])
  const std::size_t n = s.size();
  const std::size_t m = r.size();
  std::vector<std::vector<std::vector<Term>>> memo(n + 1, std::vector<std::vector<Term>>(m + 1));
  for (std::size_t i = 0; i <= n; ++i)
    memo[i][m] = {Term{std::vector<int>(s.begin() + i, s.end()), std::vector<C>(a.begin() + i, a.end())}};
  for (std::size_t j = 0; j <= m; ++j)
    memo[n][j] = {Term{std::vector<int>(r.begin() + j, r.end()), std::vector<C>(b.begin() + j, b.end())}};
  auto lift = [](int head, const C& color, const std::vector<Term>& tail, std::vector<Term>& out) {
    for (const auto& [ts, tc] : tail) {
      Term t;
      t.first.reserve(ts.size() + 1);
      t.second.reserve(tc.size() + 1);
      t.first.push_back(head);
      t.second.push_back(color);
      t.first.insert(t.first.end(), ts.begin(), ts.end());
      t.second.insert(t.second.end(), tc.begin(), tc.end());
      out.push_back(std::move(t));
    }
  };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      std::vector<Term> cell;
      lift(s[i], a[i], memo[i + 1][j], cell);
      lift(r[j], b[j], memo[i][j + 1], cell);
      lift(s[i] + r[j], C(a[i] * b[j]), memo[i + 1][j + 1], cell);
      memo[i][j] = std::move(cell);
    }
  }
  return std::move(memo[0][0]);
}

/// Di(p) Di(q) as a combination of polyzetas through the duffle, valid when both shift
/// tuples are the same constant t. Every output term carries (t,...,t).
/// Throws DiagonalViolation otherwise.
ParamsLinComb duffle_expand(const PolyzetaParams& p, const PolyzetaParams& q);

/// The common shift of a diagonal pair, nullopt when both are depth 0.
std::optional<Rational> common_diagonal_shift(const PolyzetaParams& p, const PolyzetaParams& q);

}  // namespace polyzeta
