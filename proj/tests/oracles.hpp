#pragma once

// Brute-force reference implementations. None of them share code paths with the
// library beyond the value types.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "polyzeta/polynomial.hpp"
#include "polyzeta/polyzeta_index.hpp"
#include "polyzeta/star_product.hpp"
#include "polyzeta/word.hpp"

namespace oracle {

using namespace polyzeta;

/// Every k-subset of {0..n-1} as a bitmask.
inline std::vector<std::uint32_t> subsets(unsigned n, unsigned k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (static_cast<unsigned>(__builtin_popcount(m)) == k) out.push_back(m);
  return out;
}

/// All interleavings of u and v, listed with multiplicity.
inline std::vector<Word> interleavings(const Word& u, const Word& v) {
  const unsigned n = static_cast<unsigned>(u.size() + v.size());
  std::vector<Word> out;
  for (auto mask : subsets(n, static_cast<unsigned>(u.size()))) {
    std::vector<Letter> letters;
    std::size_t i = 0, j = 0;
    for (unsigned p = 0; p < n; ++p) letters.push_back((mask >> p) & 1u ? u[i++] : v[j++]);
    out.emplace_back(std::move(letters));
  }
  return out;
}

/// Quasi-shuffle as a sum over pairs of strictly increasing maps f: [|u|] -> [k],
/// g: [|v|] -> [k] whose images cover [k]; doubly covered positions carry the bracket.
inline Polynomial<> quasi_shuffle(const Bracket& br, const Word& u, const Word& v) {
  Polynomial<> out;
  const unsigned n = static_cast<unsigned>(u.size());
  const unsigned m = static_cast<unsigned>(v.size());
  for (unsigned k = std::max(n, m); k <= n + m; ++k) {
    for (auto fu : subsets(k, n)) {
      for (auto gv : subsets(k, m)) {
        if ((fu | gv) != (1u << k) - 1u) continue;
        std::vector<Letter> letters;
        Rational coeff(1);
        bool zero = false;
        std::size_t i = 0, j = 0;
        for (unsigned p = 0; p < k && !zero; ++p) {
          bool a = (fu >> p) & 1u, b = (gv >> p) & 1u;
          if (a && b) {
            auto c = br(u[i++], v[j++]);
            if (!c) {
              zero = true;
            } else {
              coeff *= c->scale;
              letters.push_back(c->letter);
            }
          } else if (a) {
            letters.push_back(u[i++]);
          } else {
            letters.push_back(v[j++]);
          }
        }
        if (!zero) out.add(Word(std::move(letters)), coeff);
      }
    }
  }
  return out;
}

/// sum over n > n1 > ... > nr > 0 of prod xi_i^{n_i} lambda(n_i)^{s_i}, by explicit
/// enumeration of the index tuples.
template <class C>
C nested_sum(std::int64_t n, const std::vector<int>& s, const std::vector<C>& xi,
             const std::function<C(std::int64_t)>& lambda) {
  const std::size_t r = s.size();
  C total(0);
  std::vector<std::int64_t> idx(r);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t level, std::int64_t bound) {
    if (level == r) {
      C term(1);
      for (std::size_t i = 0; i < r; ++i)
        for (std::int64_t e = 0; e < idx[i]; ++e) term *= xi[i];
      for (std::size_t i = 0; i < r; ++i)
        for (int e = 0; e < s[i]; ++e) term *= lambda(idx[i]);
      total += term;
      return;
    }
    for (std::int64_t k = bound - 1; k > 0; --k) {
      idx[level] = k;
      rec(level + 1, k);
    }
  };
  rec(0, n);
  return total;
}

/// Truncated polyzeta sum over N > n1 > ... > nr > 0 by direct nested loops in long
/// double, with the colors taken as complex numbers.
inline std::complex<long double> truncated_series(const PolyzetaParams& p, std::int64_t N) {
  using cl = std::complex<long double>;
  const std::size_t r = p.depth();
  std::vector<cl> xi;
  std::vector<long double> t;
  for (const auto& c : p.xi) {
    auto z = c.to_complex();
    xi.emplace_back(z.real(), z.imag());
  }
  for (const auto& v : p.t) t.push_back(static_cast<long double>(v.get_d()));
  std::function<cl(std::size_t, std::int64_t)> level = [&](std::size_t i, std::int64_t bound) -> cl {
    if (i == r) return 1.0L;
    cl sum = 0.0L;
    for (std::int64_t k = bound - 1; k > 0; --k) {
      cl term = std::pow(xi[i], static_cast<long double>(k)) /
                std::pow(static_cast<long double>(k) - t[i], static_cast<long double>(p.s[i]));
      sum += term * level(i + 1, k);
    }
    return sum;
  };
  return level(0, N);
}

/// sum_{k=1}^{N-1} 1/k^s, smallest terms first.
inline long double zeta_partial(int s, std::int64_t N) {
  long double sum = 0.0L;
  for (std::int64_t k = N - 1; k >= 1; --k) sum += 1.0L / std::pow(static_cast<long double>(k), s);
  return sum;
}

}  // namespace oracle
