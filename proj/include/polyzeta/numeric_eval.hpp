#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyzeta/polynomial.hpp"
#include "polyzeta/polyzeta_index.hpp"

namespace polyzeta {

/// Exact or floating partial sum
///   M^n_{s,xi}(lambda) = sum_{n > n1 > ... > nr > 0} prod_i xi_i^{n_i} lambda_{n_i}^{s_i},
/// with M^n_{(),()} = 1. Prefix-sum dynamic programming, O(n r) ring operations.
/// lambda is called once per index 1..n-1.
template <class C>
C partial_M(std::int64_t n, std::span<const int> s, std::span<const C> xi, const std::function<C(std::int64_t)>& lambda) {
  using traits = scalar_traits<C>;
  if (s.empty()) return traits::one();
  if (n <= static_cast<std::int64_t>(s.size())) return traits::zero();

  std::vector<C> lam(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k < n; ++k) lam[static_cast<std::size_t>(k)] = lambda(k);

  // inner[k] holds the level-(i+1) sum restricted to indices below k.
  std::vector<C> inner(static_cast<std::size_t>(n), traits::one());
  C result = traits::zero();
  for (std::size_t level = s.size(); level-- > 0;) {
    std::vector<C> next(static_cast<std::size_t>(n), traits::zero());
    C acc = traits::zero();
    C power = traits::one();
    for (std::int64_t k = 1; k < n; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      next[ku] = acc;
      power *= xi[level];
      C term = power;
      for (int e = 0; e < s[level]; ++e) term *= lam[ku];
      term *= inner[ku];
      acc += term;
    }
    result = acc;
    inner = std::move(next);
  }
  return result;
}

/// M^n_{s,xi}(lambda) M^n_{r,rho}(lambda) == sum over the duffle (s,xi) # (r,rho) of M^n,
/// compared with ==. Intended for exact rings.
template <class C>
bool check_prop_M(const std::vector<int>& s, const std::vector<C>& xi, const std::vector<int>& r,
                  const std::vector<C>& rho, std::int64_t n, const std::function<C(std::int64_t)>& lambda) {
  C lhs = partial_M<C>(n, s, xi, lambda) * partial_M<C>(n, r, rho, lambda);
  C rhs = scalar_traits<C>::zero();
  for (const auto& [ts, tc] : duffle_tuples<C>(s, xi, r, rho)) rhs += partial_M<C>(n, ts, tc, lambda);
  return lhs == rhs;
}

struct EvalConfig {
  double tolerance = 1e-10;
  std::int64_t n_start = std::int64_t{1} << 10;
  std::int64_t n_max = std::int64_t{1} << 22;
  bool doubling = true;

  /// Throws std::invalid_argument unless 0 < tolerance and 2 <= n_start <= n_max.
  void validate() const;
};

struct EvalResult {
  std::complex<double> value;
  /// Last doubling increment plus the analytic tail estimate. An estimate, not a
  /// certified bound.
  double error_estimate = 0.0;
  std::int64_t n_used = 0;
  bool converged = false;
};

/// Di(F_{xi,t};s) by the truncated nested sum over n1 < N, N doubling from n_start
/// until error_estimate <= tolerance or N reaches n_max.
/// Throws DivergenceError when p is not convergent, has a color prefix product of
/// modulus > 1, or has a shift that makes a denominator vanish.
EvalResult eval_di(const PolyzetaParams& p, const EvalConfig& cfg = {});

/// Truncated sum at a fixed cutoff: sum over N > n1 > ... > nr > 0.
std::complex<double> truncated_di(const PolyzetaParams& p, std::int64_t cutoff);

struct RelationReport {
  std::complex<double> lhs_value;
  std::complex<double> rhs_value;
  double residual = 0.0;
  double tolerance = 0.0;
  /// Propagated error estimates of all evaluations.
  double error_budget = 0.0;
  bool all_converged = true;
  bool passed = false;
  std::vector<std::pair<PolyzetaParams, EvalResult>> evaluations;
};

/// Checks Di(lhs.first) Di(lhs.second) == sum c Di(term) numerically.
/// Passes iff the residual is <= cfg.tolerance. Each series is evaluated with a
/// tolerance tightened by the total coefficient mass.
RelationReport verify_relation(const std::pair<PolyzetaParams, PolyzetaParams>& lhs, const ParamsLinComb& rhs,
                               const EvalConfig& cfg = {});

}  // namespace polyzeta
