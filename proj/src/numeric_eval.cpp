#include "polyzeta/numeric_eval.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

#include "polyzeta/errors.hpp"
#include "polyzeta/parallel.hpp"

namespace polyzeta {

void EvalConfig::validate() const {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (n_start < 2) throw std::invalid_argument("n_start must be at least 2");
  if (n_start > n_max) throw std::invalid_argument("n_start must not exceed n_max");
}

namespace {

using cplx = std::complex<double>;

// Kahan summation that also supports rescaling of the running value.
class CompensatedSum {
 public:
  void add(cplx x) {
    cplx y = x - comp_;
    cplx t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  void scale(cplx c) {
    sum_ *= c;
    comp_ *= c;
  }
  cplx value() const { return sum_; }

 private:
  cplx sum_{};
  cplx comp_{};
};

void require_evaluable(const PolyzetaParams& p) {
  if (!p.convergent()) throw DivergenceError("divergent parameters " + to_string(p) + " (need s1 > 1, or s1 = 1 with |xi1| < 1)");
  if (!p.colors_bounded()) throw DivergenceError("color prefix product of modulus > 1 in " + to_string(p));
  if (!p.shifts_admissible()) throw DivergenceError("shift makes a denominator vanish in " + to_string(p));
}

// Nested sums in the telescoped form
//   prod_i xi_i^{n_i} = prod_i c_i^{n_i - n_{i+1}},  n_{r+1} = 0,
// so every multiplier has modulus <= 1. With c_0 = 1,
//   G_i(n+1) = c_{i-1} (G_i(n) + lambda_i(n)^{s_i} G_{i+1}(n)),  G_{r+1}(n) = c_r^n,
// and G_1(N) is the sum over N > n1 > ... > nr > 0.
class NestedSum {
 public:
  explicit NestedSum(const PolyzetaParams& p) : s_(p.s), levels_(p.depth() + 1) {
    for (const auto& c : p.cumulative_colors()) c_.push_back(c.to_complex());
    for (const auto& t : p.t) t_.push_back(t.get_d());
    levels_.back().add(c_.back());  // G_{r+1}(1) = c_r
  }

  std::int64_t next_index() const { return n_; }

  // Advances from G(n) to G(n+1).
  void step() {
    const std::size_t r = s_.size();
    for (std::size_t i = 0; i < r; ++i) {
      double base = 1.0 / (static_cast<double>(n_) - t_[i]);
      double lam = 1.0;
      for (int e = 0; e < s_[i]; ++e) lam *= base;
      levels_[i].add(lam * levels_[i + 1].value());
      if (i > 0) levels_[i].scale(c_[i - 1]);
    }
    levels_[r].scale(c_[r - 1]);
    ++n_;
  }

  cplx value() const { return levels_.front().value(); }

 private:
  std::vector<int> s_;
  std::vector<cplx> c_;
  std::vector<double> t_;
  std::vector<CompensatedSum> levels_;
  std::int64_t n_ = 1;
};

double tail_estimate(const PolyzetaParams& p, std::int64_t cutoff) {
  const double N = static_cast<double>(cutoff);
  const int r = static_cast<int>(p.depth());
  const int s1 = p.s.front();
  const double t1 = p.t.front().get_d();
  const double log_factor = std::pow(1.0 + std::log(N), r - 1);
  const double c1 = std::abs(p.xi.front().to_complex());
  if (c1 < 1.0 - 1e-12) {
    return std::pow(c1, N) / (1.0 - c1) * log_factor * std::pow(N - t1, -static_cast<double>(s1));
  }
  return std::pow(N - t1, 1.0 - s1) * log_factor / (s1 - 1);
}

}  // namespace

std::complex<double> truncated_di(const PolyzetaParams& p, std::int64_t cutoff) {
  require_evaluable(p);
  if (p.depth() == 0) return 1.0;
  NestedSum sum(p);
  while (sum.next_index() < cutoff) sum.step();
  return sum.value();
}

EvalResult eval_di(const PolyzetaParams& p, const EvalConfig& cfg) {
  cfg.validate();
  require_evaluable(p);
  EvalResult result;
  if (p.depth() == 0) {
    result.value = 1.0;
    result.converged = true;
    return result;
  }

  NestedSum sum(p);
  std::int64_t checkpoint = cfg.doubling ? cfg.n_start : std::max<std::int64_t>(2, cfg.n_max / 2);
  std::optional<cplx> previous;
  while (true) {
    while (sum.next_index() < checkpoint) sum.step();
    cplx value = sum.value();
    if (previous) {
      result.value = value;
      result.n_used = checkpoint;
      result.error_estimate = std::abs(value - *previous) + tail_estimate(p, checkpoint);
      result.converged = result.error_estimate <= cfg.tolerance;
      if (result.converged || checkpoint >= cfg.n_max) return result;
    } else if (checkpoint >= cfg.n_max) {
      result.value = value;
      result.n_used = checkpoint;
      result.error_estimate = tail_estimate(p, checkpoint);
      result.converged = false;
      return result;
    }
    previous = value;
    checkpoint = std::min(checkpoint * 2, cfg.n_max);
  }
}

RelationReport verify_relation(const std::pair<PolyzetaParams, PolyzetaParams>& lhs, const ParamsLinComb& rhs,
                               const EvalConfig& cfg) {
  cfg.validate();
  std::vector<PolyzetaParams> distinct;
  {
    std::map<PolyzetaParams, int> seen;
    auto note = [&](const PolyzetaParams& p) {
      if (seen.emplace(p, 0).second) distinct.push_back(p);
    };
    note(lhs.first);
    note(lhs.second);
    for (const auto& [p, c] : rhs) note(p);
  }
  for (const auto& p : distinct) require_evaluable(p);

  double mass = 2.0;
  for (const auto& [p, c] : rhs) mass += std::abs(c.get_d());
  EvalConfig term_cfg = cfg;
  term_cfg.tolerance = cfg.tolerance / (4.0 * mass);

  std::vector<EvalResult> results(distinct.size());
  parallel_for(distinct.size(), [&](std::size_t i) { results[i] = eval_di(distinct[i], term_cfg); });

  std::map<PolyzetaParams, EvalResult> by_params;
  RelationReport report;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    by_params.emplace(distinct[i], results[i]);
    report.evaluations.emplace_back(distinct[i], results[i]);
    report.all_converged = report.all_converged && results[i].converged;
  }

  const auto& a = by_params.at(lhs.first);
  const auto& b = by_params.at(lhs.second);
  report.lhs_value = a.value * b.value;
  report.error_budget = std::abs(a.value) * b.error_estimate + std::abs(b.value) * a.error_estimate +
                        a.error_estimate * b.error_estimate;
  // Sorted term order keeps the floating sum deterministic.
  cplx total{};
  for (const auto& [p, c] : rhs) {
    const auto& r = by_params.at(p);
    total += c.get_d() * r.value;
    report.error_budget += std::abs(c.get_d()) * r.error_estimate;
  }
  report.rhs_value = total;
  report.residual = std::abs(report.lhs_value - report.rhs_value);
  report.tolerance = cfg.tolerance;
  report.passed = report.residual <= cfg.tolerance;
  return report;
}

}  // namespace polyzeta
