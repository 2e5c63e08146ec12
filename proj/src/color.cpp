#include "polyzeta/color.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <tuple>
#include <sstream>

#include "polyzeta/errors.hpp"

namespace polyzeta {

namespace {

Rational reduce_turn(const Rational& turn) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), turn.get_num_mpz_t(), turn.get_den_mpz_t());
  Rational r = turn - Rational(fl);
  r.canonicalize();
  return r;
}

// Quarter turns have exact Gaussian forms; returns -1 otherwise.
int quarter_index(const Rational& turn) {
  Rational four_turn = turn * 4;
  if (!is_integer(four_turn)) return -1;
  return static_cast<int>(four_turn.get_num().get_si());
}

GaussianRational polar_to_gaussian(const Color::Polar& p, int quarter) {
  switch (quarter) {
    case 0: return {p.modulus, Rational(0)};
    case 1: return {Rational(0), p.modulus};
    case 2: return {Rational(-p.modulus), Rational(0)};
    default: return {Rational(0), Rational(-p.modulus)};
  }
}

}  // namespace

Color::Color() : rep_(Polar{Rational(1), Rational(0)}) {}

Color Color::rational(const Rational& q) {
  if (sgn(q) == 0) throw ArithmeticError("color must be nonzero");
  Rational m = abs(q);
  m.canonicalize();
  return Color(Polar{m, sgn(q) < 0 ? Rational(1, 2) : Rational(0)});
}

Color Color::root_of_unity(long k, long n) {
  if (n <= 0) throw ArithmeticError("root of unity order must be positive");
  Rational turn(k, n);
  turn.canonicalize();
  return Color(Polar{Rational(1), reduce_turn(turn)});
}

Color Color::polar(const Rational& modulus, const Rational& turn) {
  if (sgn(modulus) <= 0) throw ArithmeticError("polar color needs a positive modulus");
  Rational m = modulus;
  m.canonicalize();
  Rational r = turn;
  r.canonicalize();
  return Color(Polar{m, reduce_turn(r)});
}

Color Color::gaussian(const GaussianRational& z) { return normalize(z); }

Color Color::floating(std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) throw ArithmeticError("color must be nonzero");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ArithmeticError("color must be finite");
  return Color(Rep(z));
}

Color Color::normalize(const GaussianRational& z) {
  int re = sgn(z.real());
  int im = sgn(z.imag());
  if (re == 0 && im == 0) throw ArithmeticError("color must be nonzero");
  if (im == 0) return Color(Polar{abs(z.real()), re < 0 ? Rational(1, 2) : Rational(0)});
  if (re == 0) return Color(Polar{abs(z.imag()), im > 0 ? Rational(1, 4) : Rational(3, 4)});
  return Color(Rep(z));
}

bool Color::is_rational() const {
  if (!is_polar()) return false;
  const auto& p = as_polar();
  return sgn(p.turn) == 0 || p.turn == Rational(1, 2);
}

Rational Color::to_rational() const {
  if (!is_rational()) throw ArithmeticError("color " + to_string(*this) + " is not rational");
  const auto& p = as_polar();
  return sgn(p.turn) == 0 ? p.modulus : Rational(-p.modulus);
}

std::complex<double> Color::to_complex() const {
  return std::visit(
      [](const auto& v) -> std::complex<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Polar>) {
          int q = quarter_index(v.turn);
          if (q >= 0) return polar_to_gaussian(v, q).to_complex();
          double angle = 2.0 * std::numbers::pi * v.turn.get_d();
          return std::polar(v.modulus.get_d(), angle);
        } else if constexpr (std::is_same_v<T, GaussianRational>) {
          return v.to_complex();
        } else {
          return v;
        }
      },
      rep_);
}

Color Color::inverse() const {
  return std::visit(
      [](const auto& v) -> Color {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Polar>) {
          return Color(Polar{Rational(1 / v.modulus), reduce_turn(Rational(-v.turn))});
        } else if constexpr (std::is_same_v<T, GaussianRational>) {
          return normalize(v.inverse());
        } else {
          return Color(Rep(1.0 / v));
        }
      },
      rep_);
}

Color& Color::operator*=(const Color& o) {
  if (is_polar() && o.is_polar()) {
    const auto& a = as_polar();
    const auto& b = o.as_polar();
    rep_ = Polar{Rational(a.modulus * b.modulus), reduce_turn(Rational(a.turn + b.turn))};
    return *this;
  }
  if (is_exact() && o.is_exact()) {
    auto exact_gaussian = [](const Color& c) -> std::optional<GaussianRational> {
      if (c.is_gaussian()) return c.as_gaussian();
      int q = quarter_index(c.as_polar().turn);
      if (q < 0) return std::nullopt;
      return polar_to_gaussian(c.as_polar(), q);
    };
    auto za = exact_gaussian(*this);
    auto zb = exact_gaussian(o);
    if (za && zb) {
      *this = normalize(*za * *zb);
      return *this;
    }
  }
  rep_ = to_complex() * o.to_complex();
  return *this;
}

int Color::compare_modulus_to_one() const {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Polar>) {
          return cmp(v.modulus, 1) < 0 ? -1 : (cmp(v.modulus, 1) > 0 ? 1 : 0);
        } else if constexpr (std::is_same_v<T, GaussianRational>) {
          int c = cmp(v.norm2(), 1);
          return c < 0 ? -1 : (c > 0 ? 1 : 0);
        } else {
          double m = std::abs(v);
          if (std::abs(m - 1.0) <= 1e-12) return 0;
          return m < 1.0 ? -1 : 1;
        }
      },
      rep_);
}

bool operator==(const Color& a, const Color& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  return std::visit(
      [&b](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        const auto& w = std::get<T>(b.rep_);
        if constexpr (std::is_same_v<T, Color::Polar>) {
          return v.modulus == w.modulus && v.turn == w.turn;
        } else {
          return v == w;
        }
      },
      a.rep_);
}

bool operator<(const Color& a, const Color& b) {
  if (a.rep_.index() != b.rep_.index()) return a.rep_.index() < b.rep_.index();
  return std::visit(
      [&b](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        const auto& w = std::get<T>(b.rep_);
        if constexpr (std::is_same_v<T, Color::Polar>) {
          // Real colors first, ordered by value; then by turn and modulus.
          const bool ra = sgn(v.turn) == 0 || v.turn.get_den() == 2;
          const bool rb = sgn(w.turn) == 0 || w.turn.get_den() == 2;
          if (ra != rb) return ra;
          if (ra) {
            const bool pa = sgn(v.turn) == 0;
            const bool pb = sgn(w.turn) == 0;
            if (pa != pb) return pb;
            return pa ? cmp(v.modulus, w.modulus) < 0 : cmp(v.modulus, w.modulus) > 0;
          }
          if (int c = cmp(v.turn, w.turn)) return c < 0;
          return cmp(v.modulus, w.modulus) < 0;
        } else if constexpr (std::is_same_v<T, GaussianRational>) {
          return v < w;
        } else {
          if (v.real() != w.real()) return v.real() < w.real();
          return v.imag() < w.imag();
        }
      },
      a.rep_);
}

std::string to_string(const Color& c) {
  if (c.is_rational()) return to_string(c.to_rational());
  if (c.is_polar()) {
    const auto& p = c.as_polar();
    std::string root = "exp(2πi·" + to_string(p.turn) + ")";
    if (p.modulus == 1) return root;
    return to_string(p.modulus) + "·" + root;
  }
  if (c.is_gaussian()) return to_string(c.as_gaussian());
  std::ostringstream os;
  os.precision(17);
  auto z = c.as_floating();
  if (z.imag() == 0.0) {
    os << z.real();
  } else {
    os << "(" << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i)";
  }
  return os.str();
}

}  // namespace polyzeta
