#include "polyzeta/polyzeta_index.hpp"

#include <algorithm>

#include "polyzeta/errors.hpp"
#include "polyzeta/star_product.hpp"

namespace polyzeta {

PolyzetaParams::PolyzetaParams(std::vector<int> s_, std::vector<Color> xi_, std::vector<Rational> t_)
    : s(std::move(s_)), xi(std::move(xi_)), t(std::move(t_)) {
  if (s.size() != xi.size() || s.size() != t.size())
    throw DomainError("s, xi and t must have equal lengths (got " + std::to_string(s.size()) + ", " +
                      std::to_string(xi.size()) + ", " + std::to_string(t.size()) + ")");
  for (int v : s)
    if (v < 1) throw DomainError("composition entries must be positive");
  for (auto& v : t) v.canonicalize();
}

int PolyzetaParams::weight() const {
  int w = 0;
  for (int v : s) w += v;
  return w;
}

std::vector<Color> PolyzetaParams::cumulative_colors() const {
  std::vector<Color> c;
  c.reserve(xi.size());
  Color acc;
  for (const auto& v : xi) {
    acc *= v;
    c.push_back(acc);
  }
  return c;
}

bool PolyzetaParams::colors_bounded() const {
  auto c = cumulative_colors();
  return std::all_of(c.begin(), c.end(), [](const Color& v) { return v.compare_modulus_to_one() <= 0; });
}

bool PolyzetaParams::satisfies_E() const {
  return colors_bounded() && std::all_of(t.begin(), t.end(), [](const Rational& v) { return v < 1; });
}

bool PolyzetaParams::convergent() const {
  if (s.empty()) return true;
  if (s.front() > 1) return true;
  return xi.front().compare_modulus_to_one() < 0;
}

bool PolyzetaParams::shifts_admissible() const {
  const std::size_t r = t.size();
  for (std::size_t i = 0; i < r; ++i)
    if (!(t[i] < Rational(static_cast<long>(r - i)))) return false;
  return true;
}

bool operator==(const PolyzetaParams& a, const PolyzetaParams& b) {
  return a.s == b.s && a.xi == b.xi && a.t == b.t;
}

bool operator<(const PolyzetaParams& a, const PolyzetaParams& b) {
  if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
  if (a.s != b.s) return a.s < b.s;
  if (a.xi != b.xi) return std::lexicographical_compare(a.xi.begin(), a.xi.end(), b.xi.begin(), b.xi.end());
  return std::lexicographical_compare(a.t.begin(), a.t.end(), b.t.begin(), b.t.end());
}

namespace {

template <class T, class F>
std::string join(const std::vector<T>& v, F f) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += f(v[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const PolyzetaParams& p) {
  if (p.depth() == 0) return "1";
  auto colors = join(p.xi, [](const Color& c) { return to_string(c); });
  auto shifts = join(p.t, [](const Rational& q) { return to_string(q); });
  auto comp = join(p.s, [](int v) { return std::to_string(v); });
  return "Di(F_{(" + colors + ");(" + shifts + ")};(" + comp + "))";
}

std::string to_string(const ParamsLinComb& lc) {
  if (lc.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : lc) {
    std::string cs = to_string(c);
    bool negative = cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (cs != "1") out += cs + "·";
    out += to_string(p);
    first = false;
  }
  return out;
}

std::vector<Rational> tbar(const std::vector<Rational>& t) {
  std::vector<Rational> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = i + 1 < t.size() ? Rational(t[i] - t[i + 1]) : t[i];
  return out;
}

std::vector<Rational> tbar_inverse(const std::vector<Rational>& tb) {
  std::vector<Rational> out(tb.size());
  Rational acc(0);
  for (std::size_t i = tb.size(); i-- > 0;) {
    acc += tb[i];
    out[i] = acc;
  }
  return out;
}

Word encode(const PolyzetaParams& p) {
  std::vector<Letter> letters;
  const auto c = p.cumulative_colors();
  const auto tb = tbar(p.t);
  for (std::size_t i = 0; i < p.depth(); ++i) {
    for (int k = 1; k < p.s[i]; ++k) letters.push_back(X0Letter{});
    letters.push_back(XFormLetter{c[i], tb[i]});
  }
  return Word(std::move(letters));
}

PolyzetaParams decode(const Word& w) {
  if (w.empty()) return {};
  if (*w.kind() != AlphabetKind::encoded)
    throw ShapeError("decode expects an encoded word, got " + to_string(*w.kind()) + " letters");
  if (!std::holds_alternative<XFormLetter>(w[w.size() - 1]))
    throw ShapeError("encoded word must end with a colored letter: " + to_string(w));

  std::vector<int> s;
  std::vector<Color> c;
  std::vector<Rational> tb;
  int run = 0;
  for (const auto& a : w) {
    if (std::holds_alternative<X0Letter>(a)) {
      ++run;
      continue;
    }
    const auto& l = std::get<XFormLetter>(a);
    s.push_back(run + 1);
    c.push_back(l.c);
    tb.push_back(l.tbar);
    run = 0;
  }

  std::vector<Color> xi;
  xi.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) xi.push_back(i == 0 ? c[0] : c[i] / c[i - 1]);
  return PolyzetaParams(std::move(s), std::move(xi), tbar_inverse(tb));
}

ParamsLinComb shuffle_expand(const PolyzetaParams& p, const PolyzetaParams& q) {
  for (const auto* side : {&p, &q}) {
    if (!side->convergent()) throw DivergenceError("shuffle_expand: divergent input " + to_string(*side));
    if (!side->colors_bounded())
      throw DivergenceError("shuffle_expand: color prefix products exceed modulus 1 in " + to_string(*side));
    if (!side->shifts_admissible())
      throw DivergenceError("shuffle_expand: shifts make a denominator vanish in " + to_string(*side));
  }
  ParamsLinComb out;
  for (const auto& [w, c] : shuffle(encode(p), encode(q))) {
    PolyzetaParams term = decode(w);
    if (!term.convergent()) throw DivergenceError("shuffle_expand produced divergent term " + to_string(term));
    out.add(term, c);
  }
  return out;
}

std::optional<Rational> common_diagonal_shift(const PolyzetaParams& p, const PolyzetaParams& q) {
  std::optional<Rational> shift;
  for (const auto* side : {&p, &q}) {
    for (const auto& v : side->t) {
      if (!shift) {
        shift = v;
      } else if (*shift != v) {
        throw DiagonalViolation("duffle_expand needs one common shift t, found " + to_string(*shift) + " and " +
                                to_string(v));
      }
    }
  }
  return shift;
}

ParamsLinComb duffle_expand(const PolyzetaParams& p, const PolyzetaParams& q) {
  auto shift = common_diagonal_shift(p, q);
  ParamsLinComb out;
  for (auto& [s, xi] : duffle_tuples<Color>(p.s, p.xi, q.s, q.xi)) {
    std::vector<Rational> t(s.size(), shift.value_or(Rational(0)));
    out.add(PolyzetaParams(std::move(s), std::move(xi), std::move(t)), Rational(1));
  }
  return out;
}

}  // namespace polyzeta
