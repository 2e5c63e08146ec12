#include "polyzeta/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "polyzeta/errors.hpp"

namespace polyzeta::json_io {

namespace {

[[noreturn]] void fail(const std::string& what, const json& j) {
  std::string dump = j.dump();
  if (dump.size() > 120) dump = dump.substr(0, 117) + "...";
  throw ParseError(what + ": " + dump);
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field '") + name + "'", j);
  return j.at(name);
}

std::int64_t integer_from_json(const json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_unsigned()) return static_cast<std::int64_t>(j.get<std::uint64_t>());
  fail("expected an integer", j);
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned()) return Rational(std::to_string(integer_from_json(j)));
    if (j.is_number_float()) return rational_from_double(j.get<double>());
  } catch (const std::invalid_argument& e) {
    fail(e.what(), j);
  }
  fail("expected a rational", j);
}

json shift_to_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

json to_json(const Color& c) {
  if (c.is_rational()) return to_string(c.to_rational());
  if (c.is_polar()) {
    const auto& p = c.as_polar();
    json out = {{"q", p.turn.get_num().get_si()}, {"n", p.turn.get_den().get_si()}};
    if (p.modulus != 1) out["mod"] = to_string(p.modulus);
    return out;
  }
  if (c.is_gaussian()) return to_json(c.as_gaussian());
  return to_json(c.as_floating());
}

Color color_from_json(const json& j) {
  try {
    if (j.is_string() || j.is_number()) return Color::rational(rational_from_json(j));
    if (j.is_object() && j.contains("q")) {
      auto k = integer_from_json(field(j, "q"));
      auto n = integer_from_json(field(j, "n"));
      if (n <= 0) fail("root of unity order must be positive", j);
      Color root = Color::root_of_unity(k, n);
      if (j.contains("mod")) root *= Color::rational(rational_from_json(j.at("mod")));
      return root;
    }
    if (j.is_object() && j.contains("re")) {
      const json& re = j.at("re");
      const json& im = j.contains("im") ? j.at("im") : json(0);
      if (re.is_string() || im.is_string())
        return Color::gaussian(GaussianRational(rational_from_json(re), rational_from_json(im)));
      if (!re.is_number() || !im.is_number()) fail("color parts must be numbers or rational strings", j);
      return Color::floating({re.get<double>(), im.get<double>()});
    }
  } catch (const ArithmeticError& e) {
    fail(e.what(), j);
  }
  fail("unrecognized color", j);
}

json to_json(const Letter& a) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IndexedLetter>) {
          return {{"kind", "indexed"}, {"i", v.index}};
        } else if constexpr (std::is_same_v<T, MonoidLetter>) {
          return {{"kind", "monoid"}, {"g", to_json(v.g)}};
        } else if constexpr (std::is_same_v<T, PairLetter>) {
          return {{"kind", "pair"}, {"i", v.index}, {"g", to_json(v.g)}};
        } else if constexpr (std::is_same_v<T, X0Letter>) {
          return {{"kind", "x0"}};
        } else {
          return {{"kind", "xform"}, {"c", to_json(v.c)}, {"tbar", shift_to_json(v.tbar)}};
        }
      },
      a);
}

Letter letter_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.size() >= 2 && (s[0] == 'x' || s[0] == 'y')) {
      try {
        std::size_t used = 0;
        long i = std::stol(s.substr(1), &used);
        if (used == s.size() - 1 && i >= 0) return x(i);
      } catch (...) {
      }
    }
    fail("unrecognized letter shorthand", j);
  }
  const auto kind = field(j, "kind");
  if (!kind.is_string()) fail("letter kind must be a string", j);
  const auto k = kind.get<std::string>();
  try {
    if (k == "indexed") return x(integer_from_json(field(j, "i")));
    if (k == "monoid") return mono(color_from_json(field(j, "g")));
    if (k == "pair") return pair(integer_from_json(field(j, "i")), color_from_json(field(j, "g")));
    if (k == "x0") return x0();
    if (k == "xform") return xform(color_from_json(field(j, "c")), rational_from_json(field(j, "tbar")));
  } catch (const DomainError& e) {
    fail(e.what(), j);
  }
  fail("unknown letter kind '" + k + "'", j);
}

json to_json(const Word& w) {
  json out = json::array();
  for (const auto& a : w) out.push_back(to_json(a));
  return out;
}

Word word_from_json(const json& j) {
  if (!j.is_array()) fail("a word must be a JSON array of letters", j);
  std::vector<Letter> letters;
  for (const auto& item : j) letters.push_back(letter_from_json(item));
  // "x0" shorthand next to encoded letters means the encoding letter x0.
  const bool encoded = std::any_of(letters.begin(), letters.end(),
                                   [](const Letter& a) { return std::holds_alternative<XFormLetter>(a); });
  if (encoded)
    for (auto& a : letters)
      if (const auto* v = std::get_if<IndexedLetter>(&a); v && v->index == 0) a = X0Letter{};
  try {
    return Word(std::move(letters));
  } catch (const AlphabetMismatch& e) {
    fail(e.what(), j);
  }
}

json to_json(const GaussianRational& z) { return {{"re", to_string(z.real())}, {"im", to_string(z.imag())}}; }

json to_json(const std::complex<double>& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Polynomial<Rational> polynomial_from_json(const json& j) {
  if (!j.is_array()) fail("a polynomial must be a JSON array of {coeff, word}", j);
  Polynomial<Rational> p;
  for (const auto& term : j) p.add(word_from_json(field(term, "word")), rational_from_json(field(term, "coeff")));
  return p;
}

Polynomial<Rational> word_or_polynomial_from_json(const json& j) {
  if (j.is_array() && !j.empty() && j.front().is_object() && j.front().contains("word"))
    return polynomial_from_json(j);
  return Polynomial<Rational>(word_from_json(j));
}

json to_json(const PolyzetaParams& p) {
  json s = json::array(), xi = json::array(), t = json::array();
  for (int v : p.s) s.push_back(v);
  for (const auto& c : p.xi) xi.push_back(to_json(c));
  for (const auto& v : p.t) t.push_back(shift_to_json(v));
  return {{"s", s}, {"xi", xi}, {"t", t}};
}

PolyzetaParams params_from_json(const json& j) {
  const json& s = field(j, "s");
  const json& xi = field(j, "xi");
  if (!s.is_array() || !xi.is_array()) fail("s and xi must be arrays", j);
  std::vector<int> comp;
  for (const auto& v : s) comp.push_back(static_cast<int>(integer_from_json(v)));
  std::vector<Color> colors;
  for (const auto& v : xi) colors.push_back(color_from_json(v));
  std::vector<Rational> shifts;
  if (j.contains("t")) {
    if (!j.at("t").is_array()) fail("t must be an array", j);
    for (const auto& v : j.at("t")) shifts.push_back(rational_from_json(v));
  } else {
    shifts.assign(comp.size(), Rational(0));
  }
  try {
    return PolyzetaParams(std::move(comp), std::move(colors), std::move(shifts));
  } catch (const DomainError& e) {
    fail(e.what(), j);
  }
}

json to_json(const ParamsLinComb& lc) {
  json out = json::array();
  for (const auto& [p, c] : lc) out.push_back({{"coeff", to_json(c)}, {"params", to_json(p)}});
  return out;
}

ParamsLinComb lincomb_from_json(const json& j) {
  if (!j.is_array()) fail("a linear combination must be a JSON array of {coeff, params}", j);
  ParamsLinComb lc;
  for (const auto& term : j) lc.add(params_from_json(field(term, "params")), rational_from_json(field(term, "coeff")));
  return lc;
}

json to_json(const EvalResult& r) {
  return {{"value", to_json(r.value)}, {"error", r.error_estimate}, {"n_used", r.n_used}, {"converged", r.converged}};
}

json to_json(const RelationReport& r) {
  json terms = json::array();
  for (const auto& [p, e] : r.evaluations) {
    json t = to_json(e);
    t["params"] = to_json(p);
    terms.push_back(std::move(t));
  }
  return {{"lhs", to_json(r.lhs_value)},
          {"rhs", to_json(r.rhs_value)},
          {"residual", r.residual},
          {"tolerance", r.tolerance},
          {"error_budget", r.error_budget},
          {"all_converged", r.all_converged},
          {"passed", r.passed},
          {"evaluations", std::move(terms)}};
}

json to_json(const AxiomResult& r) {
  json out = {{"axiom", r.axiom}, {"status", r.passed ? "ok" : "failed"}, {"cases", r.cases}};
  if (r.counterexample) out["counterexample"] = *r.counterexample;
  return out;
}

json to_json(const HopfReport& r) {
  json axioms = json::array();
  for (const auto& a : r.axioms) axioms.push_back(to_json(a));
  return {{"product", r.product}, {"passed", r.passed()}, {"axioms", std::move(axioms)}};
}

json read_json_argument(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot open '" + arg.substr(1) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace polyzeta::json_io
