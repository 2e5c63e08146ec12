#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "polyzeta/color.hpp"
#include "polyzeta/hopf.hpp"
#include "polyzeta/numeric_eval.hpp"
#include "polyzeta/polynomial.hpp"
#include "polyzeta/polyzeta_index.hpp"
#include "polyzeta/word.hpp"

namespace polyzeta::json_io {

using json = nlohmann::json;

// Every *_from_json throws ParseError on malformed input.

/// Rationals are "p/q" strings; plain JSON numbers are read as their exact binary value.
json to_json(const Rational& q);
Rational rational_from_json(const json& j);

/// Shifts: integers as numbers, everything else as "p/q".
json shift_to_json(const Rational& q);

/// Colors:
///   "p/q" or a number          exact nonzero rational
///   {"q":k,"n":N[,"mod":m]}    m * exp(2 pi i k/N), exact
///   {"re":"a","im":"b"}        exact Gaussian rational (string parts)
///   {"re":x,"im":y}            floating complex (number parts)
json to_json(const Color& c);
Color color_from_json(const json& j);

/// Letters are objects tagged by "kind": indexed {i}, monoid {g}, pair {i,g}, x0, xform {c,tbar}.
/// The strings "x3" / "y3" are accepted as shorthand for indexed letters.
json to_json(const Letter& a);
Letter letter_from_json(const json& j);

/// A word is a JSON array of letters; [] is the empty word.
json to_json(const Word& w);
Word word_from_json(const json& j);

json to_json(const GaussianRational& z);
json to_json(const std::complex<double>& z);

/// A polynomial is [{"coeff": c, "word": [...]}, ...] in graded lexicographic order.
template <class Scalar>
json to_json(const Polynomial<Scalar>& p) {
  json out = json::array();
  for (const auto& [w, c] : p) out.push_back({{"coeff", to_json(c)}, {"word", to_json(w)}});
  return out;
}
Polynomial<Rational> polynomial_from_json(const json& j);
/// Accepts either a word or a polynomial.
Polynomial<Rational> word_or_polynomial_from_json(const json& j);

/// {"s":[...], "xi":[colors], "t":[shifts]}
json to_json(const PolyzetaParams& p);
PolyzetaParams params_from_json(const json& j);

/// [{"coeff": "c", "params": {...}}, ...]
json to_json(const ParamsLinComb& lc);
ParamsLinComb lincomb_from_json(const json& j);

/// {"value":{"re","im"}, "error", "n_used", "converged"}
json to_json(const EvalResult& r);
json to_json(const RelationReport& r);

/// {"product", "passed", "axioms":[{"axiom","status","cases","counterexample"?}]}
json to_json(const AxiomResult& r);
json to_json(const HopfReport& r);

/// Parses JSON text, or the contents of the file named after a leading '@'.
json read_json_argument(const std::string& arg);

}  // namespace polyzeta::json_io
