#include "polyzeta/cli.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "polyzeta/errors.hpp"
#include "polyzeta/hopf.hpp"
#include "polyzeta/json_io.hpp"
#include "polyzeta/numeric_eval.hpp"
#include "polyzeta/polyzeta_index.hpp"
#include "polyzeta/star_product.hpp"

namespace polyzeta::cli {

namespace {

using json_io::json;

struct Options {
  std::string product = "shuffle";
  std::string mode = "shuffle";
  std::string left, right, word, params, alphabet;
  std::string format = "pretty";
  std::size_t max_len = 4;
  double tol = 1e-10;
  std::int64_t nmax = std::int64_t{1} << 22;
  bool tol_given = false;
};

ProductKind product_kind(const std::string& name) {
  auto kind = parse_product(name);
  if (!kind) throw ParseError("unknown product '" + name + "'");
  return *kind;
}

void print(std::ostream& out, const Options& o, const json& j, const std::string& pretty) {
  if (o.format == "json")
    out << j.dump(2) << '\n';
  else
    out << pretty << '\n';
}

std::string pretty_eval(const EvalResult& r) {
  std::ostringstream s;
  s.precision(17);
  s << r.value.real();
  if (r.value.imag() != 0.0) s << (r.value.imag() < 0 ? " - " : " + ") << std::abs(r.value.imag()) << "i";
  s.precision(3);
  s << "  (error ~ " << r.error_estimate << ", N = " << r.n_used << (r.converged ? ")" : ", not converged)");
  return s.str();
}

std::string pretty_report(const HopfReport& r) {
  std::string out;
  for (const auto& a : r.axioms) {
    out += r.product + " " + a.axiom + ": " + (a.passed ? "ok" : "FAILED") + " (" + std::to_string(a.cases) + " cases)";
    if (a.counterexample) out += "\n  counterexample: " + *a.counterexample;
    out += "\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

// Stuffle-type products act on the alphabet Y = {y1, y2, ...}.
std::string pretty_product(ProductKind kind, const Polynomial<>& p) {
  std::string text = to_string(p);
  if (kind != ProductKind::stuffle && kind != ProductKind::minus_stuffle) return text;
  static const std::regex indexed(R"(x(\d+))");
  return std::regex_replace(text, indexed, "y$1");
}

ParamsLinComb expand_params(const std::string& mode, const PolyzetaParams& p, const PolyzetaParams& q) {
  if (mode == "shuffle") return shuffle_expand(p, q);
  if (mode == "duffle") return duffle_expand(p, q);
  throw ParseError("unknown mode '" + mode + "' (expected shuffle or duffle)");
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "expand") {
    ProductKind kind = product_kind(o.product);
    auto p = json_io::word_or_polynomial_from_json(json_io::read_json_argument(o.left));
    auto q = json_io::word_or_polynomial_from_json(json_io::read_json_argument(o.right));
    auto prod = star(bracket_for(kind), p, q);
    print(out, o, json_io::to_json(prod), pretty_product(kind, prod));
    return ok;
  }
  if (cmd == "antipode") {
    ProductKind kind = product_kind(o.product);
    Word w = json_io::word_from_json(json_io::read_json_argument(o.word));
    auto a = antipode(bracket_for(kind), w);
    print(out, o, json_io::to_json(a), pretty_product(kind, a));
    return ok;
  }
  if (cmd == "hopf-check") {
    ProductKind kind = product_kind(o.product);
    Bracket br = bracket_for(kind);
    std::vector<Letter> letters;
    if (o.alphabet.empty()) {
      letters = default_alphabet(kind);
    } else {
      json j = json_io::read_json_argument(o.alphabet);
      if (!j.is_array() || j.empty()) throw ParseError("alphabet must be a nonempty JSON array of letters");
      for (const auto& item : j) letters.push_back(json_io::letter_from_json(item));
    }
    HopfReport bi = check_bialgebra(br, o.max_len, letters);
    HopfReport an = check_antipode(br, o.max_len, letters);
    HopfReport all{bi.product, bi.axioms};
    all.axioms.insert(all.axioms.end(), an.axioms.begin(), an.axioms.end());
    print(out, o, json_io::to_json(all), pretty_report(all));
    return all.passed() ? ok : check_failed;
  }
  if (cmd == "encode") {
    Word w = encode(json_io::params_from_json(json_io::read_json_argument(o.params)));
    print(out, o, json_io::to_json(w), to_string(w));
    return ok;
  }
  if (cmd == "decode") {
    PolyzetaParams p = decode(json_io::word_from_json(json_io::read_json_argument(o.word)));
    print(out, o, json_io::to_json(p), to_string(p));
    return ok;
  }
  if (cmd == "zeta-expand") {
    auto p = json_io::params_from_json(json_io::read_json_argument(o.left));
    auto q = json_io::params_from_json(json_io::read_json_argument(o.right));
    auto lc = expand_params(o.mode, p, q);
    print(out, o, json_io::to_json(lc), to_string(lc));
    return ok;
  }
  if (cmd == "eval") {
    auto p = json_io::params_from_json(json_io::read_json_argument(o.params));
    EvalConfig cfg;
    cfg.tolerance = o.tol;
    cfg.n_max = o.nmax;
    cfg.n_start = std::min(cfg.n_start, cfg.n_max);
    auto r = eval_di(p, cfg);
    print(out, o, json_io::to_json(r), pretty_eval(r));
    return ok;
  }
  if (cmd == "verify") {
    auto p = json_io::params_from_json(json_io::read_json_argument(o.left));
    auto q = json_io::params_from_json(json_io::read_json_argument(o.right));
    auto lc = expand_params(o.mode, p, q);
    EvalConfig cfg;
    cfg.tolerance = o.tol_given ? o.tol : 1e-8;
    cfg.n_max = o.nmax;
    cfg.n_start = std::min(cfg.n_start, cfg.n_max);
    auto r = verify_relation({p, q}, lc, cfg);
    std::ostringstream s;
    s.precision(3);
    s << to_string(p) << " * " << to_string(q) << " = " << to_string(lc) << "\n"
      << "residual " << r.residual << " (tolerance " << r.tolerance << ", error budget " << r.error_budget << "): "
      << (r.passed ? "ok" : "FAILED");
    json j = json_io::to_json(r);
    j["expansion"] = json_io::to_json(lc);
    print(out, o, j, s.str());
    return r.passed ? ok : check_failed;
  }
  throw ParseError("exactly one subcommand is required");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star products, Hopf checks and colored Hurwitz polyzetas", "polyzeta"};
  app.require_subcommand(1, 1);
  Options o;
  const std::vector<std::string> products{"shuffle", "stuffle", "minusstuffle", "mulstuffle", "duffle"};
  const std::vector<std::string> modes{"shuffle", "duffle"};
  const std::vector<std::string> formats{"json", "pretty"};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* expand = app.add_subcommand("expand", "Star product of two words or polynomials");
  expand->add_option("--product", o.product)->required()->check(CLI::IsMember(products));
  expand->add_option("--left", o.left, "Word/polynomial JSON or @file")->required();
  expand->add_option("--right", o.right, "Word/polynomial JSON or @file")->required();
  add_format(expand);

  auto* anti = app.add_subcommand("antipode", "Antipode of a word");
  anti->add_option("--product", o.product)->required()->check(CLI::IsMember(products));
  anti->add_option("--word", o.word, "Word JSON or @file")->required();
  add_format(anti);

  auto* hopf = app.add_subcommand("hopf-check", "Exhaustive bialgebra and antipode checks");
  hopf->add_option("--product", o.product)->required()->check(CLI::IsMember(products));
  hopf->add_option("--max-len", o.max_len, "Maximal word length")->required();
  hopf->add_option("--alphabet", o.alphabet, "Letters JSON array or @file");
  add_format(hopf);

  auto* enc = app.add_subcommand("encode", "Polyzeta parameters to encoded word");
  enc->add_option("--params", o.params, "Params JSON or @file")->required();
  add_format(enc);

  auto* dec = app.add_subcommand("decode", "Encoded word to polyzeta parameters");
  dec->add_option("--word", o.word, "Word JSON or @file")->required();
  add_format(dec);

  auto* zexp = app.add_subcommand("zeta-expand", "Product of two polyzetas as a linear combination");
  zexp->add_option("--mode", o.mode)->required()->check(CLI::IsMember(modes));
  zexp->add_option("--left", o.left, "Params JSON or @file")->required();
  zexp->add_option("--right", o.right, "Params JSON or @file")->required();
  add_format(zexp);

  auto* ev = app.add_subcommand("eval", "Numerical value of a polyzeta");
  ev->add_option("--params", o.params, "Params JSON or @file")->required();
  ev->add_option("--tol", o.tol, "Absolute tolerance")->check(CLI::PositiveNumber);
  ev->add_option("--nmax", o.nmax, "Maximal truncation")->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
  add_format(ev);

  auto* ver = app.add_subcommand("verify", "Expand a product and check it numerically");
  ver->add_option("--mode", o.mode)->required()->check(CLI::IsMember(modes));
  ver->add_option("--left", o.left, "Params JSON or @file")->required();
  ver->add_option("--right", o.right, "Params JSON or @file")->required();
  ver->add_option("--tol", o.tol, "Residual tolerance (default 1e-8)")->check(CLI::PositiveNumber);
  ver->add_option("--nmax", o.nmax, "Maximal truncation")->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
  add_format(ver);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  o.tol_given = ver->count("--tol") > 0;

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return usage_error;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return domain_error;
  }
}

}  // namespace polyzeta::cli
