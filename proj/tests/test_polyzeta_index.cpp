#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <map>

#include "oracles.hpp"
#include "polyzeta/errors.hpp"
#include "support.hpp"

using namespace test_support;

namespace {

// Xi = 1/2, xi' = -7/10, t = 1/5, t' = -3/10.
struct WorkedExample {
  Color xi = col("1/2"), xi2 = col("-7/10");
  Rational t = q("1/5"), t2 = q("-3/10");
  PolyzetaParams left = params({3}, {xi}, {t});
  PolyzetaParams right = params({2}, {xi2}, {t2});
};

ParamsLinComb lc(std::initializer_list<std::pair<long, PolyzetaParams>> terms) {
  ParamsLinComb out;
  for (const auto& [c, p] : terms) out.add(p, Rational(c));
  return out;
}

}  // namespace

TEST_CASE("tbar examples") {
  CHECK(tbar({q("2/7")}) == std::vector<Rational>{q("2/7")});
  CHECK(tbar({Rational(5), Rational(2)}) == std::vector<Rational>{Rational(3), Rational(2)});
  std::mt19937_64 rng(1);
  for (int n = 0; n < 100; ++n) {
    std::vector<Rational> t;
    for (std::size_t i = 0; i < 1 + rng() % 5; ++i) t.push_back(random_rational(rng, 7, 20));
    CHECK(tbar_inverse(tbar(t)) == t);
    CHECK(tbar(tbar_inverse(t)) == t);
  }
}

TEST_CASE("encode examples") {
  Color xi = col("1/2"), xi2 = col("-7/10");
  Rational t = q("1/5"), t2 = q("-3/10");
  CHECK(encode(params({2}, {xi2}, {t2})) == Word({x0(), xform(xi2, t2)}));
  CHECK(encode(params({3}, {xi}, {t})) == Word({x0(), x0(), xform(xi, t)}));
  PolyzetaParams p = params({2, 3}, {xi2, xi / xi2}, {t + t2, t});
  CHECK(encode(p) == Word({x0(), xform(xi2, t2), x0(), x0(), xform(xi, t)}));
  CHECK(encode(PolyzetaParams{}).empty());
}

TEST_CASE("decode examples") {
  Color xi = col("1/2"), xi2 = col("-7/10");
  Rational t = q("1/5"), t2 = q("-3/10");
  PolyzetaParams p = decode(Word({x0(), xform(xi2, t2), x0(), x0(), xform(xi, t)}));
  CHECK(p == params({2, 3}, {xi2, xi / xi2}, {t2 + t, t}));
  CHECK(decode(Word({xform(xi, t)})) == params({1}, {xi}, {t}));
  CHECK(decode(Word{}).depth() == 0);
}

TEST_CASE("decode rejects inadmissible shapes") {
  CHECK_THROWS_AS(decode(Word({xform(col("1/2"), 0), x0()})), ShapeError);
  CHECK_THROWS_AS(decode(Word({x0()})), ShapeError);
  CHECK_THROWS_AS(decode(ys({1, 2})), ShapeError);
}

TEST_CASE("decode inverts encode") {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 300; ++n) {
    PolyzetaParams p = random_convergent(rng, 1 + rng() % 4, 10, 9, 9);
    CHECK(decode(encode(p)) == p);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(params({2, 1}, {col("1")}), DomainError);
  CHECK_THROWS_AS(params({0}, {col("1")}), DomainError);
  CHECK(params({2}, {col("1")}).convergent());
  CHECK_FALSE(params({1}, {col("1")}).convergent());
  CHECK(params({1}, {col("1/2")}).convergent());
  CHECK_FALSE(params({2}, {col("3/2")}).colors_bounded());
  CHECK(params({2, 1}, {col("2"), col("1/4")}, {0, 0}).satisfies_E() == false);
  CHECK(params({2, 1}, {col("1/2"), col("2")}, {q("1/2"), 0}).satisfies_E());
  CHECK_FALSE(params({2}, {col("1")}, {Rational(1)}).satisfies_E());
  CHECK_FALSE(params({2}, {col("1")}, {Rational(1)}).shifts_admissible());
  CHECK(params({2, 2}, {col("1"), col("1")}, {q("3/2"), 0}).shifts_admissible());
}

TEST_CASE("shuffle expansion of the worked example") {
  WorkedExample ex;
  PolyzetaParams a23 = params({2, 3}, {ex.xi2, ex.xi / ex.xi2}, {ex.t + ex.t2, ex.t});
  PolyzetaParams a32 = params({3, 2}, {ex.xi2, ex.xi / ex.xi2}, {ex.t + ex.t2, ex.t});
  PolyzetaParams a41 = params({4, 1}, {ex.xi2, ex.xi / ex.xi2}, {ex.t + ex.t2, ex.t});
  PolyzetaParams b41 = params({4, 1}, {ex.xi, ex.xi2 / ex.xi}, {ex.t + ex.t2, ex.t2});
  PolyzetaParams b32 = params({3, 2}, {ex.xi, ex.xi2 / ex.xi}, {ex.t + ex.t2, ex.t2});
  ParamsLinComb expected = lc({{1, a23}, {2, a32}, {3, a41}, {3, b41}, {1, b32}});
  ParamsLinComb got = shuffle_expand(ex.left, ex.right);
  CHECK(got == expected);
  CHECK(got.size() == 5);
  // Term multiplicity: the 10 interleavings of x0^2 X and x0 X'.
  auto all = oracle::interleavings(encode(ex.left), encode(ex.right));
  CHECK(all.size() == 10);
  CHECK(got.coefficient_sum() == 10);
  std::map<PolyzetaParams, long> counted;
  for (const auto& w : all) ++counted[decode(w)];
  for (const auto& [p, c] : got) CHECK(c == counted[p]);
}

TEST_CASE("shuffle expansion with the unit") {
  WorkedExample ex;
  CHECK(shuffle_expand(ex.left, PolyzetaParams{}) == lc({{1, ex.left}}));
  CHECK(shuffle_expand(PolyzetaParams{}, ex.right) == lc({{1, ex.right}}));
}

TEST_CASE("shuffle expansion preconditions") {
  CHECK_THROWS_AS(shuffle_expand(params({1}, {col("1")}), params({2}, {col("1")})), DivergenceError);
  CHECK_THROWS_AS(shuffle_expand(params({2}, {col("2")}), params({2}, {col("1")})), DivergenceError);
}

TEST_CASE("duffle expansion of the worked example") {
  for (Rational t : {Rational(0), q("1/3"), q("-2/5")}) {
    PolyzetaParams p = params({3, 1}, {col("2/3"), col("-1")}, {t, t});
    PolyzetaParams r = params({2}, {col("1/2")}, {t});
    ParamsLinComb expected = lc({{1, params({3, 1, 2}, {col("2/3"), col("-1"), col("1/2")}, {t, t, t})},
                                 {1, params({3, 2, 1}, {col("2/3"), col("1/2"), col("-1")}, {t, t, t})},
                                 {1, params({3, 3}, {col("2/3"), col("-1/2")}, {t, t})},
                                 {1, params({2, 3, 1}, {col("1/2"), col("2/3"), col("-1")}, {t, t, t})},
                                 {1, params({5, 1}, {col("1/3"), col("-1")}, {t, t})}});
    CHECK(duffle_expand(p, r) == expected);
  }
}

TEST_CASE("duffle expansion small cases") {
  Color a = col("1/2"), b = Color::root_of_unity(1, 3);
  CHECK(duffle_expand(params({2}, {a}), params({3}, {b})) ==
        lc({{1, params({2, 3}, {a, b})}, {1, params({3, 2}, {b, a})}, {1, params({5}, {a * b})}}));
  PolyzetaParams p = params({2, 1}, {a, b});
  CHECK(duffle_expand(p, PolyzetaParams{}) == lc({{1, p}}));
  CHECK(duffle_expand(PolyzetaParams{}, PolyzetaParams{}) == lc({{1, PolyzetaParams{}}}));
}

TEST_CASE("duffle on tuples matches the word-level duffle") {
  std::mt19937_64 rng(9);
  for (int n = 0; n < 50; ++n) {
    PolyzetaParams p = random_convergent(rng, 1 + rng() % 3, 10, 9, 0);
    PolyzetaParams r = random_convergent(rng, 1 + rng() % 3, 10, 9, 0);
    auto to_word = [](const PolyzetaParams& v) {
      std::vector<Letter> out;
      for (std::size_t i = 0; i < v.depth(); ++i) out.push_back(pair(v.s[i], v.xi[i]));
      return Word(std::move(out));
    };
    Polynomial<> words;
    for (const auto& [term, c] : duffle_expand(p, r)) words.add(to_word(term), c);
    CHECK(words == duffle(to_word(p), to_word(r)));
  }
}

TEST_CASE("duffle diagonal condition") {
  CHECK_THROWS_AS(duffle_expand(params({2}, {col("1")}, {q("1/2")}), params({2}, {col("1")}, {0})), DiagonalViolation);
  CHECK_THROWS_AS(duffle_expand(params({2, 1}, {col("1"), col("1")}, {0, q("1/3")}), params({2}, {col("1")}, {0})),
                  DiagonalViolation);
  CHECK_NOTHROW(duffle_expand(params({2}, {col("1")}, {q("1/2")}), params({3}, {col("1")}, {q("1/2")})));
}

TEST_CASE("expansion properties on random parameters") {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 60; ++n) {
    PolyzetaParams p = random_convergent(rng, 1 + rng() % 2, 10, 9, 4);
    PolyzetaParams r = random_convergent(rng, 1 + rng() % 2, 10, 9, 4);
    auto sh = shuffle_expand(p, r);
    CHECK(sh == shuffle_expand(r, p));
    auto merged = p.cumulative_colors();
    for (const auto& c : r.cumulative_colors()) merged.push_back(c);
    std::sort(merged.begin(), merged.end());
    for (const auto& [term, c] : sh) {
      CHECK(c > 0);
      CHECK(term.weight() == p.weight() + r.weight());
      CHECK(term.depth() == p.depth() + r.depth());
      auto colors = term.cumulative_colors();
      std::sort(colors.begin(), colors.end());
      CHECK(colors == merged);
      CHECK(term.convergent());
      CHECK(term.colors_bounded());
      CHECK(term.shifts_admissible());
    }

    PolyzetaParams pd = random_convergent(rng, 1 + rng() % 3, 10, 9, 0);
    PolyzetaParams rd = random_convergent(rng, 1 + rng() % 3, 10, 9, 0);
    auto du = duffle_expand(pd, rd);
    CHECK(du == duffle_expand(rd, pd));
    for (const auto& [term, c] : du) {
      CHECK(term.weight() == pd.weight() + rd.weight());
      CHECK(term.depth() >= std::max(pd.depth(), rd.depth()));
      CHECK(term.depth() <= pd.depth() + rd.depth());
      CHECK(term.satisfies_E());
    }
  }
}

TEST_CASE("expansions are associative") {
  std::mt19937_64 rng(6);
  auto extend = [](const ParamsLinComb& lhs, const PolyzetaParams& r, auto expand) {
    ParamsLinComb out;
    for (const auto& [term, c] : lhs) out += c * expand(term, r);
    return out;
  };
  auto extend_left = [](const PolyzetaParams& p, const ParamsLinComb& rhs, auto expand) {
    ParamsLinComb out;
    for (const auto& [term, c] : rhs) out += c * expand(p, term);
    return out;
  };
  for (int n = 0; n < 15; ++n) {
    PolyzetaParams a = random_convergent(rng, 1 + rng() % 2, 10, 9, 3);
    PolyzetaParams b = random_convergent(rng, 1 + rng() % 2, 10, 9, 3);
    PolyzetaParams c = random_convergent(rng, 1 + rng() % 2, 10, 9, 3);
    auto sh = [](const PolyzetaParams& x, const PolyzetaParams& y) { return shuffle_expand(x, y); };
    CHECK(extend(shuffle_expand(a, b), c, sh) == extend_left(a, shuffle_expand(b, c), sh));

    PolyzetaParams ad = random_convergent(rng, 1 + rng() % 2, 10, 9, 0);
    PolyzetaParams bd = random_convergent(rng, 1 + rng() % 2, 10, 9, 0);
    PolyzetaParams cd = random_convergent(rng, 1 + rng() % 2, 10, 9, 0);
    auto du = [](const PolyzetaParams& x, const PolyzetaParams& y) { return duffle_expand(x, y); };
    CHECK(extend(duffle_expand(ad, bd), cd, du) == extend_left(ad, duffle_expand(bd, cd), du));
  }
}

TEST_CASE("shifts beyond 1 after shuffling stay admissible") {
  PolyzetaParams p = params({2}, {col("1/2")}, {q("3/5")});
  PolyzetaParams r = params({2}, {col("1/2")}, {q("3/5")});
  bool above_one = false;
  for (const auto& [term, c] : shuffle_expand(p, r)) {
    above_one = above_one || term.t.front() > 1;
    CHECK(term.shifts_admissible());
  }
  CHECK(above_one);
}

TEST_CASE("roots of unity multiply exactly") {
  Color w = Color::root_of_unity(1, 6);
  PolyzetaParams p = params({2}, {w});
  PolyzetaParams r = params({2}, {w * w * w * w * w});
  Color conj = Color::root_of_unity(5, 6);
  for (const auto& [term, c] : shuffle_expand(p, r)) {
    const auto colors = term.cumulative_colors();
    CHECK(colors.back().is_polar());
    CHECK((colors.back() == w || colors.back() == conj));
    CHECK(term.xi.back() * colors.front() == colors.back());
  }
}
