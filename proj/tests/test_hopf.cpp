#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "polyzeta/hopf.hpp"
#include "support.hpp"

using namespace test_support;

namespace {

using Tensor = TensorPolynomial<Rational>;

// Compositions of n generated by recursion on the first part.
void compositions_by_first_part(int n, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = 1; k <= n; ++k) {
    prefix.push_back(k);
    compositions_by_first_part(n - k, prefix, out);
    prefix.pop_back();
  }
}

Word reversed(const Word& w) {
  std::vector<Letter> letters(w.begin(), w.end());
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

const AxiomResult& axiom(const HopfReport& r, const std::string& name) {
  auto it = std::find_if(r.axioms.begin(), r.axioms.end(), [&](const AxiomResult& a) { return a.axiom == name; });
  REQUIRE(it != r.axioms.end());
  return *it;
}

// [x_i, x_j] = x_{2i+j}: commutes with nothing.
Bracket lopsided_bracket() {
  return Bracket("lopsided", AlphabetKind::indexed, [](const Letter& a, const Letter& b) -> std::optional<ScaledLetter> {
    return ScaledLetter{Rational(1), x(2 * std::get<IndexedLetter>(a).index + std::get<IndexedLetter>(b).index)};
  });
}

}  // namespace

TEST_CASE("coproduct examples") {
  Tensor unit;
  unit.add(Word{}, Word{}, 1);
  CHECK(coproduct<Rational>(Word{}) == unit);

  Tensor expected;
  expected.add(xs({0, 1}), Word{}, 1);
  expected.add(xs({0}), xs({1}), 1);
  expected.add(Word{}, xs({0, 1}), 1);
  CHECK(coproduct<Rational>(xs({0, 1})) == expected);
  CHECK(coproduct(poly({{2, xs({0, 1})}})) == Tensor::tensor(Polynomial<>(), Polynomial<>()) + expected + expected);
}

TEST_CASE("coproduct letter recursion") {
  std::vector<Letter> letters{x(0), x(1)};
  for (const auto& w : words_up_to(letters, 4)) {
    for (const auto& a : letters) {
      Tensor rhs = concat(Tensor::tensor(Polynomial<>(Word{a}), Polynomial<>::unit()), coproduct<Rational>(w));
      rhs.add(Word{}, prepend(a, w), 1);
      CHECK(coproduct<Rational>(prepend(a, w)) == rhs);
    }
  }
}

TEST_CASE("counit examples") {
  CHECK(counit(Polynomial<>::unit()) == 1);
  CHECK(counit(Polynomial<>(xs({0, 1}))) == 0);
  Polynomial<> p = poly({{3, Word{}}, {2, xs({0})}});
  CHECK(counit(p) == 3);
}

TEST_CASE("compositions examples") {
  CHECK(compositions(1) == std::vector<std::vector<int>>{{1}});
  CHECK(compositions(3) == std::vector<std::vector<int>>{{3}, {1, 2}, {2, 1}, {1, 1, 1}});
  CHECK(compositions(0) == std::vector<std::vector<int>>{{}});
  for (int n = 1; n <= 10; ++n) {
    std::vector<std::vector<int>> brute;
    std::vector<int> prefix;
    compositions_by_first_part(n, prefix, brute);
    auto got = compositions(n);
    CHECK(got.size() == brute.size());
    std::sort(brute.begin(), brute.end());
    std::sort(got.begin(), got.end());
    CHECK(got == brute);
  }
  CHECK(compositions(10).size() == 512);
}

TEST_CASE("antipode of a letter is its negative") {
  for (auto k : all_products) {
    Bracket br = bracket_for(k);
    for (const auto& a : default_alphabet(k)) CHECK(antipode(br, Word{a}) == Rational(-1) * Polynomial<>(Word{a}));
    CHECK(antipode(br, Word{}) == Polynomial<>::unit());
  }
}

TEST_CASE("shuffle antipode is the signed reversal") {
  Bracket br = shuffle_bracket();
  CHECK(antipode(br, xs({0, 1})) == Polynomial<>(xs({1, 0})));
  for (const auto& w : words_up_to({x(0), x(1), x(2)}, 5)) {
    Rational sign = w.size() % 2 ? -1 : 1;
    CHECK(antipode(br, w) == sign * Polynomial<>(reversed(w)));
  }
}

TEST_CASE("stuffle antipode of y1y1") {
  Bracket br = stuffle_bracket();
  // Compositions (2) and (1,1): -y1y1 + y1*y1 = -y1y1 + 2y1y1 + y2.
  Polynomial<> expected = poly({{1, ys({1, 1})}, {1, ys({2})}});
  CHECK(antipode(br, ys({1, 1})) == expected);
  CHECK(antipode_recursive(br, ys({1, 1})) == expected);
}

TEST_CASE("antipode axiom on x0x1 under shuffle") {
  Bracket br = shuffle_bracket();
  Word w = xs({0, 1});
  Polynomial<> sum = star(br, antipode(br, w), Polynomial<>::unit()) +
                     star(br, antipode(br, xs({0})), Polynomial<>(xs({1}))) +
                     star(br, Polynomial<>::unit(), Polynomial<>(w));
  CHECK(sum.is_zero());
}

TEST_CASE("closed antipode equals the recursion up to length 5") {
  for (auto k : all_products) {
    Bracket br = bracket_for(k);
    CAPTURE(br.name());
    auto letters = default_alphabet(k);
    letters.resize(std::min<std::size_t>(letters.size(), 2));
    for (const auto& w : words_up_to(letters, 5)) CHECK(antipode(br, w) == antipode_recursive(br, w));
  }
}

TEST_CASE("check_bialgebra succeeds on the named products") {
  auto shuffle_report = check_bialgebra(shuffle_bracket(), 4, {x(0), x(1)});
  CHECK(shuffle_report.passed());
  auto stuffle_report = check_bialgebra(stuffle_bracket(), 4, {y(1), y(2)});
  CHECK(stuffle_report.passed());
  for (const char* name : {"unit", "commutativity", "associativity", "coassociativity", "counit",
                           "coproduct_letter_recursion", "coproduct_morphism", "counit_morphism"}) {
    CHECK(axiom(stuffle_report, name).passed);
    CHECK(axiom(stuffle_report, name).cases > 0);
  }
}

TEST_CASE("check_antipode succeeds") {
  CHECK(check_antipode(duffle_bracket(), 3, default_alphabet(ProductKind::duffle)).passed());
  CHECK(check_antipode(minus_stuffle_bracket(), 4, {y(1), y(2)}).passed());
  auto r = check_antipode(shuffle_bracket(), 0, {x(0)});
  CHECK(r.passed());
  CHECK(axiom(r, "antipode_left").cases == 1);
}

TEST_CASE("non-symmetric bracket is caught") {
  auto r = check_bialgebra(lopsided_bracket(), 3, {x(1), x(2)});
  CHECK_FALSE(r.passed());
  const auto& comm = axiom(r, "commutativity");
  CHECK_FALSE(comm.passed);
  REQUIRE(comm.counterexample);
  // First failing pair in enumeration order.
  CHECK(comm.counterexample->rfind("u=x1, v=x2", 0) == 0);
  CHECK(axiom(r, "coassociativity").passed);
}

TEST_CASE("checks are deterministic under parallelism") {
  auto a = check_bialgebra(lopsided_bracket(), 3, {x(1), x(2), x(3)});
  auto b = check_bialgebra(lopsided_bracket(), 3, {x(1), x(2), x(3)});
  REQUIRE(a.axioms.size() == b.axioms.size());
  for (std::size_t i = 0; i < a.axioms.size(); ++i) CHECK(a.axioms[i].counterexample == b.axioms[i].counterexample);
}

TEST_CASE("words_up_to counts") {
  CHECK(words_up_to({x(0), x(1)}, 3).size() == 15);
  CHECK(words_up_to({x(0), x(1), x(0)}, 2).size() == 7);
  CHECK(words_up_to({x(0)}, 0).size() == 1);
}
