#include "polyzeta/hopf.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <tuple>

#include "polyzeta/parallel.hpp"

namespace polyzeta {

std::vector<std::vector<int>> compositions(int n) {
  if (n <= 0) return {{}};
  std::vector<std::vector<int>> out;
  // Each composition corresponds to a subset of the n-1 cut points.
  const unsigned cuts = static_cast<unsigned>(n - 1);
  for (unsigned mask = 0; mask < (1u << cuts); ++mask) {
    std::vector<int> comp;
    int run = 1;
    for (unsigned b = 0; b < cuts; ++b) {
      if (mask & (1u << (cuts - 1 - b))) {
        comp.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    comp.push_back(run);
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool HopfReport::passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.passed; });
}

std::vector<Word> words_up_to(const std::vector<Letter>& alphabet, std::size_t maxlen) {
  std::vector<Letter> letters = alphabet;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= maxlen; ++len) {
    std::vector<Word> next;
    next.reserve(layer.size() * letters.size());
    for (const auto& w : layer)
      for (const auto& a : letters) next.push_back(concat(w, Word{a}));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Letter> default_alphabet(ProductKind kind) {
  auto q = [](long p, long d) { return Color::rational(Rational(p, d)); };
  switch (kind) {
    case ProductKind::shuffle: return {x(0), x(1)};
    case ProductKind::stuffle:
    case ProductKind::minus_stuffle: return {y(1), y(2), y(3)};
    case ProductKind::mulstuffle: return {mono(q(2, 3)), mono(q(-1, 1)), mono(q(1, 2)), mono(q(3, 1))};
    case ProductKind::duffle:
      return {pair(1, q(2, 3)), pair(2, q(-1, 1)), pair(3, q(1, 2)), pair(1, q(3, 1))};
  }
  return {};
}

namespace {

using Poly = Polynomial<Rational>;
using Tensor = TensorPolynomial<Rational>;
using Triple = std::map<std::tuple<Word, Word, Word>, Rational>;

void add_triple(Triple& t, const Word& a, const Word& b, const Word& c, const Rational& q) {
  if (sgn(q) == 0) return;
  auto [it, inserted] = t.try_emplace(std::tuple(a, b, c), q);
  if (!inserted) {
    it->second += q;
    if (sgn(it->second) == 0) t.erase(it);
  }
}

AxiomResult run_axiom(std::string name, std::size_t cases, const std::function<bool(std::size_t)>& ok,
                      const std::function<std::string(std::size_t)>& describe) {
  AxiomResult r;
  r.axiom = std::move(name);
  r.cases = cases;
  auto safe = [&ok](std::size_t i) {
    try {
      return ok(i);
    } catch (...) {
      return false;
    }
  };
  if (auto bad = first_failure(cases, safe)) {
    r.passed = false;
    r.counterexample = describe(*bad);
  }
  return r;
}

// Thread-safe cache of word products. Map nodes are never erased, so returned
// references stay valid.
class StarMemo {
 public:
  explicit StarMemo(const Bracket& br) : br_(br) {}

  const Poly& words(const Word& u, const Word& v) {
    std::pair<Word, Word> key{u, v};
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    Poly value = star<Rational>(br_, u, v);
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(std::move(key), std::move(value)).first->second;
  }

  Poly operator()(const Poly& p, const Poly& q) {
    Poly out;
    for (const auto& [u, a] : p)
      for (const auto& [v, b] : q) {
        Rational ab = a * b;
        for (const auto& [w, c] : words(u, v)) out.add(w, Rational(ab * c));
      }
    return out;
  }

  Tensor operator()(const Tensor& s, const Tensor& t) {
    Tensor out;
    for (const auto& [k1, a] : s)
      for (const auto& [k2, b] : t) {
        Rational ab = a * b;
        const Poly& left = words(k1.first, k2.first);
        const Poly& right = words(k1.second, k2.second);
        for (const auto& [u, c] : left)
          for (const auto& [v, d] : right) out.add(u, v, Rational(ab * c * d));
      }
    return out;
  }

 private:
  const Bracket& br_;
  std::mutex mutex_;
  std::map<std::pair<Word, Word>, Poly> cache_;
};

std::vector<std::pair<std::size_t, std::size_t>> pairs_up_to(const std::vector<Word>& words, std::size_t maxlen) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      if (words[i].size() + words[j].size() <= maxlen) out.emplace_back(i, j);
  return out;
}

}  // namespace

HopfReport check_bialgebra(const Bracket& br, std::size_t maxlen, const std::vector<Letter>& alphabet) {
  HopfReport report;
  report.product = br.name();
  for (const auto& a : alphabet) br.require(Word{a});
  StarMemo product(br);
  const auto words = words_up_to(alphabet, maxlen);
  const auto pairs = pairs_up_to(words, maxlen);
  auto pair_text = [&](std::size_t k) {
    return "u=" + to_string(words[pairs[k].first]) + ", v=" + to_string(words[pairs[k].second]);
  };

  report.axioms.push_back(run_axiom(
      "unit", words.size(),
      [&](std::size_t i) {
        Poly w(words[i]);
        return star<Rational>(br, Word{}, words[i]) == w && star<Rational>(br, words[i], Word{}) == w;
      },
      [&](std::size_t i) { return "w=" + to_string(words[i]); }));

  report.axioms.push_back(run_axiom(
      "commutativity", pairs.size(),
      [&](std::size_t k) {
        const auto& [i, j] = pairs[k];
        return product.words(words[i], words[j]) == product.words(words[j], words[i]);
      },
      [&](std::size_t k) {
        const auto& [i, j] = pairs[k];
        return pair_text(k) + ": u*v=" + to_string(star<Rational>(br, words[i], words[j])) +
               ", v*u=" + to_string(star<Rational>(br, words[j], words[i]));
      }));

  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
  for (const auto& [i, j] : pairs)
    for (std::size_t k = 0; k < words.size(); ++k)
      if (words[i].size() + words[j].size() + words[k].size() <= maxlen) triples.emplace_back(i, j, k);
  report.axioms.push_back(run_axiom(
      "associativity", triples.size(),
      [&](std::size_t n) {
        const auto& [i, j, k] = triples[n];
        Poly left = product(product.words(words[i], words[j]), Poly(words[k]));
        Poly right = product(Poly(words[i]), product.words(words[j], words[k]));
        return left == right;
      },
      [&](std::size_t n) {
        const auto& [i, j, k] = triples[n];
        return "u=" + to_string(words[i]) + ", v=" + to_string(words[j]) + ", w=" + to_string(words[k]);
      }));

  report.axioms.push_back(run_axiom(
      "coassociativity", words.size(),
      [&](std::size_t i) {
        Triple left, right;
        for (const auto& [k, c] : coproduct<Rational>(words[i])) {
          for (const auto& [k1, c1] : coproduct<Rational>(k.first))
            add_triple(left, k1.first, k1.second, k.second, Rational(c * c1));
          for (const auto& [k2, c2] : coproduct<Rational>(k.second))
            add_triple(right, k.first, k2.first, k2.second, Rational(c * c2));
        }
        return left == right;
      },
      [&](std::size_t i) { return "w=" + to_string(words[i]); }));

  report.axioms.push_back(run_axiom(
      "counit", words.size(),
      [&](std::size_t i) {
        Poly left, right;
        for (const auto& [k, c] : coproduct<Rational>(words[i])) {
          left += Rational(c * counit(Poly(k.first))) * Poly(k.second);
          right += Rational(c * counit(Poly(k.second))) * Poly(k.first);
        }
        Poly w(words[i]);
        return left == w && right == w;
      },
      [&](std::size_t i) { return "w=" + to_string(words[i]); }));

  std::vector<std::pair<std::size_t, std::size_t>> letter_word;
  std::vector<Letter> letters = alphabet;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  for (std::size_t a = 0; a < letters.size(); ++a)
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i].size() + 1 <= maxlen) letter_word.emplace_back(a, i);
  report.axioms.push_back(run_axiom(
      "coproduct_letter_recursion", letter_word.size(),
      [&](std::size_t n) {
        const Letter& a = letters[letter_word[n].first];
        const Word& w = words[letter_word[n].second];
        Word aw = prepend(a, w);
        Tensor expected = concat(Tensor::tensor(Poly(Word{a}), Poly::unit()), coproduct<Rational>(w));
        expected.add(Word{}, aw, Rational(1));
        return coproduct<Rational>(aw) == expected;
      },
      [&](std::size_t n) {
        return "x=" + to_string(letters[letter_word[n].first]) + ", w=" + to_string(words[letter_word[n].second]);
      }));

  report.axioms.push_back(run_axiom(
      "coproduct_morphism", pairs.size(),
      [&](std::size_t k) {
        const auto& [i, j] = pairs[k];
        return coproduct(product.words(words[i], words[j])) ==
               product(coproduct<Rational>(words[i]), coproduct<Rational>(words[j]));
      },
      pair_text));

  report.axioms.push_back(run_axiom(
      "counit_morphism", pairs.size(),
      [&](std::size_t k) {
        const auto& [i, j] = pairs[k];
        return counit(product.words(words[i], words[j])) ==
               counit(Poly(words[i])) * counit(Poly(words[j]));
      },
      pair_text));

  return report;
}

HopfReport check_antipode(const Bracket& br, std::size_t maxlen, const std::vector<Letter>& alphabet) {
  HopfReport report;
  report.product = br.name();
  for (const auto& a : alphabet) br.require(Word{a});
  StarMemo product(br);
  const auto words = words_up_to(alphabet, maxlen);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  auto describe = [&](std::size_t i) { return "w=" + to_string(words[i]); };
  auto expected = [&](const Word& w) { return w.empty() ? Poly::unit() : Poly(); };

  // Closed-formula antipode of every word; prefixes and suffixes of a word in the
  // range are in the range too.
  std::vector<Poly> closed(words.size());
  parallel_for(words.size(), [&](std::size_t i) { closed[i] = antipode_with<Rational>(product, words[i]); });
  auto a = [&](const Word& w) -> const Poly& { return closed[index.at(w)]; };

  report.axioms.push_back(run_axiom(
      "antipode_left", words.size(),
      [&](std::size_t i) {
        const Word& w = words[i];
        Poly sum;
        for (std::size_t k = 0; k <= w.size(); ++k) sum += product(a(w.prefix(k)), Poly(w.suffix(k)));
        return sum == expected(w);
      },
      describe));

  report.axioms.push_back(run_axiom(
      "antipode_right", words.size(),
      [&](std::size_t i) {
        const Word& w = words[i];
        Poly sum;
        for (std::size_t k = 0; k <= w.size(); ++k) sum += product(Poly(w.prefix(k)), a(w.suffix(k)));
        return sum == expected(w);
      },
      describe));

  report.axioms.push_back(run_axiom(
      "antipode_closed_equals_recursive", words.size(),
      [&](std::size_t i) { return closed[i] == antipode_prefixes_with<Rational>(product, words[i]).back(); },
      [&](std::size_t i) {
        return describe(i) + ": closed=" + to_string(closed[i]) +
               ", recursive=" + to_string(antipode_recursive<Rational>(br, words[i]));
      }));

  return report;
}

}  // namespace polyzeta
