#include "polyzeta/word.hpp"

#include <algorithm>

#include "polyzeta/errors.hpp"

namespace polyzeta {

std::string to_string(AlphabetKind kind) {
  switch (kind) {
    case AlphabetKind::indexed: return "indexed";
    case AlphabetKind::monoid: return "monoid";
    case AlphabetKind::pair: return "pair";
    case AlphabetKind::encoded: return "encoded";
  }
  return "unknown";
}

AlphabetKind kind_of(const Letter& a) {
  switch (a.index()) {
    case 0: return AlphabetKind::indexed;
    case 1: return AlphabetKind::monoid;
    case 2: return AlphabetKind::pair;
    default: return AlphabetKind::encoded;
  }
}

bool operator==(const IndexedLetter& a, const IndexedLetter& b) { return a.index == b.index; }
bool operator<(const IndexedLetter& a, const IndexedLetter& b) { return a.index < b.index; }
bool operator==(const MonoidLetter& a, const MonoidLetter& b) { return a.g == b.g; }
bool operator<(const MonoidLetter& a, const MonoidLetter& b) { return a.g < b.g; }
bool operator==(const PairLetter& a, const PairLetter& b) { return a.index == b.index && a.g == b.g; }
bool operator<(const PairLetter& a, const PairLetter& b) {
  if (a.index != b.index) return a.index < b.index;
  return a.g < b.g;
}
bool operator==(const XFormLetter& a, const XFormLetter& b) { return a.c == b.c && a.tbar == b.tbar; }
bool operator<(const XFormLetter& a, const XFormLetter& b) {
  if (a.c != b.c) return a.c < b.c;
  return a.tbar < b.tbar;
}

Letter x(std::int64_t i) {
  if (i < 0) throw DomainError("indexed letter needs a nonnegative index");
  return IndexedLetter{i};
}

Letter mono(const Color& g) { return MonoidLetter{g}; }

Letter pair(std::int64_t i, const Color& g) {
  if (i < 1) throw DomainError("pair letter needs a positive index");
  return PairLetter{i, g};
}

Letter x0() { return X0Letter{}; }

Letter xform(const Color& c, const Rational& tbar) {
  XFormLetter l{c, tbar};
  l.tbar.canonicalize();
  return l;
}

std::string to_string(const Letter& a) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IndexedLetter>) {
          return "x" + std::to_string(v.index);
        } else if constexpr (std::is_same_v<T, MonoidLetter>) {
          return "x_{" + to_string(v.g) + "}";
        } else if constexpr (std::is_same_v<T, PairLetter>) {
          return "(y" + std::to_string(v.index) + ",e_{" + to_string(v.g) + "})";
        } else if constexpr (std::is_same_v<T, X0Letter>) {
          return "x0";
        } else {
          return "x_{c=" + to_string(v.c) + ";t=" + to_string(v.tbar) + "}";
        }
      },
      a);
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) return;
  AlphabetKind k = kind_of(letters_.front());
  for (const auto& a : letters_)
    if (kind_of(a) != k)
      throw AlphabetMismatch("word mixes " + to_string(k) + " and " + to_string(kind_of(a)) + " letters");
}

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

std::optional<AlphabetKind> Word::kind() const {
  if (letters_.empty()) return std::nullopt;
  return kind_of(letters_.front());
}

Word Word::subword(std::size_t first, std::size_t count) const {
  auto b = letters_.begin() + static_cast<std::ptrdiff_t>(first);
  return Word(std::vector<Letter>(b, b + static_cast<std::ptrdiff_t>(count)), Unchecked{});
}

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                      b.letters_.end());
}

Word concat(const Word& u, const Word& v) {
  if (u.empty()) return v;
  if (v.empty()) return u;
  if (*u.kind() != *v.kind())
    throw AlphabetMismatch("cannot concatenate " + to_string(*u.kind()) + " and " + to_string(*v.kind()) +
                           " words");
  std::vector<Letter> letters;
  letters.reserve(u.size() + v.size());
  letters.insert(letters.end(), u.letters_.begin(), u.letters_.end());
  letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
  return Word(std::move(letters), Word::Unchecked{});
}

Word prepend(const Letter& a, const Word& w) {
  if (!w.empty() && kind_of(a) != *w.kind())
    throw AlphabetMismatch("cannot prepend " + to_string(kind_of(a)) + " letter to " + to_string(*w.kind()) +
                           " word");
  std::vector<Letter> letters;
  letters.reserve(w.size() + 1);
  letters.push_back(a);
  letters.insert(letters.end(), w.letters_.begin(), w.letters_.end());
  return Word(std::move(letters), Word::Unchecked{});
}

Word power(const Letter& a, std::size_t n) { return Word(std::vector<Letter>(n, a)); }

std::int64_t weight(const Word& w, const LetterWeight& wt) {
  std::int64_t total = 0;
  for (const auto& a : w) total += wt(a);
  return total;
}

std::int64_t index_weight(const Letter& a) {
  if (const auto* l = std::get_if<IndexedLetter>(&a)) return l->index;
  if (const auto* l = std::get_if<PairLetter>(&a)) return l->index;
  return 1;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  // Runs of equal letters print as powers: x0^2 x1.
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += to_string(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace polyzeta
