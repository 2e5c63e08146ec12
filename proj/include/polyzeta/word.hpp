#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "polyzeta/color.hpp"
#include "polyzeta/rational.hpp"

namespace polyzeta {

/// x_i or y_i: a letter of an alphabet indexed by the nonnegative integers.
struct IndexedLetter {
  std::int64_t index = 0;
};

/// x_g: a letter indexed by an element of a commutative monoid (mulstuffle).
struct MonoidLetter {
  Color g;
};

/// (y_i, e_g): a letter of the paired alphabet Y x E (duffle). index >= 1.
struct PairLetter {
  std::int64_t index = 1;
  Color g;
};

/// The letter x0 of the iterated-integral encoding, carrying the form dz/z.
struct X0Letter {};

/// A letter x_{i,xi,tbar} of the encoding alphabet. Only the cumulative color
/// c = xi_1 ... xi_i enters the attached differential form, so that is what is stored.
struct XFormLetter {
  Color c;
  Rational tbar;
};

using Letter = std::variant<IndexedLetter, MonoidLetter, PairLetter, X0Letter, XFormLetter>;

enum class AlphabetKind { indexed, monoid, pair, encoded };

std::string to_string(AlphabetKind kind);
AlphabetKind kind_of(const Letter& a);

bool operator==(const IndexedLetter& a, const IndexedLetter& b);
bool operator<(const IndexedLetter& a, const IndexedLetter& b);
bool operator==(const MonoidLetter& a, const MonoidLetter& b);
bool operator<(const MonoidLetter& a, const MonoidLetter& b);
bool operator==(const PairLetter& a, const PairLetter& b);
bool operator<(const PairLetter& a, const PairLetter& b);
inline bool operator==(const X0Letter&, const X0Letter&) { return true; }
inline bool operator<(const X0Letter&, const X0Letter&) { return false; }
bool operator==(const XFormLetter& a, const XFormLetter& b);
bool operator<(const XFormLetter& a, const XFormLetter& b);

// Letter constructors.
Letter x(std::int64_t i);
inline Letter y(std::int64_t i) { return x(i); }
Letter mono(const Color& g);
Letter pair(std::int64_t i, const Color& g);
Letter x0();
Letter xform(const Color& c, const Rational& tbar);

/// Pretty form: x0, y3, x_{2/3}, (y1,e_{-1}), x_{c=1/2;t=1/5}.
std::string to_string(const Letter& a);

/// Element of the free monoid X*. Immutable; all letters share one alphabet kind.
class Word {
 public:
  Word() = default;
  /// Throws AlphabetMismatch when the letters mix alphabet kinds.
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  /// Kind of the letters, nullopt for the empty word.
  std::optional<AlphabetKind> kind() const;

  /// Letters [first, first + count).
  Word subword(std::size_t first, std::size_t count) const;
  Word prefix(std::size_t count) const { return subword(0, count); }
  Word suffix(std::size_t first) const { return subword(first, size() - first); }

  /// Graded lexicographic order: shorter words first, then letterwise.
  friend bool operator<(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  struct Unchecked {};
  Word(std::vector<Letter> letters, Unchecked) : letters_(std::move(letters)) {}
  friend Word concat(const Word& u, const Word& v);
  friend Word prepend(const Letter& a, const Word& w);

  std::vector<Letter> letters_;
};

/// Concatenation uv. Throws AlphabetMismatch if both are nonempty and of different kinds.
Word concat(const Word& u, const Word& v);
/// The word a w.
Word prepend(const Letter& a, const Word& w);

Word power(const Letter& a, std::size_t n);

using LetterWeight = std::function<std::int64_t(const Letter&)>;

/// Sum of the letter weights; 0 for the empty word.
std::int64_t weight(const Word& w, const LetterWeight& wt);
/// wt(x_i) = i on indexed letters (and on the index part of pair letters); 1 otherwise.
std::int64_t index_weight(const Letter& a);

std::string to_string(const Word& w);

}  // namespace polyzeta
