#include "polyzeta/star_product.hpp"

#include <algorithm>

#include "polyzeta/errors.hpp"

namespace polyzeta {

bool operator==(const ScaledLetter& a, const ScaledLetter& b) { return a.scale == b.scale && a.letter == b.letter; }

void Bracket::require(const Word& w) const {
  if (auto k = w.kind(); k && !accepts(*k))
    throw AlphabetMismatch(name_ + " is not defined on " + to_string(*k) + " letters");
}

std::optional<ScaledLetter> Bracket::operator()(const Letter& a, const Letter& b) const {
  if (!accepts(kind_of(a)) || !accepts(kind_of(b)))
    throw AlphabetMismatch(name_ + " bracket applied to " + to_string(kind_of(a)) + "/" + to_string(kind_of(b)) +
                           " letters");
  auto out = fn_(a, b);
  if (out && sgn(out->scale) == 0) return std::nullopt;
  return out;
}

Bracket shuffle_bracket() {
  return Bracket("shuffle", std::nullopt,
                 [](const Letter&, const Letter&) -> std::optional<ScaledLetter> { return std::nullopt; });
}

namespace {

Bracket additive_bracket(std::string name, long sign) {
  return Bracket(std::move(name), AlphabetKind::indexed,
                 [sign](const Letter& a, const Letter& b) -> std::optional<ScaledLetter> {
                   auto i = std::get<IndexedLetter>(a).index;
                   auto j = std::get<IndexedLetter>(b).index;
                   return ScaledLetter{Rational(sign), IndexedLetter{i + j}};
                 });
}

}  // namespace

Bracket stuffle_bracket() { return additive_bracket("stuffle", 1); }

Bracket minus_stuffle_bracket() { return additive_bracket("minusstuffle", -1); }

Bracket mulstuffle_bracket() {
  return Bracket("mulstuffle", AlphabetKind::monoid, [](const Letter& a, const Letter& b) -> std::optional<ScaledLetter> {
    return ScaledLetter{Rational(1), MonoidLetter{std::get<MonoidLetter>(a).g * std::get<MonoidLetter>(b).g}};
  });
}

Bracket duffle_bracket() {
  return Bracket("duffle", AlphabetKind::pair, [](const Letter& a, const Letter& b) -> std::optional<ScaledLetter> {
    const auto& pa = std::get<PairLetter>(a);
    const auto& pb = std::get<PairLetter>(b);
    return ScaledLetter{Rational(1), PairLetter{pa.index + pb.index, pa.g * pb.g}};
  });
}

Bracket bracket_for(ProductKind kind) {
  switch (kind) {
    case ProductKind::shuffle: return shuffle_bracket();
    case ProductKind::stuffle: return stuffle_bracket();
    case ProductKind::minus_stuffle: return minus_stuffle_bracket();
    case ProductKind::mulstuffle: return mulstuffle_bracket();
    case ProductKind::duffle: return duffle_bracket();
  }
  throw std::logic_error("unknown product kind");
}

std::string to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::shuffle: return "shuffle";
    case ProductKind::stuffle: return "stuffle";
    case ProductKind::minus_stuffle: return "minusstuffle";
    case ProductKind::mulstuffle: return "mulstuffle";
    case ProductKind::duffle: return "duffle";
  }
  return "unknown";
}

std::optional<ProductKind> parse_product(std::string_view name) {
  for (auto k : all_products)
    if (to_string(k) == name) return k;
  if (name == "minus-stuffle" || name == "minus_stuffle") return ProductKind::minus_stuffle;
  return std::nullopt;
}

namespace {

std::optional<ScaledLetter> scale(std::optional<ScaledLetter> s, const Rational& q) {
  if (!s) return s;
  s->scale *= q;
  return s;
}

}  // namespace

std::optional<ScaledLetter> bracket_left(const Bracket& br, const Letter& a, const Letter& b, const Letter& c) {
  auto ab = br(a, b);
  if (!ab) return std::nullopt;
  return scale(br(ab->letter, c), ab->scale);
}

std::optional<ScaledLetter> bracket_right(const Bracket& br, const Letter& a, const Letter& b, const Letter& c) {
  auto bc = br(b, c);
  if (!bc) return std::nullopt;
  return scale(br(a, bc->letter), bc->scale);
}

std::vector<Letter> bracket_closure(const Bracket& br, const std::vector<Letter>& letters, int depth) {
  std::vector<Letter> out = letters;
  for (int d = 0; d < depth; ++d) {
    std::vector<Letter> next = out;
    for (const auto& a : out)
      for (const auto& b : out)
        if (auto ab = br(a, b)) next.push_back(ab->letter);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out = std::move(next);
  }
  return out;
}

}  // namespace polyzeta
