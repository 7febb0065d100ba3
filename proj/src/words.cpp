#include "monotone/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <utility>

#include "monotone/errors.hpp"

namespace monotone {

// ---------------------------------------------------------------------- parser

Word parse_word(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos > start;
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) throw SyntaxError(std::string("expected '") + c + "'", pos);
    ++pos;
  };

  skip_ws();
  Word word;
  if (pos == text.size()) return word;
  if (text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw SyntaxError("unexpected input after identity word", pos);
    return word;
  }

  while (true) {
    expect('a');
    LetterKind kind = LetterKind::annihilator;
    if (pos < text.size() && text[pos] == '*') {
      kind = LetterKind::creator;
      ++pos;
    }
    expect('(');
    const std::size_t num_start = pos;
    std::size_t digits_start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) digits_start = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) throw SyntaxError("expected a signed integer", digits_start);
    int index = 0;
    std::string_view digits = text.substr(num_start, pos - num_start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw SyntaxError("integer out of range", num_start);
    }
    expect(')');
    word.push_back({kind, index});

    const bool had_ws = skip_ws();
    if (pos == text.size()) break;
    if (!had_ws) throw SyntaxError("expected whitespace between terms", pos);
  }
  return word;
}

// --------------------------------------------------------------- CanonicalWord

CanonicalWord CanonicalWord::lambda(std::vector<int> creators, std::vector<int> annihilators) {
  for (std::size_t k = 1; k < creators.size(); ++k) {
    if (creators[k - 1] >= creators[k]) throw std::invalid_argument("lambda-form creators must increase");
  }
  for (std::size_t k = 1; k < annihilators.size(); ++k) {
    if (annihilators[k - 1] <= annihilators[k]) throw std::invalid_argument("lambda-form annihilators must decrease");
  }
  if (creators.size() == 1 && annihilators.size() == 1 && creators[0] == annihilators[0]) {
    throw std::invalid_argument("a*(i) a(i) is not a basis word");
  }
  CanonicalWord w;
  w.creators_ = std::move(creators);
  w.annihilators_ = std::move(annihilators);
  return w;
}

CanonicalWord CanonicalWord::annihilate_create(int index) {
  CanonicalWord w;
  w.tag_ = Tag::annihilate_create;
  w.ac_index_ = index;
  return w;
}

bool CanonicalWord::from_word(const Word& word, CanonicalWord& out) {
  if (word.size() == 2 && word[0].is_annihilator() && word[1].is_creator() && word[0].index == word[1].index) {
    out = annihilate_create(word[0].index);
    return true;
  }
  std::size_t split = 0;
  while (split < word.size() && word[split].is_creator()) ++split;
  std::vector<int> creators;
  std::vector<int> annihilators;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k < split) {
      if (!creators.empty() && creators.back() >= word[k].index) return false;
      creators.push_back(word[k].index);
    } else {
      if (!word[k].is_annihilator()) return false;
      if (!annihilators.empty() && annihilators.back() <= word[k].index) return false;
      annihilators.push_back(word[k].index);
    }
  }
  if (creators.size() == 1 && annihilators.size() == 1 && creators[0] == annihilators[0]) return false;
  CanonicalWord w;
  w.creators_ = std::move(creators);
  w.annihilators_ = std::move(annihilators);
  out = std::move(w);
  return true;
}

Word CanonicalWord::letters() const {
  if (tag_ == Tag::annihilate_create) return {Letter::annihilator(ac_index_), Letter::creator(ac_index_)};
  Word w;
  w.reserve(length());
  for (int i : creators_) w.push_back(Letter::creator(i));
  for (int j : annihilators_) w.push_back(Letter::annihilator(j));
  return w;
}

std::string CanonicalWord::str() const { return to_string(letters()); }

int CanonicalWord::min_index() const {
  const Word w = letters();
  if (w.empty()) return 0;
  return std::min_element(w.begin(), w.end(), [](const Letter& x, const Letter& y) { return x.index < y.index; })->index;
}

int CanonicalWord::max_index() const {
  const Word w = letters();
  if (w.empty()) return 0;
  return std::max_element(w.begin(), w.end(), [](const Letter& x, const Letter& y) { return x.index < y.index; })->index;
}

CanonicalWord CanonicalWord::shifted(int k) const {
  CanonicalWord w = *this;
  for (int& i : w.creators_) i += k;
  for (int& j : w.annihilators_) j += k;
  if (tag_ == Tag::annihilate_create) w.ac_index_ += k;
  return w;
}

std::strong_ordering operator<=>(const CanonicalWord& a, const CanonicalWord& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = a.tag_ <=> b.tag_; c != 0) return c;
  if (auto c = a.creators_ <=> b.creators_; c != 0) return c;
  if (auto c = a.annihilators_ <=> b.annihilators_; c != 0) return c;
  return a.ac_index_ <=> b.ac_index_;
}

// --------------------------------------------------------------------- LinComb

LinComb LinComb::of(const CanonicalWord& word, const Rational& coeff) {
  LinComb x;
  x.add(word, coeff);
  return x;
}

void LinComb::add(const CanonicalWord& word, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational LinComb::coefficient(const CanonicalWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string LinComb::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    Rational mag = c;
    if (out.empty()) {
      if (c.num() < 0) out += "-";
    } else {
      out += c.num() < 0 ? " - " : " + ";
    }
    if (c.num() < 0) mag = -c;
    if (mag != Rational(1) || w.is_identity()) {
      out += mag.str();
      if (!w.is_identity()) out += " ";
    }
    if (!w.is_identity()) out += "[" + w.str() + "]";
  }
  return out;
}

LinComb& LinComb::operator+=(const LinComb& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

LinComb& LinComb::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

// -------------------------------------------------------------------- rewriter

namespace {

// Replacement of word[begin, end) by each piece, weighted.
struct Expansion {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::vector<std::pair<Rational, Word>> pieces;
};

enum class StepResult : std::uint8_t { canonical, zero, expand };

// Pairs that vanish outright: c_i c_j (i >= j), a_i a_j (i <= j), a_i c_j (i != j).
bool zero_pair(const Letter& x, const Letter& y) {
  if (x.is_creator() && y.is_creator()) return x.index >= y.index;
  if (x.is_annihilator() && y.is_annihilator()) return x.index <= y.index;
  if (x.is_annihilator() && y.is_creator()) return x.index != y.index;
  return false;
}

bool center_pair(const Letter& x, const Letter& y) {
  return x.is_annihilator() && y.is_creator() && x.index == y.index;
}

Letter c(int i) { return Letter::creator(i); }
Letter a(int i) { return Letter::annihilator(i); }

// a_i a_k c_k -> alpha(i,k) a_i
void absorb_left(std::size_t p, int i, int k, Expansion& e) {
  e.begin = p - 1;
  e.end = p + 2;
  if (i > k) e.pieces.push_back({Rational(1), {a(i)}});
}

// a_k c_k c_i -> alpha(i,k) c_i
void absorb_right(std::size_t p, int k, int i, Expansion& e) {
  e.begin = p;
  e.end = p + 3;
  if (i > k) e.pieces.push_back({Rational(1), {c(i)}});
}

// a_k c_k a_j -> a_j - alpha(k,j) sum_{j<l<=k} c_l a_l a_j
void expand_right(std::size_t p, int k, int j, Expansion& e) {
  e.begin = p;
  e.end = p + 3;
  e.pieces.push_back({Rational(1), {a(j)}});
  for (int l = j + 1; l <= k; ++l) e.pieces.push_back({Rational(-1), {c(l), a(l), a(j)}});
}

// c_j a_k c_k -> c_j - alpha(k,j) sum_{j<l<=k} c_j c_l a_l
void expand_left(std::size_t p, int j, int k, Expansion& e) {
  e.begin = p - 1;
  e.end = p + 2;
  e.pieces.push_back({Rational(1), {c(j)}});
  for (int l = j + 1; l <= k; ++l) e.pieces.push_back({Rational(-1), {c(j), c(l), a(l)}});
}

// Center elimination for [c_i] a_k c_k [a_j] with every present neighbour
// below k: substitute a_k c_k = a_{k-1} c_{k-1} - c_k a_k and recurse on the
// lowered center until it meets a neighbour index, where
// c_i a_i c_i = c_i and a_j c_j a_j = a_j absorb it.
void lower_center(const Word& w, std::size_t p, std::uint64_t& fuel, Expansion& e) {
  const bool has_left = p > 0;
  const bool has_right = p + 2 < w.size();
  e.begin = has_left ? p - 1 : p;
  e.end = has_right ? p + 3 : p + 2;
  auto frame = [&](Word middle) {
    Word out;
    if (has_left) out.push_back(w[p - 1]);
    out.insert(out.end(), middle.begin(), middle.end());
    if (has_right) out.push_back(w[p + 2]);
    return out;
  };
  int center = w[p].index;
  while (true) {
    e.pieces.push_back({Rational(-1), frame({c(center), a(center)})});
    --center;
    ++fuel;
    if ((has_left && center == w[p - 1].index) || (has_right && center == w[p + 2].index)) {
      e.pieces.push_back({Rational(1), frame({})});
      return;
    }
  }
}

void expand_center(const Word& w, std::size_t p, RewriteStrategy strategy, std::uint64_t& fuel, Expansion& e) {
  const int k = w[p].index;
  const Letter* left = p > 0 ? &w[p - 1] : nullptr;
  const Letter* right = p + 2 < w.size() ? &w[p + 2] : nullptr;

  if (strategy == RewriteStrategy::leftmost) {
    if (left && left->is_annihilator()) return absorb_left(p, left->index, k, e);
    if (right && right->is_creator()) return absorb_right(p, k, right->index, e);
    // Now left is a creator (or absent) and right an annihilator (or absent).
    if ((!left || left->index < k) && (!right || right->index < k)) return lower_center(w, p, fuel, e);
    if (right) return expand_right(p, k, right->index, e);
    return expand_left(p, left->index, k, e);
  }

  if (right && right->is_annihilator()) return expand_right(p, k, right->index, e);
  if (left && left->is_creator()) return expand_left(p, left->index, k, e);
  if (left) return absorb_left(p, left->index, k, e);
  return absorb_right(p, k, right->index, e);
}

StepResult step(const Word& w, RewriteStrategy strategy, std::uint64_t& fuel, Expansion& e) {
  const std::size_t n = w.size();
  if (n < 2) return StepResult::canonical;
  // Number-operator rule: only the bare a*(i) a(i), which is outside the basis.
  if (n == 2 && w[0].is_creator() && w[1].is_annihilator() && w[0].index == w[1].index) {
    const int i = w[0].index;
    e.begin = 0;
    e.end = 2;
    e.pieces.push_back({Rational(1), {a(i - 1), c(i - 1)}});
    e.pieces.push_back({Rational(-1), {a(i), c(i)}});
    return StepResult::expand;
  }
  auto visit = [&](std::size_t p) -> std::optional<StepResult> {
    if (zero_pair(w[p], w[p + 1])) return StepResult::zero;
    if (n > 2 && center_pair(w[p], w[p + 1])) {
      expand_center(w, p, strategy, fuel, e);
      return StepResult::expand;
    }
    return std::nullopt;
  };
  if (strategy == RewriteStrategy::leftmost) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      if (auto r = visit(p)) return *r;
    }
  } else {
    for (std::size_t p = n - 1; p-- > 0;) {
      if (auto r = visit(p)) return *r;
    }
  }
  return StepResult::canonical;
}

}  // namespace

LinComb normal_form(const Word& word, RewriteStrategy strategy) {
  std::map<Word, Rational> pending;
  pending.emplace(word, Rational(1));
  LinComb result;
  std::uint64_t fuel = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Rational coeff = node.mapped();
    Expansion e;
    switch (step(w, strategy, fuel, e)) {
      case StepResult::canonical: {
        CanonicalWord cw;
        if (!CanonicalWord::from_word(w, cw)) {
          throw std::logic_error("rewriter stopped on non-canonical word " + to_string(w));
        }
        result.add(cw, coeff);
        break;
      }
      case StepResult::zero:
        break;
      case StepResult::expand:
        for (auto& [factor, piece] : e.pieces) {
          Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(e.begin));
          next.insert(next.end(), piece.begin(), piece.end());
          next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(e.end), w.end());
          Rational value = coeff * factor;
          auto [it, inserted] = pending.try_emplace(std::move(next), value);
          if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) pending.erase(it);
          }
        }
        break;
    }
    if (++fuel > kRewriteFuel) {
      throw RewriteBudgetExceeded("normal form of " + to_string(word) + " exceeded the rewrite budget");
    }
  }
  return result;
}

LinComb normal_form(std::string_view word_text) { return normal_form(parse_word(word_text)); }

LinComb multiply(const LinComb& x, const LinComb& y) {
  LinComb out;
  for (const auto& [wx, cx] : x.terms()) {
    Word left = wx.letters();
    for (const auto& [wy, cy] : y.terms()) {
      Word prod = left;
      Word right = wy.letters();
      prod.insert(prod.end(), right.begin(), right.end());
      out += normal_form(prod) * (cx * cy);
    }
  }
  return out;
}

Word adjoint(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->adjoint());
  return out;
}

LinComb adjoint(const LinComb& x) {
  LinComb out;
  for (const auto& [w, coeff] : x.terms()) out += normal_form(adjoint(w.letters())) * coeff;
  return out;
}

Word shift(const Word& w, int k) {
  Word out = w;
  for (auto& l : out) l.index += k;
  return out;
}

LinComb shift(const LinComb& x, int k) {
  LinComb out;
  for (const auto& [w, coeff] : x.terms()) out.add(w.shifted(k), coeff);
  return out;
}

Rational vacuum_state(const LinComb& x) {
  Rational v;
  for (const auto& [w, coeff] : x.terms()) {
    if (w.is_identity() || w.tag() == CanonicalWord::Tag::annihilate_create) v += coeff;
  }
  return v;
}

std::vector<CanonicalWord> enumerate_canonical(const IndexWindow& window) {
  const int w = window.width();
  if (w > 10) throw BudgetExceeded("canonical word enumeration is limited to windows of width 10");
  std::vector<CanonicalWord> out;
  out.reserve(std::size_t{1} << (2 * w));
  for (std::uint32_t cm = 0; cm < (1u << w); ++cm) {
    std::vector<int> creators;
    for (int j = 0; j < w; ++j) {
      if (cm >> j & 1u) creators.push_back(window.lo() + j);
    }
    for (std::uint32_t am = 0; am < (1u << w); ++am) {
      std::vector<int> annihilators;
      for (int j = w - 1; j >= 0; --j) {
        if (am >> j & 1u) annihilators.push_back(window.lo() + j);
      }
      if (creators.size() == 1 && annihilators.size() == 1 && creators[0] == annihilators[0]) continue;
      out.push_back(CanonicalWord::lambda(creators, std::move(annihilators)));
    }
  }
  for (int i = window.lo(); i <= window.hi(); ++i) out.push_back(CanonicalWord::annihilate_create(i));
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------------ json

nlohmann::json to_json(const BasisState& s) { return nlohmann::json(s.indices()); }

nlohmann::json to_json(const LinComb& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, coeff] : x.terms()) {
    nlohmann::json letters = nlohmann::json::array();
    for (const auto& l : w.letters()) letters.push_back({l.is_creator() ? "c" : "a", l.index});
    terms.push_back({{"num", coeff.num()}, {"den", coeff.den()}, {"word", std::move(letters)}});
  }
  return {{"terms", std::move(terms)}};
}

LinComb lincomb_from_json(const nlohmann::json& j) {
  LinComb out;
  for (const auto& term : j.at("terms")) {
    const auto den = term.at("den").get<std::int64_t>();
    if (den <= 0) throw std::invalid_argument("LinComb JSON requires a positive denominator");
    Rational coeff(term.at("num").get<std::int64_t>(), den);
    Word w;
    for (const auto& letter : term.at("word")) {
      const auto kind = letter.at(0).get<std::string>();
      const int index = letter.at(1).get<int>();
      if (kind == "c") {
        w.push_back(Letter::creator(index));
      } else if (kind == "a") {
        w.push_back(Letter::annihilator(index));
      } else {
        throw std::invalid_argument("LinComb JSON letter kind must be \"c\" or \"a\"");
      }
    }
    out += normal_form(w) * coeff;
  }
  return out;
}

}  // namespace monotone
