#pragma once

// The universal-algebra side: word grammar, canonical (Hamel basis) words,
// the monotone rules as an oriented rewriting system, and the operations of
// the *-algebra on normal forms.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "monotone/fock.hpp"
#include "monotone/rational.hpp"

namespace monotone {

/// Parses `word := "1" | term { whitespace term }`,
/// `term := ("a" | "a*") "(" signed-integer ")"`. Empty input is the identity.
/// Throws SyntaxError.
Word parse_word(std::string_view text);

/// Hamel basis element: a lambda-form a*(i_1)..a*(i_m) a(j_1)..a(j_n) with
/// i ascending and j descending (excluding the bare a*(i) a(i)), or the
/// annihilate-create pair a(i) a*(i). The empty lambda-form is I.
class CanonicalWord {
 public:
  enum class Tag : std::uint8_t { lambda_form, annihilate_create };

  CanonicalWord() = default;  // I
  static CanonicalWord identity() { return {}; }
  /// Throws std::invalid_argument on a monotonicity violation or the
  /// excluded form a*(i) a(i).
  static CanonicalWord lambda(std::vector<int> creators, std::vector<int> annihilators);
  static CanonicalWord annihilate_create(int index);
  /// The canonical word spelled by `word`, if it is one.
  static bool from_word(const Word& word, CanonicalWord& out);

  Tag tag() const noexcept { return tag_; }
  const std::vector<int>& creators() const noexcept { return creators_; }
  const std::vector<int>& annihilators() const noexcept { return annihilators_; }
  int ac_index() const noexcept { return ac_index_; }
  bool is_identity() const noexcept {
    return tag_ == Tag::lambda_form && creators_.empty() && annihilators_.empty();
  }
  std::size_t length() const noexcept {
    return tag_ == Tag::annihilate_create ? 2 : creators_.size() + annihilators_.size();
  }
  Word letters() const;
  std::string str() const;
  int min_index() const;
  int max_index() const;
  CanonicalWord shifted(int k) const;

  /// Identity first, then by length, tag and indices.
  friend std::strong_ordering operator<=>(const CanonicalWord& a, const CanonicalWord& b);
  friend bool operator==(const CanonicalWord&, const CanonicalWord&) = default;

 private:
  Tag tag_ = Tag::lambda_form;
  std::vector<int> creators_;
  std::vector<int> annihilators_;
  int ac_index_ = 0;
};

/// Finite linear combination of canonical words with exact coefficients.
class LinComb {
 public:
  LinComb() = default;
  static LinComb identity() { return of(CanonicalWord::identity()); }
  static LinComb of(const CanonicalWord& word, const Rational& coeff = Rational(1));

  void add(const CanonicalWord& word, const Rational& coeff);
  Rational coefficient(const CanonicalWord& word) const;
  /// Coefficient of I; zero for elements of the non-unital ideal.
  Rational identity_coefficient() const { return coefficient(CanonicalWord::identity()); }
  bool in_ideal() const { return identity_coefficient().is_zero(); }
  const std::map<CanonicalWord, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::string str() const;

  LinComb& operator+=(const LinComb& o);
  LinComb& operator-=(const LinComb& o);
  LinComb& operator*=(const Rational& s);
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  std::map<CanonicalWord, Rational> terms_;
};

/// Redex selection order. The two strategies also prefer different rules
/// for the same redex, so agreement between them is a real confluence check.
enum class RewriteStrategy : std::uint8_t { leftmost, rightmost };

/// Elementary rewrites allowed per input word before the rewriter gives up.
inline constexpr std::uint64_t kRewriteFuel = 10'000'000;

/// Expansion of `word` in the Hamel basis. Throws RewriteBudgetExceeded if
/// the step budget runs out.
LinComb normal_form(const Word& word, RewriteStrategy strategy = RewriteStrategy::leftmost);
LinComb normal_form(std::string_view word_text);

LinComb multiply(const LinComb& x, const LinComb& y);
LinComb adjoint(const LinComb& x);
Word adjoint(const Word& w);
/// Index shift i -> i + k; a *-automorphism.
LinComb shift(const LinComb& x, int k);
Word shift(const Word& w, int k);
/// Vacuum functional: 1 on I and on every a(i) a*(i), 0 on the other basis words.
Rational vacuum_state(const LinComb& x);

/// Every canonical word whose indices lie in the window (4^w of them,
/// counting I), in canonical order.
std::vector<CanonicalWord> enumerate_canonical(const IndexWindow& window);

/// {"terms":[{"num":..,"den":..,"word":[["c"|"a",i],...]}]}
nlohmann::json to_json(const LinComb& x);
LinComb lincomb_from_json(const nlohmann::json& j);
/// Serialize a basis state as its sorted index array.
nlohmann::json to_json(const BasisState& s);

}  // namespace monotone
