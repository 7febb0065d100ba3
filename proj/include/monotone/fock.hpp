#pragma once

// Truncated discrete monotone Fock space: basis states, the action of
// monotone creators/annihilators, and exact matrices on finite windows.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monotone/rational.hpp"

namespace monotone {

/// Integer interval [lo, hi]; V_window is spanned by the states whose
/// indices all lie inside it.
class IndexWindow {
 public:
  IndexWindow(int lo, int hi);

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  int width() const noexcept { return hi_ - lo_ + 1; }
  /// 2^width. Throws BudgetExceeded past kernels::kMaxWidth.
  std::size_t dimension() const;

  bool contains(int i) const noexcept { return lo_ <= i && i <= hi_; }
  bool contains(const IndexWindow& o) const noexcept { return lo_ <= o.lo_ && o.hi_ <= hi_; }

  /// "LO..HI"
  std::string str() const;
  static IndexWindow parse(std::string_view text);

  friend bool operator==(const IndexWindow&, const IndexWindow&) = default;

 private:
  int lo_;
  int hi_;
};

/// Strictly increasing index tuple; empty is the vacuum.
class BasisState {
 public:
  BasisState() = default;
  explicit BasisState(std::vector<int> indices);

  static BasisState vacuum() { return {}; }
  /// Bit j of mask <-> index window.lo() + j.
  static BasisState from_mask(std::uint32_t mask, const IndexWindow& window);

  const std::vector<int>& indices() const noexcept { return indices_; }
  bool is_vacuum() const noexcept { return indices_.empty(); }
  std::size_t size() const noexcept { return indices_.size(); }
  /// Throws IndexOutsideWindow if some index is outside.
  std::uint32_t mask(const IndexWindow& window) const;
  std::string str() const;

  friend auto operator<=>(const BasisState&, const BasisState&) = default;

 private:
  std::vector<int> indices_;
};

enum class LetterKind : std::uint8_t { creator, annihilator };

struct Letter {
  LetterKind kind = LetterKind::annihilator;
  int index = 0;

  static constexpr Letter creator(int i) { return {LetterKind::creator, i}; }
  static constexpr Letter annihilator(int i) { return {LetterKind::annihilator, i}; }

  bool is_creator() const noexcept { return kind == LetterKind::creator; }
  bool is_annihilator() const noexcept { return kind == LetterKind::annihilator; }
  Letter adjoint() const noexcept {
    return {is_creator() ? LetterKind::annihilator : LetterKind::creator, index};
  }
  /// "a*(i)" or "a(i)"
  std::string str() const;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Letters read left to right; acting on a vector the rightmost letter acts first.
using Word = std::vector<Letter>;

std::string to_string(const Word& word);

/// Finite linear combination of basis states. No stored coefficient is zero.
class FockVec {
 public:
  FockVec() = default;
  static FockVec vacuum();
  static FockVec basis(BasisState state);

  void add(const BasisState& state, const Rational& coeff);
  Rational coefficient(const BasisState& state) const;
  const std::map<BasisState, Rational>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  friend bool operator==(const FockVec&, const FockVec&) = default;

 private:
  std::map<BasisState, Rational> entries_;
};

/// Sparse exact matrix on V_window. Rows and columns are positions in the
/// canonical basis order, which is the bitmask value of the state.
class ExactMatrix {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;

  explicit ExactMatrix(IndexWindow window);
  static ExactMatrix identity(IndexWindow window);

  const IndexWindow& window() const noexcept { return window_; }
  std::size_t dimension() const { return window_.dimension(); }
  const std::map<Key, Rational>& entries() const noexcept { return entries_; }

  Rational at(std::uint32_t row, std::uint32_t col) const;
  void add(std::uint32_t row, std::uint32_t col, const Rational& value);
  bool is_zero() const noexcept { return entries_.empty(); }
  bool is_diagonal() const;
  Rational trace() const;

  ExactMatrix transpose() const;
  ExactMatrix operator-() const;
  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const Rational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const Rational& s) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  void check_same_window(const ExactMatrix& o) const;

  IndexWindow window_;
  std::map<Key, Rational> entries_;
};

/// A word acting on V_window, stored as the image of every basis column
/// (kernels::kNone for columns the word annihilates). Since each letter
/// maps basis states to basis states or zero, this is exact.
class PartialMap {
 public:
  static PartialMap identity(IndexWindow window);
  /// Throws IndexOutsideWindow if a letter index escapes the window.
  static PartialMap of_word(const Word& word, IndexWindow window);

  const IndexWindow& window() const noexcept { return window_; }
  std::span<const std::uint32_t> image() const noexcept { return image_; }
  std::size_t dimension() const noexcept { return image_.size(); }

  /// this := letter * this
  void left_multiply(const Letter& letter);
  /// this * inner
  PartialMap compose(const PartialMap& inner) const;
  /// Number of columns fixed by the map, i.e. the trace of its matrix.
  std::size_t trace() const;
  bool is_zero() const;
  ExactMatrix to_matrix() const;

  friend bool operator==(const PartialMap&, const PartialMap&) = default;

 private:
  PartialMap(IndexWindow window, std::vector<std::uint32_t> image)
      : window_(window), image_(std::move(image)) {}

  IndexWindow window_;
  std::vector<std::uint32_t> image_;
};

struct PartialMapHash {
  std::size_t operator()(const PartialMap& m) const noexcept;
};

/// All 2^w states of the window ordered by bitmask value; vacuum first.
std::vector<BasisState> enumerate_basis(const IndexWindow& window);

FockVec apply_letter(const Letter& letter, const FockVec& v);
/// Applies the letters right to left.
FockVec apply_word(const Word& word, const FockVec& v);

/// Matrix of the word on V_window. Throws IndexOutsideWindow.
ExactMatrix operator_matrix(const Word& word, const IndexWindow& window);

/// <Omega, word Omega>
Rational vacuum_expectation(const Word& word);

}  // namespace monotone
