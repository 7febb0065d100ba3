#include "monotone/fock.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "monotone/errors.hpp"
#include "monotone/kernels.hpp"

namespace monotone {

IndexWindow::IndexWindow(int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo > hi) throw std::invalid_argument("index window requires lo <= hi");
}

std::size_t IndexWindow::dimension() const {
  if (width() > kernels::kMaxWidth) {
    throw BudgetExceeded("window " + str() + " exceeds the maximum width " + std::to_string(kernels::kMaxWidth));
  }
  return std::size_t{1} << width();
}

std::string IndexWindow::str() const { return std::to_string(lo_) + ".." + std::to_string(hi_); }

IndexWindow IndexWindow::parse(std::string_view text) {
  auto sep = text.find("..");
  if (sep == std::string_view::npos) throw SyntaxError("expected LO..HI", 0);
  auto parse_int = [&](std::string_view part, std::size_t offset) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw SyntaxError("expected a signed integer", offset);
    }
    return value;
  };
  int lo = parse_int(text.substr(0, sep), 0);
  int hi = parse_int(text.substr(sep + 2), sep + 2);
  if (lo > hi) throw SyntaxError("window requires LO <= HI", 0);
  return {lo, hi};
}

BasisState::BasisState(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 1; k < indices_.size(); ++k) {
    if (indices_[k - 1] >= indices_[k]) throw std::invalid_argument("basis state indices must be strictly increasing");
  }
}

BasisState BasisState::from_mask(std::uint32_t mask, const IndexWindow& window) {
  BasisState s;
  for (int j = 0; j < window.width(); ++j) {
    if (mask >> j & 1u) s.indices_.push_back(window.lo() + j);
  }
  return s;
}

std::uint32_t BasisState::mask(const IndexWindow& window) const {
  std::uint32_t m = 0;
  for (int i : indices_) {
    if (!window.contains(i)) throw IndexOutsideWindow("state index " + std::to_string(i) + " outside " + window.str());
    m |= 1u << (i - window.lo());
  }
  return m;
}

std::string BasisState::str() const {
  if (indices_.empty()) return "Omega";
  std::string out = "(";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(indices_[k]);
  }
  return out + ")";
}

std::string Letter::str() const {
  return (is_creator() ? "a*(" : "a(") + std::to_string(index) + ")";
}

std::string to_string(const Word& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& l : word) {
    if (!out.empty()) out += ' ';
    out += l.str();
  }
  return out;
}

FockVec FockVec::vacuum() { return basis(BasisState::vacuum()); }

FockVec FockVec::basis(BasisState state) {
  FockVec v;
  v.entries_.emplace(std::move(state), Rational(1));
  return v;
}

void FockVec::add(const BasisState& state, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(state, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Rational FockVec::coefficient(const BasisState& state) const {
  auto it = entries_.find(state);
  return it == entries_.end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------------- ExactMatrix

ExactMatrix::ExactMatrix(IndexWindow window) : window_(window) {}

ExactMatrix ExactMatrix::identity(IndexWindow window) {
  ExactMatrix m(window);
  for (std::uint32_t x = 0; x < window.dimension(); ++x) m.entries_.emplace(Key{x, x}, Rational(1));
  return m;
}

Rational ExactMatrix::at(std::uint32_t row, std::uint32_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational(0) : it->second;
}

void ExactMatrix::add(std::uint32_t row, std::uint32_t col, const Rational& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(Key{row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

bool ExactMatrix::is_diagonal() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.first.first == e.first.second; });
}

Rational ExactMatrix::trace() const {
  Rational t;
  for (const auto& [key, v] : entries_) {
    if (key.first == key.second) t += v;
  }
  return t;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(window_);
  for (const auto& [key, v] : entries_) t.entries_.emplace(Key{key.second, key.first}, v);
  return t;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix n(window_);
  for (const auto& [key, v] : entries_) n.entries_.emplace(key, -v);
  return n;
}

void ExactMatrix::check_same_window(const ExactMatrix& o) const {
  if (!(window_ == o.window_)) throw std::invalid_argument("matrices live on different windows");
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  check_same_window(o);
  for (const auto& [key, v] : o.entries_) add(key.first, key.second, v);
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  check_same_window(o);
  for (const auto& [key, v] : o.entries_) add(key.first, key.second, -v);
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [key, v] : entries_) v *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  a.check_same_window(b);
  // Row-indexed view of b.
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, Rational>>> rows;
  for (const auto& [key, v] : b.entries_) rows[key.first].emplace_back(key.second, v);
  ExactMatrix out(a.window_);
  for (const auto& [key, v] : a.entries_) {
    auto it = rows.find(key.second);
    if (it == rows.end()) continue;
    for (const auto& [col, w] : it->second) out.add(key.first, col, v * w);
  }
  return out;
}

// ----------------------------------------------------------------- PartialMap

PartialMap PartialMap::identity(IndexWindow window) {
  std::vector<std::uint32_t> image(window.dimension());
  for (std::uint32_t x = 0; x < image.size(); ++x) image[x] = x;
  return {window, std::move(image)};
}

PartialMap PartialMap::of_word(const Word& word, IndexWindow window) {
  for (const auto& l : word) {
    if (!window.contains(l.index)) {
      throw IndexOutsideWindow("letter " + l.str() + " outside window " + window.str());
    }
  }
  PartialMap m = identity(window);
  for (auto it = word.rbegin(); it != word.rend(); ++it) m.left_multiply(*it);
  return m;
}

void PartialMap::left_multiply(const Letter& letter) {
  if (!window_.contains(letter.index)) {
    throw IndexOutsideWindow("letter " + letter.str() + " outside window " + window_.str());
  }
  const auto bit = static_cast<unsigned>(letter.index - window_.lo());
  if (letter.is_creator()) {
    kernels::apply_creator(image_, bit);
  } else {
    kernels::apply_annihilator(image_, bit);
  }
}

PartialMap PartialMap::compose(const PartialMap& inner) const {
  if (!(window_ == inner.window_)) throw std::invalid_argument("partial maps live on different windows");
  std::vector<std::uint32_t> out(image_.size());
  kernels::gather(out, image_, inner.image_);
  return {window_, std::move(out)};
}

std::size_t PartialMap::trace() const { return kernels::count_fixed(image_); }

bool PartialMap::is_zero() const {
  return std::all_of(image_.begin(), image_.end(), [](std::uint32_t y) { return y == kernels::kNone; });
}

ExactMatrix PartialMap::to_matrix() const {
  ExactMatrix m(window_);
  for (std::uint32_t x = 0; x < image_.size(); ++x) {
    if (image_[x] != kernels::kNone) m.add(image_[x], x, Rational(1));
  }
  return m;
}

std::size_t PartialMapHash::operator()(const PartialMap& m) const noexcept {
  // FNV-1a over the image.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t y : m.image()) {
    h ^= y;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// ------------------------------------------------------------------ operations

std::vector<BasisState> enumerate_basis(const IndexWindow& window) {
  const std::size_t n = window.dimension();
  std::vector<BasisState> out;
  out.reserve(n);
  for (std::uint32_t m = 0; m < n; ++m) out.push_back(BasisState::from_mask(m, window));
  return out;
}

FockVec apply_letter(const Letter& letter, const FockVec& v) {
  FockVec out;
  for (const auto& [state, coeff] : v.entries()) {
    const auto& idx = state.indices();
    const int i = letter.index;
    if (letter.is_creator()) {
      if (idx.empty() || i < idx.front()) {
        std::vector<int> next;
        next.reserve(idx.size() + 1);
        next.push_back(i);
        next.insert(next.end(), idx.begin(), idx.end());
        out.add(BasisState(std::move(next)), coeff);
      }
    } else if (!idx.empty() && idx.front() == i) {
      out.add(BasisState(std::vector<int>(idx.begin() + 1, idx.end())), coeff);
    }
  }
  return out;
}

FockVec apply_word(const Word& word, const FockVec& v) {
  FockVec out = v;
  for (auto it = word.rbegin(); it != word.rend() && !out.is_zero(); ++it) out = apply_letter(*it, out);
  return out;
}

ExactMatrix operator_matrix(const Word& word, const IndexWindow& window) {
  return PartialMap::of_word(word, window).to_matrix();
}

Rational vacuum_expectation(const Word& word) {
  return apply_word(word, FockVec::vacuum()).coefficient(BasisState::vacuum());
}

}  // namespace monotone
