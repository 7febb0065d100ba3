#pragma once

// Fraction-free sparse linear algebra over the integers. Rows are kept
// primitive (content 1, positive leading entry); rational values only
// appear when a solution is read back.

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "monotone/rational.hpp"

namespace monotone::linalg {

struct Entry {
  std::uint64_t key;
  std::int64_t value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sorted by key, no zero values.
class SparseVec {
 public:
  SparseVec() = default;
  /// Accepts entries in any order; duplicate keys are summed.
  explicit SparseVec(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const Entry& lead() const { return entries_.front(); }

  /// Divide by the content and make the leading value positive.
  void make_primitive();

  /// a*x - b*y
  static SparseVec combine(std::int64_t a, const SparseVec& x, std::int64_t b, const SparseVec& y);

  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Row echelon form keyed by leading key.
class EchelonBasis {
 public:
  /// Adds v if it is independent of the stored rows; returns whether it was.
  bool insert(SparseVec v);
  bool contains(SparseVec v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  /// Eliminates leading entries until the lead has no pivot (or v is zero).
  SparseVec reduce(SparseVec v) const;
  const std::unordered_map<std::uint64_t, SparseVec>& rows() const noexcept { return rows_; }

 private:
  std::unordered_map<std::uint64_t, SparseVec> rows_;
};

std::size_t rank(const std::vector<SparseVec>& vectors);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct Solution {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<Rational> values;
};

/// Solves the system whose equations are the augmented rows: keys
/// [0, unknowns) are coefficients, key `unknowns` is the right-hand side.
Solution solve(std::size_t unknowns, const std::vector<SparseVec>& augmented_rows);

}  // namespace monotone::linalg
