#pragma once

// Vacuum moments of position operators x_i = a_i + a_i* and of their
// normalized sums, compared with the unit-variance arcsine law.

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "monotone/rational.hpp"

namespace monotone {

inline constexpr int kMaxSumN = 32;
inline constexpr int kMaxSumOrder = 6;

/// omega(x_i^order), by applying x_i to the vacuum `order` times.
Rational position_moment(int i, int order);

/// omega(S_N^order) with S_N = (x_first + ... + x_{first+N-1}) / sqrt(N).
/// order must be even (std::invalid_argument); BudgetExceeded when
/// N > kMaxSumN or order > kMaxSumOrder.
Rational sum_moment(int n, int order, int first_index = 1);

/// C(2k, k) / 2^k for order 2k; std::invalid_argument for odd or negative order.
Rational arcsine_moment(int order);

struct MomentRow {
  int n;
  int order;
  Rational exact;
  double value;
  Rational arcsine;
  double abs_err;
};

struct MomentTable {
  std::vector<MomentRow> rows;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// One row per (N, order), sorted by N then order.
MomentTable convergence_table(const std::vector<int>& ns, const std::vector<int>& orders);

}  // namespace monotone
