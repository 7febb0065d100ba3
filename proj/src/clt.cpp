#include "monotone/clt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "monotone/errors.hpp"
#include "monotone/fock.hpp"

namespace monotone {
namespace {

// Applies sum_{i in indices} (a_i + a_i*) to v, keeping only states that can
// still return to the vacuum within `remaining` further applications.
FockVec apply_position_sum(const FockVec& v, int first, int count, std::size_t remaining) {
  FockVec out;
  for (int i = first; i < first + count; ++i) {
    for (const Letter letter : {Letter::annihilator(i), Letter::creator(i)}) {
      const FockVec w = apply_letter(letter, v);
      for (const auto& [state, coeff] : w.entries()) {
        if (state.size() <= remaining) out.add(state, coeff);
      }
    }
  }
  return out;
}

}  // namespace

Rational position_moment(int i, int order) {
  if (order < 1) throw std::invalid_argument("moment order must be positive");
  FockVec v = FockVec::vacuum();
  for (int step = 0; step < order; ++step) {
    v = apply_position_sum(v, i, 1, static_cast<std::size_t>(order - step - 1));
  }
  return v.coefficient(BasisState::vacuum());
}

Rational sum_moment(int n, int order, int first_index) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("sum moments are defined for even order");
  if (n > kMaxSumN || order > kMaxSumOrder) {
    throw BudgetExceeded("sum_moment is limited to N <= " + std::to_string(kMaxSumN) + " and order <= " +
                         std::to_string(kMaxSumOrder));
  }
  FockVec v = FockVec::vacuum();
  for (int step = 0; step < order; ++step) {
    v = apply_position_sum(v, first_index, n, static_cast<std::size_t>(order - step - 1));
  }
  std::int64_t scale = 1;
  for (int k = 0; k < order / 2; ++k) scale = checked_mul(scale, n);
  return v.coefficient(BasisState::vacuum()) / Rational(scale);
}

Rational arcsine_moment(int order) {
  if (order < 0 || order % 2 != 0) throw std::invalid_argument("arcsine moments are listed for even order");
  const int k = order / 2;
  // C(2k, k) / 2^k, built incrementally: m_{j+1} = m_j * (2j+1)(2j+2) / ((j+1)^2 * 2)
  Rational m(1);
  for (int j = 0; j < k; ++j) {
    m *= Rational(static_cast<std::int64_t>(2 * j + 1) * (2 * j + 2), static_cast<std::int64_t>(j + 1) * (j + 1) * 2);
  }
  return m;
}

MomentTable convergence_table(const std::vector<int>& ns, const std::vector<int>& orders) {
  std::vector<int> n_sorted(ns);
  std::vector<int> o_sorted(orders);
  std::sort(n_sorted.begin(), n_sorted.end());
  n_sorted.erase(std::unique(n_sorted.begin(), n_sorted.end()), n_sorted.end());
  std::sort(o_sorted.begin(), o_sorted.end());
  o_sorted.erase(std::unique(o_sorted.begin(), o_sorted.end()), o_sorted.end());

  MomentTable table;
  for (int n : n_sorted) {
    for (int order : o_sorted) {
      const Rational exact = sum_moment(n, order);
      const Rational arcsine = arcsine_moment(order);
      table.rows.push_back({n, order, exact, exact.to_double(), arcsine, std::abs(exact.to_double() - arcsine.to_double())});
    }
  }
  return table;
}

nlohmann::json MomentTable::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"N", r.n},
                   {"order", r.order},
                   {"exact", r.exact.str()},
                   {"float", r.value},
                   {"arcsine", r.arcsine.str()},
                   {"abs_err", r.abs_err}});
  }
  return {{"rows", std::move(out)}};
}

std::string MomentTable::to_text() const {
  std::vector<std::vector<std::string>> cells{{"N", "order", "exact", "float", "arcsine", "abs_err"}};
  char buf[64];
  for (const auto& r : rows) {
    std::vector<std::string> line{std::to_string(r.n), std::to_string(r.order), r.exact.str()};
    std::snprintf(buf, sizeof buf, "%.12f", r.value);
    line.emplace_back(buf);
    line.push_back(r.arcsine.str());
    std::snprintf(buf, sizeof buf, "%.3e", r.abs_err);
    line.emplace_back(buf);
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - line[c].size(), ' ') << line[c];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace monotone
