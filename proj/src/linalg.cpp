#include "monotone/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "monotone/errors.hpp"

namespace monotone::linalg {

SparseVec::SparseVec(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.key < y.key; });
  for (const auto& e : entries) {
    if (!entries_.empty() && entries_.back().key == e.key) {
      entries_.back().value = checked_add(entries_.back().value, e.value);
    } else {
      entries_.push_back(e);
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.value == 0; });
}

void SparseVec::make_primitive() {
  if (entries_.empty()) return;
  std::int64_t g = 0;
  for (const auto& e : entries_) {
    g = std::gcd(g, e.value);
    if (g == 1) break;
  }
  if (entries_.front().value < 0) g = -g;
  if (g == 1) return;
  for (auto& e : entries_) e.value /= g;
}

SparseVec SparseVec::combine(std::int64_t a, const SparseVec& x, std::int64_t b, const SparseVec& y) {
  SparseVec out;
  out.entries_.reserve(x.size() + y.size());
  auto ix = x.entries_.begin();
  auto iy = y.entries_.begin();
  while (ix != x.entries_.end() || iy != y.entries_.end()) {
    if (iy == y.entries_.end() || (ix != x.entries_.end() && ix->key < iy->key)) {
      out.entries_.push_back({ix->key, checked_mul(a, ix->value)});
      ++ix;
    } else if (ix == x.entries_.end() || iy->key < ix->key) {
      out.entries_.push_back({iy->key, checked_mul(-b, iy->value)});
      ++iy;
    } else {
      std::int64_t v = checked_sub(checked_mul(a, ix->value), checked_mul(b, iy->value));
      if (v != 0) out.entries_.push_back({ix->key, v});
      ++ix;
      ++iy;
    }
  }
  return out;
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
  v.make_primitive();
  while (!v.empty()) {
    auto it = rows_.find(v.lead().key);
    if (it == rows_.end()) break;
    const SparseVec& row = it->second;
    const std::int64_t p = row.lead().value;
    const std::int64_t q = v.lead().value;
    const std::int64_t g = std::gcd(p, q);
    v = SparseVec::combine(p / g, v, q / g, row);
    v.make_primitive();
  }
  return v;
}

bool EchelonBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const auto key = v.lead().key;
  rows_.emplace(key, std::move(v));
  return true;
}

bool EchelonBasis::contains(SparseVec v) const { return reduce(std::move(v)).empty(); }

std::size_t rank(const std::vector<SparseVec>& vectors) {
  EchelonBasis basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

Solution solve(std::size_t unknowns, const std::vector<SparseVec>& augmented_rows) {
  EchelonBasis basis;
  Solution sol;
  for (const auto& row : augmented_rows) {
    SparseVec r = basis.reduce(row);
    if (r.empty()) continue;
    if (r.lead().key >= unknowns) {
      sol.status = SolveStatus::inconsistent;
      return sol;
    }
    basis.insert(std::move(r));
  }
  if (basis.rank() < unknowns) {
    sol.status = SolveStatus::underdetermined;
    return sol;
  }
  sol.values.assign(unknowns, Rational(0));
  for (std::size_t p = unknowns; p-- > 0;) {
    const SparseVec& row = basis.rows().at(p);
    Rational acc;
    for (const auto& e : row.entries()) {
      if (e.key == p) continue;
      if (e.key == unknowns) {
        acc += Rational(e.value);
      } else {
        acc -= Rational(e.value) * sol.values[e.key];
      }
    }
    sol.values[p] = acc / Rational(row.lead().value);
  }
  sol.status = SolveStatus::unique;
  return sol;
}

}  // namespace monotone::linalg
