#include "monotone/matrix_rep.hpp"

#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "monotone/errors.hpp"
#include "monotone/kernels.hpp"

namespace monotone {
namespace {

using linalg::Entry;
using linalg::SparseVec;

constexpr std::uint32_t kNone = kernels::kNone;

Letter c(int i) { return Letter::creator(i); }
Letter a(int i) { return Letter::annihilator(i); }

ExactMatrix word_matrix(const Word& w, const IndexWindow& carrier) { return operator_matrix(w, carrier); }

std::vector<std::uint32_t> inverse_of(const PartialMap& m) {
  std::vector<std::uint32_t> inv(m.dimension(), kNone);
  const auto image = m.image();
  for (std::uint32_t x = 0; x < image.size(); ++x) {
    if (image[x] == kNone) continue;
    if (inv[image[x]] != kNone) throw std::logic_error("word operator is not injective");
    inv[image[x]] = x;
  }
  return inv;
}

nlohmann::json pair_params(const char* relation, int i, int j) {
  return {{"relation", relation}, {"i", i}, {"j", j}};
}

}  // namespace

// -------------------------------------------------------------- AlgebraHandle

AlgebraHandle::AlgebraHandle(IndexWindow window, IndexWindow carrier, bool unital_closure)
    : window_(window), carrier_(carrier), unital_closure_(unital_closure) {
  if (!carrier.contains(window)) {
    throw IndexOutsideWindow("window " + window.str() + " is not inside carrier " + carrier.str());
  }
}

std::vector<Letter> AlgebraHandle::generator_letters() const {
  std::vector<Letter> out;
  for (int i = window_.lo(); i <= window_.hi(); ++i) {
    out.push_back(a(i));
    out.push_back(c(i));
  }
  return out;
}

std::vector<PartialMap> AlgebraHandle::generators() const {
  std::vector<PartialMap> out;
  for (const auto& l : generator_letters()) out.push_back(PartialMap::of_word({l}, carrier_));
  return out;
}

// -------------------------------------------------------------------- helpers

SparseVec to_sparse(const ExactMatrix& m) {
  const std::uint64_t n = m.dimension();
  std::int64_t scale = 1;
  for (const auto& [key, v] : m.entries()) scale = std::lcm(scale, v.den());
  std::vector<Entry> entries;
  entries.reserve(m.entries().size());
  for (const auto& [key, v] : m.entries()) {
    entries.push_back({key.first * n + key.second, checked_mul(v.num(), scale / v.den())});
  }
  return SparseVec(std::move(entries));
}

SparseVec to_sparse(const PartialMap& m) {
  const std::uint64_t n = m.dimension();
  std::vector<Entry> entries;
  const auto image = m.image();
  for (std::uint32_t x = 0; x < image.size(); ++x) {
    if (image[x] != kNone) entries.push_back({image[x] * n + x, 1});
  }
  return SparseVec(std::move(entries));
}

std::size_t matrix_rank(const ExactMatrix& m) {
  std::int64_t scale = 1;
  for (const auto& [key, v] : m.entries()) scale = std::lcm(scale, v.den());
  std::map<std::uint32_t, std::vector<Entry>> rows;
  for (const auto& [key, v] : m.entries()) rows[key.first].push_back({key.second, checked_mul(v.num(), scale / v.den())});
  linalg::EchelonBasis basis;
  for (auto& [r, entries] : rows) basis.insert(SparseVec(std::move(entries)));
  return basis.rank();
}

std::size_t span_rank(const std::vector<ExactMatrix>& matrices) {
  linalg::EchelonBasis basis;
  for (const auto& m : matrices) basis.insert(to_sparse(m));
  return basis.rank();
}

bool is_orthogonal_projection(const ExactMatrix& m) { return m * m == m && m.transpose() == m; }

ExactMatrix evaluate(const LinComb& x, const IndexWindow& carrier) {
  ExactMatrix out(carrier);
  for (const auto& [w, coeff] : x.terms()) out += word_matrix(w.letters(), carrier) * coeff;
  return out;
}

bool SpanBasis::contains(const ExactMatrix& m) const { return echelon_.contains(to_sparse(m)); }

// ----------------------------------------------------------- relation checks

Report verify_monotone_rules(const IndexWindow& window, const IndexWindow& carrier) {
  if (!carrier.contains(window)) {
    throw IndexOutsideWindow("window " + window.str() + " is not inside carrier " + carrier.str());
  }
  Report report("monotone_rules");
  const ExactMatrix zero(carrier);
  auto m = [&](const Word& w) { return word_matrix(w, carrier); };
  auto ac = [&](int i) { return m({a(i), c(i)}); };

  for (int i = window.lo(); i <= window.hi(); ++i) {
    for (int j = window.lo(); j <= i; ++j) {
      report.add(pair_params("ordering: a*(i) a*(j) = 0, i >= j", i, j), m({c(i), c(j)}) == zero);
      report.add(pair_params("ordering: a(j) a(i) = 0, i >= j", i, j), m({a(j), a(i)}) == zero);
    }
  }
  for (int i = window.lo(); i <= window.hi(); ++i) {
    for (int j = window.lo(); j <= window.hi(); ++j) {
      if (i != j) report.add(pair_params("cross: a(i) a*(j) = 0, i != j", i, j), m({a(i), c(j)}) == zero);
    }
  }
  for (int i = window.lo(); i <= window.hi(); ++i) {
    for (int j = window.lo(); j <= window.hi(); ++j) {
      const ExactMatrix rhs = i > j ? m({a(i)}) : zero;
      report.add(pair_params("absorb: a(i) a(j) a*(j) = alpha(i,j) a(i)", i, j), m({a(i), a(j), c(j)}) == rhs);
    }
  }
  for (int i = window.lo() + 1; i <= window.hi(); ++i) {
    report.add({{"relation", "number: a*(i) a(i) = a(i-1) a*(i-1) - a(i) a*(i)"}, {"i", i}},
               m({c(i), a(i)}) == ac(i - 1) - ac(i));
  }
  for (int i = window.lo(); i <= window.hi(); ++i) {
    for (int j = window.lo(); j <= window.hi(); ++j) {
      ExactMatrix rhs = m({a(j)});
      if (i > j) {
        for (int k = j + 1; k <= i; ++k) rhs -= m({c(k), a(k), a(j)});
      }
      report.add(pair_params("expand: a(i) a*(i) a(j) = a(j) - alpha(i,j) sum a*(k) a(k) a(j)", i, j),
                 m({a(i), c(i), a(j)}) == rhs);
    }
  }
  if (window == carrier) {
    const ExactMatrix id = ExactMatrix::identity(carrier);
    for (int i = window.lo(); i <= window.hi(); ++i) {
      ExactMatrix lhs = ac(i);
      for (int k = carrier.lo(); k <= i; ++k) lhs += m({c(k), a(k)});
      report.add({{"relation", "resolution: a(i) a*(i) + sum_{lo<=k<=i} a*(k) a(k) = I"}, {"i", i}}, lhs == id);
    }
  }
  return report;
}

// --------------------------------------------------------------- span closure

SpanBasis span_closure(const AlgebraHandle& h) {
  SpanBasis span(h);
  const auto letters = h.generator_letters();
  std::unordered_set<PartialMap, PartialMapHash> seen;
  std::deque<std::size_t> queue;
  auto consider = [&](PartialMap m) {
    if (m.is_zero() || !seen.insert(m).second) return;
    if (span.echelon_.insert(to_sparse(m))) {
      queue.push_back(span.elements_.size());
      span.elements_.push_back(std::move(m));
    }
  };
  for (auto& g : h.generators()) consider(std::move(g));
  if (h.unital_closure()) consider(PartialMap::identity(h.carrier()));
  while (!queue.empty()) {
    const PartialMap x = span.elements_[queue.front()];
    queue.pop_front();
    for (const auto& l : letters) {
      PartialMap y = x;
      y.left_multiply(l);
      consider(std::move(y));
    }
  }
  return span;
}

// ------------------------------------------------------------------ commutant

std::size_t commutant_dim(const AlgebraHandle& h) {
  const auto gens = h.generators();
  const std::uint64_t n = h.carrier().dimension();
  const std::uint64_t n2 = n * n;
  std::vector<std::vector<std::uint32_t>> inverses;
  for (const auto& g : gens) inverses.push_back(inverse_of(g));

  // Unknown X = E_pq contributes [E_pq, g] = E_{p, g^-1(q)} - E_{g(p), q}.
  linalg::EchelonBasis basis;
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t q = 0; q < n; ++q) {
      std::vector<Entry> entries;
      for (std::size_t t = 0; t < gens.size(); ++t) {
        const std::uint64_t base = t * n2;
        if (inverses[t][q] != kNone) entries.push_back({base + p * n + inverses[t][q], 1});
        const std::uint32_t gp = gens[t].image()[p];
        if (gp != kNone) entries.push_back({base + gp * n + q, -1});
      }
      basis.insert(SparseVec(std::move(entries)));
    }
  }
  return n2 - basis.rank();
}

// ----------------------------------------------------------------------- unit

ExactMatrix algebra_unit(const SpanBasis& span) {
  const AlgebraHandle& h = span.handle();
  if (h.unital_closure()) throw std::invalid_argument("algebra_unit requires a non-unital handle");
  const auto gens = h.generators();
  const std::uint64_t n = h.carrier().dimension();
  const std::uint64_t n2 = n * n;
  const std::uint64_t unknowns = span.size();

  // Equation key: ((generator * 2 + side) * n^2 + row * n + col).
  std::unordered_map<std::uint64_t, std::vector<Entry>> equations;
  auto emit = [&](std::uint64_t block, const PartialMap& m, std::uint64_t var) {
    const auto image = m.image();
    for (std::uint32_t x = 0; x < image.size(); ++x) {
      if (image[x] != kNone) equations[block * n2 + image[x] * n + x].push_back({var, 1});
    }
  };
  for (std::size_t t = 0; t < gens.size(); ++t) {
    for (std::uint64_t k = 0; k < unknowns; ++k) {
      const PartialMap& b = span.elements()[k];
      emit(2 * t, b.compose(gens[t]), k);
      emit(2 * t + 1, gens[t].compose(b), k);
    }
    emit(2 * t, gens[t], unknowns);
    emit(2 * t + 1, gens[t], unknowns);
  }
  std::vector<std::uint64_t> keys;
  keys.reserve(equations.size());
  for (const auto& [key, _] : equations) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  std::vector<SparseVec> rows;
  rows.reserve(keys.size());
  for (auto key : keys) rows.emplace_back(std::move(equations[key]));

  const auto sol = linalg::solve(unknowns, rows);
  if (sol.status != linalg::SolveStatus::unique) {
    throw NoUnit("no unique unit in the span of window " + h.window().str() + " on carrier " + h.carrier().str());
  }
  ExactMatrix u(h.carrier());
  for (std::uint64_t k = 0; k < unknowns; ++k) {
    if (sol.values[k].is_zero()) continue;
    const auto image = span.elements()[k].image();
    for (std::uint32_t x = 0; x < image.size(); ++x) {
      if (image[x] != kNone) u.add(image[x], x, sol.values[k]);
    }
  }
  return u;
}

ExactMatrix algebra_unit(const AlgebraHandle& h) { return algebra_unit(span_closure(h)); }

ExactMatrix diagonal_expectation(const ExactMatrix& m) {
  ExactMatrix out(m.window());
  for (const auto& [key, v] : m.entries()) {
    if (key.first == key.second) out.add(key.first, key.second, v);
  }
  return out;
}

// ----------------------------------------------------------------------- MASA

Report masa_check(const IndexWindow& window) {
  Report report("masa");
  const AlgebraHandle h(window, window, false);
  const SpanBasis span = span_closure(h);
  const std::uint64_t n = window.dimension();
  const std::uint64_t n2 = n * n;

  // X = sum c_k B_k commutes with every E_ss: [B_k, E_ss] = B_k E_ss - E_ss B_k.
  linalg::EchelonBasis commutators;
  for (const auto& b : span.elements()) {
    std::vector<Entry> entries;
    const auto image = b.image();
    for (std::uint32_t x = 0; x < n; ++x) {
      if (image[x] == kNone) continue;
      // column x of B_k survives E_xx on the right; row image[x] survives E_{yy} on the left.
      entries.push_back({static_cast<std::uint64_t>(x) * n2 + image[x] * n + x, 1});
      entries.push_back({static_cast<std::uint64_t>(image[x]) * n2 + image[x] * n + x, -1});
    }
    commutators.insert(SparseVec(std::move(entries)));
  }
  const std::size_t relative_commutant = span.size() - commutators.rank();
  report.add({{"property", "dim(D' in algebra) = 2^w"},
              {"window", window.str()},
              {"algebra_dimension", span.size()},
              {"relative_commutant_dimension", relative_commutant},
              {"expected", n}},
             relative_commutant == n);

  std::size_t diagonal_in_algebra = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    ExactMatrix e(window);
    e.add(s, s, Rational(1));
    diagonal_in_algebra += span.contains(e) ? 1 : 0;
  }
  report.add({{"property", "D is contained in the algebra"}, {"diagonal_units_in_algebra", diagonal_in_algebra},
              {"expected", n}},
             diagonal_in_algebra == n);

  std::size_t mapped = 0;
  for (std::size_t k = 0; k < span.size(); ++k) {
    const ExactMatrix e = diagonal_expectation(span.matrix(k));
    mapped += (e.is_diagonal() && span.contains(e)) ? 1 : 0;
  }
  report.add({{"property", "E maps the algebra into D"}, {"basis_elements_mapped", mapped}, {"expected", span.size()}},
             mapped == span.size());
  return report;
}

std::size_t independence_rank(const std::vector<Word>& words, const IndexWindow& carrier) {
  linalg::EchelonBasis basis;
  for (const auto& w : words) basis.insert(to_sparse(PartialMap::of_word(w, carrier)));
  return basis.rank();
}

std::size_t independence_rank(const std::vector<CanonicalWord>& words, const IndexWindow& carrier) {
  std::vector<Word> letters;
  letters.reserve(words.size());
  for (const auto& w : words) letters.push_back(w.letters());
  return independence_rank(letters, carrier);
}

// ---------------------------------------------------------------- projections

Report projection_monotonicity(const IndexWindow& window) {
  Report report("projection_monotonicity");
  std::vector<ExactMatrix> proj;
  for (int i = window.lo(); i <= window.hi(); ++i) {
    proj.push_back(word_matrix({a(i), c(i)}, window));
    const ExactMatrix& p = proj.back();
    report.add({{"property", "a(i) a*(i) is an orthogonal projection"}, {"i", i}, {"rank", matrix_rank(p)}},
               is_orthogonal_projection(p));
  }
  for (int i = window.lo(); i <= window.hi(); ++i) {
    for (int j = i + 1; j <= window.hi(); ++j) {
      const ExactMatrix& pi = proj[static_cast<std::size_t>(i - window.lo())];
      const ExactMatrix& pj = proj[static_cast<std::size_t>(j - window.lo())];
      report.add({{"property", "P_i P_j = P_j P_i = P_j for i < j"}, {"i", i}, {"j", j}}, pi * pj == pj && pj * pi == pj);
    }
  }
  ExactMatrix vacuum(window);
  vacuum.add(0, 0, Rational(1));
  report.add({{"property", "a(hi) a*(hi) is the vacuum projection"}, {"i", window.hi()}}, proj.back() == vacuum);
  return report;
}

}  // namespace monotone
