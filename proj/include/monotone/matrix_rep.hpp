#pragma once

// Exact verification layer on truncations: relation checks, span closures,
// commutants, algebra units, the diagonal expectation and MASA checks.

#include <cstddef>
#include <vector>

#include "monotone/fock.hpp"
#include "monotone/linalg.hpp"
#include "monotone/report.hpp"
#include "monotone/words.hpp"

namespace monotone {

/// The algebra generated by {a_i, a_i* : i in window} acting on V_carrier,
/// optionally with the identity of V_carrier adjoined.
class AlgebraHandle {
 public:
  /// Throws IndexOutsideWindow unless window is inside carrier.
  AlgebraHandle(IndexWindow window, IndexWindow carrier, bool unital_closure = false);

  const IndexWindow& window() const noexcept { return window_; }
  const IndexWindow& carrier() const noexcept { return carrier_; }
  bool unital_closure() const noexcept { return unital_closure_; }

  /// a_i then a_i* for each i in the window, ascending.
  std::vector<Letter> generator_letters() const;
  std::vector<PartialMap> generators() const;

 private:
  IndexWindow window_;
  IndexWindow carrier_;
  bool unital_closure_;
};

/// Linearly independent word operators spanning the generated algebra.
class SpanBasis {
 public:
  const AlgebraHandle& handle() const noexcept { return handle_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<PartialMap>& elements() const noexcept { return elements_; }
  ExactMatrix matrix(std::size_t k) const { return elements_.at(k).to_matrix(); }
  /// Span membership.
  bool contains(const ExactMatrix& m) const;

 private:
  friend SpanBasis span_closure(const AlgebraHandle& h);
  explicit SpanBasis(AlgebraHandle h) : handle_(std::move(h)) {}

  AlgebraHandle handle_;
  std::vector<PartialMap> elements_;
  linalg::EchelonBasis echelon_;
};

/// Entries keyed row * dim + col, denominators cleared.
linalg::SparseVec to_sparse(const ExactMatrix& m);
linalg::SparseVec to_sparse(const PartialMap& m);

std::size_t matrix_rank(const ExactMatrix& m);
/// Rank of the matrices viewed as vectors of length dim^2.
std::size_t span_rank(const std::vector<ExactMatrix>& matrices);
bool is_orthogonal_projection(const ExactMatrix& m);

/// sum of coeff * operator_matrix(term) over the terms of x.
ExactMatrix evaluate(const LinComb& x, const IndexWindow& carrier);

/// Ordering, cross, absorb, number and expand rules on V_carrier, plus the
/// truncated resolution of the identity when window == carrier.
Report verify_monotone_rules(const IndexWindow& window, const IndexWindow& carrier);

/// Seed with the generators, left-multiply by generators until the span
/// stops growing.
SpanBasis span_closure(const AlgebraHandle& h);

/// dim { X in End(V_carrier) : Xg = gX for every generator g }.
std::size_t commutant_dim(const AlgebraHandle& h);

/// The element U of the span with Ug = gU = g for every generator (hence a
/// unit for the whole algebra). Requires a non-unital handle. Throws NoUnit.
ExactMatrix algebra_unit(const AlgebraHandle& h);
ExactMatrix algebra_unit(const SpanBasis& span);

/// E[T]_{ij} = T_{ij} delta_{ij}
ExactMatrix diagonal_expectation(const ExactMatrix& m);

/// On V_window: the relative commutant of the diagonal algebra inside the
/// generated algebra has dimension 2^w, the diagonal lies in the algebra, and
/// the diagonal expectation maps the algebra into the diagonal.
Report masa_check(const IndexWindow& window);

/// Rank of the words' matrices on V_carrier. Throws IndexOutsideWindow.
std::size_t independence_rank(const std::vector<CanonicalWord>& words, const IndexWindow& carrier);
/// Same for arbitrary words, e.g. to probe a*(i) a(i) against the basis.
std::size_t independence_rank(const std::vector<Word>& words, const IndexWindow& carrier);

/// Each a_i a_i* is an orthogonal projection, they decrease in i, and the
/// last one is the vacuum projection.
Report projection_monotonicity(const IndexWindow& window);

}  // namespace monotone
