#pragma once

// AF layer: single-vertex Bratteli chains, the trace compatibility solver,
// and K_0 as an inductive limit of (Z, Z+, [0, dim]) along the chain.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "monotone/rational.hpp"
#include "monotone/report.hpp"

namespace monotone {

/// Canonical dyadic rational num / 2^exp: num odd, or num = exp = 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t num, unsigned exp);
  /// Throws std::invalid_argument if the denominator is not a power of two.
  static Dyadic from_rational(const Rational& r);
  static Dyadic parse(const std::string& text);

  std::int64_t num() const noexcept { return num_; }
  unsigned exp() const noexcept { return exp_; }
  Rational value() const;
  std::string str() const { return value().str(); }

  Dyadic operator-() const { return {-num_, exp_}; }
  friend Dyadic operator+(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y) { return x.value() <=> y.value(); }

 private:
  std::int64_t num_ = 0;
  unsigned exp_ = 0;
};

enum class ChainMode { explicit_levels, computed, formula };

/// dim_n = dim0 * dim_ratio^n, constant multiplicity; used to extend a
/// chain past its stored levels.
struct GrowthLaw {
  std::uint64_t dim0;
  std::uint64_t dim_ratio;
  std::uint64_t mult;
};

struct ChainLevel {
  std::size_t level;
  std::uint64_t dim;
  std::optional<std::uint64_t> mult_to_next;
};

class BratteliChain {
 public:
  /// dims.size() == mults.size() + 1. Throws std::invalid_argument when an
  /// embedding does not fit (dim[n+1] < mult[n] * dim[n]).
  BratteliChain(std::vector<std::uint64_t> dims, std::vector<std::uint64_t> mults,
                ChainMode mode = ChainMode::explicit_levels, std::optional<GrowthLaw> law = std::nullopt);

  std::size_t size() const noexcept { return dims_.size(); }
  const std::vector<std::uint64_t>& dims() const noexcept { return dims_; }
  const std::vector<std::uint64_t>& mults() const noexcept { return mults_; }
  std::vector<ChainLevel> levels() const;
  ChainMode mode() const noexcept { return mode_; }
  const std::optional<GrowthLaw>& law() const noexcept { return law_; }

  /// Stored value, or the growth-law value past the stored levels.
  /// std::nullopt if unavailable or not representable in 64 bits.
  std::optional<std::uint64_t> dim(std::size_t n) const;
  std::optional<std::uint64_t> mult(std::size_t n) const;

  nlohmann::json to_json() const;
  static BratteliChain from_json(const nlohmann::json& j);
  std::string to_dot() const;
  std::string to_text() const;

 private:
  std::vector<std::uint64_t> dims_;
  std::vector<std::uint64_t> mults_;
  ChainMode mode_;
  std::optional<GrowthLaw> law_;
};

/// Computed mode is limited to this many levels.
inline constexpr std::size_t kComputedLevelBound = 4;

/// Formula: dim_n = 2^(2n+1), multiplicity 2. Computed: dims from span
/// closures of [-n, n] and multiplicities from the trace of the embedded
/// unit. Throws BudgetExceeded for computed chains past the bound.
BratteliChain monotone_chain(std::size_t levels, ChainMode mode = ChainMode::formula);

/// Intermediate algebra generated by window [-n, n+1]: its dimension, the
/// multiplicity of level n inside it, and of it inside level n+1 (with the
/// null corner of V_[-n-1,n+1] it leaves). n <= 2, else BudgetExceeded.
Report intermediate_step_check(std::size_t n);

struct TraceVerdict {
  bool exists_bounded = true;
  std::string weight_law;
  std::string reasoning;
  std::vector<Rational> weights;      // lambda_n with lambda_0 = 1
  std::vector<Rational> unit_values;  // tau(e_n) = lambda_n * dim_n

  nlohmann::json to_json() const;
};

/// lambda_n = mult_n * lambda_{n+1}; tau(e_n) = lambda_n dim_n; a bounded
/// trace exists iff tau(e_n) stays bounded along the (extrapolated) chain.
TraceVerdict trace_solver(const BratteliChain& chain);

struct K0Limit {
  /// Image of the generator of G_n = Z under the normalization 1 / prod_{k<n} mult_k.
  std::vector<Dyadic> generator_images;
  /// Class of the level-n unit e_n.
  std::vector<Dyadic> unit_classes;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// Throws UnsupportedMultiplicity unless every multiplicity is a power of 2.
K0Limit k0_limit(const BratteliChain& chain);

/// Class of a rank-`rank` projection at `level`. Throws RankOutOfScale if
/// rank > dim[level], UnsupportedMultiplicity as k0_limit.
Dyadic k0_class(std::uint64_t rank, std::size_t level, const BratteliChain& chain);
Dyadic k0_class(std::uint64_t rank, std::size_t level);

struct ScaleWitness {
  bool member = false;
  std::size_t level = 0;
  std::uint64_t rank = 0;

  nlohmann::json to_json() const;
};

/// Smallest level n with d = k / 2^(e_n), 0 <= k <= dim[n].
ScaleWitness scale_membership(const Dyadic& d, const BratteliChain& chain);

}  // namespace monotone
