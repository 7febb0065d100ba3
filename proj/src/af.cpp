#include "monotone/af.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "monotone/errors.hpp"
#include "monotone/matrix_rep.hpp"

namespace monotone {
namespace {

std::optional<std::uint64_t> mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

const char* mode_name(ChainMode m) {
  switch (m) {
    case ChainMode::computed:
      return "computed";
    case ChainMode::formula:
      return "formula";
    default:
      return "explicit";
  }
}

// Exponent e_n with generator image 2^-e_n; requires power-of-two multiplicities.
std::optional<unsigned> level_exponent(const BratteliChain& chain, std::size_t level) {
  unsigned e = 0;
  for (std::size_t k = 0; k < level; ++k) {
    auto m = chain.mult(k);
    if (!m) return std::nullopt;
    if (!std::has_single_bit(*m)) {
      throw UnsupportedMultiplicity("multiplicity " + std::to_string(*m) + " at level " + std::to_string(k) +
                                    " is not a power of 2");
    }
    e += static_cast<unsigned>(std::countr_zero(*m));
    if (e > 62) return std::nullopt;
  }
  return e;
}

void require_power_of_two_mults(const BratteliChain& chain) {
  for (std::size_t k = 0; k < chain.mults().size(); ++k) {
    if (!std::has_single_bit(chain.mults()[k])) {
      throw UnsupportedMultiplicity("multiplicity " + std::to_string(chain.mults()[k]) + " at level " +
                                    std::to_string(k) + " is not a power of 2");
    }
  }
  if (chain.law() && !std::has_single_bit(chain.law()->mult)) {
    throw UnsupportedMultiplicity("growth-law multiplicity is not a power of 2");
  }
}

}  // namespace

// ---------------------------------------------------------------------- Dyadic

Dyadic::Dyadic(std::int64_t num, unsigned exp) : num_(num), exp_(exp) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ % 2) == 0) {
    num_ /= 2;
    --exp_;
  }
  if (exp_ > 62) throw ArithmeticOverflow("dyadic exponent out of range");
}

Dyadic Dyadic::from_rational(const Rational& r) {
  if (!std::has_single_bit(static_cast<std::uint64_t>(r.den()))) {
    throw std::invalid_argument(r.str() + " is not a dyadic rational");
  }
  return {r.num(), static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(r.den())))};
}

Dyadic Dyadic::parse(const std::string& text) {
  const std::size_t slash = text.find('/');
  std::int64_t n = 0;
  std::int64_t d = 1;
  try {
    std::size_t used = 0;
    const std::string head = text.substr(0, slash);
    n = std::stoll(head, &used);
    if (used != head.size()) throw std::invalid_argument("trailing input");
    if (slash != std::string::npos) {
      const std::string tail = text.substr(slash + 1);
      d = std::stoll(tail, &used);
      if (used != tail.size() || d <= 0) throw std::invalid_argument("bad denominator");
    }
  } catch (const std::logic_error&) {
    throw SyntaxError("expected a dyadic rational P or P/2^k", 0);
  }
  return from_rational(Rational(n, d));
}

Rational Dyadic::value() const { return Rational(num_, std::int64_t{1} << exp_); }

Dyadic operator+(const Dyadic& x, const Dyadic& y) {
  const unsigned e = std::max(x.exp_, y.exp_);
  const std::int64_t a = checked_mul(x.num_, std::int64_t{1} << (e - x.exp_));
  const std::int64_t b = checked_mul(y.num_, std::int64_t{1} << (e - y.exp_));
  return {checked_add(a, b), e};
}

// --------------------------------------------------------------- BratteliChain

BratteliChain::BratteliChain(std::vector<std::uint64_t> dims, std::vector<std::uint64_t> mults, ChainMode mode,
                             std::optional<GrowthLaw> law)
    : dims_(std::move(dims)), mults_(std::move(mults)), mode_(mode), law_(law) {
  if (dims_.empty()) throw std::invalid_argument("a Bratteli chain needs at least one level");
  if (mults_.size() + 1 != dims_.size()) throw std::invalid_argument("need one multiplicity per embedding");
  for (auto d : dims_) {
    if (d == 0) throw std::invalid_argument("level dimensions must be positive");
  }
  for (std::size_t n = 0; n < mults_.size(); ++n) {
    if (mults_[n] == 0) throw std::invalid_argument("multiplicities must be positive");
    auto need = mul_u64(mults_[n], dims_[n]);
    if (!need || dims_[n + 1] < *need) {
      throw std::invalid_argument("embedding at level " + std::to_string(n) + " does not fit");
    }
  }
  if (law_ && (law_->dim0 == 0 || law_->dim_ratio == 0 || law_->mult == 0)) {
    throw std::invalid_argument("growth law entries must be positive");
  }
}

std::vector<ChainLevel> BratteliChain::levels() const {
  std::vector<ChainLevel> out;
  for (std::size_t n = 0; n < dims_.size(); ++n) {
    out.push_back({n, dims_[n], n < mults_.size() ? std::optional(mults_[n]) : std::nullopt});
  }
  return out;
}

std::optional<std::uint64_t> BratteliChain::dim(std::size_t n) const {
  if (n < dims_.size()) return dims_[n];
  if (!law_) return std::nullopt;
  std::optional<std::uint64_t> d = law_->dim0;
  for (std::size_t k = 0; k < n && d; ++k) d = mul_u64(*d, law_->dim_ratio);
  if (d && *d > (std::uint64_t{1} << 62)) return std::nullopt;
  return d;
}

std::optional<std::uint64_t> BratteliChain::mult(std::size_t n) const {
  if (n < mults_.size()) return mults_[n];
  if (!law_) return std::nullopt;
  return law_->mult;
}

nlohmann::json BratteliChain::to_json() const {
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t n = 0; n < dims_.size(); ++n) {
    nlohmann::json level = {{"dim", dims_[n]}};
    if (n < mults_.size()) level["mult"] = mults_[n];
    levels.push_back(std::move(level));
  }
  nlohmann::json j = {{"levels", std::move(levels)}, {"mode", mode_name(mode_)}};
  if (law_) {
    j["law"] = {{"dim0", law_->dim0}, {"dim_ratio", law_->dim_ratio}, {"mult", law_->mult}};
  }
  return j;
}

BratteliChain BratteliChain::from_json(const nlohmann::json& j) {
  std::vector<std::uint64_t> dims;
  std::vector<std::uint64_t> mults;
  const auto& levels = j.at("levels");
  for (std::size_t n = 0; n < levels.size(); ++n) {
    dims.push_back(levels[n].at("dim").get<std::uint64_t>());
    if (n + 1 < levels.size()) mults.push_back(levels[n].at("mult").get<std::uint64_t>());
  }
  std::optional<GrowthLaw> law;
  if (j.contains("law")) {
    const auto& l = j.at("law");
    law = GrowthLaw{l.at("dim0").get<std::uint64_t>(), l.at("dim_ratio").get<std::uint64_t>(),
                    l.at("mult").get<std::uint64_t>()};
  }
  ChainMode mode = ChainMode::explicit_levels;
  if (j.contains("mode")) {
    const auto m = j.at("mode").get<std::string>();
    if (m == "formula") mode = ChainMode::formula;
    if (m == "computed") mode = ChainMode::computed;
  }
  return {std::move(dims), std::move(mults), mode, law};
}

std::string BratteliChain::to_dot() const {
  std::ostringstream out;
  out << "digraph bratteli {\n  rankdir=LR;\n";
  for (std::size_t n = 0; n < dims_.size(); ++n) out << "  n" << n << " [label=\"" << dims_[n] << "\"];\n";
  for (std::size_t n = 0; n < mults_.size(); ++n) {
    if (mults_[n] > 4) {
      out << "  n" << n << " -> n" << n + 1 << " [label=\"×" << mults_[n] << "\"];\n";
    } else {
      for (std::uint64_t e = 0; e < mults_[n]; ++e) out << "  n" << n << " -> n" << n + 1 << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string BratteliChain::to_text() const {
  std::ostringstream out;
  for (std::size_t n = 0; n < dims_.size(); ++n) {
    if (n) out << " =(" << mults_[n - 1] << ")=> ";
    out << dims_[n];
  }
  if (mode_ == ChainMode::formula) out << " (formula, extrapolated)";
  if (mode_ == ChainMode::computed) out << " (computed)";
  out << "\n";
  return out.str();
}

// ------------------------------------------------------------- monotone chain

BratteliChain monotone_chain(std::size_t levels, ChainMode mode) {
  if (levels == 0) throw std::invalid_argument("a chain needs at least one level");
  std::vector<std::uint64_t> dims;
  std::vector<std::uint64_t> mults;
  if (mode != ChainMode::computed) {
    if (2 * levels + 1 > 62) throw BudgetExceeded("formula chain dimensions exceed 64 bits");
    for (std::size_t n = 0; n < levels; ++n) {
      dims.push_back(std::uint64_t{1} << (2 * n + 1));
      if (n + 1 < levels) mults.push_back(2);
    }
    return {std::move(dims), std::move(mults), ChainMode::formula, GrowthLaw{2, 4, 2}};
  }

  if (levels > kComputedLevelBound) {
    throw BudgetExceeded("computed chains are limited to " + std::to_string(kComputedLevelBound) + " levels");
  }
  for (std::size_t n = 0; n < levels; ++n) {
    const int k = static_cast<int>(n);
    const IndexWindow w(-k, k);
    const std::size_t algebra_dim = span_closure(AlgebraHandle(w, w)).size();
    const auto side = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(algebra_dim))));
    if (side * side != algebra_dim) {
      throw std::logic_error("algebra on " + w.str() + " has non-square dimension " + std::to_string(algebra_dim));
    }
    dims.push_back(side);
  }
  for (std::size_t n = 0; n + 1 < levels; ++n) {
    const int k = static_cast<int>(n);
    const ExactMatrix unit = algebra_unit(AlgebraHandle(IndexWindow(-k, k), IndexWindow(-k - 1, k + 1)));
    const Rational ratio = unit.trace() / Rational(static_cast<std::int64_t>(dims[n]));
    if (!ratio.is_integer() || ratio.num() <= 0) {
      throw std::logic_error("embedded unit trace is not a multiple of the level dimension");
    }
    mults.push_back(static_cast<std::uint64_t>(ratio.num()));
  }
  return {std::move(dims), std::move(mults), ChainMode::computed};
}

// ---------------------------------------------------------------- trace solver

nlohmann::json TraceVerdict::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  nlohmann::json u = nlohmann::json::array();
  for (const auto& x : weights) w.push_back(x.str());
  for (const auto& x : unit_values) u.push_back(x.str());
  return {{"exists_bounded", exists_bounded}, {"weight_law", weight_law}, {"reasoning", reasoning},
          {"weights", std::move(w)}, {"unit_values", std::move(u)}};
}

TraceVerdict trace_solver(const BratteliChain& chain) {
  TraceVerdict v;
  Rational lambda(1);
  for (std::size_t n = 0; n < chain.size(); ++n) {
    v.weights.push_back(lambda);
    v.unit_values.push_back(lambda * Rational(static_cast<std::int64_t>(chain.dims()[n])));
    if (n < chain.mults().size()) lambda /= Rational(static_cast<std::int64_t>(chain.mults()[n]));
  }

  // Geometric law, declared or read off the stored levels.
  std::optional<GrowthLaw> law = chain.law();
  bool declared = law.has_value();
  if (!law && chain.size() >= 3) {
    const auto& d = chain.dims();
    const auto& m = chain.mults();
    bool geometric = d[1] % d[0] == 0;
    const std::uint64_t ratio = d[1] / d[0];
    for (std::size_t n = 0; geometric && n + 1 < d.size(); ++n) {
      geometric = d[n + 1] == d[n] * ratio && m[n] == m[0];
    }
    if (geometric) law = GrowthLaw{d[0], ratio, m[0]};
  }

  bool constant_mult = true;
  for (auto m : chain.mults()) constant_mult = constant_mult && m == chain.mults().front();
  if (law) {
    v.weight_law = "lambda_n = lambda_0 / " + std::to_string(law->mult) + "^n";
  } else if (constant_mult && !chain.mults().empty()) {
    v.weight_law = "lambda_n = lambda_0 / " + std::to_string(chain.mults().front()) + "^n";
  } else {
    v.weight_law = chain.mults().empty() ? "lambda_0 only" : "lambda_{n+1} = lambda_n / mult_n";
  }

  if (law) {
    // tau(e_n) = dim0 * (ratio / mult)^n
    v.exists_bounded = law->dim_ratio <= law->mult;
    v.reasoning = std::string(declared ? "declared" : "extrapolated") + " geometric law: tau(e_n) = " +
                  std::to_string(law->dim0) + " * (" + std::to_string(law->dim_ratio) + "/" +
                  std::to_string(law->mult) + ")^n is " + (v.exists_bounded ? "bounded" : "unbounded");
  } else {
    v.exists_bounded = true;
    v.reasoning = "finite chain without a growth law: finitely many values";
  }
  return v;
}

// ---------------------------------------------------------------------- K_0

nlohmann::json K0Limit::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  nlohmann::json units = nlohmann::json::array();
  for (std::size_t n = 0; n < generator_images.size(); ++n) {
    gens.push_back({{"level", n}, {"image", generator_images[n].str()}});
    units.push_back({{"level", n}, {"class", unit_classes[n].str()}});
  }
  return {{"group", "Z[1/2]"}, {"positive_cone", "Z+[1/2]"}, {"generator_images", std::move(gens)},
          {"unit_classes", std::move(units)}, {"notes", notes}};
}

K0Limit k0_limit(const BratteliChain& chain) {
  require_power_of_two_mults(chain);
  K0Limit out;
  for (std::size_t n = 0; n < chain.size(); ++n) {
    const auto e = level_exponent(chain, n);
    if (!e) throw ArithmeticOverflow("level exponent out of range");
    out.generator_images.emplace_back(1, *e);
    out.unit_classes.emplace_back(static_cast<std::int64_t>(chain.dims()[n]), *e);
  }
  out.notes.push_back("normalization: the level-n generator maps to 1/(product of the first n multiplicities)");
  out.notes.push_back(
      "scale under this normalization: union over n of {k/2^e_n : 0 <= k <= dim_n}; for the monotone chain "
      "dim_n/2^n = 2^(n+1) is unbounded, so every nonnegative dyadic is in the scale; this differs from the "
      "scale Z+ the K_0 triple is sometimes stated with, and is reported as computed");
  out.notes.push_back("K_1 vanishes for AF algebras and is not computed");
  return out;
}

Dyadic k0_class(std::uint64_t rank, std::size_t level, const BratteliChain& chain) {
  require_power_of_two_mults(chain);
  const auto d = chain.dim(level);
  if (!d) throw std::invalid_argument("level " + std::to_string(level) + " is not available in the chain");
  if (rank > *d) {
    throw RankOutOfScale("rank " + std::to_string(rank) + " exceeds dim " + std::to_string(*d) + " at level " +
                         std::to_string(level));
  }
  const auto e = level_exponent(chain, level);
  if (!e) throw ArithmeticOverflow("level exponent out of range");
  return {static_cast<std::int64_t>(rank), *e};
}

Dyadic k0_class(std::uint64_t rank, std::size_t level) {
  return k0_class(rank, level, monotone_chain(level + 1, ChainMode::formula));
}

nlohmann::json ScaleWitness::to_json() const {
  nlohmann::json j = {{"member", member}};
  if (member) {
    j["level"] = level;
    j["rank"] = rank;
  }
  return j;
}

ScaleWitness scale_membership(const Dyadic& d, const BratteliChain& chain) {
  require_power_of_two_mults(chain);
  ScaleWitness w;
  if (d.num() < 0) return w;
  for (std::size_t n = 0;; ++n) {
    const auto dim = chain.dim(n);
    const auto e = level_exponent(chain, n);
    if (!dim || !e) return w;
    if (*e < d.exp()) continue;
    // k = num * 2^(e - exp); overflow means k > dim.
    std::int64_t k;
    if (*e - d.exp() >= 63 || __builtin_mul_overflow(d.num(), std::int64_t{1} << (*e - d.exp()), &k)) continue;
    if (static_cast<std::uint64_t>(k) <= *dim) {
      w.member = true;
      w.level = n;
      w.rank = static_cast<std::uint64_t>(k);
      return w;
    }
  }
}


// -------------------------------------------------------- intermediate step

Report intermediate_step_check(std::size_t n) {
  if (n > 2) throw BudgetExceeded("intermediate step checks are limited to n <= 2");
  const int k = static_cast<int>(n);
  const IndexWindow level(-k, k);
  const IndexWindow middle(-k, k + 1);
  const IndexWindow next(-k - 1, k + 1);
  const std::uint64_t irrep = std::uint64_t{1} << (2 * n + 1);
  Report report("intermediate_step");

  const std::size_t dim = span_closure(AlgebraHandle(middle, middle)).size();
  const std::uint64_t want_dim = std::uint64_t{1} << (4 * n + 4);
  report.add({{"n", n}, {"property", "dim"}, {"window", middle.str()}, {"value", dim}, {"expected", want_dim}},
             dim == want_dim);

  const Rational into_middle = algebra_unit(AlgebraHandle(level, middle)).trace();
  const Rational want_into_middle(static_cast<std::int64_t>(2 * irrep));
  report.add({{"n", n},
              {"property", "unit_trace_into_intermediate"},
              {"window", level.str()},
              {"carrier", middle.str()},
              {"value", into_middle.str()},
              {"expected", want_into_middle.str()},
              {"mult", (into_middle / Rational(static_cast<std::int64_t>(irrep))).str()}},
             into_middle == want_into_middle);

  const Rational into_next = algebra_unit(AlgebraHandle(middle, next)).trace();
  const std::uint64_t middle_irrep = std::uint64_t{1} << (2 * n + 2);
  const Rational want_into_next(static_cast<std::int64_t>(middle_irrep));
  const Rational null_corner = Rational(static_cast<std::int64_t>(next.dimension())) - into_next;
  report.add({{"n", n},
              {"property", "unit_trace_into_next_level"},
              {"window", middle.str()},
              {"carrier", next.str()},
              {"value", into_next.str()},
              {"expected", want_into_next.str()},
              {"mult", (into_next / Rational(static_cast<std::int64_t>(middle_irrep))).str()},
              {"null_corner", null_corner.str()}},
             into_next == want_into_next && null_corner == want_into_next);
  return report;
}

}  // namespace monotone
