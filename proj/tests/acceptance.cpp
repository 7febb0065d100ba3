// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "monotone/af.hpp"
#include "monotone/clt.hpp"
#include "monotone/matrix_rep.hpp"
#include "oracle.hpp"
#include "quadrature.hpp"

using namespace monotone;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + ("failed: " + what);
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

IndexWindow W(int lo, int hi) { return IndexWindow(lo, hi); }

std::string str(std::size_t v) { return std::to_string(v); }

Verdict relation_suite() {
  Verdict v;
  const Report r = verify_monotone_rules(W(-2, 2), W(-2, 2));
  std::set<std::string> families;
  for (const auto& inst : r.instances()) {
    const std::string rel = inst.params.value("relation", "");
    families.insert(rel.substr(0, rel.find(':')));
  }
  v.require(W(-2, 2).dimension() == 32, "dim V = 32");
  v.require(r.pass(), str(r.failures()) + " failing instances");
  for (const char* f : {"ordering", "cross", "absorb", "number", "expand", "resolution"}) {
    v.require(families.count(f) == 1, std::string("relation family ") + f + " checked");
  }
  v.note(str(r.instances().size()) + " instances on V_[-2,2]");
  return v;
}

Verdict rewriter_oracle() {
  Verdict v;
  const auto corpus = testing::make_corpus(testing::CorpusConfig{});
  const IndexWindow carrier(-12, 4);
  std::size_t agree = 0, confluent = 0, nonzero = 0;
  for (const Word& w : corpus) {
    const LinComb left = normal_form(w, RewriteStrategy::leftmost);
    const LinComb right = normal_form(w, RewriteStrategy::rightmost);
    agree += testing::matches_oracle(w, left, carrier) && testing::matches_oracle(w, right, carrier);
    confluent += left == right;
    nonzero += !left.is_zero();
  }
  v.require(corpus.size() >= 1000, "corpus size");
  v.require(agree == corpus.size(), "oracle equality " + str(agree) + "/" + str(corpus.size()));
  v.require(confluent == corpus.size(), "strategy agreement " + str(confluent) + "/" + str(corpus.size()));
  v.note(str(corpus.size()) + " words (" + str(nonzero) + " nonzero), carrier [-12,4]");
  return v;
}

Verdict full_matrix_truncations() {
  Verdict v;
  const std::size_t want[] = {4, 64, 1024};
  for (int n = 0; n <= 2; ++n) {
    const AlgebraHandle h(W(-n, n), W(-n, n));
    const std::size_t dim = span_closure(h).size();
    const std::size_t comm = commutant_dim(h);
    v.require(dim == want[n], "span dim " + str(dim) + " at n=" + str(n));
    v.require(comm == 1, "commutant " + str(comm) + " at n=" + str(n));
  }
  v.note("span 4, 64, 1024; commutant 1, 1, 1");
  return v;
}

Verdict bratteli_multiplicities() {
  Verdict v;
  for (int n = 0; n <= 1; ++n) {
    const Rational t = algebra_unit(AlgebraHandle(W(-n, n), W(-n - 1, n + 1))).trace();
    v.require(t == Rational(std::int64_t{2} << (2 * n + 1)), "unit trace " + t.str() + " at level " + str(n));
  }
  for (std::size_t n = 0; n <= 1; ++n) {
    const Report r = intermediate_step_check(n);
    v.require(r.pass(), "intermediate step n=" + str(n));
    v.require(r.instances()[0].params["value"] == (std::uint64_t{1} << (4 * n + 4)), "dim c_n");
    v.require(r.instances()[1].params["mult"] == "2", "mult 2 into c_n");
    v.require(r.instances()[2].params["mult"] == "1", "mult 1 into the next level");
  }
  v.note("unit traces 4, 16; dim c_0 = 16, dim c_1 = 256; mult 2 then 1");
  return v;
}

Verdict tracelessness() {
  Verdict v;
  const TraceVerdict mono = trace_solver(monotone_chain(6));
  v.require(!mono.exists_bounded, "monotone chain unbounded");
  for (std::size_t n = 0; n <= 5; ++n) {
    v.require(mono.unit_values[n] == Rational(std::int64_t{2} << n), "tau(e_" + str(n) + ") = 2^(n+1)");
  }
  const TraceVerdict car = trace_solver(BratteliChain({2, 4, 8, 16}, {2, 2, 2}));
  v.require(car.exists_bounded, "CAR chain bounded");
  v.note("tau(e_n) = 2, 4, ..., 64; CAR contrast bounded");
  return v;
}

Verdict k_theory() {
  Verdict v;
  const BratteliChain chain = monotone_chain(10);
  std::mt19937 rng(20240611);
  std::size_t consistent = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t level = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    const std::uint64_t rank = std::uniform_int_distribution<std::uint64_t>(0, *chain.dim(level))(rng);
    consistent += k0_class(rank, level, chain) == k0_class(2 * rank, level + 1, chain);
  }
  v.require(consistent == 100, "promotion " + str(consistent) + "/100");
  const ScaleWitness w = scale_membership(Dyadic(3, 1), chain);
  v.require(w.member && w.level == 1 && w.rank == 3, "3/2 witness (level 1, rank 3)");
  const ScaleWitness big = scale_membership(Dyadic(1000, 0), chain);
  v.require(big.member, "1000 in the scale");
  v.note("1000 witnessed at level " + str(big.level) + ", rank " + str(big.rank));
  return v;
}

Verdict masa() {
  Verdict v;
  for (const IndexWindow w : {W(0, 0), W(0, 1), W(-1, 1)}) {
    const Report r = masa_check(w);
    const auto d = r.instances().front().params["relative_commutant_dimension"].get<std::size_t>();
    v.require(r.pass(), "masa " + w.str());
    v.require(d == w.dimension(), "relative commutant " + str(d) + " on " + w.str());
  }
  v.note("relative commutants 2, 4, 8");
  return v;
}

Verdict hamel_independence() {
  Verdict v;
  const std::size_t r64 = independence_rank(enumerate_canonical(W(-1, 1)), W(-2, 2));
  v.require(r64 == 64, "rank " + str(r64) + " for [-1,1] on [-2,2]");
  const auto base = enumerate_canonical(W(0, 0));
  std::vector<Word> probe;
  for (const auto& w : base) probe.push_back(w.letters());
  const std::size_t before = independence_rank(probe, W(-1, 1));
  probe.push_back(parse_word("a*(0) a(0)"));
  const std::size_t after = independence_rank(probe, W(-1, 1));
  v.require(before == 4 && after == 5, "probe " + str(before) + " -> " + str(after));
  v.note("rank 64; probe 4 -> 5");
  return v;
}

Verdict monotone_projections() {
  Verdict v;
  const Report r = projection_monotonicity(W(-2, 2));
  v.require(r.pass(), "projection report on [-2,2]");
  for (int n = 0; n <= 2; ++n) {
    const ExactMatrix p = operator_matrix({Letter::annihilator(n), Letter::creator(n)}, W(-n, n));
    ExactMatrix vac(W(-n, n));
    vac.add(0, 0, Rational(1));
    v.require(p == vac && matrix_rank(p) == 1, "vacuum projection at n=" + str(n));
  }
  return v;
}

Verdict clt_moments() {
  Verdict v;
  for (int n : {1, 2, 4, 8, 16, 32}) v.require(sum_moment(n, 2) == Rational(1), "variance at N=" + str(n));
  Rational prev_gap(1000);
  for (int n : {4, 8, 16, 32}) {
    const Rational gap = abs(sum_moment(n, 4) - Rational(3, 2));
    v.require(gap <= prev_gap, "non-increasing gap at N=" + str(n));
    prev_gap = gap;
  }
  v.require(prev_gap.to_double() < 0.15, "gap " + prev_gap.str() + " at N=32 < 0.15");
  double worst = 0;
  for (int k = 1; k <= 3; ++k) {
    worst = std::max(worst, std::abs(testing::arcsine_quadrature(2 * k) - arcsine_moment(2 * k).to_double()));
  }
  v.require(worst < 1e-9, "quadrature agreement");
  char buf[96];
  std::snprintf(buf, sizeof buf, "gap at N=32 = %s; quadrature max error %.1e", prev_gap.str().c_str(), worst);
  v.note(buf);
  return v;
}

Verdict shift_invariance() {
  Verdict v;
  std::size_t checked = 0;
  for (int n = 0; n <= 2; ++n) {
    for (const auto& w : enumerate_canonical(W(-n, n))) {
      const LinComb x = LinComb::of(w);
      for (int k : {-5, -1, 1, 3, 7}) {
        v.require(vacuum_state(shift(x, k)) == vacuum_state(x), "vacuum shift " + w.str());
        ++checked;
      }
    }
  }
  for (int s : {-5, 7}) {
    for (int n : {1, 2, 4, 8, 16, 32}) {
      for (int order : {2, 4, 6}) {
        v.require(sum_moment(n, order, 1 + s) == sum_moment(n, order), "sum_moment shift " + str(s));
      }
    }
  }
  v.note(str(checked) + " shifted canonical words; sum_moment at s = -5, 7");
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no runtime bound
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "relation suite on V_[-2,2]", 5, relation_suite},
      {2, "rewriter oracle equivalence", 60, rewriter_oracle},
      {3, "full-matrix truncations", 120, full_matrix_truncations},
      {4, "Bratteli multiplicities", 0, bratteli_multiplicities},
      {5, "tracelessness", 0, tracelessness},
      {6, "K-theory", 0, k_theory},
      {7, "MASA analog", 0, masa},
      {8, "Hamel independence", 0, hamel_independence},
      {9, "monotone projections", 0, monotone_projections},
      {10, "CLT moments", 300, clt_moments},
      {11, "shift invariance", 0, shift_invariance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      v.pass = false;
      v.note("runtime over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s bound");
    }
    failures += !v.pass;
    std::printf("criterion %2d: %s  %s  [%.2f s] %s\n", c.id, v.pass ? "PASS" : "FAIL", c.name, secs, v.detail.c_str());
  }
  std::printf("%s: %d/%zu criteria passed\n", failures ? "FAIL" : "PASS",
              static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures ? 1 : 0;
}
