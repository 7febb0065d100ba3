#include <gtest/gtest.h>

#include "monotone/errors.hpp"
#include "monotone/fock.hpp"
#include "monotone/words.hpp"

using namespace monotone;

namespace {

Letter c(int i) { return Letter::creator(i); }
Letter a(int i) { return Letter::annihilator(i); }
CanonicalWord ac(int i) { return CanonicalWord::annihilate_create(i); }
CanonicalWord lam(std::vector<int> cr, std::vector<int> an) { return CanonicalWord::lambda(std::move(cr), std::move(an)); }

LinComb nf(std::string_view text) { return normal_form(text); }

}  // namespace

TEST(ParseWord, CreatorThenAnnihilator) {
  EXPECT_EQ(parse_word("a*(0) a(2)"), (Word{c(0), a(2)}));
  EXPECT_EQ(parse_word("  a(-3)\ta*(+4) "), (Word{a(-3), c(4)}));
}

TEST(ParseWord, IdentityForms) {
  EXPECT_TRUE(parse_word("1").empty());
  EXPECT_TRUE(parse_word("").empty());
}

TEST(ParseWord, ReportsPositionOfBadArgument) {
  try {
    parse_word("a(-3) a*(x)");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 9u);
  }
  EXPECT_THROW(parse_word("a(1)a(2)"), SyntaxError);
  EXPECT_THROW(parse_word("b(1)"), SyntaxError);
  EXPECT_THROW(parse_word("a(1"), SyntaxError);
  EXPECT_THROW(parse_word("1 a(1)"), SyntaxError);
  EXPECT_THROW(parse_word("a()"), SyntaxError);
}

TEST(ParseWord, RoundTripsThroughToString) {
  const Word w{c(-1), c(2), a(3), a(0)};
  EXPECT_EQ(parse_word(to_string(w)), w);
  EXPECT_EQ(to_string({}), "1");
}

TEST(CanonicalWord, ValidatesShapes) {
  EXPECT_THROW(lam({1, 0}, {}), std::invalid_argument);
  EXPECT_THROW(lam({}, {0, 1}), std::invalid_argument);
  EXPECT_THROW(lam({2}, {2}), std::invalid_argument);  // bare a*(i) a(i) is not a basis element
  EXPECT_NO_THROW(lam({0, 2}, {2, 1}));                // longer forms with i_m = j_1 are
  CanonicalWord out;
  EXPECT_TRUE(CanonicalWord::from_word({a(3), c(3)}, out));
  EXPECT_EQ(out, ac(3));
  EXPECT_FALSE(CanonicalWord::from_word({c(3), a(3)}, out));
  EXPECT_FALSE(CanonicalWord::from_word({a(1), c(2)}, out));
}

TEST(NormalForm, DecreasingAnnihilatorsVanish) { EXPECT_TRUE(nf("a(0) a(1)").is_zero()); }

TEST(NormalForm, NumberOperatorRule) {
  const LinComb want = LinComb::of(ac(-1)) - LinComb::of(ac(0));
  EXPECT_EQ(nf("a*(0) a(0)"), want);
}

TEST(NormalForm, AbsorbRule) { EXPECT_EQ(nf("a(1) a(0) a*(0)"), LinComb::of(lam({}, {1}))); }

TEST(NormalForm, ExpandRule) {
  const LinComb want = LinComb::of(lam({}, {-1})) - LinComb::of(lam({0}, {0, -1}));
  EXPECT_EQ(nf("a(0) a*(0) a(-1)"), want);
}

TEST(NormalForm, CenterInsideLongerWord) {
  const LinComb want = LinComb::of(lam({0}, {1})) - LinComb::of(lam({0, 2}, {2, 1}));
  EXPECT_EQ(nf("a*(0) a(2) a*(2) a(1)"), want);
}

TEST(NormalForm, RepeatedAnnihilatorVanishes) { EXPECT_TRUE(nf("a(0) a(0) a*(0)").is_zero()); }

TEST(NormalForm, CanonicalWordsAreFixedPoints) {
  for (const auto& w : enumerate_canonical(IndexWindow(-1, 1))) {
    EXPECT_EQ(normal_form(w.letters()), LinComb::of(w)) << w.str();
  }
}

TEST(NormalForm, CrossTermsVanish) {
  EXPECT_TRUE(nf("a(1) a*(0)").is_zero());
  EXPECT_TRUE(nf("a(-1) a*(0)").is_zero());
}

TEST(NormalForm, IdentityWord) { EXPECT_EQ(nf("1"), LinComb::identity()); }

TEST(Multiply, Examples) {
  const LinComb x = nf("a*(1) a(0)") + nf("a(2)") * Rational(3);
  EXPECT_EQ(multiply(LinComb::identity(), x), x);
  EXPECT_EQ(multiply(x, LinComb::identity()), x);
  EXPECT_EQ(multiply(LinComb::of(lam({}, {0})), LinComb::of(lam({0}, {}))), LinComb::of(ac(0)));
  EXPECT_EQ(multiply(LinComb::of(lam({0}, {})), LinComb::of(lam({}, {0}))), LinComb::of(ac(-1)) - LinComb::of(ac(0)));
}

TEST(Multiply, IsAssociativeOnSamples) {
  const std::vector<LinComb> xs{nf("a(0)"), nf("a*(1) a(0)"), nf("a(1) a*(1)"), nf("a*(-1)"), nf("a*(0) a*(2) a(1)")};
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      for (const auto& z : xs) EXPECT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
    }
  }
}

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(LinComb::of(lam({0}, {1}))), LinComb::of(lam({1}, {0})));
  EXPECT_EQ(adjoint(LinComb::of(ac(4))), LinComb::of(ac(4)));
  const LinComb r3 = nf("a*(0) a(0)");
  EXPECT_EQ(adjoint(r3), r3);
  EXPECT_EQ(adjoint(r3), normal_form(adjoint(parse_word("a*(0) a(0)"))));
}

TEST(Adjoint, IsAnInvolutionAndAntiMultiplicative) {
  const std::vector<LinComb> xs{nf("a(0)"), nf("a*(1) a(0)"), nf("a*(-2) a*(1) a(2)"), nf("a(1) a*(1)") * Rational(2, 3)};
  for (const auto& x : xs) {
    EXPECT_EQ(adjoint(adjoint(x)), x);
    for (const auto& y : xs) EXPECT_EQ(adjoint(multiply(x, y)), multiply(adjoint(y), adjoint(x)));
  }
}

TEST(Shift, Examples) {
  EXPECT_EQ(shift(LinComb::of(lam({}, {0})), 1), LinComb::of(lam({}, {1})));
  const LinComb x = nf("a*(0) a(2) a*(2) a(1)");
  EXPECT_EQ(shift(x, 0), x);
  EXPECT_EQ(shift(nf("a*(0) a(0)"), 1), nf("a*(1) a(1)"));
  EXPECT_EQ(shift(nf("a*(0) a(0)"), 1), LinComb::of(ac(0)) - LinComb::of(ac(1)));
}

TEST(Shift, IsAnAutomorphism) {
  const std::vector<LinComb> xs{nf("a(0)"), nf("a*(1) a(0)"), nf("a*(-2) a*(1) a(2)"), nf("a(1) a*(1)")};
  for (int k : {-3, 2, 5}) {
    for (const auto& x : xs) {
      for (const auto& y : xs) EXPECT_EQ(shift(multiply(x, y), k), multiply(shift(x, k), shift(y, k)));
    }
  }
}

TEST(VacuumState, Examples) {
  EXPECT_EQ(vacuum_state(LinComb::identity()), Rational(1));
  EXPECT_EQ(vacuum_state(LinComb::of(ac(0))), Rational(1));
  EXPECT_EQ(vacuum_state(nf("a*(0) a(0)")), Rational(0));
  EXPECT_EQ(vacuum_state(LinComb::of(lam({0}, {}))), Rational(0));
}

TEST(VacuumState, AgreesWithFockExpectation) {
  for (const char* text : {"a(0) a*(0)", "a(1) a(0) a*(0) a*(1)", "a(0) a*(0) a(-1) a*(-1)", "a(2) a*(1)",
                           "a(0) a(1) a*(1) a*(0)", "a(1) a*(1) a(0) a*(0)"}) {
    const Word w = parse_word(text);
    EXPECT_EQ(vacuum_state(normal_form(w)), vacuum_expectation(w)) << text;
  }
}

TEST(EnumerateCanonical, Counts) {
  const auto one = enumerate_canonical(IndexWindow(0, 0));
  const std::vector<CanonicalWord> want{CanonicalWord::identity(), lam({0}, {}), lam({}, {0}), ac(0)};
  EXPECT_EQ(std::set<CanonicalWord>(one.begin(), one.end()), std::set<CanonicalWord>(want.begin(), want.end()));
  EXPECT_EQ(one.size(), 4u);
  EXPECT_EQ(enumerate_canonical(IndexWindow(-1, 1)).size(), 64u);
  EXPECT_EQ(enumerate_canonical(IndexWindow(0, 1)).size(), 16u);
  EXPECT_EQ(enumerate_canonical(IndexWindow(-2, 2)).size(), 1024u);
  EXPECT_THROW(enumerate_canonical(IndexWindow(0, 10)), BudgetExceeded);
}

TEST(EnumerateCanonical, InCanonicalOrderWithoutDuplicates) {
  const auto words = enumerate_canonical(IndexWindow(-1, 2));
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
  EXPECT_EQ(std::set<CanonicalWord>(words.begin(), words.end()).size(), words.size());
  EXPECT_EQ(words.front(), CanonicalWord::identity());
}

TEST(Json, LinCombRoundTrip) {
  const LinComb x = nf("a*(0) a(2) a*(2) a(1)") + LinComb::of(ac(-3)) * Rational(5, 7);
  const auto j = to_json(x);
  EXPECT_EQ(lincomb_from_json(j), x);
  EXPECT_EQ(to_json(LinComb::of(ac(2)))["terms"][0]["word"], nlohmann::json::parse(R"([["a",2],["c",2]])"));
  EXPECT_EQ(to_json(BasisState(std::vector<int>{-1, 2})), nlohmann::json::parse("[-1,2]"));
  EXPECT_EQ(to_json(BasisState::vacuum()), nlohmann::json::array());
}
