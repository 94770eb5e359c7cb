#include "dirac_lt/families.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dirac_lt;

namespace {

double d(const Real& x) { return x.convert_to<double>(); }

}  // namespace

TEST(Scalar, MultiplicityMatchesHarmonicPolynomialCount) {
  for (unsigned n : {2u, 3u})
    for (unsigned l = 0; l <= 10; ++l)
      EXPECT_EQ(scalar_multiplicity(n, l), oracle::harmonic_dimension(n + 1, l)) << "n=" << n << " l=" << l;
  for (unsigned l = 0; l <= 6; ++l) EXPECT_EQ(scalar_multiplicity(1, l), oracle::harmonic_dimension(2, l));
  EXPECT_EQ(scalar_multiplicity(2, 3), 7);
  EXPECT_EQ(scalar_eigenvalue(2, 3), 12);
}

TEST(Shells, ExactSumsForSmallFamilies) {
  const auto pos = dirac_shell_report(2, 1, false);
  EXPECT_EQ(pos.lhs, Rational(10));
  EXPECT_EQ(pos.rho, 6);
  EXPECT_EQ(pos.exponent, Rational(3, 2));

  const auto sq = dirac_shell_report(1, 1, true);
  EXPECT_EQ(sq.lhs, Rational(5));
  EXPECT_EQ(sq.rho, 4);
  EXPECT_NEAR(d(sq.ratio), 5.0 / 64.0, 1e-15);

  const auto sc = scalar_shell_report(2, 2);
  EXPECT_EQ(sc.lhs, Rational(3 * 2 + 5 * 6));
  EXPECT_EQ(sc.rho, 8);
  ASSERT_TRUE(sc.comparison_constant.has_value());
  EXPECT_TRUE(*sc.comparison_satisfied);
  EXPECT_FALSE(scalar_shell_report(1, 3).comparison_constant.has_value());
  EXPECT_THROW(scalar_shell_report(2, 0), std::domain_error);
}

TEST(Shells, SphereDiracRatioClosedForm) {
  for (unsigned k = 0; k <= 50; ++k) {
    const auto r = dirac_shell_report(2, k, false);
    const double expected = (2.0 * k + 3) / (3 * std::sqrt((k + 1.0) * (k + 2.0)));
    ASSERT_NEAR(d(r.ratio), expected, 1e-14) << k;
    ASSERT_TRUE(r.satisfied);
  }
}

TEST(Shells, SequenceMatchesIndividualReports) {
  for (ShellKind kind : {ShellKind::dirac_positive, ShellKind::dirac_both_signs, ShellKind::scalar_laplace}) {
    const auto seq = shell_sequence(3, kind, 12);
    for (const auto& r : seq) {
      const auto single = shell_report(r.family);
      ASSERT_EQ(single.lhs, r.lhs);
      ASSERT_EQ(single.rho, r.rho);
      ASSERT_EQ(single.ratio, r.ratio);
    }
    EXPECT_EQ(seq.size(), kind == ShellKind::scalar_laplace ? 12u : 13u);
  }
}

TEST(ShellsProperty, EveryFilledShellSatisfiesItsInequality) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (ShellKind kind : {ShellKind::dirac_positive, ShellKind::dirac_both_signs, ShellKind::scalar_laplace}) {
      for (const auto& r : shell_sequence(n, kind, 200)) {
        ASSERT_TRUE(r.satisfied) << "n=" << n << " " << to_string(kind) << " K=" << r.family.max_degree;
        ASSERT_GE(r.lhs, Rational(0));
        if (r.comparison_satisfied) ASSERT_TRUE(*r.comparison_satisfied);
      }
    }
  }
}

TEST(ShellsProperty, RandomDegreesAgreeWithDirectSums) {
  auto gen = oracle::rng(31);
  std::uniform_int_distribution<unsigned> dim(1, 6);
  std::uniform_int_distribution<unsigned> degree(0, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = dim(gen);
    const unsigned k = degree(gen);
    Rational lhs = 0;
    Integer rho = 0;
    for (unsigned j = 0; j <= k; ++j) {
      const Integer m = oracle::spinor_rank(n) * oracle::pascal_binomial(j + n - 1, j);
      lhs += Rational(m) * (Rational(Integer(n), Integer(2)) + Rational(Integer(j)));
      rho += m;
    }
    const auto r = dirac_shell_report(n, k, false);
    ASSERT_EQ(r.lhs, lhs);
    ASSERT_EQ(r.rho, rho);
  }
}

TEST(Bracket, SphereDiracEdges) {
  const Bracket b = bracket_scan(2, ShellKind::dirac_positive, 200);
  EXPECT_NEAR(d(b.lower), 1.0 / 3.0, 1e-15);
  EXPECT_LT(std::abs(d(b.upper) / (2.0 / 3.0) - 1.0), 0.01);
  EXPECT_GT(b.upper, Real(2) / 3);
  EXPECT_EQ(b.argmin_degree, 200u);
  ASSERT_TRUE(b.turning_point.has_value());
  EXPECT_TRUE(b.monotone_tail);
  EXPECT_TRUE(b.all_satisfied);
  EXPECT_THROW(bracket_scan(2, ShellKind::dirac_positive, 0), std::domain_error);
}

TEST(Bracket, LowerEdgeBelowUpperEverywhere) {
  for (unsigned n = 1; n <= 6; ++n)
    for (ShellKind kind : {ShellKind::dirac_positive, ShellKind::dirac_both_signs, ShellKind::scalar_laplace}) {
      const Bracket b = bracket_scan(n, kind, 60);
      EXPECT_LT(b.lower, b.upper) << n << " " << to_string(kind);
    }
}
