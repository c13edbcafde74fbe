#include "common.hpp"

using namespace elimkit;
using namespace elimkit::test;

TEST(AExponent, Examples) {
  EXPECT_EQ(a_exponent(2, 2), 0);
  EXPECT_EQ(a_exponent(2, 3), 1);
  EXPECT_EQ(a_exponent(3, 2), 1);
  EXPECT_EQ(a_exponent(3, 3), 3);
  EXPECT_EQ(a_exponent(4, 3), 5);
  EXPECT_THROW(a_exponent(2, 1), DegreeTooLow);
}

TEST(AExponent, Recurrence) {
  for (int d = 2; d <= 7; ++d)
    for (int n = 1; n <= 8; ++n)
      EXPECT_EQ(a_exponent(n, d) + a_exponent(n + 1, d), static_cast<long>(hyper_power(n + 1, d))) << n << "," << d;
}

TEST(DiscHyper, BinaryQuadratic) {
  const auto x = X(2, 0), y = X(2, 1);
  EXPECT_EQ(disc_hyper(2 * (x * x) + 3 * (x * y) + 5 * (y * y)), 31);
  EXPECT_EQ(disc_hyper(x * x - 2 * (x * y) + y * y), 0);
}

TEST(DiscHyper, DiagonalForms) {
  for (int n = 2; n <= 3; ++n)
    for (int d = 2; d <= 3; ++d) {
      Poly<ZZ> f(ZZ{}, n);
      for (int i = 0; i < n; ++i) f += poly_pow(X(n, i), d);
      const long e = static_cast<long>(n * hyper_power(n, d)) - a_exponent(n, d);
      EXPECT_EQ(disc_hyper(f), pow_z(d, static_cast<unsigned long>(e))) << n << "," << d;
    }
}

TEST(DiscHyper, SingularCubicVanishes) {
  const auto x = X(3, 0), y = X(3, 1), z = X(3, 2);
  // nodal cubic y^2 z = x^3 + x^2 z
  EXPECT_EQ(disc_hyper(y * y * z - x * x * x - x * x * z), 0);
}

TEST(DiscHyper, RejectsLinear) { EXPECT_THROW(disc_hyper(X(2, 0)), DegreeTooLow); }

TEST(DiscHyper, ReductionModPrime) {
  Rng rng(51);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_form(ZZ{}, 3, 2, rng);
    for (std::uint64_t p : {2u, 3u, 5u}) EXPECT_EQ(disc_hyper(reduce_poly_mod(f, p)), Zmod(p).from_z(disc_hyper(f)));
  }
}

TEST(Quadric, DeterminantAgrees) {
  Rng rng(52);
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 5; ++t) {
      const auto f = random_form(ZZ{}, n, 2, rng);
      EXPECT_EQ(quadric_disc(f), disc_hyper(f)) << n;
      if (n % 2) EXPECT_EQ(quadric_det(f), mpz_class(2 * disc_hyper(f)));
    }
}

TEST(Quadric, CharacteristicTwo) {
  const Zmod F2(2);
  const auto x = X(3, 0, F2), y = X(3, 1, F2), z = X(3, 2, F2);
  EXPECT_EQ(quadric_disc(x * y + z * z), 1u);
  EXPECT_EQ(quadric_disc(x * y + y * z), 0u);
}

TEST(Quadric, RejectsCubic) { EXPECT_THROW(quadric_matrix(poly_pow(X(2, 0), 3)), NotQuadratic); }

TEST(DiscTimesBar, MatchesProduct) {
  Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_nonzero_form(ZZ{}, 3, 2 + t % 2, rng, 3);
    EXPECT_EQ(disc_times_bar(f), disc_hyper(f) * disc_hyper(bar(f)));
  }
}

TEST(Bar, DropsLastVariable) {
  const auto x = X(3, 0), y = X(3, 1), z = X(3, 2);
  EXPECT_EQ(bar(x * x + y * z + z * z), X(2, 0) * X(2, 0));
}

TEST(BaseChangeHyper, IdentityGivesOne) {
  Rng rng(54);
  const auto f = random_nonzero_form(ZZ{}, 2, 3, rng);
  if (disc_hyper(f) != 0) EXPECT_EQ(disc_hyper_basechange(f, {X(2, 0), X(2, 1)}), 1);
}

TEST(BaseChangeHyper, RejectsMixedDegrees) {
  const auto x = X(2, 0), y = X(2, 1);
  EXPECT_THROW(disc_hyper_basechange(x * y, {x * x, y}), SignatureMismatch);
}

TEST(ComposeLinear, ScalingByDeterminant) {
  Rng rng(55);
  const auto f = random_form(ZZ{}, 2, 3, rng);
  const auto phi = to_matrix(ZZ{}, {{2, 1}, {1, 1}});
  EXPECT_EQ(disc_hyper(compose_linear(f, phi)), disc_hyper(f));
  const auto psi = to_matrix(ZZ{}, {{1, 1}, {0, 2}});
  // det 2, exponent d(d-1)^{n-1} = 6
  EXPECT_EQ(disc_hyper(compose_linear(f, psi)), mpz_class(64 * disc_hyper(f)));
}

TEST(DiscValuation, MatchesExpected) {
  for (auto [n, d, mu] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {2, 4, 1}, {2, 4, 2}, {3, 3, 1}}) {
    const auto v = disc_valuation(n, d, mu);
    EXPECT_EQ(v.valuation, v.expected) << n << d << mu;
  }
}

TEST(DiscValuation, RejectsMuOutOfRange) {
  EXPECT_THROW(disc_valuation(2, 4, 0), SignatureMismatch);
  EXPECT_THROW(disc_valuation(2, 4, 3), SignatureMismatch);
}

TEST(DeltaN, Identity) {
  EXPECT_TRUE(delta_n_identity(2, 2));
  EXPECT_TRUE(delta_n_identity(2, 3));
  EXPECT_TRUE(delta_n_identity(3, 2));
}

TEST(ClosedForms, LeadingTermPlusLowerPart) {
  EXPECT_TRUE(ux_plus_h_holds(2, 3));
  EXPECT_TRUE(ux_plus_h_holds(3, 2));
}

TEST(DiscHyper, Properties) {
  SuiteRunner runner(6, 10);
  suites::disc_hyper_props(runner);
  for (const auto& c : runner.checks) EXPECT_NE(c.status, "fail") << c.id << ": " << c.detail << " " << c.witness.dump();
}

TEST(DiscHyper, ValuationSuite) {
  SuiteRunner runner(6, 5);
  suites::zariski(runner);
  for (const auto& c : runner.checks) EXPECT_NE(c.status, "fail") << c.id << ": " << c.detail;
}
