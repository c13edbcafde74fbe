#include "common.hpp"

using namespace elimkit;
using namespace elimkit::test;

TEST(Resultant, NormalizedOnPurePowers) {
  EXPECT_EQ(resultant(suites::pure_powers(3, {2, 3, 4}), {2, 3, 4}), 1);
}

TEST(Resultant, NormalizedUpToFourVariables) {
  EXPECT_EQ(suites::normalization(4, 4).kind, Outcome::Kind::pass);
}

TEST(Resultant, LinearFormsGiveDeterminant) {
  const auto x1 = X(2, 0), x2 = X(2, 1);
  EXPECT_EQ(resultant<ZZ>({x1 + x2, x1 - x2}), -2);
}

TEST(Resultant, CommonRootGivesZero) {
  const auto x1 = X(2, 0), x2 = X(2, 1);
  EXPECT_EQ(resultant<ZZ>({x1 - x2, 2 * x1 - 2 * x2}), 0);
}

TEST(Resultant, ZeroFormGivesZero) {
  EXPECT_EQ(resultant<ZZ>({Poly<ZZ>(ZZ{}, 2), X(2, 0)}, {2, 1}), 0);
}

TEST(Resultant, RejectsNonHomogeneous) {
  EXPECT_THROW(resultant<ZZ>({X(2, 0) * X(2, 0) + X(2, 1), X(2, 0)}), NonHomogeneous);
}

TEST(Resultant, RejectsWrongCount) { EXPECT_THROW(resultant<ZZ>({X(3, 0), X(3, 1)}), SignatureMismatch); }

TEST(Resultant, SylvesterMatchesMacaulayOverPrimeField) {
  Rng rng(21);
  const Zmod k(101);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 2;
    std::vector<int> d;
    std::vector<Poly<Zmod>> fs;
    for (int i = 0; i < n; ++i) {
      d.push_back(uniform_int(rng, 1, 2));
      fs.push_back(random_form(k, n, d.back(), rng));
    }
    EXPECT_EQ(gcp_resultant(fs, d), macaulay_resultant(fs, d));
    EXPECT_EQ(resultant(fs, d), macaulay_resultant(fs, d));
  }
}

TEST(Resultant, DegenerateTripleViaPerturbation) {
  const ZZ Z;
  const auto x1 = X(3, 0), x2 = X(3, 1), x3 = X(3, 2);
  const std::vector<Poly<ZZ>> fs{x1 * x1, x1 * x2, x2 * x2 - x1 * x3};
  EXPECT_EQ(gcp_resultant(fs, {2, 2, 2}), 0);
  EXPECT_EQ(resultant(fs, {2, 2, 2}), 0);
}

TEST(Resultant, CommonRationalRootGivesZero) {
  Rng rng(22);
  const auto x1 = X(3, 0), x2 = X(3, 1), x3 = X(3, 2);
  // all three vanish at (1:1:1)
  const std::vector<Poly<ZZ>> fs{x1 - x2, x1 * x2 - x3 * x3, x1 * x1 - x2 * x3};
  EXPECT_EQ(resultant(fs), 0);
  EXPECT_EQ(gcp_resultant(fs, {1, 2, 2}), 0);
}

TEST(Resultant, ModularResultantIsReduction) {
  const auto x1 = X(2, 0), x2 = X(2, 1);
  const std::vector<Poly<ZZ>> fs{3 * (x1 * x1) + x2 * x2, x1 * x2 - 2 * (x2 * x2)};
  const auto r = resultant(fs);
  for (std::uint64_t p : {2u, 3u, 4u, 6u, 101u}) {
    const std::vector<Poly<Zmod>> red{reduce_poly_mod(fs[0], p), reduce_poly_mod(fs[1], p)};
    EXPECT_EQ(resultant(red, {2, 2}), Zmod(p).from_z(r));
  }
}

TEST(Resultant, TernaryQuadricFormulaMatchesMacaulay) {
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    std::vector<Poly<ZZ>> fs;
    for (int i = 0; i < 3; ++i) fs.push_back(random_form(ZZ{}, 3, 2, rng, 4));
    EXPECT_EQ(ternary_quadric_resultant(fs), macaulay_resultant(fs, {2, 2, 2}));
  }
}

TEST(Resultant, SymbolicBinary) {
  const auto g = generic_system<ZZ>(2, {1, 1});
  const auto r = resultant(g.forms, g.degrees);
  const auto a = g.coeffs.var(g.var(0, {1, 0})), b = g.coeffs.var(g.var(0, {0, 1}));
  const auto c = g.coeffs.var(g.var(1, {1, 0})), d = g.coeffs.var(g.var(1, {0, 1}));
  EXPECT_EQ(r, a * d - b * c);
}

TEST(Resultant, Properties) {
  SuiteRunner runner(7, 20);
  suites::res_core(runner);
  for (const auto& c : runner.checks) EXPECT_EQ(c.status, "pass") << c.id << ": " << c.detail << " " << c.witness.dump();
}

TEST(InertiaForms, KroneckerSubstitution) {
  const auto g = generic_system<ZZ>(2, {1, 1});
  EXPECT_TRUE(is_inertia_form_generic(resultant(g.forms, g.degrees), g));
  EXPECT_FALSE(is_inertia_form_generic(Poly<ZZ>::constant(ZZ{}, g.coeffs.nv, 1), g));
  EXPECT_FALSE(is_inertia_form_generic(g.coeffs.var(g.var(0, {1, 0})), g));
}

TEST(InertiaForms, MultiplesAreInertiaForms) {
  const auto g = generic_system<ZZ>(2, {2, 1});
  const auto r = resultant(g.forms, g.degrees);
  EXPECT_TRUE(is_inertia_form_generic(r * g.coeffs.var(0), g));
}

TEST(LowestPart, TrivialGrading) {
  const auto g = generic_system<ZZ>(2, {1, 1});
  const auto lp = zariski_lowest_part(g, {0, 0});
  EXPECT_EQ(lp.H, lp.res);
  EXPECT_EQ(lp.H1, Poly<ZZ>::constant(ZZ{}, g.coeffs.nv, 1));
}

TEST(LowestPart, WeightIsProductOfDifferences) {
  const auto g = generic_system<ZZ>(2, {2, 1});
  const auto lp = zariski_lowest_part(g, {1, 0});
  EXPECT_EQ(lp.weight, 1);
  EXPECT_EQ(lp.H, lp.res_g * lp.H1);
  const auto g3 = generic_system<ZZ>(3, {2, 1, 1});
  const auto lp3 = zariski_lowest_part(g3, {1, 0, 0});
  EXPECT_EQ(lp3.weight, 1);
  EXPECT_EQ(lp3.H, lp3.res_g * lp3.H1);
}

TEST(LowestPart, RejectsBadSplit) {
  const auto g = generic_system<ZZ>(2, {1, 1});
  EXPECT_THROW(zariski_lowest_part(g, {2, 0}), SignatureMismatch);
}

// With f_i = X_n^{d_i-1} (sum_j V_ij X_j) + h_i (h_i free of X_n^{d_i-1}),
// Res - det(V) H_1 vanishes to order two in the V_{i,n}.
TEST(LowestPart, LinearSplitShape) {
  const auto g = generic_system<ZZ>(2, {2, 1});
  const auto lp = zariski_lowest_part(g, {1, 0});
  // V_{1,2} and V_{2,2} are the coefficients of X_2^2 in f_1 and X_2 in f_2
  const int v12 = g.var(0, {0, 2}), v22 = g.var(1, {0, 1});
  const auto diff = lp.res - lp.H;
  const auto zero = Poly<ZZ>(ZZ{}, g.coeffs.nv);
  auto at_zero = [&](const Poly<ZZ>& p) {
    auto im = std::vector<Poly<ZZ>>();
    for (int v = 0; v < g.coeffs.nv; ++v) im.push_back(v == v12 || v == v22 ? zero : g.coeffs.var(v));
    return substitute(p, im);
  };
  EXPECT_TRUE(at_zero(diff).is_zero());
  EXPECT_TRUE(at_zero(partial_derivative(diff, v12)).is_zero());
  EXPECT_TRUE(at_zero(partial_derivative(diff, v22)).is_zero());
}
