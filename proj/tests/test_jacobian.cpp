#include "common.hpp"

using namespace elimkit;
using namespace elimkit::test;

TEST(JacobianMinor, BinaryFormIsFirstPartial) {
  const auto f = generic_polynomial(2, 2);
  EXPECT_EQ(jac_minor<PolyRing<ZZ>>({f}, 1), partial_derivative(f, 0));
  EXPECT_EQ(jac_minor<PolyRing<ZZ>>({f}, 0), -partial_derivative(f, 1));
}

TEST(JacobianMinor, PurePowers) {
  const std::vector<Poly<ZZ>> fs{mono(4, {2, 0, 0, 0}), mono(4, {0, 3, 0, 0}), mono(4, {0, 0, 1, 0})};
  EXPECT_EQ(jac_minor(fs, 3), mono(4, {1, 2, 0, 0}, 6));
}

TEST(JacobianMinor, TernaryExample) {
  const auto x1 = X(3, 0), x2 = X(3, 1), x3 = X(3, 2);
  EXPECT_EQ(jac_minor<ZZ>({x1 * x3, x2 * x3}, 2), x3 * x3);
}

TEST(JacobianMinor, DegreeIndependentOfIndex) {
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    const std::vector<int> d{uniform_int(rng, 1, 3), uniform_int(rng, 1, 3)};
    std::vector<Poly<ZZ>> fs{random_nonzero_form(ZZ{}, 3, d[0], rng), random_nonzero_form(ZZ{}, 3, d[1], rng)};
    for (const auto& J : jac_minors(fs)) {
      if (J.is_zero()) continue;
      EXPECT_EQ(is_homogeneous(J)->degree, d[0] + d[1] - 2);
    }
  }
}

TEST(JacobianMinor, LinearSpecializationOfLastMinor) {
  // f_i = sum_j U_ij X_j X_n^{d_i - 1} sends J_n to X_n^{sum(d_i-1)} det(U)
  const std::vector<std::vector<long>> U{{2, -1}, {3, 5}};
  const std::vector<int> d{2, 3};
  std::vector<Poly<ZZ>> fs;
  for (int i = 0; i < 2; ++i) {
    Poly<ZZ> l(ZZ{}, 3);
    for (int j = 0; j < 2; ++j) l += U[i][j] * X(3, j);
    fs.push_back(l * poly_pow(X(3, 2), d[i] - 1));
  }
  EXPECT_EQ(jac_minor(fs, 2), mono(3, {0, 0, 3}, 13));
}

TEST(JacobianFull, LastRowUnitVector) {
  Rng rng(32);
  const std::vector<Poly<ZZ>> fs{random_form(ZZ{}, 3, 2, rng), random_form(ZZ{}, 3, 3, rng)};
  EXPECT_EQ(jac_full(fs, X(3, 2)), jac_minor(fs, 2));
}

TEST(JacobianFull, LinearFormCombinesMinors) {
  Rng rng(33);
  const std::vector<Poly<ZZ>> fs{random_form(ZZ{}, 3, 2, rng), random_form(ZZ{}, 3, 2, rng)};
  const auto F = 2 * X(3, 0) - 3 * X(3, 1) + 7 * X(3, 2);
  const auto J = jac_minors(fs);
  EXPECT_EQ(jac_full(fs, F), 2 * J[0] - 3 * J[1] + 7 * J[2]);
}

TEST(JacobianFull, MatchesDirectDeterminant) {
  Rng rng(34);
  for (int t = 0; t < 10; ++t) {
    const std::vector<Poly<ZZ>> fs{random_form(ZZ{}, 3, 2, rng), random_form(ZZ{}, 3, 2, rng)};
    const auto F = random_form(ZZ{}, 3, 2, rng);
    const std::vector<Poly<ZZ>> rows{fs[0], fs[1], F};
    Matrix<PolyRing<ZZ>> M(main_ring(ZZ{}, 3), 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) M.at(i, j) = partial_derivative(rows[i], j);
    EXPECT_EQ(jac_full(fs, F), det_bareiss(M));
  }
}

TEST(Hessian, BinaryQuadric) {
  const auto g = generic_system<ZZ>(2, {2});
  const auto& R = g.coeffs;
  const auto a = R.var(g.var(0, {2, 0})), b = R.var(g.var(0, {1, 1})), c = R.var(g.var(0, {0, 2}));
  EXPECT_EQ(hess_det(g.forms[0]).constant_term(), a * c * R.from_int(4) - b * b);
}

TEST(Hessian, Symmetric) {
  Rng rng(35);
  const auto f = random_form(ZZ{}, 3, 3, rng);
  const auto H = hessian(f);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(H.at(i, j), H.at(j, i));
}

TEST(Hessian, CharacteristicTwoQuadrics) {
  const Zmod F2(2);
  EXPECT_TRUE(hess_det(generic_polynomial(3, 2, F2)).constant_term().is_zero());
  const auto h4 = hess_det(generic_polynomial(4, 2, F2)).constant_term();
  EXPECT_FALSE(h4.is_zero());
  EXPECT_TRUE(poly_sqrt(h4));
}

TEST(Determinant, SparseReductionAgreesWithElimination) {
  Rng rng(36);
  for (int t = 0; t < 300; ++t) {
    const int n = uniform_int(rng, 5, 9);
    auto A = random_int_matrix(rng, n, n, 2);
    for (auto& row : A)
      for (auto& x : row)
        if (uniform_int(rng, 0, 2)) x = 0;
    const auto M = to_matrix(ZZ{}, A);
    const auto ref = det_bareiss(M);
    EXPECT_EQ(determinant(M), ref);
    EXPECT_EQ(det_berkowitz(M), ref);
    const Zmod k(7);
    Matrix<Zmod> Mm(k, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Mm.at(i, j) = k.from_int(A[i][j]);
    EXPECT_EQ(determinant(Mm), k.from_z(ref));
  }
}

TEST(Determinant, CompositeModulus) {
  Rng rng(37);
  const Zmod k(12);
  for (int t = 0; t < 50; ++t) {
    const int n = uniform_int(rng, 3, 7);
    const auto A = random_int_matrix(rng, n, n, 5);
    Matrix<Zmod> M(k, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M.at(i, j) = k.from_int(A[i][j]);
    EXPECT_EQ(determinant(M), k.from_z(det_bareiss(to_matrix(ZZ{}, A))));
  }
}

TEST(EulerResultants, OverPrimeField) {
  SuiteRunner runner(3, 20);
  suites::disc_points_props(runner);
  for (const auto& c : runner.checks)
    if (c.id == "jacobian-expansion" || c.id == "euler-resultants") EXPECT_EQ(c.status, "pass") << c.id << c.detail;
}
