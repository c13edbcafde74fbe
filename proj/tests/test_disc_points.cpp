#include "common.hpp"

using namespace elimkit;
using namespace elimkit::test;

TEST(DiscPoints, AllLinearIsOne) {
  Rng rng(41);
  const std::vector<Poly<ZZ>> fs{random_form(ZZ{}, 3, 1, rng), random_form(ZZ{}, 3, 1, rng)};
  EXPECT_EQ(disc_points(fs), 1);
}

TEST(DiscPoints, BinaryQuadratic) {
  const auto x1 = X(2, 0), x2 = X(2, 1);
  EXPECT_EQ(disc_points<ZZ>({x1 * x1 - x2 * x2}), -4);
  EXPECT_EQ(disc_points<ZZ>({x1 * x1 - 2 * (x1 * x2) + x2 * x2}), 0);
  // 4ac - b^2 with (a, b, c) = (2, 3, 5)
  EXPECT_EQ(disc_points<ZZ>({2 * (x1 * x1) + 3 * (x1 * x2) + 5 * (x2 * x2)}), 31);
}

TEST(DiscPoints, BinaryAgreesWithGenericCache) {
  const auto x1 = X(2, 0), x2 = X(2, 1);
  const std::vector<Poly<ZZ>> fs{x1 * x1 - x2 * x2};
  EXPECT_EQ(specialize(*generic_disc(DiscKind::points, 2, {2}), fs), disc_points(fs));
}

TEST(DiscPoints, DefiningIdentityEveryIndex) {
  Rng rng(42);
  for (int t = 0; t < 10; ++t) {
    const std::vector<Poly<ZZ>> fs{random_nonzero_form(ZZ{}, 3, 2, rng, 3), random_nonzero_form(ZZ{}, 3, 2, rng, 3)};
    const auto D = disc_points(fs);
    const auto J = jac_minors(fs);
    for (int i = 0; i < 3; ++i) {
      const std::vector<Poly<ZZ>> a{fs[0], fs[1], X(3, i)}, b{fs[0], fs[1], J[i]};
      EXPECT_EQ(D * resultant(a, {2, 2, 1}), resultant(b, {2, 2, 2}));
    }
  }
}

TEST(DiscPoints, CommonSingularPointGivesZero) {
  const auto x1 = X(3, 0), x2 = X(3, 1), x3 = X(3, 2);
  // both conics pass through (0:0:1) with the same tangent line
  EXPECT_EQ(disc_points<ZZ>({x1 * x3 + x2 * x2, x1 * x3 + x1 * x1}), 0);
}

TEST(DiscPoints, ReductionModPrime) {
  Rng rng(43);
  for (int t = 0; t < 10; ++t) {
    const std::vector<Poly<ZZ>> fs{random_form(ZZ{}, 3, 2, rng), random_form(ZZ{}, 3, 1, rng)};
    const auto D = disc_points(fs, {2, 1});
    for (std::uint64_t p : {2u, 7u, 9u}) {
      const std::vector<Poly<Zmod>> fp{reduce_poly_mod(fs[0], p), reduce_poly_mod(fs[1], p)};
      EXPECT_EQ(disc_points(fp, {2, 1}), Zmod(p).from_z(D)) << "p = " << p;
    }
  }
}

TEST(DiscPoints, CompositeModulusLifts) {
  const Zmod k(4);
  const std::vector<Poly<Zmod>> fs{X(2, 0, k) * X(2, 0, k) + X(2, 0, k) * X(2, 1, k)};
  DiscTrace tr;
  EXPECT_EQ(disc_points(fs, {2}, {}, &tr), k.from_int(-1));
  EXPECT_TRUE(tr.lifted);
}

TEST(DiscPoints, RejectsBadInput) {
  EXPECT_THROW(disc_points<ZZ>({X(3, 0)}), SignatureMismatch);
  EXPECT_THROW(disc_points<ZZ>({X(2, 0) * X(2, 0) + X(2, 1)}), NonHomogeneous);
}

TEST(DiscPointsDegree, Examples) {
  EXPECT_EQ(disc_points_degree({2}, 0), 2);
  EXPECT_EQ(disc_points_degree({5}, 0), 8);
  EXPECT_EQ(disc_points_degree({2, 2}, 0), 6);
  EXPECT_EQ(disc_points_degree({2, 2}, 1), 6);
  EXPECT_EQ(disc_points_total_degree({2, 2}), 12);
  EXPECT_EQ(disc_points_degree({1}, 0), 0);
  EXPECT_EQ(disc_points_weight({2, 3}), 18);
}

TEST(DiscPointsDegree, MatchesGenericDiscriminant) {
  for (const auto& d : std::vector<std::vector<int>>{{2}, {3}, {2, 1}, {2, 2}}) {
    const auto& e = *generic_disc(DiscKind::points, static_cast<int>(d.size()) + 1, d);
    EXPECT_EQ(e.disc.total_degree(), disc_points_total_degree(d));
  }
}

TEST(LinearForms, BinaryExample) {
  const ZZ Z;
  // X1^2 - X2^2 = (X1 + X2)(X1 - X2)
  EXPECT_EQ(linear_forms_disc<ZZ>(Z, {{{1, 1}, {1, -1}}}), -4);
}

TEST(LinearForms, RepeatedLineGivesZero) {
  const ZZ Z;
  EXPECT_EQ(linear_forms_disc<ZZ>(Z, {{{1, 2, 3}, {1, 2, 3}}, {{0, 1, 1}}}), 0);
}

TEST(LinearForms, MatchesProductOfLines) {
  Rng rng(44);
  const ZZ Z;
  for (int t = 0; t < 10; ++t) {
    std::vector<std::vector<LinearForm<ZZ>>> lines(2);
    for (auto& slot : lines)
      for (int j = 0; j < 2; ++j) {
        LinearForm<ZZ> l;
        for (int v = 0; v < 3; ++v) l.push_back(random_elem(Z, rng, 3));
        slot.push_back(l);
      }
    std::vector<Poly<ZZ>> fs{product_of_lines(Z, lines[0]), product_of_lines(Z, lines[1])};
    if (fs[0].is_zero() || fs[1].is_zero()) continue;
    EXPECT_EQ(disc_points(fs, {2, 2}), linear_forms_disc(Z, lines));
  }
}

TEST(LinearForms, RejectsWrongLength) {
  EXPECT_THROW(linear_forms_disc<ZZ>(ZZ{}, {{{1, 2, 3}}}), SignatureMismatch);
}

TEST(DeltaMod, PureSquaresVanish) {
  const auto D = delta_mod_delta<ZZ>({X(3, 0) * X(3, 0), X(3, 1) * X(3, 1)});
  EXPECT_TRUE(D.is_zero());
  EXPECT_EQ(D.ring.m, 2u);
}

TEST(DeltaMod, Conics) {
  Rng rng(45);
  for (int t = 0; t < 10; ++t) {
    const std::vector<Poly<ZZ>> fs{random_form(ZZ{}, 3, 2, rng), random_form(ZZ{}, 3, 2, rng)};
    const auto D = delta_mod_delta(fs);
    const auto J = jac_minors(fs);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(reduce_poly_mod(J[i], 2), X(3, i, Zmod(2)) * D);
  }
}

TEST(DeltaMod, CoprimeDegreesRejected) {
  EXPECT_THROW(delta_mod_delta<ZZ>({X(3, 0) * X(3, 0), X(3, 1)}), DeltaIsOne);
}

TEST(BaseChange, LowDegreeRejected) {
  const std::vector<Poly<ZZ>> fs{X(2, 0) * X(2, 1)};
  EXPECT_THROW(base_change_K(fs, {X(2, 0), X(2, 1)}), DegreeTooLow);
}

TEST(BaseChange, LinearFormPullsBackDiscriminant) {
  // f = X1: Disc(f) = 1 and the Res(g) exponent is 0, so K = Disc(g_1)
  const auto x1 = X(2, 0), x2 = X(2, 1);
  const std::vector<Poly<ZZ>> gs{x1 * x1 - x2 * x2, x1 * x2};
  EXPECT_EQ(base_change_K<ZZ>({x1}, gs), -4);
}

TEST(DiscPoints, Properties) {
  SuiteRunner runner(5, 10);
  suites::disc_points_props(runner);
  for (const auto& c : runner.checks) EXPECT_NE(c.status, "fail") << c.id << ": " << c.detail << " " << c.witness.dump();
}
