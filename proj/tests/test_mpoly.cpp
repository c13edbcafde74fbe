#include "common.hpp"

using namespace elimkit;
using namespace elimkit::test;

TEST(Homogeneity, Examples) {
  const auto a = is_homogeneous(X(2, 0) * X(2, 0) + X(2, 0) * X(2, 1));
  ASSERT_TRUE(a);
  EXPECT_FALSE(a->any);
  EXPECT_EQ(a->degree, 2);
  EXPECT_FALSE(is_homogeneous(X(2, 0) * X(2, 0) + X(2, 1)));
  const auto z = is_homogeneous(Poly<ZZ>(ZZ{}, 2));
  ASSERT_TRUE(z);
  EXPECT_TRUE(z->any);
}

TEST(PartialDerivative, Examples) {
  EXPECT_EQ(partial_derivative(mono(2, {2, 1}), 0), mono(2, {1, 1}, 2));
  EXPECT_TRUE(partial_derivative(mono(2, {3, 0}), 1).is_zero());
  const Zmod F3(3);
  EXPECT_TRUE(partial_derivative(mono(1, {3}, 1, F3), 0).is_zero());
}

TEST(Dehomogenize, Examples) {
  const auto f = X(2, 0) * X(2, 0) + X(2, 0) * X(2, 1);
  EXPECT_EQ(dehomogenize(f, 1, Dehom::one), mono(1, {2}) + mono(1, {1}));
  EXPECT_EQ(dehomogenize(f, 1, Dehom::zero), mono(2, {2, 0}));
  EXPECT_EQ(dehomogenize(mono(2, {0, 3}), 1, Dehom::one), Poly<ZZ>::constant(ZZ{}, 1, 1));
}

TEST(Substitute, Examples) {
  const auto x1 = X(2, 0), x2 = X(2, 1);
  EXPECT_EQ(substitute(x1 * x2, {x2, x1}), x1 * x2);
  EXPECT_EQ(substitute(x1 * x1, {x1 + x2, x2}), x1 * x1 + 2 * (x1 * x2) + x2 * x2);
  EXPECT_EQ(substitute(x1, {x1 * x1, x2 * x2}), x1 * x1);
}

TEST(Substitute, CommutesWithReduction) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto f = random_poly(ZZ{}, 2, 3, 4, rng);
    std::vector<Poly<ZZ>> im{random_poly(ZZ{}, 2, 2, 3, rng), random_poly(ZZ{}, 2, 2, 3, rng)};
    std::vector<Poly<Zmod>> imp{reduce_poly_mod(im[0], 7), reduce_poly_mod(im[1], 7)};
    EXPECT_EQ(reduce_poly_mod(substitute(f, im), 7), substitute(reduce_poly_mod(f, 7), imp));
  }
}

TEST(Substitute, DegreesMultiply) {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_nonzero_form(ZZ{}, 2, 3, rng);
    const std::vector<Poly<ZZ>> g{random_nonzero_form(ZZ{}, 2, 2, rng), random_nonzero_form(ZZ{}, 2, 2, rng)};
    const auto h = substitute(f, g);
    if (h.is_zero()) continue;
    EXPECT_EQ(is_homogeneous(h)->degree, 6);
  }
}

TEST(ExactPolyDivision, Examples) {
  const auto x1 = X(2, 0), x2 = X(2, 1);
  EXPECT_EQ(poly_exact_div(x1 * x1 - x2 * x2, x1 - x2), x1 + x2);
  EXPECT_THROW(poly_exact_div(mono(1, {2}) + mono(1, {0}), mono(1, {1})), NotDivisible);
  EXPECT_EQ(poly_exact_div(2 * X(1, 0), Poly<ZZ>::constant(ZZ{}, 1, 2)), X(1, 0));
}

TEST(ExactPolyDivision, RoundTrip) {
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_poly(ZZ{}, 3, 3, 5, rng), b = random_poly(ZZ{}, 3, 2, 3, rng);
    if (b.is_zero()) continue;
    EXPECT_EQ(poly_exact_div(a * b, b), a);
  }
}

TEST(PolySqrt, Examples) {
  const auto x1 = X(2, 0), x2 = X(2, 1);
  const auto s = poly_sqrt(x1 * x1 + 2 * (x1 * x2) + x2 * x2);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, x1 + x2);
  const Zmod F2(2);
  const auto y1 = X(2, 0, F2), y2 = X(2, 1, F2);
  const auto s2 = poly_sqrt(y1 * y1 + y2 * y2);
  ASSERT_TRUE(s2);
  EXPECT_EQ(*s2, y1 + y2);
  EXPECT_FALSE(poly_sqrt(x1 * x2));
}

TEST(PolySqrt, RoundTrip) {
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto s = random_poly(ZZ{}, 3, 3, 4, rng);
    const auto r = poly_sqrt(s * s);
    ASSERT_TRUE(r);
    EXPECT_TRUE(*r == s || *r == -s);
    const auto sm = random_poly(Zmod(5), 2, 3, 4, rng);
    const auto rm = poly_sqrt(sm * sm);
    ASSERT_TRUE(rm);
    EXPECT_TRUE(*rm == sm || *rm == -sm);
  }
}

TEST(WeightValuation, Examples) {
  const PolyRing<ZZ> R(ZZ{}, {"E", "U"});
  const auto E = R.var(0), U = R.var(1);
  const std::vector<int> w{1, 0};
  const auto f = E * E + U * E;
  EXPECT_EQ(weight_valuation(f, w, R.names.get()), 1);
  EXPECT_EQ(isobaric_part(f, w, 1), U * E);
  EXPECT_EQ(weight_valuation(R.from_int(5), w, R.names.get()), 0);
  EXPECT_FALSE(weight_valuation(R.zero(), w, R.names.get()));
}

TEST(WeightValuation, UnweightedSymbol) {
  const PolyRing<ZZ> R(ZZ{}, {"E", "U"});
  EXPECT_THROW(weight_valuation(R.var(1), {1, kUnweighted}, R.names.get()), UnweightedSymbol);
}

TEST(GenericPolynomial, TermCounts) {
  const auto f = generic_polynomial(2, 1);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(to_string(f, default_names(2)), "U1_1_0*X1 + U1_0_1*X2");
  EXPECT_EQ(generic_polynomial(2, 2).size(), 3u);
  EXPECT_EQ(generic_polynomial(3, 2).size(), 6u);
}

TEST(Euler, AllRings) {
  Rng rng(2);
  auto check = [&](const auto& k) {
    for (int t = 0; t < 20; ++t) {
      const int n = uniform_int(rng, 1, 4), d = uniform_int(rng, 1, 4);
      const auto f = random_form(k, n, d, rng);
      std::decay_t<decltype(f)> lhs(k, n);
      for (int i = 0; i < n; ++i) lhs += std::decay_t<decltype(f)>::variable(k, n, i) * partial_derivative(f, i);
      EXPECT_EQ(lhs, f.scale(k.from_int(d)));
    }
  };
  check(ZZ{});
  check(QQ{});
  check(Zmod(6));
  check(Zmod(7));
  check(PolyRing<ZZ>(ZZ{}, {"a", "b"}));
}

TEST(DedekindMertens, ContentIdentity) {
  Rng rng(16);
  for (int t = 0; t < 200; ++t) EXPECT_EQ(suites::dedekind_mertens_instance(rng).kind, Outcome::Kind::pass);
}

TEST(GradedLexOrder, LeadingTerm) {
  const auto f = mono(3, {0, 0, 2}) + mono(3, {1, 1, 0}) + mono(3, {2, 0, 0});
  EXPECT_EQ(to_string(f, default_names(3)), "X1^2 + X1*X2 + X3^2");
}
