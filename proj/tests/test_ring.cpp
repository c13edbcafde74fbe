#include "common.hpp"

using namespace elimkit;

TEST(ExactDivide, Integers) { EXPECT_EQ(exact_divide(ZZ{}, mpz_class(12), mpz_class(4)), 3); }

TEST(ExactDivide, PrimeModulus) { EXPECT_EQ(exact_divide(Zmod(5), 3u, 2u), 4u); }

TEST(ExactDivide, AmbiguousQuotientRejected) { EXPECT_THROW(exact_divide(Zmod(4), 2u, 2u), NotDivisible); }

TEST(ExactDivide, DivisionByZero) {
  EXPECT_THROW(exact_divide(ZZ{}, mpz_class(1), mpz_class(0)), DivisionByZero);
  EXPECT_THROW(exact_divide(Zmod(7), 1u, 0u), DivisionByZero);
}

TEST(ExactDivide, NotAMultiple) { EXPECT_THROW(exact_divide(ZZ{}, mpz_class(7), mpz_class(2)), NotDivisible); }

TEST(ExactDivide, RoundTripAllRings) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const mpz_class a = uniform_int(rng, -50, 50), b = uniform_int(rng, 1, 20);
    EXPECT_EQ(exact_divide(ZZ{}, a * b, b) * b, a * b);
    mpq_class qa(uniform_int(rng, -9, 9), uniform_int(rng, 1, 9)), qb(uniform_int(rng, 1, 9), 7);
    qa.canonicalize();
    qb.canonicalize();
    EXPECT_EQ(mpq_class(exact_divide(QQ{}, qa, qb) * qb), qa);
    for (std::uint64_t m : {2u, 6u, 7u, 9u, 101u}) {
      const Zmod k(m);
      const auto x = random_elem(k, rng, 0), y = random_elem(k, rng, 0);
      const auto p = k.mul(x, y);
      try {
        EXPECT_EQ(k.mul(exact_divide(k, p, y), y), p);
      } catch (const NotDivisible&) {
        EXPECT_FALSE(k.prime && y != 0);
      } catch (const DivisionByZero&) {
        EXPECT_EQ(y, 0u);
      }
    }
  }
}

TEST(CanonicalLift, Examples) {
  EXPECT_EQ(canonical_lift(Zmod(7), 3), 3);
  EXPECT_EQ(canonical_lift(Zmod(7), 0), 0);
  EXPECT_EQ(canonical_lift(Zmod(2), 1), 1);
}

TEST(CanonicalLift, ReduceRecovers) {
  for (std::uint64_t m : {2u, 10u, 97u})
    for (std::uint64_t a = 0; a < m; ++a) EXPECT_EQ(Zmod(m).from_z(canonical_lift(Zmod(m), a)), a);
}

TEST(Content, Integers) {
  EXPECT_EQ(content(ZZ{}, {6, 10, 15}), 1);
  EXPECT_EQ(content(ZZ{}, {4, 8}), 4);
  EXPECT_EQ(content(ZZ{}, {0, 0}), 0);
}

TEST(Content, PrimeModulus) {
  EXPECT_EQ(content(Zmod(7), {0, 3}), 1u);
  EXPECT_EQ(content(Zmod(7), {0, 0}), 0u);
}

TEST(Content, CompositeModulusUnsupported) { EXPECT_THROW(content(Zmod(6), {2, 4}), UnsupportedRing); }

TEST(Content, ScalesWithFactor) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    std::vector<mpz_class> a, ca;
    const mpz_class c = uniform_int(rng, 1, 30);
    for (int i = 0; i < 4; ++i) {
      a.push_back(uniform_int(rng, -40, 40));
      ca.push_back(c * a.back());
    }
    EXPECT_EQ(content(ZZ{}, ca), c * content(ZZ{}, a));
  }
}

TEST(Rationals, Canonical) {
  const QQ q;
  EXPECT_EQ(q.str(q.add(mpq_class(1, 2), mpq_class(1, 3))), "5/6");
  EXPECT_EQ(q.str(q.mul(mpq_class(-1, 2), mpq_class(2, 1))), "-1");
}

TEST(Modular, StoresReduced) {
  const Zmod k(7);
  EXPECT_EQ(k.from_int(-1), 6u);
  EXPECT_EQ(k.from_int(15), 1u);
  EXPECT_THROW(Zmod(1), UnsupportedRing);
}

TEST(FiniteField, MultiplicativeGroupOrder) {
  for (auto [q, e] : std::vector<std::pair<std::uint32_t, int>>{{2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
    const GF F(q, e);
    for (std::uint32_t a = 1; a < F.t->size; ++a) EXPECT_TRUE(F.is_one(ring_pow(F, a, F.t->size - 1)));
  }
}
