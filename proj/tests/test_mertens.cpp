#include "common.hpp"

using namespace elimkit;
using namespace elimkit::test;

namespace {

const PolyRing<ZZ> kNoParams(ZZ{}, std::vector<std::string>{});

Poly<PolyRing<ZZ>> over_params(const Poly<ZZ>& f) {
  return map_coeffs(f, kNoParams, [](const mpz_class& c) { return kNoParams.from_z(c); });
}

}  // namespace

TEST(Theta, ProductOfCoordinates) {
  const auto u = mertens_universe(kNoParams, 2);
  const auto th = theta(u, {over_params(X(2, 0) * X(2, 1))});
  EXPECT_EQ(th.theta, -(u.var(u.U(0)) * u.var(u.U(1))));
  EXPECT_EQ(th.degree, 2);
  EXPECT_EQ(th.partials[0], -u.var(u.U(1)));
}

TEST(Theta, Square) {
  const auto u = mertens_universe(kNoParams, 2);
  const auto th = theta(u, {over_params(X(2, 0) * X(2, 0))});
  EXPECT_EQ(th.theta, u.var(u.U(1)) * u.var(u.U(1)));
}

TEST(Rho, BarSubstitution) {
  const auto u = mertens_universe(kNoParams, 2);
  EXPECT_EQ(rho_bar(u, u.var(u.U(0))), u.var(u.V(0)) * u.var(u.X()) + u.var(u.W(0)) * u.var(u.Y()));
}

TEST(Rho, VanishesOnDiagonal) {
  const auto u = mertens_universe(kNoParams, 3);
  auto im = identity_images(u);
  for (int i = 0; i < 3; ++i) im[u.W(i)] = u.var(u.V(i));
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(substitute(rho(u, u.var(u.U(i))), im).is_zero());
}

TEST(Rho, KillsEulerPairing) {
  // sum_i X_i rho(U_i) = 0
  const auto u = mertens_universe(kNoParams, 3);
  Poly<ZZ> s(ZZ{}, u.R.nv);
  for (int i = 0; i < 3; ++i) s += u.var(u.Xm(i)) * rho(u, u.var(u.U(i)));
  EXPECT_TRUE(s.is_zero());
}

TEST(MertensFormulas, BinaryExample) {
  const auto x = X(2, 0), y = X(2, 1);
  const std::vector<Poly<PolyRing<ZZ>>> fs{over_params(x * x - y * y), over_params(x + 2 * y)};
  EXPECT_TRUE(mertens_first(fs).holds());
  EXPECT_TRUE(mertens_second(fs).holds());
}

TEST(MertensFormulas, CommonRootBothSidesVanish) {
  const auto x = X(2, 0), y = X(2, 1);
  const std::vector<Poly<PolyRing<ZZ>>> fs{over_params(x * x - y * y), over_params(x - y)};
  const auto s = mertens_first(fs);
  EXPECT_TRUE(s.lhs.is_zero());
  EXPECT_TRUE(s.rhs.is_zero());
}

TEST(MertensFormulas, RejectsAllLinear) {
  const std::vector<Poly<PolyRing<ZZ>>> fs{over_params(X(2, 0)), over_params(X(2, 1))};
  EXPECT_THROW(mertens_first(fs), DegenerateSignature);
  EXPECT_THROW(mertens_second({over_params(X(2, 0))}), SignatureMismatch);
}

TEST(LemmaA, RepeatedLineGivesZero) {
  const auto u = mertens_universe(kNoParams, 2);
  EXPECT_TRUE(lemmaA_product(u, {{{1, 2}, {1, 2}}}).is_zero());
  EXPECT_FALSE(lemmaA_product(u, {{{1, 2}, {0, 1}}}).is_zero());
}

TEST(LemmaA, Sign) {
  EXPECT_EQ(lemmaA_sign(1), 1);
  EXPECT_EQ(lemmaA_sign(2), -1);
  EXPECT_EQ(lemmaA_sign(3), -1);
  EXPECT_EQ(lemmaA_sign(4), 1);
}

TEST(MertensFormulas, Suite) {
  SuiteRunner runner(4, 3);
  suites::mertens(runner);
  for (const auto& c : runner.checks) EXPECT_NE(c.status, "fail") << c.id << ": " << c.detail << " " << c.witness.dump();
}
