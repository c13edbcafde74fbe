#include "common.hpp"

using namespace elimkit;
using namespace elimkit::test;

TEST(GenericCache, EntryShape) {
  const auto e = generic_disc(DiscKind::points, 3, {2, 1});
  EXPECT_EQ(e->n, 3);
  EXPECT_EQ(e->degrees, (std::vector<int>{2, 1}));
  EXPECT_EQ(e->sys.coeffs.nv, 9);
  EXPECT_EQ(e->disc.total_degree(), disc_points_total_degree({2, 1}));
  EXPECT_EQ(generic_disc(DiscKind::points, 3, {2, 1}).get(), e.get());
}

TEST(GenericCache, HyperBinaryCubic) {
  const auto e = generic_disc(DiscKind::hyper, 2, {3});
  EXPECT_EQ(e->disc.total_degree(), 4);
  const auto x = X(2, 0), y = X(2, 1);
  const auto f = x * x * x + y * y * y;
  EXPECT_EQ(specialize<ZZ>(*e, {f}), disc_hyper(f));
}

TEST(GenericCache, TooLarge) {
  EXPECT_THROW(generic_disc(DiscKind::points, 3, {3, 3}), TooLarge);
}

TEST(GenericCache, SpecializeChecksShape) {
  const auto e = generic_disc(DiscKind::points, 2, {2});
  EXPECT_THROW(specialize<ZZ>(*e, {X(2, 0)}), SignatureMismatch);
}

TEST(ProjectivePoints, Counts) {
  EXPECT_EQ(projective_points(2, 1, 3).points.size(), 7u);
  EXPECT_EQ(projective_points(3, 2, 2).points.size(), 10u);
  for (auto [q, e, n] : std::vector<std::tuple<std::uint32_t, int, int>>{{2, 1, 3}, {3, 1, 3}, {2, 2, 3}, {5, 1, 2}})
    EXPECT_EQ(projective_points(q, e, n).points.size(), ProjectivePointSet::expected_count(q, e, n));
}

TEST(SingularPoints, TangentConics) {
  const Zmod F5(5);
  const auto x = X(3, 0, F5), y = X(3, 1, F5), z = X(3, 2, F5);
  const auto sing = singular_points({x * z + y * y, x * z + x * x});
  ASSERT_EQ(sing.size(), 1u);
  EXPECT_EQ(sing[0], (PointGF{0, 0, 1}));
}

TEST(SingularPoints, TransversalLinesHaveNone) {
  const Zmod F3(3);
  EXPECT_TRUE(singular_points({X(3, 0, F3), X(3, 1, F3)}).empty());
}

TEST(SingularPoints, RejectsLargeModulus) {
  const Zmod F(101);
  EXPECT_THROW(singular_points({X(2, 0, F)}), UnsupportedRing);
}

TEST(MinorRelation, HoldsOnRandomSystems) {
  Rng rng(61);
  const Zmod F7(7);
  for (int t = 0; t < 20; ++t) {
    const std::vector<Poly<Zmod>> fs{random_form(F7, 3, 2, rng), random_form(F7, 3, 1, rng)};
    EXPECT_FALSE(minor_relation_violation(fs, 2));
  }
}

TEST(Poi, TangentConicsConsistent) {
  const Zmod F5(5);
  const auto x = X(3, 0, F5), y = X(3, 1, F5), z = X(3, 2, F5);
  const auto r = poi_check({x * z + y * y, x * z + x * x}, 2);
  EXPECT_EQ(r.verdict, PoiVerdict::consistent);
  ASSERT_TRUE(r.disc);
  EXPECT_EQ(*r.disc, 0u);
  EXPECT_EQ(r.singular_degree, 1);
}

TEST(Poi, TransversalConsistent) {
  const Zmod F7(7);
  const auto x = X(3, 0, F7), y = X(3, 1, F7), z = X(3, 2, F7);
  const auto r = poi_check({x * x - y * z, x}, 2);
  EXPECT_EQ(r.verdict, PoiVerdict::consistent);
  EXPECT_NE(*r.disc, 0u);
  EXPECT_FALSE(r.singular_degree);
}

TEST(Poi, CharacteristicDividesDegreeSkipped) {
  const Zmod F2(2);
  const auto r = poi_check({X(3, 0, F2) * X(3, 1, F2), X(3, 2, F2)});
  EXPECT_EQ(r.verdict, PoiVerdict::skipped);
  EXPECT_EQ(r.reason, "characteristic divides a degree");
}

TEST(Poi, InfiniteLocusSkipped) {
  const Zmod F5(5);
  const auto x = X(3, 0, F5), y = X(3, 1, F5), z = X(3, 2, F5);
  const auto r = poi_check({x * y, x * z});
  EXPECT_EQ(r.verdict, PoiVerdict::skipped);
  EXPECT_EQ(r.reason, "zero locus is not finite");
}

TEST(Poi, Suite) {
  SuiteRunner runner(3, 10);
  suites::poi(runner);
  for (const auto& c : runner.checks) EXPECT_NE(c.status, "fail") << c.id << ": " << c.detail << " " << c.witness.dump();
}

TEST(CharacteristicTwo, Suite) {
  SuiteRunner runner(3, 10);
  suites::char2_square(runner);
  for (const auto& c : runner.checks) EXPECT_NE(c.status, "fail") << c.id << ": " << c.detail << " " << c.witness.dump();
}

TEST(Suites, UnknownNameRejected) { EXPECT_THROW(run_suite("nope", 1, 1), UnknownSuite); }

TEST(Suites, ReportJson) {
  const auto rep = run_suite("char2-square", 1, 2);
  const auto j = rep.to_json();
  EXPECT_EQ(j["suite"], "char2-square");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["checks"].size(), rep.checks.size());
}
