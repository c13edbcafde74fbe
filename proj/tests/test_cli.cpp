#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "common.hpp"

using namespace elimkit;
using namespace elimkit::test;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args, const std::string& input = {}) {
  namespace fs = std::filesystem;
  static int counter = 0;
  const auto path = fs::temp_directory_path() / ("elimkit_cli_" + std::to_string(::getpid()) + "_" +
                                                 std::to_string(counter++) + ".json");
  {
    std::ofstream f(path);
    f << input;
  }
  const std::string cmd = std::string(ELIMKIT_CLI_PATH) + " " + args + " < " + path.string() + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  fs::remove(path);
  return r;
}

std::string doc(const std::vector<Poly<ZZ>>& fs) { return witness_of(fs).dump(); }

}  // namespace

TEST(Cli, ResultantOfPurePowers) {
  const auto r = run_cli("res", doc(suites::pure_powers(3, {2, 3, 4})));
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["op"], "res");
  EXPECT_EQ(j["result"], "1");
}

TEST(Cli, DiscHyperDiagonalCubic) {
  const auto f = poly_pow(X(2, 0), 3) + poly_pow(X(2, 1), 3);
  const auto r = run_cli("disc-hyper", doc({f}));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["result"], "27");
}

TEST(Cli, DiscPointsAllLinear) {
  const auto r = run_cli("disc-points", doc({X(3, 0) + X(3, 1), X(3, 2)}));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["result"], "1");
}

TEST(Cli, RingOverride) {
  const auto f = 2 * (X(2, 0) * X(2, 0)) + 3 * (X(2, 0) * X(2, 1)) + 5 * (X(2, 1) * X(2, 1));
  const auto r = run_cli("disc-hyper --ring mod:7", doc({f}));
  ASSERT_EQ(r.code, 0);
  // 31 mod 7
  EXPECT_EQ(json::parse(r.out)["result"], "3");
}

TEST(Cli, ParseErrorExitCode) { EXPECT_EQ(run_cli("res", "{not json").code, 2); }

TEST(Cli, PreconditionExitCode) { EXPECT_EQ(run_cli("res", doc({X(3, 0), X(3, 1)})).code, 3); }

TEST(Cli, VerifySuitePasses) {
  const auto r = run_cli("verify res-core --seed 7 --trials 5");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["seed"], 7);
}

TEST(Cli, VerifyReportsSkips) {
  const auto r = run_cli("verify poi --seed 3 --trials 5");
  ASSERT_EQ(r.code, 0) << r.out;
  bool saw_skips = false;
  const auto j = json::parse(r.out);
  for (const auto& c : j["checks"])
    if (c["id"] == "random-conic-pairs") saw_skips = c["detail"].get<std::string>().find("skipped") != std::string::npos;
  EXPECT_TRUE(saw_skips);
}

TEST(Cli, UnknownSuite) { EXPECT_NE(run_cli("verify nope").code, 0); }

TEST(Json, DocumentRoundTrip) {
  Rng rng(71);
  for (int t = 0; t < 20; ++t) {
    const std::vector<Poly<ZZ>> fs{random_form(ZZ{}, 3, 2, rng), random_poly(ZZ{}, 3, 3, 4, rng)};
    const auto j = witness_of(fs);
    const auto d = document_from_json(j);
    EXPECT_EQ(d.forms(ZZ{}), fs);
    EXPECT_EQ(document_to_json(d.ring, d.variables, d.forms(ZZ{})).dump(), j.dump());
  }
}

TEST(Json, ModularAndExtensionRoundTrip) {
  Rng rng(72);
  const Zmod F(9);
  const std::vector<Poly<Zmod>> fs{random_form(F, 2, 3, rng)};
  const auto j = witness_of(fs);
  EXPECT_EQ(document_from_json(j).forms(F), fs);
  const auto g = generic_polynomial(2, 2);
  const auto jg = witness_of(std::vector<Poly<PolyRing<ZZ>>>{g});
  EXPECT_EQ(document_from_json(jg).forms(g.ring)[0], g);
}

TEST(Json, RejectsBadDocuments) {
  EXPECT_THROW(document_from_string("[]"), ParseError);
  EXPECT_THROW(document_from_string(R"({"nvars": 2})"), ParseError);
  const auto d = document_from_string(R"({"nvars": 2, "polynomials": [{"degree": 2, "terms": [{"coeff": "1", "exp": [1, 0]}]}]})");
  EXPECT_THROW(d.forms(ZZ{}), ParseError);
}
