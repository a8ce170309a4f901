#include "cli.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using orbitope::cli::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = orbitope::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "orbitope_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, CurveInfo) {
  const auto r = run({"curve-info", "--rep", "1,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["result"]["degree"], 6);
  EXPECT_EQ(j["result"]["smooth"], false);
  EXPECT_EQ(j["result"]["ambient_dim"], 4);
  EXPECT_EQ(j["config"]["rep"], "1,3");
  EXPECT_TRUE(j["config"].contains("seed"));
  EXPECT_EQ(j["version"], orbitope::cli::kVersion);
  EXPECT_TRUE(j.contains("tolerances"));

  const auto twisted = run({"curve-info", "--rep", "1,2"}).json();
  EXPECT_EQ(twisted["result"]["degree"], 4);
  EXPECT_EQ(twisted["result"]["smooth"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"no-such-command"}).code, 1);
  EXPECT_EQ(run({"curve-info"}).code, 1);
  EXPECT_EQ(run({"curve-info", "--rep", "1,x"}).code, 1);
  EXPECT_EQ(run({"curve-info", "--rep", ""}).code, 1);
  EXPECT_EQ(run({"secant-fit", "--rep", "1,3", "--degree", "2", "--mode", "symbolic"}).code, 1);
  EXPECT_EQ(run({"faces", "--rep", "1,2,3"}).code, 1);
  EXPECT_EQ(run({"membership", "--point", "1,2,abc"}).code, 1);
  EXPECT_EQ(run({"verify", "--rep", "1,3", "--poly", scratch("missing.poly").string()}).code, 1);
  EXPECT_EQ(run({"--version"}).code, 0);
}

TEST(Cli, MembershipAndFaceDimension) {
  auto j = run({"membership", "--point", "0,0,0,0"}).json();
  EXPECT_EQ(j["result"]["verdict"], "interior");
  EXPECT_EQ(j["result"]["rank"], 3);

  const auto outside = run({"face-dim", "--point", "2,0"});
  EXPECT_EQ(outside.code, 2);
  EXPECT_TRUE(outside.json()["result"]["face_dimension"].is_null());

  j = run({"face-dim", "--point", "1,0,1,0"}).json();
  EXPECT_EQ(j["result"]["face_dimension"], 0);
}

TEST(Cli, FacesAndBoundary) {
  auto j = run({"faces", "--rep", "1,2"}).json();
  EXPECT_EQ(j["result"]["basic_closed"], true);
  EXPECT_EQ(j["result"]["pq"]["closure_is_unit_interval"], true);

  j = run({"faces", "--rep", "2,5", "--s", "0", "--t", "1/2"}).json();
  EXPECT_EQ(j["result"]["basic_closed"], false);
  EXPECT_TRUE(j["result"].contains("witness_edge"));
  EXPECT_EQ(j["result"]["query"]["is_edge"],
            orbitope::is_edge(orbitope::pq_data(2, 5), orbitope::Rational(0), orbitope::Rational(1, 2)));

  j = run({"boundary", "--rep", "1,3"}).json();
  EXPECT_EQ(j["result"]["components"].size(), orbitope::boundary_components(1, 3).size());
}

TEST(Cli, SecantFitExactAndVerify) {
  const auto poly_path = scratch("f.poly");
  const auto r = run({"secant-fit", "--rep", "1,3", "--r", "2", "--degree", "8", "--mode", "exact", "--poly-out",
                      poly_path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["result"]["fit"]["nullity"], 1);
  ASSERT_EQ(j["result"]["polynomials"].size(), 1u);
  EXPECT_EQ(j["result"]["polynomials"][0]["terms"], 47);
  EXPECT_EQ(j["result"]["polynomials"][0]["degree"], 8);

  // primitive form agrees with the fixture up to sign
  const auto written = orbitope::parse_text<orbitope::Rational>(slurp(poly_path));
  const auto f = testutil::load_fixture("f_secant_b4.poly");
  EXPECT_TRUE((written - f).is_zero() || (written + f).is_zero());

  const auto v = run({"verify", "--rep", "1,3", "--poly", poly_path.string(), "--count", "2000"});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_LE(v.json()["result"]["max_residual"].get<double>(), 1e-8);

  // the same polynomial does not vanish on another curve
  EXPECT_EQ(run({"verify", "--rep", "1,2", "--poly", poly_path.string(), "--count", "200"}).code, 2);
}

TEST(Cli, SecantFitWithoutSolutionIsAVerificationFailure) {
  const auto r = run({"secant-fit", "--rep", "1,2", "--r", "2", "--degree", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["result"]["nullity"], 0);
}

TEST(Cli, BnCommands) {
  auto r = run({"bn", "witness", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["result"]["accepted"], true);
  EXPECT_EQ(j["result"]["slice_gradient"], Json::array({"-3/1", "1/1"}));

  r = run({"bn", "top-face", "--n", "5", "--theta", "0.4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GT(r.json()["result"]["certificate"]["margin"].get<double>(), 0);

  j = run({"bn", "certify-face", "--n", "3", "--params", "0,1.5"}).json();
  EXPECT_EQ(j["result"]["success"], true);
  // an arc longer than 2pi/3 is not an edge of B_4; no certificate is a result, not an error
  r = run({"bn", "certify-face", "--n", "3", "--params", "0,2.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["result"]["success"], false);

  const auto csv = scratch("slice.csv");
  r = run({"bn", "slice", "--csv-out", csv.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["f_factorization_exact"], true);
  const std::string text = slurp(csv);
  EXPECT_EQ(text.substr(0, text.find('\n')), "x,z,tag");
}

TEST(Cli, ReportsAreDeterministic) {
  const auto out_a = scratch("a.json"), out_b = scratch("b.json");
  const std::vector<std::string> base{"secant-fit", "--rep", "1,2", "--r",   "2",     "--degree",
                                      "3",          "--mode", "float", "--seed", "17", "--anchor", "0,0,0,0"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out", out_a.string()});
  b.insert(b.end(), {"--out", out_b.string()});
  const auto ra = run(a), rb = run(b);
  ASSERT_EQ(ra.code, 0) << ra.err;
  EXPECT_EQ(slurp(out_a), slurp(out_b));
  EXPECT_EQ(ra.json()["config"]["seed"], 17);

  EXPECT_EQ(run({"bn", "witness", "--n", "5"}).out, run({"bn", "witness", "--n", "5"}).out);
  EXPECT_EQ(run({"faces", "--rep", "3,4", "--polygon", "4"}).out, run({"faces", "--rep", "3,4", "--polygon", "4"}).out);
}
