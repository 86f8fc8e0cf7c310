#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "lattisym/cli.hpp"
#include "lattisym/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lattisym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lattisym::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(LATTISYM_TEST_DATA) + "/" + name; }

lattisym::io::Json json_of(const Result& r) { return lattisym::io::Json::parse(r.out); }

}  // namespace

TEST(Cli, DirectorsOfFcc) {
  const auto r = run({"--format", "json", "directors", data("fcc.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json_of(r);
  EXPECT_EQ(doc["directors"][0][0], "1");
  EXPECT_EQ(doc["directors"][2][2], "1");
  EXPECT_EQ(doc["gram"][0][1], "1/2");
}

TEST(Cli, PointGroupOrders) {
  for (const auto& [file, order] : std::vector<std::pair<std::string, int>>{
           {"fcc.json", 48}, {"cubic.json", 48}, {"hexagonal.json", 24}, {"fcc_numeric.json", 48}}) {
    const auto r = run({"--format", "json", "point-group", data(file)});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json_of(r)["order"], order) << file;
    EXPECT_EQ(json_of(r)["closed"], true);
  }
}

TEST(Cli, ConstrainReportsDimensionAndClass) {
  auto r = run({"--format", "json", "constrain", data("cubic.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["dimension"], 3);
  EXPECT_EQ(json_of(r)["class"], "Cubic");

  r = run({"--format", "json", "--ambient", "sym21", "constrain", data("hexagonal.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["dimension"], 5);
  EXPECT_EQ(json_of(r)["class"], "TransverselyIsotropic(l3)");

  r = run({"--format", "json", "constrain", data("fcc.json"), "--generators", "R1,R2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["dimension"], 8);

  r = run({"--format", "json", "constrain", data("fcc.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["dimension"], 3);
}

TEST(Cli, TextAndJsonAgree) {
  const auto text = run({"constrain", data("hexagonal.json")});
  const auto json = run({"--format", "json", "constrain", data("hexagonal.json")});
  ASSERT_EQ(text.code, 0);
  ASSERT_EQ(json.code, 0);
  const auto doc = json_of(json);
  EXPECT_NE(text.out.find("dimension: " + std::to_string(doc["dimension"].get<int>())), std::string::npos);
  EXPECT_NE(text.out.find("class: " + doc["class"].get<std::string>()), std::string::npos);

  const auto vt = run({"verify-paper"});
  const auto vj = run({"--format", "json", "verify-paper"});
  EXPECT_EQ(vt.code, vj.code);
  const auto checks = json_of(vj)["checks"];
  // Text rows are "  STATUS  <pad> check  <pad> reference ...".
  std::vector<std::pair<std::string, std::string>> rows;
  std::istringstream lines(vt.out);
  for (std::string line; std::getline(lines, line);) {
    std::istringstream words(line);
    std::string status;
    words >> status >> std::ws;
    if (status != "PASS" && status != "FAIL") continue;
    std::string rest;
    std::getline(words, rest);
    rows.emplace_back(status, rest);
  }
  ASSERT_EQ(rows.size(), checks.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string name = checks[i]["check"].get<std::string>();
    EXPECT_EQ(rows[i].first, checks[i]["pass"].get<bool>() ? "PASS" : "FAIL") << name;
    EXPECT_EQ(rows[i].second.rfind(name + "  ", 0), 0u) << name;
  }
}

TEST(Cli, NumericModeAgreesWithExact) {
  const auto e = run({"--format", "json", "constrain", data("fcc.json")});
  const auto n = run({"--format", "json", "constrain", data("fcc_numeric.json")});
  ASSERT_EQ(e.code, 0);
  ASSERT_EQ(n.code, 0) << n.err;
  EXPECT_EQ(json_of(n)["mode"], "numeric");
  EXPECT_EQ(json_of(n)["dimension"], json_of(e)["dimension"]);
  EXPECT_EQ(json_of(n)["class"], json_of(e)["class"]);
}

TEST(Cli, Classify) {
  auto r = run({"--format", "json", "classify", data("c_iso.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = json_of(r);
  EXPECT_EQ(doc["class"], "Isotropic");
  EXPECT_EQ(doc["positive_definite"], true);
  EXPECT_DOUBLE_EQ(doc["isotropy_distance"].get<double>(), 0.0);

  r = run({"--format", "json", "classify", data("c_cubic_a3_b1_c5.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["class"], "Cubic");
  EXPECT_GT(json_of(r)["isotropy_distance"].get<double>(), 0.0);

  r = run({"--format", "json", "classify", data("random.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  doc = json_of(r);
  EXPECT_EQ(doc["class"], "Unrecognized");
  EXPECT_TRUE(doc["positive_definite"].is_null());
}

TEST(Cli, HatAndCatalog) {
  auto r = run({"--format", "json", "hat", "Q_pi2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["hat"].size(), 6u);
  EXPECT_EQ(run({"hat", "Q_nope"}).code, lattisym::cli::kInvalidGenerator);

  r = run({"--format", "json", "catalog", "hexagonal-prism"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["generators"].size(), 3u);
  EXPECT_EQ(run({"catalog"}).code, 0);
  EXPECT_EQ(run({"catalog", "R1"}).code, 0);
}

TEST(Cli, ReproductionReportIsDeterministicAndReportsFailures) {
  const auto a = run({"--format", "json", "--seed", "5", "verify-paper"});
  const auto b = run({"--format", "json", "--seed", "5", "verify-paper"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, lattisym::cli::kVerificationFailed);
  const auto doc = json_of(a);
  EXPECT_EQ(doc["pass"], false);
  int failed = 0;
  for (const auto& c : doc["checks"]) failed += c["pass"].get<bool>() ? 0 : 1;
  EXPECT_EQ(failed, 4);
  EXPECT_EQ(run({"--mode", "numeric", "verify-paper"}).code, lattisym::cli::kParse);
}

TEST(Cli, ExitCodes) {
  using namespace lattisym::cli;
  EXPECT_EQ(run({"directors", data("collinear.json")}).code, kDegenerate);
  const auto outside = run({"directors", data("outside_field.json")});
  EXPECT_EQ(outside.code, kDegenerate);
  EXPECT_NE(outside.err.find("--mode numeric"), std::string::npos);
  EXPECT_EQ(run({"directors", data("malformed.json")}).code, kParse);
  EXPECT_EQ(run({"directors", data("missing.json")}).code, kParse);
  EXPECT_EQ(run({"--mode", "numeric", "directors", data("fcc.json")}).code, kParse);
  EXPECT_EQ(run({"--tol", "1e-6", "directors", data("fcc.json")}).code, kParse);
  EXPECT_EQ(run({"constrain", data("fcc.json"), "--generators", "R1,Q_sum"}).code, kInvalidGenerator);
  EXPECT_EQ(run({"constrain", data("fcc.json"), "--generators", "R7"}).code, kInvalidGenerator);
  EXPECT_EQ(run({"frobnicate"}).code, kParse);
  EXPECT_EQ(run({}).code, kParse);
  EXPECT_EQ(run({"--help"}).code, kOk);
}
