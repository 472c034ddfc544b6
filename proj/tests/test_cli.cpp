#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = rook_orbits::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expect_code = 0) {
  args.insert(args.begin(), {"--output", "json"});
  Result r = run(args);
  EXPECT_EQ(r.code, expect_code) << r.err;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"roots", "--system", "E9"}).code, 2);
  EXPECT_EQ(run({"g2", "verify"}).code, 2);
  EXPECT_EQ(run({"g2", "verify", "--case", "13"}).code, 2);
  EXPECT_EQ(run({"g2", "classify", "--form", "{nope"}).code, 2);
  EXPECT_EQ(run({"andre", "decompose", "--n", "3", "--form", "@/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, RootsAndRooks) {
  auto j = run_json({"--system", "F4", "roots"});
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("command"), "roots");
  EXPECT_EQ(j.at("status"), "PASS");
  Result text = run({"--system", "G2", "rooks", "--filter", "nonsingular"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("rooks: PASS"), std::string::npos);
}

TEST(Cli, JsonIsDeterministic) {
  auto a = run_json({"--seed", "7", "--samples", "20", "g2", "verify", "--all"});
  auto b = run_json({"--seed", "7", "--samples", "20", "g2", "verify", "--all"});
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a.at("status"), "PASS");
}

TEST(Cli, G2Classify) {
  auto j = run_json({"g2", "classify", "--form", R"({"coeffs":{"2,1":"1"}})"});
  EXPECT_EQ(j.at("report").at("case"), 5);
}

TEST(Cli, AndreDecompose) {
  auto j = run_json({"andre", "decompose", "--n", "3", "--form", R"([["0","0","0"],["2","0","0"],["0","3","0"]])"});
  EXPECT_EQ(j.at("status"), "PASS");
  auto m = run_json({"andre", "membership", "--n", "3", "--placement", "[[1,2]]", "--xi", R"(["2"])", "--form",
                     R"([["0","0","0"],["2","0","0"],["0","0","0"]])"});
  EXPECT_EQ(m.at("status"), "PASS");
}

TEST(Cli, F4Commands) {
  EXPECT_EQ(run_json({"f4", "table", "--row", "17"}).at("status"), "PASS");
  EXPECT_EQ(run_json({"f4", "table"}).at("status"), "FLAG");
  EXPECT_EQ(run_json({"f4", "maximal"}).at("status"), "FLAG");
  EXPECT_EQ(run_json({"f4", "prop42"}, 1).at("status"), "FAIL");
  EXPECT_EQ(run_json({"f4", "certify", "--placement", "D26"}).at("status"), "PASS");
  EXPECT_EQ(run({"f4", "certify", "--placement", "D99"}).code, 2);
}

TEST(Cli, Selftest) {
  Result r = run({"selftest"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, CorruptedDataFails) {
  std::string path = ::testing::TempDir() + "corrupt_reference_data.json";
  {
    std::ofstream f(path);
    f << R"({"schema": 1, "system": "F4"})";
  }
  Result r = run({"--data", path, "f4", "table"});
  EXPECT_EQ(r.code, 1);
  ::setenv("ROOK_ORBITS_DATA", path.c_str(), 1);
  EXPECT_EQ(run({"f4", "maximal"}).code, 1);
  EXPECT_EQ(run({"--data", ROOK_ORBITS_TEST_DATA, "f4", "maximal"}).code, 0);
  ::unsetenv("ROOK_ORBITS_DATA");
}
