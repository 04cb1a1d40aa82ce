#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "equiform/errors.hpp"
#include "params_io.hpp"

namespace equiform::cli {
namespace {

using R = Rational;

const char* kBlock211 =
    R"({"s_prime":"1","omega":[0,0,"2",0,0,0,0,0,"2",0,0,0,0,0,"2",0,0,0,0,0,0],)"
    R"("d_prime":[0,0,0,0,0,"1",0]})";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "equiform");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& content, const std::string& name) {
    path_ = std::filesystem::temp_directory_path() / ("equiform_cli_test_" + name);
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(ParseParams, Block211IsExact) {
  const auto any = parse_params_text(kBlock211);
  ASSERT_TRUE(std::holds_alternative<MotionParams<R>>(any));
  EXPECT_EQ(std::get<MotionParams<R>>(any), block_rotation_instance<R>(R(2), R(1), R(1)));
}

TEST(ParseParams, RationalStrings) {
  const auto any = parse_params_text(
      R"({"s_prime":"-3/4","omega":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],"d_prime":[0,0,0,0,0,0,0]})");
  EXPECT_EQ(std::get<MotionParams<R>>(any).s_prime, R(-3, 4));
}

TEST(ParseParams, FloatsSelectFloatMode) {
  const auto any = parse_params_text(
      R"({"s_prime":1.5,"omega":[0,0,1,0,0,0,0,0,1,0,0,0,0,0,1,0,0,0,0,0,0],"d_prime":[0,0,0,0,0,3.1622776601683795,0]})");
  ASSERT_TRUE(std::holds_alternative<MotionParams<double>>(any));
  EXPECT_DOUBLE_EQ(std::get<MotionParams<double>>(any).s_prime, 1.5);
}

TEST(ParseParams, Errors) {
  EXPECT_THROW(parse_params_text(
                   R"({"s_prime":"1","omega":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],"d_prime":[0,0,0,0,0,0,0]})"),
               InputError);
  EXPECT_THROW(parse_params_text(
                   R"({"s_prime":1.5,"omega":["1/2",0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],"d_prime":[0,0,0,0,0,0,0]})"),
               InputError);
  EXPECT_THROW(parse_params_text(
                   R"({"s_prime":"x","omega":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],"d_prime":[0,0,0,0,0,0,0]})"),
               InputError);
  EXPECT_THROW(parse_params_text(R"({"s_prime":"1","omega":[0]})"), InputError);
  EXPECT_THROW(parse_params_text("{ not json"), InputError);
}

TEST(ParseParams, ExactModeRejectsFloats) {
  EXPECT_THROW(parse_params_text(
                   R"({"s_prime":0.5,"omega":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],"d_prime":[0,0,0,0,0,0,0]})",
                   ScalarMode::exact),
               InputError);
}

TEST(ParseParams, JsonRoundTrip) {
  const auto p = block_rotation_instance<R>(R(2, 3), R(-5, 7), R(1, 9));
  const auto back = parse_params(to_json(p));
  EXPECT_EQ(std::get<MotionParams<R>>(back), p);
}

TEST(Run, CurvatureOfBlock211) {
  TempFile f(kBlock211, "block211.json");
  const auto r = invoke({"curvature", f.path()});
  EXPECT_EQ(r.code, kPass) << r.err;
  EXPECT_NE(r.out.find("constant K = 1"), std::string::npos) << r.out;
}

TEST(Run, ZeroMotion) {
  TempFile f(R"({"s_prime":0,"omega":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],"d_prime":[0,0,0,0,0,0,0]})",
             "zero.json");
  EXPECT_EQ(invoke({"check", f.path()}).code, kPass);
  EXPECT_EQ(invoke({"curvature", f.path()}).code, kInputError);
}

TEST(Run, InputErrors) {
  EXPECT_EQ(invoke({"curvature", "/nonexistent/params.json"}).code, kInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kInputError);
  TempFile bad(R"({"s_prime":"1","omega":[1,2]})", "bad.json");
  EXPECT_EQ(invoke({"check", bad.path()}).code, kInputError);
}

TEST(Run, FailingCheckExitsOne) {
  TempFile f(R"({"s_prime":0,"omega":[0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],"d_prime":[0,0,0,0,0,0,0]})",
             "w3.json");
  EXPECT_EQ(invoke({"check", f.path()}).code, kFail);
}

TEST(Run, VerifyTheorems) {
  TempFile f(kBlock211, "verify211.json");
  EXPECT_EQ(invoke({"verify", "--theorem", "3.4", f.path()}).code, kPass);
  EXPECT_EQ(invoke({"verify", "--theorem", "3.1", f.path()}).code, kFail);
  const auto bound = invoke({"verify", "--theorem", "cor-bound", "--count", "50", "--seed", "7"});
  EXPECT_EQ(bound.code, kPass) << bound.out << bound.err;
  const auto a = invoke({"verify", "--theorem", "3.3a"});
  EXPECT_EQ(a.code, kPass);
  EXPECT_NE(a.out.find("search exhausted"), std::string::npos);
}

TEST(Run, MetricCompare) {
  TempFile f(kBlock211, "metric211.json");
  EXPECT_EQ(invoke({"metric", "--compare", f.path()}).code, kPass);
}

TEST(Run, ScanCsvIsDeterministic) {
  const auto a = invoke({"scan", "--count", "6", "--seed", "5"});
  const auto b = invoke({"scan", "--count", "6", "--seed", "5"});
  ASSERT_EQ(a.code, kPass) << a.err;
  EXPECT_EQ(a.out, b.out);
  const std::string header =
      "seed_index,s_prime,omega_3,omega_9,omega_15,omega_1,omega_2,omega_4,omega_5,omega_6,omega_7,"
      "omega_8,omega_10,omega_11,omega_12,omega_13,omega_14,d_prime_4,d_prime_5,d_prime_6,d_prime_7,"
      "beta,delta,K,constant";
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), header);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 7);
}

TEST(Run, SampleIsDeterministic) {
  const auto a = invoke({"sample", "--family", "General34", "--count", "3", "--seed", "9"});
  const auto b = invoke({"sample", "--family", "General34", "--count", "3", "--seed", "9"});
  EXPECT_EQ(a.code, kPass);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace equiform::cli
