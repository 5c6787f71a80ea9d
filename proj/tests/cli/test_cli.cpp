#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

using namespace minkpot;
using nlohmann::json;

struct Result {
  int code = -1;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "minkpot");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) v.push_back(l);
  return v;
}

class TempConfig {
public:
  explicit TempConfig(const std::string& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("minkpot_cfg_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << text;
  }
  ~TempConfig() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

private:
  std::filesystem::path path_;
};

TEST(CliList, FiltersByKindAndDimension) {
  const auto r = run({"list", "--dim", "6", "--kind", "P", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 9u);
  int empty = 0;
  for (const auto& l : rows) empty += json::parse(l).at("empty").get<bool>();
  EXPECT_EQ(empty, 2);
  EXPECT_EQ(lines(run({"list", "--kind", "C", "--format", "json"}).out).size(), 7u);
}

TEST(CliList, RejectsDimensionOutOfRange) {
  const auto r = run({"list", "--dim", "7"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("dimension out of range 1..6"), std::string::npos);
}

TEST(CliUsage, BadInvocationsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--all", "--class", "P3.20"}).code, 2);
  EXPECT_EQ(run({"verify", "--class", "P9.1"}).code, 2);
  EXPECT_EQ(run({"verify", "--class", "P3.20", "--format", "xml"}).code, 2);
}

TEST(CliVerify, AllPassesWithExitZero) {
  const auto r = run({"verify", "--all", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  int skipped = 0;
  for (const auto& l : lines(r.out)) {
    const auto j = json::parse(l);
    EXPECT_TRUE(j.at("pass").get<bool>()) << l;
    skipped += j.at("status") == "SKIP(EMPTY)";
  }
  EXPECT_EQ(skipped, 3);
}

TEST(CliVerify, FailureExitsOne) {
  // Round-off alone exceeds this tolerance.
  const auto r = run({"verify", "--class", "P3.20", "--tol", "1e-30", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(lines(r.out).at(0)).at("status"), "FAIL");
}

TEST(CliVerify, EmptyClassIsSkippedNotFailed) {
  const auto r = run({"verify", "--class", "P5.2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(lines(r.out).at(0)).at("status"), "SKIP(EMPTY)");
}

TEST(CliVerify, JsonKeysMatchGolden) {
  std::ifstream in(std::string(MINKPOT_GOLDEN_DIR) + "/report_keys.txt");
  ASSERT_TRUE(in);
  std::vector<std::string> golden;
  for (std::string k; std::getline(in, k);)
    if (!k.empty()) golden.push_back(k);
  const auto r = run({"verify", "--class", "C5.9", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const std::string line = lines(r.out).at(0);
  std::vector<std::string> keys;
  for (const auto& [k, v] : json::parse(line).items()) keys.push_back(k);
  EXPECT_EQ(keys, golden);
  // Keys are emitted in sorted order.
  std::size_t pos = 0;
  for (const auto& k : golden) {
    const auto at = line.find("\"" + k + "\":", pos);
    ASSERT_NE(at, std::string::npos) << k;
    pos = at;
  }
}

TEST(CliVerify, CsvHeaderAndRowCount) {
  const auto r = run({"verify", "--all", "--format", "csv"});
  const auto rows = lines(r.out);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0], "class,dim,points,max_residual,closedness_max,detected_dim,pass,seed");
  EXPECT_EQ(rows.size(), 1 + lines(run({"list", "--format", "json"}).out).size());
}

TEST(CliVerify, SameSeedIsByteIdentical) {
  const auto a = run({"verify", "--all", "--seed", "7", "--format", "json"});
  const auto b = run({"verify", "--all", "--seed", "7", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
  const auto c = run({"verify", "--all", "--seed", "8", "--format", "json"});
  EXPECT_NE(a.out, c.out);
}

TEST(CliConfig, ConstraintViolationExitsTwo) {
  TempConfig cfg(R"({"class": "P1.4", "params": {"lambda": 1.0, "mu": 1.0}})");
  const auto r = run({"verify", "--config", cfg.path()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("constraint λμ=0 violated"), std::string::npos) << r.err;
}

TEST(CliConfig, UnknownKeyRejected) {
  TempConfig cfg(R"({"class": "P3.20", "colour": "blue"})");
  const auto r = run({"verify", "--config", cfg.path()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown config key 'colour'"), std::string::npos);
}

TEST(CliConfig, MalformedInputsExitTwo) {
  EXPECT_EQ(run({"verify", "--config", "/nonexistent/minkpot.json"}).code, 2);
  TempConfig not_json("{class: P3.20");
  EXPECT_EQ(run({"verify", "--config", not_json.path()}).code, 2);
  TempConfig no_class(R"({"seed": 3})");
  EXPECT_EQ(run({"verify", "--config", no_class.path()}).code, 2);
  TempConfig bad_slot(R"({"class": "P3.20", "slots": {"Q": {"1,x": 1.0}}})");
  EXPECT_EQ(run({"verify", "--config", bad_slot.path()}).code, 2);
}

TEST(CliConfig, ExampleSlotPresetVerifies) {
  TempConfig cfg(R"({"class": "P3.19", "params": {"lambda": 1.0}, "slots": "example", "seed": 5})");
  const auto r = run({"verify", "--config", cfg.path(), "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(lines(r.out).at(0));
  EXPECT_EQ(j.at("seed"), 5);
  EXPECT_TRUE(j.at("pass").get<bool>());
}

TEST(CliConfig, ExplicitSlotTablesVerify) {
  TempConfig cfg(R"({"class": "P3.1a", "slots": {"A1": {"2": 1.5}, "A2": {"0": 1.0, "3": -0.5},
                                                  "A3": {}, "A4": {"1": 2.0}}})");
  const auto r = run({"verify", "--config", cfg.path(), "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  TempConfig missing(R"({"class": "P3.1a", "slots": {"A1": {"2": 1.5}}})");
  const auto m = run({"verify", "--config", missing.path()});
  EXPECT_EQ(m.code, 2);
  EXPECT_NE(m.err.find("missing slot 'A2'"), std::string::npos) << m.err;
}

TEST(CliDetect, ReportsDimensionAndContainment) {
  TempConfig c59(R"({"class": "C5.9", "params": {"C": 1.0}})");
  const auto a = run({"detect", "--config", c59.path()});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("dim = 5"), std::string::npos) << a.out;

  TempConfig p320(R"({"class": "P3.20"})");
  const auto b = run({"detect", "--config", p320.path()});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("contains e12, e13, e23"), std::string::npos) << b.out;

  const auto j = json::parse(lines(run({"detect", "--config", p320.path(), "--format", "json"}).out).at(0));
  EXPECT_EQ(j.at("basis_labels").size(), 10u);
  EXPECT_TRUE(j.at("contains_class_algebra").get<bool>());
}

TEST(CliDetect, EmptyClassExitsTwo) {
  TempConfig cfg(R"({"class": "P5.2"})");
  EXPECT_EQ(run({"detect", "--config", cfg.path()}).code, 2);
}

TEST(CliAppendix, PassesWithNotes) {
  const auto r = run({"appendix", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  int notes = 0, passes = 0;
  for (const auto& l : lines(r.out)) {
    const auto j = json::parse(l);
    notes += j.at("status") == "NOTE";
    passes += j.at("status") == "PASS";
  }
  EXPECT_EQ(passes, 9);
  EXPECT_EQ(notes, 2);
}

TEST(CliBinary, ProcessExitCodesMatch) {
  const std::string bin = std::string("\"") + MINKPOT_BINARY + "\"";
  auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("list"), 0);
  EXPECT_EQ(status("verify --class P3.20 --tol 1e-30"), 1);
  EXPECT_EQ(status("list --dim 0"), 2);
}

} // namespace
