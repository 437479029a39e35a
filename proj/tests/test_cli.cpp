#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string data_path(const std::string& name) { return std::string(COXREP_DATA_DIR) + "/" + name; }

Result run(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.ends_with(".json") && !a.starts_with("/")) a = data_path(a);
  }
  std::ostringstream out, err;
  int code = coxrep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST(Cli, WeylInversionGolden) {
  auto r = run({"weyl", "inv", "--quiver", "a2.json", "--word", "1,2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(trimmed(r.out), "[[1,0],[1,1]]");
}

TEST(Cli, SortableCountGolden) {
  auto r = run({"sortable", "count", "--quiver", "a4.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(trimmed(r.out), "42");
  EXPECT_EQ(trimmed(run({"sortable", "count", "--quiver", "a3_sink2.json"}).out), "14");
}

TEST(Cli, TfcVerifyGolden) {
  auto r = run({"tfc", "verify", "--quiver", "a3_123.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"sortable_count\":14"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"tfc_count\":14"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"pass\":true"), std::string::npos) << r.out;
}

TEST(Cli, EveryLeafRunsOnSampleData) {
  const std::vector<std::vector<std::string>> cmds = {
      {"quiver", "show", "--quiver", "d4.json"},
      {"quiver", "mutate", "--quiver", "a3_sink2.json", "--vertex", "2"},
      {"quiver", "type", "--quiver", "d4.json"},
      {"form", "euler", "--quiver", "kronecker.json", "--beta", "1,0", "--gamma", "0,1"},
      {"form", "sym", "--quiver", "a2.json", "--beta", "1,0", "--gamma", "0,1"},
      {"weyl", "reduce", "--quiver", "a2.json", "--word", "1,1,2"},
      {"weyl", "descent", "--quiver", "a2.json", "--word", "1,2", "--vertex", "1"},
      {"roots", "list", "--quiver", "d4.json"},
      {"roots", "list", "--quiver", "kronecker.json", "--height-bound", "5"},
      {"roots", "classify", "--quiver", "kronecker.json", "--vector", "1,1"},
      {"sortable", "check", "--quiver", "a2.json", "--word", "1,2"},
      {"sortable", "enumerate", "--quiver", "a2.json"},
      {"sortable", "enumerate", "--quiver", "kronecker.json", "--length-bound", "3"},
      {"rep", "hom", "--quiver", "a2.json", "--rep", "a2_p2.json", "--rep2", "a2_s1.json"},
      {"rep", "ext", "--quiver", "a2.json", "--rep", "a2_s1.json", "--rep2", "a2_p2.json"},
      {"rep", "reflect", "--quiver", "a3_sink2.json", "--rep", "a3_sink2_full.json", "--vertex", "2"},
      {"rep", "decompose", "--quiver", "a2.json", "--rep", "a2_s1_plus_p2.json"},
      {"rep", "indec", "--quiver", "d4.json", "--vector", "1,2,1,1"},
      {"tfc", "of-word", "--quiver", "a2.json", "--word", "1,2"},
      {"tfc", "to-word", "--quiver", "a2.json", "--class", "a2_class_s2.json"},
      {"tfc", "enumerate", "--quiver", "a2.json"},
      {"tfc", "verify", "--quiver", "a1.json"},
  };
  for (const auto& c : cmds) {
    auto r = run(c);
    EXPECT_EQ(r.code, 0) << c[0] << " " << c[1] << ": " << r.err;
    EXPECT_FALSE(r.out.empty()) << c[0] << " " << c[1];
    auto t = c;
    t.push_back("--format");
    t.push_back("table");
    auto rt = run(t);
    EXPECT_EQ(rt.code, 0) << c[0] << " " << c[1] << " (table): " << rt.err;
  }
}

TEST(Cli, SpecificOutputs) {
  EXPECT_EQ(trimmed(run({"form", "euler", "--quiver", "kronecker.json", "--beta", "1,0", "--gamma", "0,1"}).out), "-2");
  EXPECT_EQ(trimmed(run({"roots", "classify", "--quiver", "kronecker.json", "--vector", "1,1"}).out),
            "\"Imaginary\"");
  EXPECT_NE(run({"tfc", "to-word", "--quiver", "a2.json", "--class", "a2_class_s2.json"}).out.find("\"word\":[2]"),
            std::string::npos);
  // A predicate answers false rather than failing.
  auto chk = run({"sortable", "check", "--quiver", "a2.json", "--word", "2,1"});
  EXPECT_EQ(chk.code, 0);
  EXPECT_EQ(trimmed(chk.out), "false");
  auto dec = run({"rep", "decompose", "--quiver", "a2.json", "--rep", "a2_s1_plus_p2.json"});
  EXPECT_NE(dec.out.find("\"root\":[1,0]"), std::string::npos) << dec.out;
  EXPECT_NE(dec.out.find("\"root\":[1,1]"), std::string::npos) << dec.out;
  auto refl = run({"rep", "reflect", "--quiver", "a3_sink2.json", "--rep", "a3_sink2_full.json", "--vertex", "2"});
  EXPECT_NE(refl.out.find("\"dims\":[1,1,1]"), std::string::npos) << refl.out;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"weyl"}).code, 2);
  EXPECT_EQ(run({"weyl", "inv", "--word", "1"}).code, 2);  // missing --quiver
  EXPECT_EQ(run({"weyl", "inv", "--quiver", "a2.json", "--word", "1", "--bogus", "3"}).code, 2);
  EXPECT_EQ(run({"rep", "hom", "--quiver", "a2.json", "--rep", "a2_s1.json", "--rep2", "a2_s1.json", "--field", "7"})
                .code,
            2);
  EXPECT_EQ(run({"weyl", "inv", "--quiver", "a2.json", "--word", "1,x"}).code, 2);
  EXPECT_EQ(run({"quiver", "show", "--quiver", "a2.json", "--format", "xml"}).code, 2);
}

TEST(Cli, DomainErrorsExitOneWithTaggedJson) {
  auto expect_kind = [](const Result& r, const std::string& kind) {
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("\"kind\":\"" + kind + "\""), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
  };
  expect_kind(run({"weyl", "inv", "--quiver", "a2.json", "--word", "1,1"}), "non_reduced");
  expect_kind(run({"weyl", "inv", "--quiver", "a2.json", "--word", "3"}), "range");
  expect_kind(run({"quiver", "mutate", "--quiver", "a3_123.json", "--vertex", "2"}), "vertex_kind");
  expect_kind(run({"tfc", "of-word", "--quiver", "a2.json", "--word", "2,1"}), "not_sortable");
  expect_kind(run({"rep", "indec", "--quiver", "a2.json", "--vector", "2,0"}), "not_a_root");
  expect_kind(run({"rep", "indec", "--quiver", "kronecker.json", "--vector", "1,2"}), "scope");
  expect_kind(run({"form", "euler", "--quiver", "a2.json", "--beta", "1", "--gamma", "0,1"}), "dimension");
  expect_kind(run({"quiver", "show", "--quiver", "missing.json"}), "parse");
}

TEST(Cli, DeterministicOutput) {
  for (const auto& c : std::vector<std::vector<std::string>>{{"tfc", "enumerate", "--quiver", "d4.json"},
                                                             {"sortable", "enumerate", "--quiver", "a3_sink2.json"},
                                                             {"roots", "list", "--quiver", "d4.json"}}) {
    auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}
