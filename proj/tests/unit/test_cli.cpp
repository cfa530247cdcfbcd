#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "support/fixtures.hpp"

namespace synapper {
namespace {

using testing::data_path;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fx(const std::string& name) { return data_path("fixtures/" + name + ".json"); }
std::string pr(const std::string& name) { return data_path("profiles/" + name + ".json"); }

TEST(Cli, Linearize) {
  auto r = run({"linearize", "--profile", pr("en"), fx("horse")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "Jane has a very fast brown horse\n");
  r = run({"linearize", "--profile", pr("vso"), "--sentence-case", fx("tim")});
  EXPECT_EQ(r.out, "Is Tim the hospital to going\n");
}

TEST(Cli, TranslateWithAndWithoutLexicon) {
  auto r = run({"translate", "--profile", pr("uz"), "--lexicon", data_path("lexicons/en-uz.tsv"), fx("horse")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "Janeda bir juda tez jigarrang ot bor\n");
  r = run({"translate", "--profile", pr("cy-gloss"), "--sentence-case", fx("horse")});
  EXPECT_EQ(r.out, "Has Jane horse brown very fast\n");
}

TEST(Cli, Question) {
  const auto r = run({"question", "--wh", "why", "--profile", pr("ja-gloss"), "--sentence-case", fx("tim")});
  EXPECT_EQ(r.out, "Why Tim the hospital to going is\n");
}

TEST(Cli, Compare) {
  EXPECT_EQ(run({"compare", fx("cena_a"), fx("cena_b")}).out, "DIFFERENT\n");
  EXPECT_EQ(run({"compare", fx("horse"), fx("horse")}).out, "EQUAL\n");
}

TEST(Cli, Prob) {
  EXPECT_EQ(run({"prob", "--n", "10"}).out, "2.755732e-7 (1/3628800)\n");
  const auto r = run({"prob", "--n", "1"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("\"error\":\"NTooSmall\""), std::string::npos);
}

TEST(Cli, Orders) {
  const auto r = run({"orders", fx("tim")});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("SVO\tTim is going to the hospital\n"), std::string::npos);
  EXPECT_NE(r.out.find("SOV\tTim the hospital to going is\n"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST(Cli, ValidateReportsEveryFile) {
  auto r = run({"validate", fx("horse"), fx("colette")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "OK HORSE\nOK COLETTE\n");
  r = run({"validate", fx("horse"), fx("bad_two_subjects")});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "OK HORSE\n");
  const auto report = nlohmann::json::parse(r.err);
  EXPECT_EQ(report["error"], "MultipleSubjects");
  EXPECT_FALSE(report["issues"][0]["path"].get<std::string>().empty());
}

TEST(Cli, CanonAndDot) {
  EXPECT_EQ(run({"canon", fx("horse")}).out, canonical_form(testing::fixture("horse")) + "\n");
  EXPECT_EQ(run({"dot", fx("horse")}).out, to_dot(testing::fixture("horse")));
}

TEST(Cli, Declarativize) {
  const auto path = ::testing::TempDir() + "synapper_question.txt";
  std::ofstream(path) << "Why is Tim going to the hospital?\n";
  auto r = run({"declarativize", "--profile", pr("en"), "--skeleton", fx("tim"), path});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "Tim is going to the hospital\n");
  r = run({"declarativize", "--profile", pr("en"), "--skeleton", fx("tim"), "--json", path});
  EXPECT_TRUE(structural_equal(parse_structure(r.out), testing::fixture("tim")));
  std::ofstream(path) << "Tim is going to the hospital\n";
  r = run({"declarativize", "--profile", pr("en"), "--skeleton", fx("tim"), path});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("NoWhFound"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"linearize", fx("horse")}).status, 2);
  EXPECT_EQ(run({"prob", "--n", "ten"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, MissingFileIsAFailure) {
  const auto r = run({"canon", "/nonexistent.json"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("FileNotFound"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"translate", "--profile", pr("en-korean-case"), fx("korean_case")};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
}  // namespace synapper
