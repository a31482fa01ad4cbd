#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "betavote/cli.hpp"

using namespace betavote;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BETAVOTE_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("betavote_test_" + name);
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

}  // namespace

TEST(Cli, TallyBetaAtTwo) {
  auto r = run({"tally", data("e1.csv"), "--rule", "beta", "--k", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = r.json();
  EXPECT_EQ(doc["payload"]["scores"], Json::parse(R"({"A":"7","B":"7","C":"6"})"));
  EXPECT_EQ(doc["payload"]["winners"], Json::parse(R"(["A","B"])"));
  EXPECT_EQ(doc["manifest"]["version"], kVersion);
  EXPECT_EQ(doc["manifest"]["seed"], nullptr);
  EXPECT_EQ(doc["manifest"]["input_digest"].get<std::string>().rfind("sha256:", 0), 0u);
}

TEST(Cli, TallyPluralityAndApproval) {
  auto p = run({"tally", data("e1.csv"), "--rule", "plurality"}).json();
  EXPECT_EQ(p["payload"]["winners"], Json::parse(R"(["C"])"));
  auto a = run({"tally", data("e1.json"), "--rule", "approval"}).json();
  EXPECT_EQ(a["payload"]["winners"], Json::parse(R"(["A"])"));
  EXPECT_EQ(run({"tally", data("e1.csv"), "--rule", "approval", "--k", "2"}).code, kExitInputError);
}

TEST(Cli, TallyTsv) {
  auto r = run({"tally", data("e1.csv"), "--rule", "beta", "--k", "5/2", "--format", "tsv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("# input_digest: sha256:"), std::string::npos);
  EXPECT_NE(r.out.find("candidate\tscore\tscore_decimal\twinner\n"), std::string::npos);
  EXPECT_NE(r.out.find("B\t8\t8\t1\n"), std::string::npos);
  EXPECT_NE(r.out.find("A\t15/2\t7.5\t0\n"), std::string::npos);
}

TEST(Cli, IntervalsReportsBreakpoints) {
  auto doc = run({"intervals", data("e2.csv")}).json();
  const auto& payload = doc["payload"];
  EXPECT_EQ(payload["potential_winners"], Json::parse(R"(["A","C"])"));
  EXPECT_EQ(payload["breakpoints"], Json::parse(R"(["1","5/2"])"));
  auto tsv = run({"intervals", data("e2.csv"), "--format", "tsv"});
  EXPECT_NE(tsv.out.find("5/2\t2.5\tbreakpoint\tA,C\n"), std::string::npos) << tsv.out;
}

TEST(Cli, InputErrorsExitTwo) {
  auto bad = run({"tally", data("bad.csv"), "--rule", "plurality"});
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_NE(bad.err.find("InconsistentBallot at line 3"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"tally", data("missing.csv"), "--rule", "plurality"}).code, kExitInputError);
  EXPECT_EQ(run({"tally", data("e1.csv"), "--rule", "borda"}).code, kExitInputError);
  EXPECT_EQ(run({"tally", data("e1.csv"), "--rule", "beta"}).code, kExitInputError);
  EXPECT_EQ(run({"tally", data("e1.csv"), "--rule", "beta", "--k", "x"}).code, kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run({"check", data("e1.csv"), "--criterion", "pareto", "--k", "1"}).code, kExitInputError);
}

TEST(Cli, DomainErrorsExitThree) {
  auto r = run({"tally", data("e1.csv"), "--rule", "beta", "--k", "1/2"});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_EQ(run({"check", data("single.csv"), "--criterion", "non_dictatorship"}).code, kExitDomainError);
}

TEST(Cli, RandomizedCommandsNeedASeed) {
  auto sim = run({"simulate", data("sim_regimes.json")});
  EXPECT_EQ(sim.code, kExitDomainError);
  EXPECT_NE(sim.err.find("--seed"), std::string::npos);
  EXPECT_EQ(run({"search", data("search_pareto.json"), "--target", "approval_non_pareto"}).code, kExitDomainError);
  EXPECT_EQ(run({"check", data("e1.csv"), "--criterion", "monotonicity", "--k", "2"}).code, kExitDomainError);
}

TEST(Cli, CheckVerdicts) {
  auto tie = run({"check", data("pareto_tie_profile.json"), "--criterion", "pareto", "--k", "1"});
  EXPECT_EQ(tie.code, kExitFalsified);
  EXPECT_EQ(tie.json()["payload"]["witness"]["candidate"], "C2");
  EXPECT_EQ(run({"check", data("pareto_tie_profile.json"), "--criterion", "pareto", "--k", "2"}).code, kExitOk);

  auto mono = run({"check", data("e1.csv"), "--criterion", "monotonicity", "--k", "2", "--seed", "3"});
  EXPECT_EQ(mono.code, kExitOk);
  EXPECT_EQ(mono.json()["payload"]["holds"], true);
  EXPECT_EQ(mono.json()["manifest"]["seed"], 3);

  EXPECT_EQ(run({"check", data("e1.csv"), "--criterion", "unanimous_winner", "--k", "3"}).code, kExitOk);
  auto dict = run({"check", data("e1.csv"), "--criterion", "non_dictatorship"});
  EXPECT_EQ(dict.code, kExitOk) << dict.err;
  EXPECT_EQ(dict.json()["payload"]["holds"], true);
}

TEST(Cli, WitnessesReplay) {
  auto first = run({"check", data("pareto_tie_profile.json"), "--criterion", "pareto", "--k", "1"});
  auto saved = scratch("verdict.json", first.out);
  auto again = run({"check", saved.string(), "--criterion", "pareto"});
  EXPECT_EQ(again.code, kExitFalsified) << again.err;
  EXPECT_EQ(again.json()["payload"]["witness"], first.json()["payload"]["witness"]);

  auto found = run({"search", data("search_pareto.json"), "--target", "approval_non_pareto", "--seed", "1"});
  ASSERT_EQ(found.code, kExitFalsified);
  auto search_file = scratch("search.json", found.out);
  EXPECT_EQ(run({"check", search_file.string(), "--criterion", "pareto"}).code, kExitFalsified);
  std::filesystem::remove(saved);
  std::filesystem::remove(search_file);
}

TEST(Cli, SimulatePayloadIsDeterministic) {
  auto a = run({"simulate", data("sim_regimes.json"), "--seed", "42", "--threads", "1"});
  auto b = run({"simulate", data("sim_regimes.json"), "--seed", "42", "--threads", "5"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.json()["payload"], b.json()["payload"]);
  auto stats = a.json()["payload"]["stats"];
  EXPECT_EQ(stats["per_k"][0]["counts"]["beta_equals_approval"], 2000);
  auto c = run({"simulate", data("sim_regimes.json"), "--seed", "43"});
  EXPECT_NE(a.json()["payload"], c.json()["payload"]);
}

TEST(Cli, OutputFile) {
  auto path = std::filesystem::temp_directory_path() / "betavote_test_out.json";
  auto r = run({"tally", data("e1.csv"), "--rule", "plurality", "-o", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(Json::parse(in)["payload"]["winners"], Json::parse(R"(["C"])"));
  std::filesystem::remove(path);
}

TEST(Cli, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
