#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hamcert/hamcert.hpp"
#include "hamcert/json.hpp"

namespace hamcert {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("hamcert_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliRun run(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout";
  const fs::path err = scratch_dir() / "stderr";
  const std::string cmd = std::string(HAMCERT_CLI_PATH) + " " + args + " >" + out.string() +
                          " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

TEST(Cli, AnalyzeCompleteGraph) {
  const CliRun r = run("analyze --graph6 'C~'");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  for (const char* key : {"graph6", "n", "summary", "bounds", "verdicts", "skipped_criteria",
                          "exceptions", "oracle"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["n"], 4);
  EXPECT_DOUBLE_EQ(j["summary"]["mu"].get<double>(), 3.0);
  EXPECT_DOUBLE_EQ(j["summary"]["gamma"].get<double>(), 6.0);
  EXPECT_TRUE(j["oracle"]["has_path"].get<bool>());
  EXPECT_TRUE(j["oracle"]["has_cycle"].get<bool>());
  EXPECT_TRUE(j["oracle"]["hamilton_connected"].get<bool>());
  // n = 4 is below the complement signless criterion's order requirement.
  EXPECT_EQ(j["verdicts"].size(), 5U);
  EXPECT_EQ(j["skipped_criteria"].size(), 1U);
  for (const Json& v : j["verdicts"]) {
    for (const char* key : {"criterion", "lhs", "threshold", "status", "predicted", "exception"})
      EXPECT_TRUE(v.contains(key)) << key;
  }
  for (const Json& b : j["bounds"]) {
    for (const char* key : {"bound", "lhs", "rhs", "slack", "holds", "equality", "equality_expected"})
      EXPECT_TRUE(b.contains(key)) << key;
    EXPECT_TRUE(b["holds"].get<bool>());
  }
}

TEST(Cli, AnalyzeAllSixVerdicts) {
  const CliRun r = run("analyze --family complete-bipartite --a 3 --b 3");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdicts"].size(), 6U);
  EXPECT_EQ(j["exceptions"], Json::array({"BalancedCompleteBipartite"}));
  EXPECT_FALSE(j["oracle"]["hamilton_connected"].get<bool>());
}

TEST(Cli, AnalyzeAboveCapOmitsOracle) {
  const CliRun r = run("analyze --family cycle --n 30");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["oracle"].is_null());
}

TEST(Cli, TextFormatCarriesTheSameNumbers) {
  const CliRun json = run("analyze --family complete-bipartite --a 3 --b 3");
  const CliRun text = run("analyze --family complete-bipartite --a 3 --b 3 --format text");
  ASSERT_EQ(json.code, 0);
  ASSERT_EQ(text.code, 0);
  const Json j = Json::parse(json.out);
  EXPECT_NE(text.out.find("summary.mu = " + j["summary"]["mu"].dump()), std::string::npos);
  EXPECT_NE(text.out.find("summary.gamma = " + j["summary"]["gamma"].dump()), std::string::npos);
  EXPECT_NE(text.out.find("oracle.hamilton_connected = false"), std::string::npos);
}

TEST(Cli, Generate) {
  const CliRun r = run("generate --family clique-plus-two-edges --n 6");
  ASSERT_EQ(r.code, 0) << r.err;
  std::string line = r.out;
  while (!line.empty() && line.back() == '\n') line.pop_back();
  EXPECT_EQ(parse_graph6(line).edge_count(), 12);

  const CliRun j = run("generate --family join-of-two-cliques --n 8 --s 3 --format json");
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(Json::parse(j.out)["edge_count"], 19);
}

TEST(Cli, ClosureAndOracle) {
  const CliRun c = run("closure --family cycle --n 4 --k 4");
  ASSERT_EQ(c.code, 0) << c.err;
  const Json cj = Json::parse(c.out);
  EXPECT_EQ(cj["added"].size(), 2U);
  EXPECT_EQ(cj["graph6"], "C~");

  const CliRun o = run("oracle --family path --n 5");
  ASSERT_EQ(o.code, 0) << o.err;
  const Json oj = Json::parse(o.out);
  EXPECT_TRUE(oj["has_path"].get<bool>());
  EXPECT_FALSE(oj["has_cycle"].get<bool>());
}

TEST(Cli, FileInputAndOutputPath) {
  const fs::path in = scratch_dir() / "graphs.g6";
  std::ofstream(in) << "C~\n\nEFz_\r\n";
  const fs::path out = scratch_dir() / "oracle.json";
  const CliRun r = run("oracle --file " + in.string() + " --output " + out.string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const Json j = Json::parse(slurp(out));
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2U);
  EXPECT_TRUE(j[0]["hamilton_connected"].get<bool>());
  EXPECT_FALSE(j[1]["hamilton_connected"].get<bool>());
}

TEST(Cli, ValidateExitCodes) {
  const CliRun ok = run("validate --criterion T42 --orders 5 --mode exhaustive");
  ASSERT_EQ(ok.code, 0) << ok.err;
  const Json j = Json::parse(ok.out);
  EXPECT_EQ(j["graphs_checked"], 1024);
  EXPECT_TRUE(j["violations"].empty());
  for (const char* key : {"criterion", "orders", "mode", "graphs_checked", "predictions_issued",
                          "exceptions_matched", "violations", "boundary_cases", "elapsed_ms"})
    EXPECT_TRUE(j.contains(key)) << key;

  const CliRun bad = run("validate --criterion T33 --orders 6 --fault-threshold-shift -1");
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(Json::parse(bad.out)["violations"].empty());

  const CliRun closure = run("validate --criterion closure --orders 5");
  EXPECT_EQ(closure.code, 0) << closure.err;
}

TEST(Cli, ValidateCorpusFile) {
  const fs::path in = scratch_dir() / "corpus.g6";
  const std::string k3_join_3k1 = write_graph6(join(Graph::complete(3), Graph(3)));
  std::ofstream(in) << "C~\nEFz_\n" << k3_join_3k1 << "\n";
  const CliRun r = run("validate --criterion T33 --file " + in.string());
  EXPECT_EQ(r.code, 1);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["mode"], to_string(ValidationMode::Corpus));
  EXPECT_EQ(j["graphs_checked"], 3);
  EXPECT_EQ(j["violations"], Json::array({k3_join_3k1}));
}

TEST(Cli, InputErrors) {
  const CliRun malformed = run("analyze --graph6 'C~\x7f'");
  EXPECT_EQ(malformed.code, 2);
  EXPECT_NE(malformed.err.find("byte offset 2"), std::string::npos) << malformed.err;

  const CliRun cap = run("oracle --family complete --n 21");
  EXPECT_EQ(cap.code, 2);
  EXPECT_NE(cap.err.find("cap of 20"), std::string::npos) << cap.err;

  EXPECT_EQ(run("oracle --family complete --n 21 --oracle-cap 25").code, 2);
  EXPECT_EQ(run("analyze --graph6 'C~' --family complete --n 4").code, 2);
  EXPECT_EQ(run("analyze").code, 2);
  EXPECT_EQ(run("analyze --graph6 'C~' --bogus").code, 2);
  EXPECT_EQ(run("validate --criterion T99 --orders 5").code, 2);
  EXPECT_EQ(run("validate --criterion T42 --orders 8 --mode exhaustive").code, 2);
  EXPECT_EQ(run("validate --criterion T34 --orders 5").code, 2);
  EXPECT_EQ(run("generate --family nonsense --n 4").code, 2);
  EXPECT_EQ(run("generate --family join-of-two-cliques --n 8 --s 0").code, 2);
  EXPECT_EQ(run("closure --graph6 'C~' --k -1").code, 2);
  EXPECT_EQ(run("oracle --file /nonexistent/file.g6").code, 2);
}

TEST(Cli, OracleCapOverride) {
  ::setenv("HAMCERT_ORACLE_CAP", "21", 1);
  const CliRun env = run("oracle --family path --n 21");
  ::unsetenv("HAMCERT_ORACLE_CAP");
  EXPECT_EQ(env.code, 0) << env.err;
  EXPECT_EQ(run("--oracle-cap 21 oracle --family path --n 21").code, 0);
}

TEST(Cli, Remark) {
  const CliRun r = run("remark --r-min 2 --r-max 3");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 3U);
  EXPECT_EQ(j["rows"][0]["f_at_n_minus_2"], 1);
  EXPECT_EQ(j["rows"][0]["g_at_2n_minus_4"], 0);
  EXPECT_TRUE(j["rows"][0]["oracle_has_cycle"].get<bool>());
}

TEST(Cli, Help) {
  const CliRun r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("validate"), std::string::npos);
}

}  // namespace
}  // namespace hamcert
