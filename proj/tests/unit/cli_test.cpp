#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qnring_cli/commands.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qnring");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qnring::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

TEST(Cli, AnalyzeHumanOutput) {
  const auto r = run({"analyze", "Z(12)", "--sets", "U,J"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ring     Z(12)"), std::string::npos);
  EXPECT_NE(r.out.find("|U|=4"), std::string::npos);
  EXPECT_NE(r.out.find("U = {1, 5, 7, 11}"), std::string::npos);
  EXPECT_NE(r.out.find("J = {0, 6}"), std::string::npos);
}

TEST(Cli, AnalyzeJsonToStdout) {
  const auto r = run({"analyze", "M(2, Z(2))", "--json", "-"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("{", 0), 0u);
  EXPECT_NE(r.out.find("\"2UQ\": false"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"analyze", "M(2, Z(2)"}).code, 1);
  EXPECT_EQ(run({"analyze", "M(0, Z(2))"}).code, 1);
  EXPECT_EQ(run({"analyze", "Z(100000)"}).code, 2);
  EXPECT_EQ(run({"analyze", "Z(3000)", "--max-order", "100"}).code, 2);
  EXPECT_EQ(run({"analyze", "Z(6)", "--sets", "Bogus"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"check", "--only", "C-0.0"}).code, 1);
  EXPECT_EQ(run({"check", "--corpus", "/nonexistent/corpus.txt"}).code, 1);
}

TEST(Cli, SyntaxErrorMentionsPosition) {
  const auto r = run({"analyze", "M(2, Z(2)"});
  EXPECT_NE(r.err.find("line 1, column 10"), std::string::npos);
}

TEST(Cli, CheckOnCorpusFile) {
  const auto path = temp_file("qnring_cli_corpus.txt", "# seed=5\nM(2, Z(2))\nZ(12)\n");
  const auto r = run({"check", "--corpus", path.string(), "--only", "C-2.7,C-2.20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("C-2.7"), std::string::npos);
  EXPECT_NE(r.out.find("corpus: 2 rings, seed 5"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, MalformedCorpusLine) {
  const auto path = temp_file("qnring_cli_bad.txt", "Z(2)\nZ(3)\nQuot(Z(4)\n");
  const auto r = run({"check", "--corpus", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("corpus line 3"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, CorpusCommandIsDeterministic) {
  const auto a = run({"corpus", "--max-order", "32", "--seed", "7"});
  const auto b = run({"corpus", "--max-order", "32", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("# seed=7\n", 0), 0u);
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(run({"--help"}).code, 0);
  const auto v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("1.0.0"), std::string::npos);
}

}  // namespace
