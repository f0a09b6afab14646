#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ancestry/cli.hpp"
#include "ancestry/label_codec.hpp"

namespace ancestry {
namespace {

namespace fs = std::filesystem;

// Label width constant of this build: log n + 6 loglog n + kWidthConstant.
constexpr unsigned kWidthConstant = kDefaultOffsetField == OffsetField::kTight ? 7 : 8;
const std::string kE5Bits = std::to_string(3 + 6 * 2 + kWidthConstant);
const std::string kBits20 = std::to_string(20 + 6 * 5 + kWidthConstant);

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "ancestry");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ancestry_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    std::ofstream(dir_ / "e5.txt") << "5\n-1 0 0 1 1\n";
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, Gen) {
  EXPECT_EQ(run({"gen", "--family", "path", "--size", "4"}).out, "4\n-1 0 1 2\n");
  EXPECT_EQ(run({"gen", "--family", "star", "--size", "4"}).out, "4\n-1 0 0 0\n");
  EXPECT_EQ(run({"gen", "--family", "broom", "--size", "7", "--path-count", "3", "--path-length",
                 "2"})
                .out,
            "7\n-1 0 1 0 3 0 5\n");
  const auto a = run({"gen", "--family", "random-recursive", "--size", "50", "--seed", "4"});
  const auto b = run({"gen", "--family", "random-recursive", "--size", "50", "--seed", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"gen", "--family", "broom", "--size", "8", "--path-count", "3",
                 "--path-length", "2"})
                .code,
            kExitValidation);
  EXPECT_EQ(run({"gen", "--family", "forest", "--size", "8"}).code, kExitValidation);
}

TEST_F(CliTest, LabelOptimalAndClassic) {
  const auto optimal = run({"label", "--input", path("e5.txt"), "--family-size", "8"});
  ASSERT_EQ(optimal.code, kExitOk) << optimal.err;
  std::istringstream lines(optimal.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "node_id,label_hex,scheme,family_size,label_bits");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_NE(line.find(",optimal,8," + kE5Bits), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 5);

  const auto classic =
      run({"label", "--input", path("e5.txt"), "--scheme", "classic", "--family-size", "8"});
  ASSERT_EQ(classic.code, kExitOk);
  EXPECT_NE(classic.out.find("0,0004,classic,8,6"), std::string::npos) << classic.out;
}

TEST_F(CliTest, LabelRejectsSmallFamilyAndBadTree) {
  const auto r = run({"label", "--input", path("e5.txt"), "--family-size", "4"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("exceeds family size"), std::string::npos) << r.err;

  std::ofstream(path("cycle.txt")) << "3\n-1 2 1";
  const auto c = run({"label", "--input", path("cycle.txt"), "--family-size", "4"});
  EXPECT_EQ(c.code, kExitValidation);
  EXPECT_NE(c.err.find("cycle"), std::string::npos);
  EXPECT_EQ(run({"label", "--input", path("missing.txt"), "--family-size", "4"}).code,
            kExitValidation);
  EXPECT_EQ(run({"label"}).code, kExitValidation);
}

TEST_F(CliTest, LabelIsByteIdenticalAcrossRuns) {
  ASSERT_EQ(run({"gen", "--family", "random-recursive", "--size", "3000", "--seed", "11", "--out",
                 path("t.txt")})
                .code,
            kExitOk);
  for (const char* scheme : {"optimal", "classic"}) {
    ASSERT_EQ(run({"label", "--input", path("t.txt"), "--scheme", scheme, "--family-size", "4096",
                   "--out", path("a.csv")})
                  .code,
              kExitOk);
    ASSERT_EQ(run({"label", "--input", path("t.txt"), "--scheme", scheme, "--family-size", "4096",
                   "--out", path("b.csv")})
                  .code,
              kExitOk);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  }
}

TEST_F(CliTest, QueryWithoutTree) {
  ASSERT_EQ(run({"label", "--input", path("e5.txt"), "--family-size", "8", "--out",
                 path("labels.csv")})
                .code,
            kExitOk);
  fs::remove(path("e5.txt"));
  std::ofstream(path("pairs.txt")) << "0 3\n3 0\n2 4\n";
  const auto r = run({"query", "--labels", path("labels.csv"), "--pairs", path("pairs.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "0 3 1\n3 0 0\n2 4 0\n");
  EXPECT_EQ(run({"query", "--labels", path("labels.csv"), "--u", "1", "--v", "4"}).out,
            "1 4 1\n");
  EXPECT_EQ(run({"query", "--labels", path("labels.csv"), "--u", "1", "--v", "9"}).code,
            kExitValidation);
}

TEST_F(CliTest, VerifyTreeAndCorpus) {
  const auto e5 = run({"verify", "--input", path("e5.txt"), "--family-size", "8"});
  EXPECT_EQ(e5.code, kExitOk) << e5.out;
  EXPECT_EQ(run({"verify", "--input", path("e5.txt"), "--scheme", "classic", "--family-size",
                 "8", "--exhaustive", "--report-csv", path("r.csv")})
                .code,
            kExitOk);
  EXPECT_EQ(slurp(path("r.csv")).rfind("check,status,detail\n", 0), 0u);
  const auto corpus = run({"verify", "--enumerate-max", "9", "--family-size", "16"});
  EXPECT_EQ(corpus.code, kExitOk);
  EXPECT_NE(corpus.out.find("486 trees"), std::string::npos);
  EXPECT_NE(corpus.out.find("0 failing"), std::string::npos) << corpus.out;
}

TEST_F(CliTest, VerifyCorruptedLabelsFails) {
  ASSERT_EQ(run({"label", "--input", path("e5.txt"), "--family-size", "8", "--out",
                 path("labels.csv")})
                .code,
            kExitOk);
  // Swap the hex labels of rows for nodes 0 and 1.
  std::istringstream in(slurp(path("labels.csv")));
  std::vector<std::string> rows;
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  auto hex = [](const std::string& row) { return row.substr(2, row.find(',', 2) - 2); };
  const std::string h0 = hex(rows[1]);
  const std::string h1 = hex(rows[2]);
  rows[1].replace(2, h0.size(), h1);
  rows[2].replace(2, h1.size(), h0);
  std::ofstream out(path("bad.csv"));
  for (const auto& row : rows) out << row << '\n';
  out.close();

  const auto r = run({"verify", "--input", path("e5.txt"), "--labels", path("bad.csv")});
  EXPECT_EQ(r.code, kExitVerification);
  EXPECT_NE(r.out.find("[FAIL]"), std::string::npos);
  EXPECT_NE(r.out.find("expected"), std::string::npos) << r.out;
}

TEST_F(CliTest, Bench) {
  const auto r = run({"bench", "--families", "random-recursive,path", "--sizes", "512,1024",
                      "--family-sizes", "1024,1048576", "--trials", "2", "--queries", "10000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("family,node_count,family_size_n,scheme,trial,max_label_bits,"
                        "mark_wall_time_ns,mean_query_ns,queries_measured\n",
                        0),
            0u);
  EXPECT_NE(r.out.find("random-recursive,1024,1048576,optimal,median," + kBits20 + ","),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("path,512,1024,classic,median,20,"), std::string::npos) << r.out;

  EXPECT_EQ(run({"bench", "--sizes", "100", "--queries", "10"}).code, kExitValidation);
  EXPECT_EQ(run({"bench", "--families", "broom", "--sizes", "100", "--path-count", "7"}).code,
            kExitValidation);
}

}  // namespace
}  // namespace ancestry
