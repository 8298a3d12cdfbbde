#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "nestgen/refdata.hpp"
#include "nestgen/serialize.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = nestgen::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, CountPartitions) {
  auto r = run({"count", "--family", "partitions", "--k", "3", "--n", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1,2,5,15,52,202,859,3930\n");
}

TEST(Cli, CountPermutationsLargeK) {
  auto r = run({"count", "--family", "permutations", "--k", "9", "--n", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1,2,6,24,120\n");
}

TEST(Cli, CountOpenFamilies) {
  EXPECT_EQ(run({"count", "--family", "open-partitions", "--n", "3"}).out, "2,6,22\n");
  EXPECT_EQ(run({"count", "--family", "open-permutations", "--n", "3"}).out, "2,7,34\n");
}

TEST(Cli, CountFormats) {
  auto csv = run({"count", "--family", "partitions-enhanced", "--k", "3", "--n", "3",
                  "--format", "csv"});
  EXPECT_EQ(csv.out, "n,count\n1,1\n2,2\n3,5\n");
  auto json = run({"count", "--family", "permutations", "--k", "3", "--n", "5", "--format", "json"});
  auto j = nestgen::Json::parse(json.out);
  EXPECT_EQ(j["terms"], nestgen::Json::parse(R"(["1","2","6","24","118"])"));
  EXPECT_EQ(j["offset"], 1);
}

TEST(Cli, AllLabels) {
  auto r = run({"count", "--family", "partitions", "--k", "3", "--n", "2", "--all-labels"});
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  auto level2 = nestgen::level_from_json(nestgen::Json::parse(ls[2]));
  EXPECT_EQ(level2.level, 2);
  EXPECT_EQ(level2.total(), 6);
  EXPECT_EQ(level2.zero_count(), 2);
}

TEST(Cli, Series) {
  EXPECT_EQ(run({"series", "--family", "partitions", "--k", "3", "--n", "6"}).out,
            "1,2,5,15,52,202\n");
  EXPECT_EQ(run({"series", "--family", "partitions", "--k", "4", "--n", "8"}).out,
            "1,2,5,15,52,203,877,4139\n");
  EXPECT_EQ(run({"series", "--family", "partitions-enhanced", "--k", "3", "--n", "6"}).out,
            "1,2,5,15,51,191\n");
  EXPECT_EQ(run({"series", "--family", "permutations3", "--n", "5"}).out, "1,2,6,24,118\n");
  EXPECT_EQ(run({"series", "--family", "baxter", "--n", "7"}).out, "1,2,6,22,92,422,2074\n");
}

TEST(Cli, SeriesFull) {
  auto r = run({"series", "--family", "baxter", "--n", "2", "--full"});
  auto ls = lines(r.out);
  ASSERT_FALSE(ls.empty());
  EXPECT_EQ(ls[0], "# z u v");
  std::size_t want = 1;
  for (const auto& t : nestgen::baxter_series_terms()) want += t.z <= 1;
  EXPECT_EQ(ls.size(), want);
}

TEST(Cli, Generate) {
  auto r = run({"generate", "--family", "partitions", "--k", "3", "--n", "4", "--closed-only"});
  EXPECT_EQ(r.code, 0);
  auto ls = lines(r.out);
  EXPECT_EQ(ls.size(), 15u);
  for (const auto& l : ls) EXPECT_TRUE(nestgen::Json::parse(l).contains("blocks"));
  auto p = run({"generate", "--family", "permutations", "--k", "3", "--n", "5", "--closed-only"});
  EXPECT_EQ(lines(p.out).size(), 118u);
  auto open = run({"generate", "--family", "partitions", "--k", "3", "--n", "2"});
  EXPECT_EQ(lines(open.out).size(), 6u);
}

TEST(Cli, Oracle) {
  EXPECT_EQ(run({"oracle", "--family", "permutations", "--k", "2", "--n", "6"}).out,
            "1,2,5,14,42,132\n");
  auto r = run({"oracle", "--family", "partitions", "--k", "3", "--n", "16"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, Refdata) {
  auto r = run({"refdata", "--family", "permutations", "--k", "6"});
  EXPECT_EQ(r.out.rfind("1,2,6,24,120,720,5040,40320,362880,3628800,39916680,", 0), 0u);
  auto j = nestgen::Json::parse(
      run({"refdata", "--family", "partitions", "--k", "3", "--format", "json"}).out);
  EXPECT_EQ(j["oeis"], "A108304");
  EXPECT_EQ(run({"refdata", "--family", "partitions", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"refdata", "--family", "baxter"}).out,
            "1,2,6,22,92,422,2074,10754,58202,326240,1882960\n");
}

TEST(Cli, Verify) {
  auto r = run({"verify", "--suite", "paper-tables", "--max-n", "15"});
  EXPECT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_FALSE(ls.empty());
  EXPECT_EQ(ls.back(), "overall: pass");
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) EXPECT_EQ(ls[i].rfind("PASS ", 0), 0u) << ls[i];
  auto j = nestgen::Json::parse(
      run({"verify", "--suite", "egf", "--max-n", "6", "--format", "json"}).out);
  EXPECT_EQ(j["overall"], "pass");
}

TEST(Cli, ResourceGuard) {
  auto r = run({"count", "--family", "permutations", "--k", "5", "--n", "12", "--max-labels",
                "50"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("last completed level"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count", "--family", "trees", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"count", "--family", "partitions"}).code, 2);
  EXPECT_EQ(run({"count", "--family", "partitions", "--k", "1", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"count", "--family", "partitions", "--n", "-2"}).code, 2);
  EXPECT_EQ(run({"series", "--family", "partitions", "--k", "9", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count"), std::string::npos);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"generate", "--family", "partitions-enhanced", "--k", "3", "--n", "5"};
  EXPECT_EQ(run(args).out, run(args).out);
}
