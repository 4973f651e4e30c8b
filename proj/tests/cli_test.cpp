#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "irrsemi/cli.hpp"

#ifndef IRRSEMI_SAMPLES_DIR
#error "IRRSEMI_SAMPLES_DIR must point at the samples directory"
#endif

namespace irrsemi {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "irrsemi");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(IRRSEMI_SAMPLES_DIR) + "/" + name; }

TEST(Cli, CheckIrreducible) {
  const Result r = run({"check", sample("motivating_q13.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"verdict\":\"irreducible\",\"reason\":null,\"witness\":null,\"reach_nodes\":[5,6],\"d_s\":[5]}\n");
}

TEST(Cli, CheckReducibleWithWitness) {
  const Result r = run({"check", sample("prop_pair_p7.json")});
  EXPECT_EQ(r.code, 1);
  const auto doc = io::json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "reducible");
  EXPECT_EQ(doc["reason"], "square_reachable");
  EXPECT_EQ(doc["witness"], io::json::parse("[0,1]"));
}

TEST(Cli, CheckInputErrors) {
  EXPECT_EQ(run({"check", sample("even_char.json")}).code, 2);
  EXPECT_EQ(run({"check", "-"}, "{not json").code, 2);
  EXPECT_EQ(run({"check", "-"}, R"({"field":{"p":7},"generators":[{"a":0,"b":3}],"extra":1})").code, 2);
  EXPECT_EQ(run({"check", "-"}, R"({"field":{"p":7},"generators":[{"a":0,"b":9}]})").code, 2);
  EXPECT_EQ(run({"check", "-"}, R"({"field":{"p":7},"generators":[{"a":0,"c0":1}]})").code, 2);
  EXPECT_EQ(run({"check", "-"}, R"({"field":{"p":7},"generators":[]})").code, 2);
  EXPECT_EQ(run({"check", "/nonexistent/file.json"}).code, 2);
  const Result even = run({"check", sample("even_char.json")});
  EXPECT_NE(even.err.find("even characteristic unsupported"), std::string::npos);
  EXPECT_TRUE(even.out.empty());
}

TEST(Cli, CheckDeduplicatesWithWarning) {
  const Result r = run({"check", "-"}, R"({"field":{"p":13},"generators":[{"a":5,"b":8},{"c1":3,"c0":4},{"a":6,"b":8}]})");
  // x^2 + 3x + 4 = (x - 5)^2 - 8 over F_13.
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("duplicate"), std::string::npos);
}

TEST(Cli, MaxGenerators) {
  const std::string doc = R"({"field":{"p":13},"generators":[{"a":5,"b":8},{"a":6,"b":8}]})";
  EXPECT_EQ(run({"check", "-", "--max-generators", "1"}, doc).code, 2);
  EXPECT_EQ(run({"check", "-", "--max-generators", "2"}, doc).code, 0);
}

TEST(Cli, Witness) {
  const Result r = run({"witness", sample("prop_pair_p7.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "{\"verdict\":\"reducible\",\"reason\":\"square_reachable\",\"witness\":[0,1],\"chain\":[3,1]}\n");
}

TEST(Cli, Words) {
  const Result r = run({"words", sample("motivating_q13.json"), "--depth", "4"});
  EXPECT_EQ(r.code, 0);
  const auto doc = io::json::parse(r.out);
  EXPECT_EQ(doc["words"], 30);
  EXPECT_TRUE(doc["mismatches"].empty());
  EXPECT_EQ(doc["irreducible_per_length"]["4"], 16);
  EXPECT_EQ(run({"words", sample("motivating_q13.json"), "--depth", "5"}).code, 2);

  const Result prop = run({"words", sample("prop_pair_p7.json"), "--depth", "2"});
  EXPECT_EQ(prop.code, 0);
  EXPECT_EQ(io::json::parse(prop.out)["words"], 6);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", "--lemma-7mod8", "7"}).out, "true\n");
  const Result prop = run({"verify", "--prop-3mod4", "11"});
  EXPECT_EQ(prop.out, "true\n");
  EXPECT_EQ(prop.code, 0);
  const Result wrong = run({"verify", "--prop-3mod4", "13"});
  EXPECT_EQ(wrong.code, 2);
  EXPECT_NE(wrong.err.find("3 mod 4"), std::string::npos);
  EXPECT_EQ(run({"verify", "--lemma-7mod8", "13"}).code, 2);
  EXPECT_EQ(run({"verify", "--example-family", "13"}).out, "true\n");
  EXPECT_EQ(run({"verify", "--example-family", "3", "--e", "2"}).out, "true\n");
  EXPECT_EQ(run({"verify"}).code, 2);
  const auto doc = io::json::parse(run({"verify", "--lemma-7mod8", "7", "--format", "json"}).out);
  EXPECT_EQ(doc["holds"], true);
  EXPECT_EQ(doc["rows"].size(), 3U);
}

TEST(Cli, CensusTsvAndJson) {
  const Result tsv = run({"census", "--p", "7", "--filter", "no-linear", "--limit", "2"});
  EXPECT_EQ(tsv.code, 0);
  EXPECT_EQ(tsv.out,
            "q\ta1\tb1\ta2\tb2\tverdict\twitness_len\treach_size\n"
            "7\t0\t0\t0\t1\treducible\t1\t3\n"
            "7\t0\t0\t0\t2\treducible\t1\t4\n");
  const Result json = run({"census", sample("sharp_p7.json"), "--format", "json", "--workers", "3"});
  EXPECT_EQ(json.code, 0);
  EXPECT_EQ(io::json::parse(json.out).size(), 49U * 48U / 2U);
  EXPECT_EQ(json.out, run({"census", "--p", "7", "--format", "json"}).out);
  EXPECT_EQ(run({"census", "--p", "7", "--filter", "bogus"}).code, 2);
  EXPECT_EQ(run({"census"}).code, 2);
}

TEST(Cli, Dot) {
  const Result r = run({"dot", sample("sharp_p7.json"), "--names", "f,g"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"2\" -> \"3\" [label=\"f\"]"), std::string::npos);
  EXPECT_NE(r.out.find("\"3\" -> \"3\" [label=\"g\"]"), std::string::npos);
  EXPECT_EQ(r.out, run({"dot", sample("sharp_p7.json"), "--names", "f,g"}).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace irrsemi
