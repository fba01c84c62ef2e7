#include "rsl/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>

using namespace rsl;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rsl");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string sample(const std::string& name) { return std::string(RSL_SAMPLES_DIR) + "/" + name; }
std::string fixture(const std::string& name) { return std::string(RSL_FIXTURES_DIR) + "/" + name; }

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST(Cli, ValidateSamples) {
  for (auto f : {"id1.txt", "kink_pos.txt", "clasp.txt", "borromean_like.txt", "handle_clasp.txt"}) {
    auto r = run({"validate", sample(f)});
    EXPECT_EQ(r.code, cli::kOk) << f << r.err;
    EXPECT_EQ(r.out.rfind("ok ", 0), 0u) << r.out;
  }
}

TEST(Cli, ValidateRejectsFixtures) {
  auto r = run({"validate", fixture("width_underflow.txt")});
  EXPECT_EQ(r.code, cli::kFailed);
  EXPECT_NE(r.err.find("width underflow"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
  r = run({"validate", fixture("handle_as_stringlink.txt")});
  EXPECT_EQ(r.code, cli::kFailed);
  EXPECT_NE(r.err.find("boundary mismatch"), std::string::npos) << r.err;
  r = run({"validate", fixture("bad_event.txt")});
  EXPECT_EQ(r.code, cli::kFailed);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(Cli, OperatorsOnSamples) {
  auto r = run({"op", "d", "0", "-i", sample("id3.txt")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, print_diagram(identity_link(2)));

  r = run({"op", "s", "0", "-i", sample("kink_pos.txt")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(cli::linking_json(linking_matrix(parse_diagram(r.out))), nlohmann::json::parse("[[1,1],[1,1]]"));

  auto k = read_diagram_file(sample("kink_pos.txt"));
  r = run({"op", "tau", "-i", sample("kink_pos.txt")});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, print_diagram(k));

  r = run({"op", "d", "5", "-i", sample("id2.txt")});
  EXPECT_EQ(r.code, cli::kDomain);
  r = run({"op", "tau", "-i", sample("handle_clasp.txt")});
  EXPECT_EQ(r.code, cli::kDomain) << r.err;
}

TEST(Cli, OperatorWritesFile) {
  std::string path = ::testing::TempDir() + "/rsl_cli_op.txt";
  auto r = run({"op", "delta", "1", "-i", sample("clasp.txt"), "-o", path});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto d = read_diagram_file(path);
  EXPECT_EQ(d.ncomp(), 3);
  std::remove(path.c_str());
}

TEST(Cli, InvariantAndDigests) {
  auto a = run({"invariant", sample("clasp.txt"), "-a", "e2"});
  auto b = run({"invariant", sample("id2.txt"), "-a", "e2"});
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  ASSERT_EQ(b.code, cli::kOk) << b.err;
  auto ja = json_of(a), jb = json_of(b);
  EXPECT_EQ(ja["components"], 2);
  EXPECT_EQ(ja["coend_dim"], 8);
  EXPECT_NE(ja["digest"], jb["digest"]);
  EXPECT_EQ(ja["linking"], nlohmann::json::parse("[[0,1],[1,0]]"));

  auto lit = run({"invariant", sample("clasp.txt"), "--route", "literal"});
  auto fast = run({"invariant", sample("clasp.txt"), "--route", "fast"});
  EXPECT_EQ(json_of(lit)["digest"], json_of(fast)["digest"]);

  auto h = run({"invariant", sample("handle_clasp.txt")});
  EXPECT_EQ(h.code, cli::kOk) << h.err;
  EXPECT_EQ(run({"invariant", sample("id1.txt"), "-a", "nope"}).code, cli::kUsage);
}

TEST(Cli, BracketAndLinking) {
  auto r = run({"bracket", sample("kink_pos.txt")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(json_of(r)["factor"], "-A^3");
  r = run({"bracket", sample("kink_neg.txt")});
  EXPECT_EQ(json_of(r)["factor"], "-A^-3");
  r = run({"linking", sample("double_clasp.txt")});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(json_of(r)["linking"], nlohmann::json::parse("[[0,2],[2,0]]"));
}

TEST(Cli, CheckSuitesAndEnvelope) {
  auto r = run({"check", "hopf"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(json_of(r)["suite"], "hopf");
  r = run({"check", "cocyclic", "--n", "1", "--samples", "3"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_EQ(json_of(r)["command"], "check cocyclic --n 1 --samples 3");
  EXPECT_EQ(run({"check", "cyclic", "--n", "4"}).code, cli::kUsage);
  EXPECT_EQ(run({"check", "cyclic", "--crossings", "13"}).code, cli::kUsage);
  EXPECT_EQ(run({"check", "cyclic", "--mutate", "nothing"}).code, cli::kUsage);
  EXPECT_EQ(run({"check", "nosuch"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
}

TEST(Cli, MutationIsCaughtAndRestored) {
  auto r = run({"check", "cocyclic", "--n", "2", "--samples", "10", "--mutate", "insert_over"});
  EXPECT_EQ(r.code, cli::kFailed);
  EXPECT_FALSE(slops_conventions().insert_over);
  r = run({"check", "separation", "--fixtures", RSL_SAMPLES_DIR, "--e2"});
  auto j = json_of(r);
  EXPECT_EQ(j["items"]["linking_separates"]["failed"], 0);
  EXPECT_EQ(j["items"]["phi_e2_separates"]["failed"], 0);
}
