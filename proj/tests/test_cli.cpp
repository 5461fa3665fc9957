#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "webx/cli.hpp"

using namespace webx;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("webx_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenWritesValidPair) {
  const auto r = run({"gen", "-k", "4", "-len", "2", "-noise", "0", "-seed", "1", "--graph-out", path("g.txt"),
                      "--web-out", path("w.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Graph g = load_graph(path("g.txt"));
  const Web w = parse_web(read_text_file(path("w.json")));
  EXPECT_TRUE(validate_web(g, w).valid());
  EXPECT_EQ(g.vertex_count(), 10u);
}

TEST_F(CliTest, GenSingleVertexAndDeterminism) {
  ASSERT_EQ(run({"gen", "-k", "1", "--graph-out", path("g1"), "--web-out", path("w1")}).code, 0);
  EXPECT_EQ(parse_web(read_text_file(path("w1"))).size(), 1u);
  for (const char* suffix : {"a", "b"}) {
    ASSERT_EQ(run({"gen", "-k", "6", "--len", "1-3", "--noise", "0.2", "--seed", "11", "--graph-out",
                   path(std::string("g") + suffix), "--web-out", path(std::string("w") + suffix), "--format", "graph6"})
                  .code,
              0);
  }
  EXPECT_EQ(read_text_file(path("ga")), read_text_file(path("gb")));
  EXPECT_EQ(read_text_file(path("wa")), read_text_file(path("wb")));
}

TEST_F(CliTest, GenRejectsBadSpecs) {
  EXPECT_EQ(run({"gen", "-k", "4", "--len", "0"}).code, 3);
  EXPECT_EQ(run({"gen", "-k", "4", "--len", "3-2"}).code, 3);
  EXPECT_EQ(run({"gen", "-k", "4", "--noise", "1.5"}).code, 3);
  EXPECT_EQ(run({"gen"}).code, 3);
  EXPECT_EQ(run({"bogus"}).code, 3);
}

TEST_F(CliTest, ExtractAndVerifyRoundTrip) {
  ASSERT_EQ(run({"gen", "-k", "10", "--len", "2", "--graph-out", path("g"), "--web-out", path("w")}).code, 0);
  const auto ex = run({"extract", "--graph", path("g"), "--web", path("w"), "-r", "1", "-s", "4", "-t", "3", "--out",
                       path("c.json")});
  ASSERT_EQ(ex.code, 0) << ex.err;
  const auto cert = parse_certificate(read_text_file(path("c.json")));
  EXPECT_EQ(cert.kind(), CertKind::clean_set);
  const auto ve = run({"verify", "--graph", path("g"), "--web", path("w"), "--cert", path("c.json")});
  EXPECT_EQ(ve.code, 0) << ve.out;

  auto j = json::parse(read_text_file(path("c.json")));
  j["evidence"]["S"][0] = 10;
  write_text_file(path("bad.json"), j.dump());
  const auto bad = run({"verify", "--graph", path("g"), "--web", path("w"), "--cert", path("bad.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, ExtractCliqueRouteAndExitCodes) {
  ASSERT_EQ(run({"gen", "-k", "10", "--len", "1", "--graph-out", path("g"), "--web-out", path("w")}).code, 0);
  const auto ex = run({"extract", "--graph", path("g"), "--web", path("w"), "-t", "3", "--out", path("c")});
  ASSERT_EQ(ex.code, 0) << ex.err;
  EXPECT_EQ(parse_certificate(read_text_file(path("c"))).kind(), CertKind::clique);

  ASSERT_EQ(run({"gen", "-k", "2", "--graph-out", path("g2"), "--web-out", path("w2")}).code, 0);
  EXPECT_EQ(run({"extract", "--graph", path("g2"), "--web", path("w2"), "-r", "1", "-s", "3", "-t", "3", "--out", path("c2")}).code, 2);

  write_text_file(path("broken"), R"({"branch":[0,1,2],"paths":[{"ends":[0,1],"seq":[0,1]}]})");
  const auto bad = run({"extract", "--graph", path("g"), "--web", path("broken"), "--out", path("c3")});
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.err.find("W2"), std::string::npos);
  EXPECT_EQ(run({"extract", "--graph", path("missing"), "--web", path("w")}).code, 3);
}

TEST_F(CliTest, VerifyAgainstWrongGraph) {
  ASSERT_EQ(run({"gen", "-k", "10", "--len", "1", "--graph-out", path("g"), "--web-out", path("w")}).code, 0);
  ASSERT_EQ(run({"extract", "--graph", path("g"), "--web", path("w"), "-t", "3", "--out", path("c")}).code, 0);
  ASSERT_EQ(run({"gen", "-k", "10", "--len", "2", "--graph-out", path("g2"), "--web-out", path("w2")}).code, 0);
  const int code = run({"verify", "--graph", path("g2"), "--web", path("w"), "--cert", path("c")}).code;
  EXPECT_TRUE(code == 1 || code == 3);
  EXPECT_EQ(run({"verify", "--graph", path("g"), "--web", path("w"), "--cert", path("nope")}).code, 3);
}

TEST_F(CliTest, OtherOperationsThroughExtract) {
  ASSERT_EQ(run({"gen", "-k", "7", "--len", "1", "--graph-out", path("g"), "--web-out", path("w")}).code, 0);
  for (const char* op : {"pinned", "interior", "combined"}) {
    const auto ex = run({"extract", "--graph", path("g"), "--web", path("w"), "--op", op, "-s", "3", "--out", path(op)});
    ASSERT_EQ(ex.code, 0) << op << ex.err;
    EXPECT_EQ(run({"verify", "--graph", path("g"), "--web", path("w"), "--cert", path(op)}).code, 0) << op;
  }
  EXPECT_EQ(run({"extract", "--graph", path("g"), "--web", path("w"), "--op", "nope"}).code, 3);
  EXPECT_EQ(run({"extract", "--graph", path("g"), "--web", path("w"), "--mode", "fast"}).code, 3);
}

TEST_F(CliTest, FindWebExitCodes) {
  ASSERT_EQ(run({"gen", "-k", "4", "--len", "2", "--graph-out", path("g"), "--web-out", path("w")}).code, 0);
  const auto found = run({"find-web", "--graph", path("g"), "-r", "1", "-w", "4"});
  ASSERT_EQ(found.code, 0);
  EXPECT_EQ(parse_web(found.out).size(), 4u);
  EXPECT_EQ(run({"find-web", "--graph", path("g"), "-r", "0", "-w", "4"}).code, 1);
  EXPECT_EQ(run({"find-web", "--graph", path("g"), "-r", "1", "-w", "4", "--budget", "1"}).code, 2);
}

TEST_F(CliTest, BoundsSchema) {
  const auto r = run({"bounds", "-r", "3", "-s", "2", "-t", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  for (const char* key : {"xi", "sigma", "tau", "theta", "omega"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["xi"]["args"]["m"], "6");
  EXPECT_EQ(j["xi"]["args"]["palette"], "68719476736");
  EXPECT_EQ(run({"bounds", "-r", "3", "-s", "2", "-t", "2"}).out, r.out);
}

TEST_F(CliTest, HiddenOracle) {
  const auto r = run({"oracle", "ramsey", "-f", "2", "--arity", "2", "-n", "3", "--max-ground", "8"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["answer"], 6);
  ASSERT_EQ(run({"gen", "-k", "5", "--len", "2", "--graph-out", path("g"), "--web-out", path("w")}).code, 0);
  const auto cs = run({"oracle", "clean-set", "--graph", path("g"), "--web", path("w"), "-s", "3"});
  ASSERT_EQ(cs.code, 0);
  EXPECT_EQ(json::parse(cs.out)["S"], json::parse("[0,1,2]"));
  EXPECT_EQ(run({"oracle", "induced", "--graph", path("g"), "-t", "3"}).code, 1);
  EXPECT_EQ(run({"--help"}).out.find("oracle"), std::string::npos);
}
