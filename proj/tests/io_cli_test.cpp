#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "polysat/cli.hpp"
#include "polysat/construct.hpp"
#include "polysat/io.hpp"

namespace polysat {
namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = run(args, in, out, err);
  return {status, out.str(), err.str()};
}

int count_edges(const std::string& dot) {
  int edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2))
    ++edges;
  return edges;
}

TEST(PosetJson, RoundTripIsByteExact) {
  for (int j = 1; j <= 4; ++j) {
    std::string text = write_poset_json(build_pj(j).poset, pj_realizer(j));
    PosetDocument doc = read_poset_json(text);
    EXPECT_EQ(write_poset_json(doc.poset, doc.realizer), text);
  }
  std::string plain = "{\"n\":3,\"covers\":[[0,1],[1,2]]}\n";
  PosetDocument doc = read_poset_json(plain);
  EXPECT_FALSE(doc.realizer);
  EXPECT_EQ(write_poset_json(doc.poset), plain);
}

TEST(PosetJson, P2Document) {
  EXPECT_EQ(write_poset_json(build_pj(2).poset, pj_realizer(2)),
            "{\"n\":6,\"covers\":[[0,1],[1,2],[1,4],[3,4],[4,5]],"
            "\"names\":[\"u\",\"s1\",\"r1\",\"t2.1\",\"s2\",\"r2\"],"
            "\"realizer\":[[0,1,2,3,4,5],[3,0,1,4,5,2]]}\n");
}

TEST(PosetJson, ClosesRelationsAndRelabels) {
  PosetDocument doc = read_poset_json("{\"n\":3,\"covers\":[[2,1],[1,0],[2,0]],\"names\":[\"c\",\"b\",\"a\"]}");
  EXPECT_EQ(doc.poset, Poset::chain(3));
  EXPECT_EQ(doc.poset.name(0), "a");
}

TEST(PosetJson, Errors) {
  for (const char* bad : {"", "[1,2]", "{\"n\":2,\"covers\":[[0]]}", "{\"n\":\"x\"}",
                          "{\"n\":2,\"covers\":[],\"realizer\":[[0,1]]}"}) {
    try {
      read_poset_json(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
  EXPECT_THROW(read_poset_json("{\"n\":2,\"covers\":[[0,1],[1,0]]}"), Error);
}

TEST(Dot, EdgeCounts) {
  EXPECT_EQ(count_edges(export_dot(Poset::chain(3))), 2);
  EXPECT_EQ(count_edges(export_dot(Poset::antichain(2))), 0);
  std::string p1 = export_dot(build_pj(1).poset);
  EXPECT_EQ(count_edges(p1), 2);
  for (const char* label : {"\"u\"", "\"s1\"", "\"r1\""}) EXPECT_NE(p1.find(label), std::string::npos);
  Poset p2 = build_pj(2).poset;
  EXPECT_EQ(count_edges(export_dot(p2)), static_cast<int>(cover_relations(p2).size()));
  EXPECT_EQ(count_edges(export_dot(p2)), 5);
}

TEST(Cli, ConstructPjDot) {
  CliResult r = cli({"construct", "--dot", "pj", "--j", "2"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(count_edges(r.out), 5);
  EXPECT_NE(r.out.find("rank=same"), std::string::npos);
}

TEST(Cli, ConstructMatchesLibrary) {
  CliResult r = cli({"construct", "pj", "--j", "3"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, write_poset_json(build_pj(3).poset, pj_realizer(3)));

  CliResult d = cli({"construct", "delta", "--b", "3,3,2,1"});
  EXPECT_EQ(d.status, kExitOk);
  EXPECT_EQ(read_poset_json(d.out).poset.size(), 9);

  CliResult n = cli({"construct", "nca", "--n", "8", "--c", "4", "--a", "3"});
  EXPECT_EQ(n.status, kExitOk);
  Poset p = read_poset_json(n.out).poset;
  EXPECT_EQ(delta_sequence(p), (DeltaSequence{{3, 3, 1, 1}}));
}

TEST(Cli, FeasibleReportsViolatedCondition) {
  CliResult r = cli({"feasible", "--n", "7", "--c", "4", "--a", "2"});
  EXPECT_EQ(r.status, kExitNegative);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["feasible"].get<bool>());
  EXPECT_EQ(j["failed_conditions"], nlohmann::json::array({"n_upper"}));

  CliResult ok = cli({"feasible", "--n", "6", "--c", "4", "--a", "2"});
  EXPECT_EQ(ok.status, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(ok.out)["sequence"], nlohmann::json::array({2, 2, 1, 1}));

  EXPECT_EQ(cli({"feasible", "--n", "9", "--c", "5"}).status, kExitNegative);
  EXPECT_EQ(cli({"feasible", "--c", "5", "--a", "3"}).status, kExitOk);
  EXPECT_EQ(cli({"feasible", "--dual", "--n", "7", "--c", "2", "--a", "4"}).status, kExitNegative);
}

TEST(Cli, CertifyP3) {
  std::string p3 = cli({"construct", "pj", "--j", "3"}).out;
  CliResult r = cli({"certify"}, p3);
  EXPECT_EQ(r.status, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["polyunsaturated"].get<bool>());
  ASSERT_EQ(j["pairs"].size(), 3u);
  for (const auto& pair : j["pairs"]) {
    EXPECT_EQ(pair["verdict"], "NoJointPartition");
    EXPECT_GT(pair["min_joint_norm"].get<int>(), pair["d_k_plus_d_l"].get<int>());
  }
}

TEST(Cli, CertifyNegativeHasNamedWitness) {
  std::string doc = write_poset_json(disjoint_union(Poset::chain(4), Poset::antichain(4)));
  CliResult r = cli({"certify", "--inline", doc});
  EXPECT_EQ(r.status, kExitNegative);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pairs"][0]["verdict"], "Witness");
  EXPECT_FALSE(j["pairs"][0]["chains"].empty());
}

TEST(Cli, DkTable) {
  std::string p2 = write_poset_json(build_pj(2).poset);
  CliResult csv = cli({"dk-table", "--csv"}, p2);
  EXPECT_EQ(csv.status, kExitOk);
  EXPECT_EQ(csv.out, "k,d_k,delta_d_k\n1,2,2\n2,4,2\n3,5,1\n4,6,1\n");
  CliResult text = cli({"dk-table"}, p2);
  EXPECT_EQ(text.status, kExitOk);
  EXPECT_NE(text.out.find("d_k"), std::string::npos);
}

TEST(Cli, Saturate) {
  std::string p2 = write_poset_json(build_pj(2).poset);
  CliResult no = cli({"saturate", "--ks", "1,3"}, p2);
  EXPECT_EQ(no.status, kExitNegative);
  auto j = nlohmann::json::parse(no.out);
  EXPECT_EQ(j["min_total_norm"], 8);
  EXPECT_EQ(j["target"], 7);
  EXPECT_EQ(cli({"saturate", "--ks", "1,2"}, p2).status, kExitOk);
}

TEST(Cli, DualUsesEmbeddedOrGivenRealizer) {
  std::string p2 = cli({"construct", "pj", "--j", "2"}).out;
  CliResult r = cli({"dual", "--mode", "dk-table", "--csv"}, p2);
  EXPECT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out, "k,d_k,delta_d_k\n1,4,4\n2,6,2\n");
  CliResult c = cli({"dual"}, p2);
  EXPECT_EQ(c.status, kExitOk);

  std::string chain = write_poset_json(Poset::chain(3));
  CliResult given = cli({"dual", "--realizer", "0,1,2", "0,1,2", "--mode", "dk-table", "--csv"}, chain);
  EXPECT_EQ(given.status, kExitOk);
  EXPECT_EQ(given.out, "k,d_k,delta_d_k\n1,3,3\n");
  EXPECT_EQ(cli({"dual"}, chain).status, kExitError);
  EXPECT_EQ(cli({"dual", "--realizer", "0,1,2", "2,1,0"}, chain).status, kExitError);
}

TEST(Cli, Enumerate) {
  CliResult r = cli({"enumerate", "--n", "4", "--count"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "16\n");
  CliResult lines = cli({"enumerate", "--n", "3"});
  EXPECT_EQ(std::count(lines.out.begin(), lines.out.end(), '\n'), 5);
  EXPECT_EQ(cli({"enumerate", "--n", "7"}).status, kExitError);
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(cli({}).status, kExitError);
  EXPECT_EQ(cli({"bogus"}).status, kExitError);
  EXPECT_EQ(cli({"certify"}, "not json").status, kExitError);
  EXPECT_EQ(cli({"construct", "delta", "--b", "3,1,1,1"}).status, kExitError);
  CliResult big = cli({"--limit-n", "10", "certify"}, write_poset_json(build_pj(4).poset));
  EXPECT_EQ(big.status, kExitError);
  EXPECT_NE(big.err.find("SizeLimitExceeded"), std::string::npos);
  EXPECT_EQ(cli({"certify", "-i", "/nonexistent/file.json"}).status, kExitError);
}

TEST(Cli, OutputIndependentOfThreadCount) {
  std::string p4 = write_poset_json(build_pj(4).poset);
  ::setenv("POLYSAT_THREADS", "1", 1);
  CliResult one = cli({"certify"}, p4);
  ::setenv("POLYSAT_THREADS", "4", 1);
  CliResult four = cli({"certify"}, p4);
  ::unsetenv("POLYSAT_THREADS");
  EXPECT_EQ(one.status, kExitOk);
  EXPECT_EQ(one.out, four.out);
}

}  // namespace
}  // namespace polysat
