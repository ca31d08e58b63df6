#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "rainbow/cli.hpp"

using namespace rainbow;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;

  std::vector<json> lines() const {
    std::vector<json> v;
    std::istringstream s(out);
    for (std::string line; std::getline(s, line);) v.push_back(json::parse(line));
    return v;
  }

  json manifest() const {
    const auto at = err.rfind("{\"command\"");
    return json::parse(err.substr(at));
  }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = cli::dispatch(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, PsiOfEmptyGraph) {
  const auto r = run({"psi"}, R"({"vertices":0,"edges":[]})" "\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{\"psi\":0}\n");
  EXPECT_EQ(run({"psi"}, R"({"vertices":1,"edges":[]})").out, "{\"psi\":\"inf\"}\n");
  EXPECT_EQ(run({"psi-line"}, R"({"left":1,"right":2,"edges":[[0,0],[0,1]]})").out, "{\"psi\":1}\n");
}

TEST(Cli, DriskoExtremalPipe) {
  const auto g = run({"gen", "drisko-extremal", "3"});
  ASSERT_EQ(g.status, 0);
  const auto r = run({"rainbow", "--target", "3"}, g.out);
  EXPECT_EQ(r.status, 0);
  const auto j = r.lines().at(0);
  EXPECT_EQ(j["feasible"], false);
  EXPECT_EQ(j["optimum"], 2);
  EXPECT_EQ(j["status"], "complete");
  EXPECT_EQ(run({"rainbow", "--target", "3", "--expect-feasible"}, g.out).status, 1);
}

TEST(Cli, SolverVerbs) {
  auto r = run({"nu"}, to_json(latin_to_hypergraph(cyclic_latin(3))).dump());
  EXPECT_EQ(r.lines().at(0)["optimum"], 3);
  EXPECT_EQ(r.lines().at(0)["witness"].size(), 3U);
  r = run({"diagonal", "--bound", "1"}, to_json(cyclic_latin(4)).dump());
  EXPECT_EQ(r.lines().at(0)["feasible"], false);
  EXPECT_TRUE(r.lines().at(0)["witness"].is_null());
  r = run({"diagonal", "--bound", "2", "--expect-feasible"}, to_json(cyclic_latin(4)).dump());
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.lines().at(0)["witness"].size(), 4U);
  r = run({"transversal", "--deficiency", "0"}, R"({"graph":{"vertices":2,"edges":[[0,1]]},"parts":[[0],[1]]})");
  EXPECT_EQ(r.lines().at(0)["optimum"], 1);
  r = run({"betti"}, R"({"vertices":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[0,5]]})");
  EXPECT_EQ(r.lines().at(0)["betti"], json::parse("[0,0,2,0]"));
  r = run({"eta", "--format", "summary"}, R"({"vertices":2,"edges":[[0,1]]})");
  EXPECT_EQ(r.out, "eta 1\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"diagonal"}).status, 2);
  EXPECT_EQ(run({"gen", "theorem19", "3"}).status, 2);
  EXPECT_EQ(run({"gen", "nothing"}).status, 2);
  EXPECT_EQ(run({"verify", "DRISKO_1_5", "--random", "5"}).status, 2);
  EXPECT_EQ(run({"verify", "NOT_AN_ID", "--exhaustive", "2", "3"}).status, 2);
  EXPECT_EQ(run({"verify", "STRONG_CAMWAN_1_12", "--exhaustive", "6"}).status, 2);
  EXPECT_EQ(run({"hunt", "CONJ_AB_1_4", "--budget", "5"}).status, 2);
  EXPECT_EQ(run({"hunt", "DRISKO_1_5", "--budget", "5", "--seed", "1"}).status, 2);
  EXPECT_EQ(run({"suite"}).status, 2);
}

TEST(Cli, MalformedJsonReportsPosition) {
  const auto r = run({"nu"}, "{\"sides\":[1,1,1],\"edges\":[]}\n{\"sides\":[1,1,\n");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_NE(r.err.find("byte"), std::string::npos);
  const auto bad = run({"nu"}, R"({"sides":[1,1,1],"edges":[[0,0,5]]})");
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.err.find("line 1"), std::string::npos);
}

TEST(Cli, GenStreams) {
  auto r = run({"gen", "latin", "4", "--mode", "exhaustive"});
  EXPECT_EQ(r.lines().size(), 576U);
  r = run({"gen", "row-latin", "3", "--mode", "exhaustive", "--count", "5"});
  EXPECT_EQ(r.lines().size(), 5U);
  r = run({"gen", "latin", "3", "--as-hypergraph"});
  EXPECT_EQ(hypergraph_from_json(r.lines().at(0)), latin_to_hypergraph(cyclic_latin(3)));
  r = run({"gen", "p3", "2"});
  EXPECT_EQ(family_from_json(r.lines().at(0)), gen_p3_family(2));
  const auto d = run({"gen", "double-a"}, r.status == 0 ? to_json(latin_to_hypergraph(cyclic_latin(2))).dump() : "");
  EXPECT_EQ(hypergraph_from_json(d.lines().at(0)).edge_count(), 8U);
  EXPECT_EQ(run({"gen", "accommodating", "2", "0", "2", "2"}).status, 0);
}

TEST(Cli, SeededGenerationIsReproducible) {
  const auto a = run({"gen", "theorem19", "3", "--seed", "9", "--count", "4"});
  const auto b = run({"gen", "theorem19", "3", "--seed", "9", "--count", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.lines().size(), 4U);
  EXPECT_EQ(a.manifest()["output_digests"], b.manifest()["output_digests"]);
  EXPECT_EQ(a.manifest()["seed"], 9);
  const auto c = run({"gen", "theorem19", "3", "--seed", "10", "--count", "4"});
  EXPECT_NE(a.manifest()["output_digests"], c.manifest()["output_digests"]);
}

TEST(Cli, ManifestFields) {
  const auto r = run({"psi"}, R"({"vertices":0,"edges":[]})" "\n");
  const auto m = r.manifest();
  for (const char* k : {"command", "seed", "versions", "input_digests", "output_digests", "wall_time"}) {
    EXPECT_TRUE(m.contains(k)) << k;
  }
  EXPECT_EQ(m["command"], "rainbow psi");
  // sha256 of the empty string
  EXPECT_NE(run({"psi"}, "").manifest()["input_digests"]["stdin"].get<std::string>().find("e3b0c442"),
            std::string::npos);
}

TEST(Cli, VerifyFromStdinRoundTrips) {
  const auto g = run({"gen", "theorem19", "3", "--seed", "1", "--count", "20"});
  const auto v = run({"verify", "ALMOST_DRISKO_1_9", "--stdin"}, g.out);
  EXPECT_EQ(v.status, 0);
  const auto report = v.lines().at(0);
  EXPECT_EQ(report["instances_checked"], 20);
  EXPECT_EQ(report["hypothesis_hits"], 20);
  EXPECT_EQ(report["violations"].size(), 0U);
}

TEST(Cli, VerifyAndHuntReports) {
  auto r = run({"verify", "STRONG_CAMWAN_1_12", "--exhaustive", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.lines().at(0)["instances_checked"], 36);
  r = run({"verify", "LEMMA_3_1", "--random", "20", "--seed", "3", "--size", "2", "10", "--jobs", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.lines().at(0)["hypothesis_hits"], 20);
  r = run({"hunt", "CONJ_SYM_1_3", "--budget", "50", "--seed", "4", "--size", "3", "--format", "summary"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("no counterexample found in budget"), std::string::npos);
}

TEST(Cli, CertificatesAreWrittenForViolations) {
  const auto dir = std::filesystem::temp_directory_path() / "rainbow-cli-certificates";
  std::filesystem::remove_all(dir);
  // CONJ_FRACD at n = 3, d = 2 is exhaustive and tiny; whatever it reports
  // must match the certificate files one for one.
  const auto r = run({"verify", "CONJ_FRACD_5_1", "--exhaustive", "3", "2", "--certificates", dir.string()});
  ASSERT_EQ(r.status, 0);
  const auto violations = r.lines().at(0)["violations"].size();
  std::size_t files = 0;
  if (std::filesystem::exists(dir)) {
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
      std::ifstream f(e.path());
      std::string line;
      std::getline(f, line);
      EXPECT_NO_THROW(hypergraph_from_json(json::parse(line)));
      ++files;
    }
  }
  EXPECT_EQ(files, violations);
  std::filesystem::remove_all(dir);
}
