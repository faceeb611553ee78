#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "domeq/constructions.hpp"
#include "domeq/generators.hpp"
#include "domeq/io.hpp"

using namespace domeq;
namespace fs = std::filesystem;

namespace {

Graph graph_from(const std::string& text) {
  std::istringstream in(text);
  return io::parse_graph(in);
}

CnfFormula cnf_from(const std::string& text) {
  std::istringstream in(text);
  return io::parse_cnf(in);
}

PartitionedInstance instance_from(const std::string& text) {
  std::istringstream in(text);
  return io::parse_instance(in);
}

std::size_t graph_error_line(const std::string& text) {
  try {
    graph_from(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::size_t cnf_error_line(const std::string& text) {
  try {
    cnf_from(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus(const std::string& sub, const std::string& ext) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fs::path(DOMEQ_FIXTURE_DIR) / sub))
    if (e.path().extension() == ext) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(EdgeList, ParsesCycle) {
  EXPECT_EQ(graph_from("4 4\n0 1\n1 2\n2 3\n3 0\n"), cycle_graph(4));
  EXPECT_EQ(graph_from("# header comment\n4 4 # n m\n0 1\n\n1 2\n2 3 # edge\n3 0\n"), cycle_graph(4));
  EXPECT_EQ(graph_from("0 0\n"), empty_graph(0));
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(graph_error_line("4 2\n0 1\n1 x\n"), 3u);
  EXPECT_EQ(graph_error_line("4 2\n0 1\n1 7\n"), 3u);
  EXPECT_EQ(graph_error_line("4 2\n0 1\n2 2\n"), 3u);
  EXPECT_EQ(graph_error_line("4 1\n0 1\n1 2\n"), 3u);
  EXPECT_EQ(graph_error_line("4 3\n0 1\n1 2\n"), 3u);
  EXPECT_EQ(graph_error_line("4\n"), 1u);
  EXPECT_EQ(graph_error_line("# only a comment\n"), 1u);
  EXPECT_EQ(graph_error_line("3 1\n0 1 2\n"), 2u);
}

TEST(EdgeList, RoundTrip) {
  Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(rng.between(0, 20), rng.uniform(), rng);
    const auto text = io::serialize_graph(g);
    EXPECT_EQ(graph_from(text), g);
    EXPECT_EQ(io::serialize_graph(graph_from(text)), text);
  }
}

TEST(InstanceJson, GadgetB) {
  const auto text = io::serialize_instance(gadget_b());
  auto inst = instance_from(text);
  EXPECT_EQ(inst, gadget_b());
  EXPECT_EQ(inst.d.count(), 4);
  EXPECT_EQ(io::serialize_instance(inst), text);
}

TEST(InstanceJson, LabelsOptional) {
  auto inst = instance_from(R"({"n": 4, "edges": [[0,2],[0,3],[1,2],[1,3]], "d": [0,1],
                               "pairs": [{"fu":0,"fv":1,"x":[2,3]}]})");
  EXPECT_EQ(inst.g, build({complete_graph(2), {}, {}}).g);
  EXPECT_TRUE(inst.labels.empty());
}

TEST(InstanceJson, PairRuleViolationsNamed) {
  auto rule_of = [](const std::string& text) -> std::string {
    try {
      instance_from(text);
    } catch (const ConstructionError& e) {
      return e.rule();
    }
    return "";
  };
  EXPECT_EQ(rule_of(R"({"n":4,"edges":[[0,2],[0,3],[1,2],[1,3],[2,3]],"d":[0,1],"pairs":[{"fu":0,"fv":1,"x":[2,3]}]})"),
            "pair-independent");
  EXPECT_EQ(rule_of(R"({"n":4,"edges":[[0,2],[0,3],[1,2]],"d":[0,1],"pairs":[{"fu":0,"fv":1,"x":[2,3]}]})"),
            "pair-neighborhood");
  EXPECT_EQ(rule_of(R"({"n":4,"edges":[[0,2],[0,3],[1,2],[1,3]],"d":[0,1],"pairs":[{"fu":0,"fv":2,"x":[1,3]}]})"),
            "pair-endpoint");
}

TEST(InstanceJson, MalformedInput) {
  EXPECT_THROW(instance_from("{"), ParseError);
  EXPECT_THROW(instance_from(R"({"n": 2, "edges": [[0,0]], "d": [], "pairs": []})"), ParseError);
  EXPECT_THROW(instance_from(R"({"n": 2, "edges": [], "d": [5], "pairs": []})"), ParseError);
  EXPECT_THROW(instance_from(R"({"n": 2, "edges": []})"), ParseError);
  EXPECT_THROW(instance_from(R"({"n": 2, "edges": [], "d": [], "pairs": [], "labels": ["a"]})"), ParseError);
}

TEST(InstanceJson, RoundTripGenerated) {
  Rng rng(62);
  for (int i = 0; i < 30; ++i) {
    auto inst = build(random_g1_spec(6, 0.5, 3, 0.2, rng));
    auto text = io::serialize_instance(inst);
    EXPECT_EQ(instance_from(text), inst);
  }
}

TEST(Dimacs, ParsesSingleClause) {
  auto f = cnf_from("p cnf 3 1\n1 -2 3 0\n");
  EXPECT_EQ(f.num_vars(), 3);
  ASSERT_EQ(f.clauses().size(), 1u);
  EXPECT_EQ(f.clauses()[0][1], (Literal{2, false}));
}

TEST(Dimacs, CommentsAndMultilineClauses) {
  auto f = cnf_from("c a comment\np cnf 4 2\n1 -2\n 3 0 -4 1 2 0\n%\n0\n");
  EXPECT_EQ(f.clauses().size(), 2u);
}

TEST(Dimacs, ErrorsCarryLineNumbers) {
  EXPECT_EQ(cnf_error_line("p cnf 3 1\n1 2 0\n"), 2u);
  EXPECT_EQ(cnf_error_line("p cnf 3 1\n1 -1 2 0\n"), 2u);
  EXPECT_EQ(cnf_error_line("p cnf 3 1\n1 2 3 4 0\n"), 2u);
  EXPECT_EQ(cnf_error_line("p cnf 3 1\n1 2 9 0\n"), 2u);
  EXPECT_EQ(cnf_error_line("1 2 3 0\n"), 1u);
  EXPECT_EQ(cnf_error_line("p dnf 3 1\n"), 1u);
  EXPECT_EQ(cnf_error_line("p cnf 3 2\n1 2 3 0\n"), 2u);
  EXPECT_EQ(cnf_error_line("p cnf 3 1\n1 2 3\n"), 2u);
  EXPECT_EQ(cnf_error_line("p cnf 3 1\n1 2 x 0\n"), 2u);
}

TEST(Dimacs, RoundTrip) {
  Rng rng(63);
  for (int i = 0; i < 30; ++i) {
    auto f = random_cnf(rng.between(3, 10), rng.between(1, 20), rng);
    auto text = io::serialize_cnf(f);
    EXPECT_EQ(cnf_from(text), f);
    EXPECT_EQ(io::serialize_cnf(cnf_from(text)), text);
  }
}

TEST(Files, MissingFile) { EXPECT_THROW(io::parse_graph_file("/nonexistent/graph.txt"), Error); }

TEST(Corpus, GraphsRoundTrip) {
  auto files = corpus("graphs", ".txt");
  ASSERT_FALSE(files.empty());
  for (const auto& p : files) {
    const auto text = slurp(p);
    EXPECT_EQ(io::serialize_graph(io::parse_graph_file(p.string())), text) << p;
  }
}

TEST(Corpus, InstancesRoundTrip) {
  auto files = corpus("instances", ".json");
  ASSERT_FALSE(files.empty());
  for (const auto& p : files) {
    const auto text = slurp(p);
    EXPECT_EQ(io::serialize_instance(io::parse_instance_file(p.string())), text) << p;
  }
}

TEST(Corpus, CnfRoundTrip) {
  auto files = corpus("cnf", ".cnf");
  ASSERT_FALSE(files.empty());
  for (const auto& p : files) {
    const auto text = slurp(p);
    EXPECT_EQ(io::serialize_cnf(io::parse_cnf_file(p.string())), text) << p;
  }
}
