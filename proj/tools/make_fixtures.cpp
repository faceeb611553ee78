// Regenerates the fixture corpus: make_fixtures <fixtures-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "domeq/domeq.hpp"

using namespace domeq;
namespace fs = std::filesystem;

namespace {

fs::path root;

void write(const std::string& rel, const std::string& text) {
  const fs::path p = root / rel;
  fs::create_directories(p.parent_path());
  std::ofstream(p) << text;
}

void graph(const std::string& name, const Graph& g) { write("graphs/" + name + ".txt", io::serialize_graph(g)); }
void instance(const std::string& name, const PartitionedInstance& inst) {
  write("instances/" + name + ".json", io::serialize_instance(inst));
}
void cnf(const std::string& name, const CnfFormula& f) { write("cnf/" + name + ".cnf", io::serialize_cnf(f)); }

Clause clause(int a, int b, int c) {
  auto lit = [](int x) { return Literal{std::abs(x), x > 0}; };
  return {lit(a), lit(b), lit(c)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <fixtures-dir>\n";
    return 2;
  }
  root = argv[1];

  for (int n = 3; n <= 9; ++n) graph("c" + std::to_string(n), cycle_graph(n));
  graph("p3", path_graph(3));
  graph("p4", path_graph(4));
  graph("k4", complete_graph(4));
  graph("k5", complete_graph(5));
  graph("petersen", petersen_graph());
  graph("t6", gadget_t6());
  graph("s_3_2", gadget_s({3, 2}).g);
  graph("s_2_2_2", gadget_s({2, 2, 2}).g);
  graph("s_4_3", gadget_s({4, 3}).g);
  graph("join_c4_p3", join_c4(path_graph(3)));
  graph("join_c4_k3", join_c4(complete_graph(3)));
  const auto augmented = t6_augmented_graphs();
  for (std::size_t i = 0; i < augmented.size(); ++i) graph("t6_augmented_" + std::to_string(i + 1), augmented[i]);

  instance("gadget_b", gadget_b());
  for (int k = 2; k <= 4; ++k) instance("gadget_a" + std::to_string(k), gadget_a(k));
  instance("gadget_s_3_2", gadget_s({3, 2}));
  instance("dsub_p3", double_subdivision(path_graph(3)));
  instance("dsub_c3", double_subdivision(cycle_graph(3)));
  instance("dsub_c5", double_subdivision(cycle_graph(5)));
  {
    ConstructionSpec spec{with_edge(star_graph(4), {1, 2}), {}, {}};
    for (int i = 0; i < 4; ++i) spec.supp_edges.push_back({pair_vertex(spec, i, 0), pair_vertex(spec, (i + 1) % 4, 1)});
    instance("a4_star", build(spec));
  }
  Rng rng(2024);
  for (int i = 1; i <= 3; ++i) {
    auto inst = random_h_instance(5, 0.5, 0.0, rng.next());
    instance("random_h_local_" + std::to_string(i), add_local_supplementary_edges(*inst, 0.5, rng));
  }

  const CnfFormula small(4, {clause(1, 2, 3), clause(-1, 2, -4), clause(-2, 3, 4)});
  cnf("small", small);
  instance("reduce_small", reduce_3sat(small).instance);
  std::vector<Clause> all8;
  for (int s = 0; s < 8; ++s) all8.push_back(clause(s & 1 ? -1 : 1, s & 2 ? -2 : 2, s & 4 ? -3 : 3));
  cnf("unsat_all8", CnfFormula(3, all8));
  Rng cnf_rng(7);
  cnf("covered_k6_sat", random_triple_cover_cnf(6, 2, cnf_rng, false));
  cnf("covered_k6_unsat", random_triple_cover_cnf(6, 0, cnf_rng, true));
  return 0;
}
