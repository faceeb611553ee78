// Acceptance gate: runs each criterion and prints one PASS/FAIL line.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "domeq/domeq.hpp"

using namespace domeq;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Recorder {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? ", " : "") << s; }
  Outcome take() {
    if (out_.ok) out_.detail = notes_.str();
    return out_;
  }

 private:
  Outcome out_;
  std::ostringstream notes_;
};

std::string str(const Graph& g) { return io::serialize_graph(g); }

Outcome cycles() {
  Recorder r;
  for (int n = 3; n <= 15; ++n) {
    const Graph c = cycle_graph(n);
    r.expect(gamma_k(c, 1).number == (n + 2) / 3, "gamma(C_" + std::to_string(n) + ")");
    r.expect(gamma_k(c, 2).number == (n + 1) / 2, "gamma_2(C_" + std::to_string(n) + ")");
    r.expect(gamma_k_bruteforce(c, 1).number == (n + 2) / 3, "oracle gamma(C_" + std::to_string(n) + ")");
    r.expect(gamma_k_bruteforce(c, 2).number == (n + 1) / 2, "oracle gamma_2(C_" + std::to_string(n) + ")");
  }
  r.note("n = 3..15");
  return r.take();
}

Outcome fink_jacobson() {
  Recorder r;
  Rng rng(1001);
  int graphs = 0;
  while (graphs < 500) {
    Graph g = random_graph(rng.between(4, 14), 0.1 + 0.6 * rng.uniform(), rng);
    if (max_degree(g) < 2) continue;
    ++graphs;
    const int gamma = gamma_k_bruteforce(g, 1).number;
    r.expect(gamma == gamma_k(g, 1).number, "solver disagrees with oracle on\n" + str(g));
    for (int k = 2; k <= 3; ++k) {
      if (max_degree(g) < k) continue;
      const int gk = gamma_k(g, k).number;
      r.expect(gk == gamma_k_bruteforce(g, k).number, "solver disagrees with oracle on\n" + str(g));
      r.expect(gk >= gamma + k - 2, "bound fails for k = " + std::to_string(k) + " on\n" + str(g));
    }
  }
  r.note(std::to_string(graphs) + " graphs");
  return r.take();
}

Outcome g1_domination() {
  Recorder r;
  Rng rng(1002);
  int oracle_checked = 0;
  for (int i = 0; i < 100; ++i) {
    auto spec = random_g1_spec(6, rng.uniform(), 3, 0.3 * rng.uniform(), rng);
    auto inst = build(spec);
    r.expect(in_g1(spec), "spec outside G_1");
    r.expect(gamma_k(inst.g, 2).number == spec.f.order(), "gamma_2 != |V(F)| on\n" + io::serialize_instance(inst));
    if (inst.g.order() <= kOracleVertexLimit) {
      ++oracle_checked;
      r.expect(gamma_k_bruteforce(inst.g, 2).number == spec.f.order(), "oracle gamma_2 != |V(F)|");
    }
  }
  r.note("100 specs, " + std::to_string(oracle_checked) + " also by oracle");
  return r.take();
}

Outcome h_cross_validation() {
  Recorder r;
  Rng rng(1003);
  int instances = 0, negatives = 0, a_certs = 0, b_certs = 0;
  while (instances < 240) {
    const bool local = instances % 2 == 1;
    auto inst = random_h_instance(rng.between(2, 7), 0.3 + 0.4 * rng.uniform(), local ? 0.0 : 0.25 * rng.uniform(),
                                  rng.next());
    if (!inst || inst->g.order() > kOracleVertexLimit) continue;
    if (local) inst = add_local_supplementary_edges(*inst, 0.5 * rng.uniform(), rng);
    ++instances;
    r.expect(validate_h(*inst).valid, "generator left H");
    auto v = recognize_h(*inst);
    const std::string text = io::serialize_instance(*inst);
    r.expect(v.equal == is_gamma_gamma2_graph(inst->g), "verdict disagrees with oracle on\n" + text);
    auto f = extract_underlying(inst->g, inst->d);
    long long f_edges = static_cast<long long>(f.size());
    r.expect(v.stats.matching_calls <= 2 * f_edges, "matching calls exceed 2|E(F)|");
    r.expect(v.stats.max_aux_order <= 2 * max_degree(f), "auxiliary graph larger than 2 max deg F");
    if (!v.equal) {
      ++negatives;
      r.expect(v.certificate && verify_certificate(*inst, *v.certificate), "certificate does not replay on\n" + text);
      if (v.certificate) (std::holds_alternative<ACertificate>(*v.certificate) ? a_certs : b_certs)++;
    }
  }
  r.expect(a_certs > 0 && b_certs > 0, "sample lacks one certificate type");
  r.note(std::to_string(instances) + " instances, " + std::to_string(negatives) + " negative (" +
         std::to_string(a_certs) + " A, " + std::to_string(b_certs) + " B)");
  return r.take();
}

Outcome gadgets() {
  Recorder r;
  const Graph b = gadget_b().g;
  r.expect(gamma_k(b, 2).number == 4 && gamma_k_bruteforce(b, 2).number == 4, "gamma_2(B) != 4");
  r.expect(gamma_k(b, 1).number == 3 && gamma_k_bruteforce(b, 1).number == 3, "gamma(B) != 3");
  for (int k = 2; k <= 4; ++k) {
    const Graph a = gadget_a(k).g;
    const std::string name = "A_" + std::to_string(k);
    r.expect(gamma_k(a, 2).number == k + 1 && gamma_k_bruteforce(a, 2).number == k + 1, "gamma_2(" + name + ")");
    r.expect(gamma_k(a, 1).number <= k && gamma_k_bruteforce(a, 1).number <= k, "gamma(" + name + ")");
  }
  r.note("B, A_2..A_4");
  return r.take();
}

Outcome sat_reduction() {
  Recorder r;
  Rng rng(1006);
  int covered = 0, sat = 0, unsat = 0, arbitrary = 0, spot = 0;
  while (covered < 60) {
    const int k = rng.between(6, 7);
    auto f = random_triple_cover_cnf(k, rng.between(0, 10), rng, rng.chance(0.5));
    r.expect(triple_cover_holds(f), "generator lost the triple cover");
    ++covered;
    const bool s = cnf_satisfiable(f).has_value();
    (s ? sat : unsat)++;
    r.expect(detail::sat_reduction_consistent(f, true), "reduction fails on\n" + io::serialize_cnf(f));
  }
  for (int i = 0; i < 200; ++i) {
    const int k = rng.between(3, 7);
    auto f = random_cnf(k, rng.between(1, 10), rng);
    ++arbitrary;
    r.expect(detail::sat_reduction_consistent(f, false), "reduction fails on\n" + io::serialize_cnf(f));
    const Graph& g = reduce_3sat(f).instance.g;
    if (g.order() <= 20) {
      ++spot;
      r.expect(gamma_k(g, 1).number == gamma_k_bruteforce(g, 1).number, "solver disagrees with oracle");
      r.expect(gamma_k(g, 2).number == gamma_k_bruteforce(g, 2).number, "solver disagrees with oracle");
    }
  }
  r.expect(sat > 0 && unsat > 0, "covered sample lacks a satisfiable or unsatisfiable formula");
  r.note(std::to_string(covered) + " covered (" + std::to_string(sat) + " sat, " + std::to_string(unsat) +
         " unsat), " + std::to_string(arbitrary) + " arbitrary, " + std::to_string(spot) + " oracle spot checks");
  return r.take();
}

Outcome perfect_agreement() {
  Recorder r;
  int graphs = 0, perfect = 0;
  auto check = [&](const Graph& g) {
    ++graphs;
    const bool structural = recognize_perfect(g).perfect;
    perfect += structural;
    r.expect(structural == forbidden_subgraph_check(g) && structural == perfect_oracle(g), "disagreement on\n" + str(g));
  };
  for (const auto& m : s_multiplicity_lists(12)) check(gadget_s(m).g);
  for (int n = 4; n <= 9; ++n) check(cycle_graph(n));
  check(complete_graph(4));
  for (const auto& g : t6_augmented_graphs()) check(g);
  const auto dir = std::filesystem::path(DOMEQ_FIXTURE_DIR) / "graphs";
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    const Graph g = io::parse_graph_file(e.path().string());
    if (g.order() >= 1 && g.order() <= 12 && min_degree(g) >= 2) check(g);
  }
  Rng rng(1007);
  for (int i = 0; i < 300; ++i) check(random_connected_min_degree2(rng.between(3, 10), 0.35 * rng.uniform(), rng));
  r.note(std::to_string(graphs) + " graphs, " + std::to_string(perfect) + " perfect");
  return r.take();
}

Outcome matching() {
  Recorder r;
  auto check = [&](const Graph& g, int expected) {
    const Matching m = maximum_matching(g);
    r.expect(m.is_valid_for(g), "invalid matching on\n" + str(g));
    const int brute = brute_force_maximum_matching(g).size();
    r.expect(m.size() == brute, "blossom disagrees with exhaustive search on\n" + str(g));
    if (expected >= 0) r.expect(m.size() == expected, "wrong matching number on\n" + str(g));
  };
  check(cycle_graph(4), 2);
  check(cycle_graph(5), 2);
  check(petersen_graph(), 5);
  Rng rng(1008);
  for (int i = 0; i < 300;) {
    Graph g = random_graph(rng.between(2, 16), rng.uniform(), rng);
    if (g.size() > kBruteForceMatchingEdgeLimit) continue;
    ++i;
    check(g, -1);
  }
  r.note("303 graphs");
  return r.take();
}

Outcome c4_join() {
  Recorder r;
  int graphs = 0;
  for (int n = 0; n <= 4; ++n) {
    const auto gs = nonisomorphic_graphs(n);
    if (n == 4) r.expect(gs.size() == 11, "expected 11 graphs on 4 vertices");
    for (const auto& f : gs) {
      ++graphs;
      const Graph g = join_c4(f);
      r.expect(gamma_k(g, 1).number == 2 && gamma_k_bruteforce(g, 1).number == 2, "gamma != 2 for\n" + str(f));
      r.expect(gamma_k(g, 2).number == 2 && gamma_k_bruteforce(g, 2).number == 2, "gamma_2 != 2 for\n" + str(f));
    }
  }
  r.note(std::to_string(graphs) + " graphs on 0..4 vertices");
  return r.take();
}

Outcome underlying_roundtrip() {
  Recorder r;
  Rng rng(1010);
  for (int i = 0; i < 100; ++i) {
    auto spec = random_g1_spec(7, rng.uniform(), 3, 0.3 * rng.uniform(), rng);
    auto inst = build(spec);
    r.expect(canonical_code(extract_underlying(inst.g, inst.d)) == canonical_code(spec.f),
             "underlying graph differs on\n" + io::serialize_instance(inst));
  }
  r.note("100 specs");
  return r.take();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cycle formulas", cycles},
      {"Fink-Jacobson bound", fink_jacobson},
      {"G_1 2-domination number", g1_domination},
      {"H recognition vs oracle", h_cross_validation},
      {"gadget values", gadgets},
      {"3-SAT reduction", sat_reduction},
      {"perfect-graph triple agreement", perfect_agreement},
      {"matching oracle", matching},
      {"C_4 join", c4_join},
      {"underlying-graph round trip", underlying_roundtrip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.ok;
    std::printf("%s %zu %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
