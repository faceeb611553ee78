#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "domeq/cnf.hpp"
#include "domeq/constructions.hpp"
#include "domeq/domination.hpp"
#include "domeq/generators.hpp"
#include "domeq/graph.hpp"
#include "domeq/io.hpp"
#include "domeq/matching.hpp"
#include "domeq/recognition.hpp"
#include "domeq/rng.hpp"

namespace domeq {

struct CheckResult {
  std::string name;
  long long instances = 0;
  long long passed = 0;
  /// First failing input, serialized; absent iff the check passed.
  std::optional<std::string> counterexample;
  /// "graph", "instance" or "cnf".
  std::string counterexample_format;
  double seconds = 0.0;

  bool ok() const { return !counterexample.has_value(); }
};

struct VerifyReport {
  std::vector<CheckResult> checks;  // sorted by name

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
  }
  long long instances() const {
    long long n = 0;
    for (const auto& c : checks) n += c.instances;
    return n;
  }
};

inline constexpr int kDefaultVerifyBudget = 100;

namespace detail {

class Tally {
 public:
  explicit Tally(CheckResult& r) : r_(r) {}

  template <typename Serialize>
  void record(bool ok, const char* format, Serialize&& serialize) {
    ++r_.instances;
    if (ok) {
      ++r_.passed;
    } else if (!r_.counterexample) {
      r_.counterexample = serialize();
      r_.counterexample_format = format;
    }
  }
  void record(bool ok, const Graph& g) {
    record(ok, "graph", [&] { return io::serialize_graph(g); });
  }
  void record(bool ok, const PartitionedInstance& inst) {
    record(ok, "instance", [&] { return io::serialize_instance(inst); });
  }
  void record(bool ok, const CnfFormula& f) {
    record(ok, "cnf", [&] { return io::serialize_cnf(f); });
  }

 private:
  CheckResult& r_;
};

inline Graph shuffled(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return relabel(g, perm);
}

inline Graph random_connected(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(rng.below(v)), v});
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.push_back({u, v});
  return shuffled(Graph::from_edges(n, edges), rng);
}

/// Connected nontrivial graphs with gamma = gamma_2, drawn from several
/// families and filtered by the exhaustive oracle.
inline std::vector<Graph> gamma_gamma2_pool(Rng& rng, int count) {
  std::vector<Graph> pool;
  const long long max_draws = 60LL * count + 100;
  for (long long draw = 0; draw < max_draws && static_cast<int>(pool.size()) < count; ++draw) {
    Graph g;
    switch (draw % 5) {
      case 0:
        g = join_c4(random_graph(rng.between(0, 5), rng.uniform(), rng));
        break;
      case 1: {
        std::vector<int> mults(rng.between(1, 3));
        for (int& m : mults) m = rng.between(2, 3);
        g = gadget_s(mults).g;
        break;
      }
      case 2: {
        auto inst = random_h_instance(rng.between(2, 5), 0.5, 0.1, rng.next());
        if (!inst || inst->g.order() > 16) continue;
        g = inst->g;
        break;
      }
      case 3:
        g = random_connected_min_degree2(rng.between(3, 9), 0.3 * rng.uniform(), rng);
        break;
      default:
        g = random_connected(rng.between(2, 9), 0.4 * rng.uniform(), rng);
        break;
    }
    g = shuffled(g, rng);
    if (g.order() < 2 || !is_connected(g) || !is_gamma_gamma2_graph(g)) continue;
    pool.push_back(std::move(g));
  }
  return pool;
}

inline void check_fink_jacobson(CheckResult& r, Rng& rng, int budget) {
  Tally t(r);
  for (int i = 0; i < budget; ++i) {
    Graph g = random_graph(rng.between(2, 14), 0.1 + 0.5 * rng.uniform(), rng);
    const int gamma = gamma_k(g, 1).number;
    for (int k : {2, 3}) {
      if (max_degree(g) >= k) t.record(gamma_k(g, k).number >= gamma + k - 2, g);
    }
  }
}

inline void check_solver_oracle(CheckResult& r, Rng& rng, int budget) {
  Tally t(r);
  for (int i = 0; i < budget; ++i) {
    Graph g = random_graph(rng.between(1, 18), 0.05 + 0.5 * rng.uniform(), rng);
    for (int k : {1, 2, 3}) {
      auto fast = gamma_k(g, k);
      const bool ok = fast.number == gamma_k_bruteforce(g, k).number && fast.witness.count() == fast.number &&
                      is_k_dominating(g, fast.witness, k);
      t.record(ok, g);
    }
  }
}

inline void check_min_degree(CheckResult& r, Rng& rng, int budget) {
  Tally t(r);
  for (const auto& g : gamma_gamma2_pool(rng, budget)) t.record(min_degree(g) >= 2, g);
}

inline void check_independent_2dom(CheckResult& r, Rng& rng, int budget) {
  Tally t(r);
  for (const auto& g : gamma_gamma2_pool(rng, budget)) {
    bool ok = true;
    for (const auto& d : enumerate_min_k_dominating(g, 2)) ok = ok && is_independent(g, d);
    t.record(ok, g);
  }
}

/// For every minimum 2-dominating set D and u, v in D with a common
/// neighbour, two nonadjacent vertices outside D see exactly {u, v} in D.
inline bool pair_witnesses_exist(const Graph& g, const VertexSet& d) {
  const auto members = d.members();
  std::vector<std::vector<Vertex>> d_nbrs(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y : g.neighbors(x))
      if (d.contains(y)) d_nbrs[x].push_back(y);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Vertex u = members[i], v = members[j];
      bool common = false;
      std::vector<Vertex> exact;
      for (Vertex x = 0; x < g.order(); ++x) {
        if (d.contains(x)) continue;
        const auto& nd = d_nbrs[x];
        const bool sees_u = std::find(nd.begin(), nd.end(), u) != nd.end();
        const bool sees_v = std::find(nd.begin(), nd.end(), v) != nd.end();
        common = common || (sees_u && sees_v);
        if (sees_u && sees_v && nd.size() == 2) exact.push_back(x);
      }
      if (!common) continue;
      bool found = false;
      for (std::size_t a = 0; a < exact.size() && !found; ++a)
        for (std::size_t b = a + 1; b < exact.size() && !found; ++b) found = !g.adjacent(exact[a], exact[b]);
      if (!found) return false;
    }
  }
  return true;
}

/// For every u' outside D and u, v in D n N(u'), some v' outside D makes
/// u u' v v' an induced 4-cycle.
inline bool c4_witnesses_exist(const Graph& g, const VertexSet& d) {
  for (Vertex up = 0; up < g.order(); ++up) {
    if (d.contains(up)) continue;
    std::vector<Vertex> nd;
    for (Vertex w : g.neighbors(up))
      if (d.contains(w)) nd.push_back(w);
    for (std::size_t i = 0; i < nd.size(); ++i)
      for (std::size_t j = i + 1; j < nd.size(); ++j) {
        const Vertex u = nd[i], v = nd[j];
        if (g.adjacent(u, v)) return false;
        bool found = false;
        for (Vertex vp = 0; vp < g.order() && !found; ++vp)
          found = vp != up && !d.contains(vp) && g.adjacent(vp, u) && g.adjacent(vp, v) && !g.adjacent(vp, up);
        if (!found) return false;
      }
  }
  return true;
}

inline void check_pair_witness(CheckResult& r, Rng& rng, int budget) {
  Tally t(r);
  for (const auto& g : gamma_gamma2_pool(rng, budget)) {
    bool ok = true;
    for (const auto& d : enumerate_min_k_dominating(g, 2))
      ok = ok && pair_witnesses_exist(g, d) && c4_witnesses_exist(g, d);
    t.record(ok, g);
  }
}

inline void check_g1_domination(CheckResult& r, Rng& rng, int budget) {
  Tally t(r);
  for (int i = 0; i < budget; ++i) {
    auto inst = build(random_g1_spec(6, rng.uniform(), 3, 0.2 * rng.uniform(), rng));
    const bool ok = is_k_dominating(inst.g, inst.d, 2) && gamma_k(inst.g, 2).number == inst.d.count();
    t.record(ok, inst);
  }
}

inline void check_c4_join(CheckResult& r, Rng& rng, int budget) {
  Tally t(r);
  auto check = [&](const Graph& f) {
    Graph g = join_c4(f);
    const bool ok = gamma_k(g, 1).number == 2 && gamma_k(g, 2).number == 2 && gamma_k_bruteforce(g, 1).number == 2 &&
                    gamma_k_bruteforce(g, 2).number == 2;
    t.record(ok, g);
  };
  for (int n = 0; n <= 4; ++n)
    for (const auto& f : nonisomorphic_graphs(n)) check(f);
  for (int i = 0; i < budget; ++i) check(random_graph(rng.between(0, 10), rng.uniform(), rng));
}

inline void check_underlying_roundtrip(CheckResult& r, Rng& rng, int budget) {
  Tally t(r);
  for (int i = 0; i < budget; ++i) {
    auto spec = random_g1_spec(7, rng.uniform(), 3, 0.3 * rng.uniform(), rng);
    auto inst = build(spec);
    t.record(canonical_code(extract_underlying(inst.g, inst.d)) == canonical_code(spec.f), inst);
  }
}

inline void check_h_recognition(CheckResult& r, Rng& rng, int budget) {
  Tally t(r);
  for (int i = 0; i < budget;) {
    const bool local = i % 2 == 1;
    auto inst = random_h_instance(rng.between(2, 7), 0.3 + 0.4 * rng.uniform(), local ? 0.0 : 0.25 * rng.uniform(),
                                  rng.next());
    if (!inst || inst->g.order() > kOracleVertexLimit) continue;
    if (local) inst = add_local_supplementary_edges(*inst, 0.4 * rng.uniform(), rng);
    ++i;
    auto verdict = recognize_h(*inst);
    bool ok = verdict.equal == is_gamma_gamma2_graph(inst->g);
    if (!verdict.equal) ok = ok && verdict.certificate && verify_certificate(*inst, *verdict.certificate);
    t.record(ok, *inst);
  }
}

inline bool sat_reduction_consistent(const CnfFormula& f, bool require_equivalence) {
  const int k = f.num_vars();
  const int l = static_cast<int>(f.clauses().size());
  auto red = reduce_3sat(f);
  const Graph& g = red.instance.g;
  if (g.order() != 3 * k + l + 3) return false;
  const auto sat = cnf_satisfiable(f);
  const auto gamma = gamma_k(g, 1);
  if (sat) {
    auto d = assignment_dominating_set(red, *sat);
    if (d.count() != k + 1 || !is_k_dominating(g, d, 1) || gamma.number > k + 1) return false;
  }
  if (!require_equivalence) return true;
  if (!red.triple_cover || gamma_k(g, 2).number != k + 2) return false;
  if (sat.has_value() != (gamma.number < k + 2)) return false;
  return !sat || satisfies(f, assignment_from_dominating_set(red, gamma.witness));
}

inline void check_sat_reduction(CheckResult& r, Rng& rng, int budget) {
  Tally t(r);
  for (int i = 0; i < budget; ++i) {
    auto covered = random_triple_cover_cnf(rng.between(6, 7), rng.between(0, 10), rng, rng.chance(0.5));
    t.record(sat_reduction_consistent(covered, true), covered);
    const int k = rng.between(3, 7);
    auto arbitrary = random_cnf(k, rng.between(1, 10), rng);
    t.record(sat_reduction_consistent(arbitrary, false), arbitrary);
  }
}

inline bool perfect_tests_agree(const Graph& g) {
  const bool structural = recognize_perfect(g).perfect;
  return structural == forbidden_subgraph_check(g) && structural == perfect_oracle(g);
}

inline void check_perfect_agreement(CheckResult& r, Rng& rng, int budget) {
  Tally t(r);
  for (const auto& mults : s_multiplicity_lists(12)) {
    const Graph g = gadget_s(mults).g;
    t.record(perfect_tests_agree(g), g);
  }
  for (int n = 4; n <= 9; ++n) t.record(perfect_tests_agree(cycle_graph(n)), cycle_graph(n));
  t.record(perfect_tests_agree(complete_graph(4)), complete_graph(4));
  for (const auto& g : t6_augmented_graphs()) t.record(perfect_tests_agree(g), g);
  for (int i = 0; i < budget; ++i) {
    Graph g;
    if (i % 2 == 0) {
      g = random_connected_min_degree2(rng.between(3, 10), 0.3 * rng.uniform(), rng);
    } else {
      auto lists = s_multiplicity_lists(10);
      g = gadget_s(lists[rng.below(lists.size())]).g;
      if (rng.chance(0.5)) {
        Vertex a = static_cast<Vertex>(rng.below(g.order())), b = static_cast<Vertex>(rng.below(g.order()));
        if (a != b) g = with_edge(g, {std::min(a, b), std::max(a, b)});
      }
      g = shuffled(g, rng);
    }
    t.record(perfect_tests_agree(g), g);
  }
}

inline void check_matching(CheckResult& r, Rng& rng, int budget) {
  Tally t(r);
  auto check = [&](const Graph& g) {
    auto m = maximum_matching(g);
    t.record(m.is_valid_for(g) && m.size() == brute_force_maximum_matching(g).size(), g);
  };
  check(cycle_graph(4));
  check(cycle_graph(5));
  check(petersen_graph());
  for (int i = 0; i < budget; ++i) {
    const int n = rng.between(1, 14);
    Graph g = random_graph(n, rng.uniform(), rng);
    while (g.size() > kBruteForceMatchingEdgeLimit) {
      auto edges = g.edges();
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng.below(edges.size())));
      g = Graph::from_edges(n, edges);
    }
    check(g);
  }
}

struct CheckDef {
  const char* name;
  void (*run)(CheckResult&, Rng&, int);
};

/// Sorted by name; the index doubles as the random stream of the check.
inline const std::vector<CheckDef>& check_table() {
  static const std::vector<CheckDef> table{
      {"c4-join", check_c4_join},
      {"fink-jacobson", check_fink_jacobson},
      {"g1-domination", check_g1_domination},
      {"h-recognition", check_h_recognition},
      {"independent-2dom", check_independent_2dom},
      {"matching", check_matching},
      {"min-degree", check_min_degree},
      {"pair-witness", check_pair_witness},
      {"perfect-agreement", check_perfect_agreement},
      {"sat-reduction", check_sat_reduction},
      {"solver-oracle", check_solver_oracle},
      {"underlying-roundtrip", check_underlying_roundtrip},
  };
  return table;
}

}  // namespace detail

inline std::vector<std::string> verify_check_names() {
  std::vector<std::string> out;
  for (const auto& c : detail::check_table()) out.emplace_back(c.name);
  return out;
}

/// Runs the property checks selected by scope ("all" or a comma-separated
/// list of check names) with `budget` random instances each. Fixed families
/// run whenever budget > 0. Throws Error on an unknown check name.
inline VerifyReport run_verify(const std::string& scope, std::uint64_t seed, int budget) {
  const auto& table = detail::check_table();
  std::vector<bool> selected(table.size(), scope == "all");
  if (scope != "all") {
    std::stringstream ss(scope);
    for (std::string name; std::getline(ss, name, ',');) {
      auto it = std::find_if(table.begin(), table.end(), [&](const detail::CheckDef& c) { return name == c.name; });
      if (it == table.end()) throw Error("unknown verify check: " + name);
      selected[it - table.begin()] = true;
    }
  }
  VerifyReport report;
  if (budget <= 0) return report;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!selected[i]) continue;
    CheckResult r;
    r.name = table[i].name;
    Rng rng(derive_seed(seed, i));
    const auto start = std::chrono::steady_clock::now();
    table[i].run(r, rng, budget);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace domeq
