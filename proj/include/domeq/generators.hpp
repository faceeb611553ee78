#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "domeq/cnf.hpp"
#include "domeq/constructions.hpp"
#include "domeq/graph.hpp"
#include "domeq/rng.hpp"

namespace domeq {

/// Erdos-Renyi G(n, p).
inline Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

/// Connected graph with min degree >= 2 (n >= 3): a random spanning tree,
/// extra edges with probability p, then low-degree vertices topped up.
inline Graph random_connected_min_degree2(int n, double p, Rng& rng) {
  if (n < 3) throw Error("min degree 2 needs at least 3 vertices");
  std::set<Edge> edges;
  auto add = [&](Vertex a, Vertex b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  for (int i = 1; i < n; ++i) add(order[i], order[rng.below(i)]);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) add(u, v);
  std::vector<int> deg(n, 0);
  for (auto [a, b] : edges) ++deg[a], ++deg[b];
  for (Vertex v = 0; v < n; ++v) {
    while (deg[v] < 2) {
      Vertex w = static_cast<Vertex>(rng.below(n));
      if (w == v || edges.count({std::min(v, w), std::max(v, w)})) continue;
      add(v, w);
      ++deg[v];
      ++deg[w];
    }
  }
  return Graph::from_edges(n, std::vector<Edge>(edges.begin(), edges.end()));
}

/// Random member of G_1(F): F ~ G(d, f_edge_prob) with 1 <= d <= max_f,
/// up to max_y supplementary vertices on random F-edges, and each admissible
/// supplementary edge with probability supp_edge_prob.
inline ConstructionSpec random_g1_spec(int max_f, double f_edge_prob, int max_y, double supp_edge_prob, Rng& rng) {
  const int d = rng.between(1, max_f);
  ConstructionSpec spec{random_graph(d, f_edge_prob, rng), {}, {}};
  const auto f_edges = spec.f.edges();
  if (!f_edges.empty()) {
    const int ys = rng.between(0, max_y);
    for (int i = 0; i < ys; ++i) {
      auto e = f_edges[rng.below(f_edges.size())];
      spec.y_specs.push_back({e.u, e.v});
    }
  }
  const int x_end = d + 2 * static_cast<int>(f_edges.size());
  const int n = x_end + static_cast<int>(spec.y_specs.size());
  for (Vertex u = d; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (v < x_end && (u - d) / 2 == (v - d) / 2) continue;
      if (rng.chance(supp_edge_prob)) spec.supp_edges.push_back({u, v});
    }
  return spec;
}

inline Clause random_clause(int num_vars, Rng& rng) {
  std::vector<int> vars(num_vars);
  std::iota(vars.begin(), vars.end(), 1);
  rng.shuffle(vars);
  Clause c;
  for (int i = 0; i < 3; ++i) c[i] = {vars[i], rng.chance(0.5)};
  return c;
}

inline CnfFormula random_cnf(int num_vars, int num_clauses, Rng& rng) {
  std::vector<Clause> clauses;
  for (int j = 0; j < num_clauses; ++j) clauses.push_back(random_clause(num_vars, rng));
  return CnfFormula(num_vars, std::move(clauses));
}

/// Random formula satisfying the triple-cover condition: while some triple of
/// variables meets every clause, add a clause over three variables outside
/// that triple; then append extra_clauses uniform random clauses. With
/// plant_unsat the formula starts with all eight sign patterns over three
/// random variables, which makes it unsatisfiable.
inline CnfFormula random_triple_cover_cnf(int num_vars, int extra_clauses, Rng& rng, bool plant_unsat = false) {
  if (num_vars < 6) throw Error("triple cover needs at least 6 variables");
  std::vector<Clause> clauses;
  if (plant_unsat) {
    auto core = random_clause(num_vars, rng);
    for (int signs = 0; signs < 8; ++signs) {
      Clause c = core;
      for (int i = 0; i < 3; ++i) c[i].positive = (signs >> i) & 1;
      clauses.push_back(c);
    }
  }
  auto uncovered = [&]() -> std::vector<int> {
    for (int a = 1; a <= num_vars; ++a)
      for (int b = a + 1; b <= num_vars; ++b)
        for (int c = b + 1; c <= num_vars; ++c) {
          bool avoided = false;
          for (const auto& cl : clauses) {
            bool hit = false;
            for (const auto& lit : cl) hit = hit || lit.var == a || lit.var == b || lit.var == c;
            if (!hit) {
              avoided = true;
              break;
            }
          }
          if (!avoided) return {a, b, c};
        }
    return {};
  };
  for (auto triple = uncovered(); !triple.empty(); triple = uncovered()) {
    std::vector<int> rest;
    for (int v = 1; v <= num_vars; ++v)
      if (std::find(triple.begin(), triple.end(), v) == triple.end()) rest.push_back(v);
    rng.shuffle(rest);
    clauses.push_back({Literal{rest[0], rng.chance(0.5)}, Literal{rest[1], rng.chance(0.5)},
                       Literal{rest[2], rng.chance(0.5)}});
  }
  for (int j = 0; j < extra_clauses; ++j) clauses.push_back(random_clause(num_vars, rng));
  rng.shuffle(clauses);
  return CnfFormula(num_vars, std::move(clauses));
}

/// Minimum edge bitmask over all relabellings; equal iff isomorphic. n <= 7.
inline std::uint32_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 7) throw Error("canonical_code supports at most 7 vertices");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = UINT32_MAX;
  auto bit = [n](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return a * n + b;
  };
  do {
    std::uint32_t code = 0;
    for (auto [u, v] : g.edges()) code |= std::uint32_t{1} << bit(perm[u], perm[v]);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative per isomorphism class of graphs on n vertices (n <= 5).
inline std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n > 5) throw Error("nonisomorphic_graphs supports at most 5 vertices");
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(slots[i]);
    Graph g = Graph::from_edges(n, edges);
    if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
  }
  return out;
}

/// Connected graphs with min degree >= 2 built around T6: T6 with each leaf
/// pair closed into a 4-cycle, T6 with its leaves joined across, a mixed
/// variant, and S-graphs with one supplementary edge between two rays.
inline std::vector<Graph> t6_augmented_graphs() {
  std::vector<Graph> out;
  out.push_back(Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {3, 6}, {4, 7}, {5, 7}}));
  out.push_back(Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 5}}));
  out.push_back(Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {3, 6}, {4, 5}}));
  for (const auto& mults : std::vector<std::vector<int>>{{2, 2}, {3, 2}, {2, 2, 2}}) {
    const auto inst = gadget_s(mults);
    out.push_back(with_edge(inst.g, {inst.pairs[0].x[0], inst.pairs[1].x[0]}));
  }
  return out;
}

/// Nonincreasing multiplicity lists whose S-graph has at most max_order vertices.
inline std::vector<std::vector<int>> s_multiplicity_lists(int max_order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int used, int cap) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (int m = 2; m <= cap && used + 1 + m <= max_order; ++m) {
      cur.push_back(m);
      self(self, used + 1 + m, m);
      cur.pop_back();
    }
  };
  extend(extend, 1, max_order);
  return out;
}

/// Joins subdivision vertices of different pairs that share a D-neighbour,
/// each with probability p. The result stays in H when inst is in H.
inline PartitionedInstance add_local_supplementary_edges(const PartitionedInstance& inst, double p, Rng& rng) {
  auto edges = inst.g.edges();
  for (std::size_t a = 0; a < inst.pairs.size(); ++a)
    for (std::size_t b = a + 1; b < inst.pairs.size(); ++b) {
      const auto& pa = inst.pairs[a];
      const auto& pb = inst.pairs[b];
      if (pa.fu != pb.fu && pa.fu != pb.fv && pa.fv != pb.fu && pa.fv != pb.fv) continue;
      for (Vertex x : pa.x)
        for (Vertex y : pb.x)
          if (rng.chance(p)) edges.push_back({std::min(x, y), std::max(x, y)});
    }
  PartitionedInstance out = inst;
  out.g = Graph::from_edges(inst.g.order(), edges);
  return out;
}

}  // namespace domeq
