#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "domeq/cnf.hpp"
#include "domeq/error.hpp"
#include "domeq/graph.hpp"
#include "domeq/rng.hpp"

namespace domeq {

/// Blueprint for a graph in G(F).
///
/// The built graph uses a canonical numbering: the D-vertices 0..d-1 in the
/// order of F, then one pair per F-edge in lexicographic edge order (x^1
/// before x^2), then the supplementary Y-vertices in y_specs order.
/// supp_edges are written in that numbering; pair_vertex() and y_vertex()
/// compute it.
struct ConstructionSpec {
  Graph f;
  /// D-neighbourhood of each Y-vertex; must be a clique of F with >= 2 members.
  std::vector<std::vector<Vertex>> y_specs;
  /// Edges inside X u Y.
  std::vector<Edge> supp_edges;
};

inline Vertex pair_vertex(const ConstructionSpec& spec, std::size_t f_edge_index, int which) {
  return spec.f.order() + 2 * static_cast<Vertex>(f_edge_index) + which;
}

inline Vertex y_vertex(const ConstructionSpec& spec, std::size_t y_index) {
  return spec.f.order() + 2 * static_cast<Vertex>(spec.f.size()) + static_cast<Vertex>(y_index);
}

inline bool in_g1(const ConstructionSpec& spec) {
  for (const auto& y : spec.y_specs) {
    if (y.size() != 2) return false;
  }
  return true;
}

inline bool in_g2(const ConstructionSpec& spec) { return spec.y_specs.empty(); }

/// Two subdivision vertices standing for the F-edge fu-fv (G vertex ids).
struct PairEntry {
  Vertex fu = 0;
  Vertex fv = 0;
  std::array<Vertex, 2> x{};

  friend bool operator==(const PairEntry&, const PairEntry&) = default;
};

/// A graph with a specified vertex set D and its pair labelling.
struct PartitionedInstance {
  Graph g;
  VertexSet d;
  std::vector<PairEntry> pairs;
  /// Empty, or one name per vertex.
  std::vector<std::string> labels;

  friend bool operator==(const PartitionedInstance&, const PartitionedInstance&) = default;
};

/// D-vertices adjacent to v, ascending.
inline std::vector<Vertex> d_neighbors(const PartitionedInstance& inst, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : inst.g.neighbors(v)) {
    if (inst.d.contains(w)) out.push_back(w);
  }
  return out;
}

/// Builds the canonical member of G(F) described by spec. Throws
/// ConstructionError naming the rule a malformed spec breaks.
inline PartitionedInstance build(const ConstructionSpec& spec) {
  const Graph& f = spec.f;
  const int d = f.order();
  const auto f_edges = f.edges();
  const int x_end = d + 2 * static_cast<int>(f_edges.size());
  const int n = x_end + static_cast<int>(spec.y_specs.size());

  std::vector<Edge> edges;
  PartitionedInstance inst;
  inst.d = VertexSet(n);
  inst.labels.resize(n);
  for (Vertex v = 0; v < d; ++v) {
    inst.d.insert(v);
    inst.labels[v] = "v" + std::to_string(v + 1);
  }
  for (std::size_t t = 0; t < f_edges.size(); ++t) {
    auto [a, b] = f_edges[t];
    PairEntry p{a, b, {pair_vertex(spec, t, 0), pair_vertex(spec, t, 1)}};
    for (int s = 0; s < 2; ++s) {
      edges.push_back({a, p.x[s]});
      edges.push_back({b, p.x[s]});
      inst.labels[p.x[s]] = "x_{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}^" + std::to_string(s + 1);
    }
    inst.pairs.push_back(p);
  }
  for (std::size_t i = 0; i < spec.y_specs.size(); ++i) {
    const auto& ys = spec.y_specs[i];
    if (ys.size() < 2) {
      throw ConstructionError("y-size", "supplementary vertex " + std::to_string(i) + " has fewer than 2 D-neighbours");
    }
    for (std::size_t a = 0; a < ys.size(); ++a) {
      if (ys[a] < 0 || ys[a] >= d) {
        throw ConstructionError("y-clique", "supplementary vertex " + std::to_string(i) + " names a non-D vertex");
      }
      for (std::size_t b = a + 1; b < ys.size(); ++b) {
        if (ys[a] == ys[b] || !f.adjacent(ys[a], ys[b])) {
          throw ConstructionError("y-clique", "D-neighbourhood of supplementary vertex " + std::to_string(i) +
                                                  " is not a clique of F");
        }
      }
      edges.push_back({ys[a], y_vertex(spec, i)});
    }
    inst.labels[y_vertex(spec, i)] = "y_" + std::to_string(i + 1);
  }
  for (auto [u, v] : spec.supp_edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ConstructionError("supp-range", "supplementary edge " + std::to_string(u) + "-" + std::to_string(v) +
                                                " is not an edge between X u Y vertices");
    }
    if (u < d && v < d) {
      throw ConstructionError("d-independent", "edge " + std::to_string(u) + "-" + std::to_string(v) + " inside D");
    }
    if (u < d || v < d) {
      throw ConstructionError("d-neighborhood", "supplementary edge " + std::to_string(u) + "-" +
                                                    std::to_string(v) + " touches D");
    }
    if (u < x_end && v < x_end && (u - d) / 2 == (v - d) / 2) {
      throw ConstructionError("pair-independent", "supplementary edge " + std::to_string(u) + "-" +
                                                      std::to_string(v) + " joins the two vertices of one pair");
    }
    edges.push_back({u, v});
  }
  inst.g = Graph::from_edges(n, edges);
  return inst;
}

/// F*: every edge of f replaced by a pair of subdivided parallel edges.
inline PartitionedInstance double_subdivision(const Graph& f) { return build({f, {}, {}}); }

/// A_k with W = D = {v, w_1..w_k} and supplementary cycle x_i^1 x_{i+1}^2.
inline PartitionedInstance gadget_a(int k) {
  if (k < 2) throw Error("gadget A_k needs k >= 2");
  ConstructionSpec spec{star_graph(k), {}, {}};
  for (int i = 0; i < k; ++i) {
    spec.supp_edges.push_back({pair_vertex(spec, i, 0), pair_vertex(spec, (i + 1) % k, 1)});
  }
  auto inst = build(spec);
  inst.labels[0] = "v";
  for (int i = 1; i <= k; ++i) {
    inst.labels[i] = "w_" + std::to_string(i);
    inst.labels[pair_vertex(spec, i - 1, 0)] = "x_" + std::to_string(i) + "^1";
    inst.labels[pair_vertex(spec, i - 1, 1)] = "x_" + std::to_string(i) + "^2";
  }
  return inst;
}

/// B with W = D = {v_1, u_1, v_2, u_2} and the single edge x_1^1 x_2^1.
inline PartitionedInstance gadget_b() {
  ConstructionSpec spec{Graph::from_edges(4, {{0, 1}, {2, 3}}), {}, {}};
  spec.supp_edges.push_back({pair_vertex(spec, 0, 0), pair_vertex(spec, 1, 0)});
  auto inst = build(spec);
  inst.labels = {"v_1", "u_1", "v_2", "u_2", "x_1^1", "x_1^2", "x_2^1", "x_2^2"};
  return inst;
}

/// S(i_1..i_k): star whose j-th edge is replaced by i_j subdivided parallel
/// edges. The first two subdivision vertices of each ray form its pair; the
/// rest are supplementary vertices.
inline PartitionedInstance gadget_s(const std::vector<int>& multiplicities) {
  const int k = static_cast<int>(multiplicities.size());
  if (k < 1) throw Error("gadget S needs at least one ray");
  ConstructionSpec spec{star_graph(k), {}, {}};
  for (int j = 0; j < k; ++j) {
    if (multiplicities[j] < 2) throw Error("gadget S multiplicities must be >= 2");
    for (int r = 2; r < multiplicities[j]; ++r) spec.y_specs.push_back({0, j + 1});
  }
  auto inst = build(spec);
  inst.labels[0] = "v";
  std::size_t y = 0;
  for (int j = 1; j <= k; ++j) {
    inst.labels[j] = "v_" + std::to_string(j);
    for (int r = 1; r <= multiplicities[j - 1]; ++r) {
      Vertex x = r <= 2 ? pair_vertex(spec, j - 1, r - 1) : y_vertex(spec, y++);
      inst.labels[x] = "x_" + std::to_string(j) + "^" + std::to_string(r);
    }
  }
  return inst;
}

/// Edge ab (vertices 0, 1) with pendant leaves 2, 3 on a and 4, 5 on b.
inline Graph gadget_t6() { return Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

/// f plus a disjoint 4-cycle u a v b (vertices n..n+3), with every f-vertex
/// joined to both u = n and v = n+2.
inline Graph join_c4(const Graph& f) {
  const int n = f.order();
  auto edges = f.edges();
  for (int i = 0; i < 4; ++i) edges.push_back({n + i, n + (i + 1) % 4});
  for (Vertex x = 0; x < n; ++x) {
    edges.push_back({x, n});
    edges.push_back({x, n + 2});
  }
  return Graph::from_edges(n + 4, edges);
}

struct SatReduction {
  PartitionedInstance instance;
  /// Whether every three variables are avoided by some clause.
  bool triple_cover = false;
  Vertex v0 = 0;
  Vertex clause_hub = 0;  // v_{k+1}
  Vertex c_star = 0;
  std::vector<Vertex> clause_vertices;
  std::vector<Vertex> true_vertices;   // x_i^t
  std::vector<Vertex> false_vertices;  // x_i^f
};

/// 3-SAT to "gamma < gamma_2" reduction. The result lies in G_1 of the star
/// with centre v0 and leaves v_1..v_{k+1}, has 3k + l + 3 vertices and
/// gamma_2 = k + 2. Numbering is canonical: v0, v_1..v_{k+1}, the pairs
/// {x_i^t, x_i^f}, the pair {c*, c_1}, then c_2..c_l.
inline SatReduction reduce_3sat(const CnfFormula& formula) {
  const int k = formula.num_vars();
  const int l = static_cast<int>(formula.clauses().size());
  ConstructionSpec spec{star_graph(k + 1), {}, {}};
  for (int j = 1; j < l; ++j) spec.y_specs.push_back({0, k + 1});

  SatReduction r;
  r.v0 = 0;
  r.clause_hub = k + 1;
  for (int i = 0; i < k; ++i) {
    r.true_vertices.push_back(pair_vertex(spec, i, 0));
    r.false_vertices.push_back(pair_vertex(spec, i, 1));
  }
  r.c_star = pair_vertex(spec, k, 0);
  r.clause_vertices.push_back(pair_vertex(spec, k, 1));
  for (int j = 1; j < l; ++j) r.clause_vertices.push_back(y_vertex(spec, j - 1));

  for (int j = 0; j < l; ++j) {
    for (const auto& lit : formula.clauses()[j]) {
      Vertex x = lit.positive ? r.true_vertices[lit.var - 1] : r.false_vertices[lit.var - 1];
      spec.supp_edges.push_back({x, r.clause_vertices[j]});
    }
  }
  for (int i = 0; i < k; ++i) {
    spec.supp_edges.push_back({r.c_star, r.true_vertices[i]});
    spec.supp_edges.push_back({r.c_star, r.false_vertices[i]});
  }
  r.instance = build(spec);
  auto& labels = r.instance.labels;
  labels[0] = "v_0";
  for (int i = 1; i <= k + 1; ++i) labels[i] = "v_" + std::to_string(i);
  for (int i = 0; i < k; ++i) {
    labels[r.true_vertices[i]] = "x_" + std::to_string(i + 1) + "^t";
    labels[r.false_vertices[i]] = "x_" + std::to_string(i + 1) + "^f";
  }
  labels[r.c_star] = "c*";
  for (int j = 0; j < l; ++j) labels[r.clause_vertices[j]] = "c_" + std::to_string(j + 1);
  r.triple_cover = triple_cover_holds(formula);
  return r;
}

/// {x_i^t : a_i} u {x_i^f : !a_i} u {c*}; dominating whenever a satisfies the formula.
inline VertexSet assignment_dominating_set(const SatReduction& r, const Assignment& a) {
  VertexSet s(r.instance.g.order());
  for (std::size_t i = 0; i < r.true_vertices.size(); ++i) s.insert(a.at(i) ? r.true_vertices[i] : r.false_vertices[i]);
  s.insert(r.c_star);
  return s;
}

/// Reads a truth assignment off a dominating set: x_i is true iff x_i^t is in s.
inline Assignment assignment_from_dominating_set(const SatReduction& r, const VertexSet& s) {
  Assignment a(r.true_vertices.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = s.contains(r.true_vertices[i]);
  return a;
}

/// True iff g has neither a triangle nor a 4-cycle (girth >= 5).
inline bool is_c3_c4_free(const Graph& g) {
  const int n = g.order();
  std::vector<int> common(n);
  for (Vertex u = 0; u < n; ++u) {
    std::fill(common.begin(), common.end(), 0);
    for (Vertex w : g.neighbors(u)) {
      for (Vertex v : g.neighbors(w)) {
        if (v == u) continue;
        if (g.adjacent(u, v)) return false;
        if (++common[v] >= 2) return false;
      }
    }
  }
  return true;
}

inline constexpr int kRandomHAttempts = 1000;

/// Random member of H: a (C3, C4)-free F from G(f_size, f_edge_prob) by
/// rejection sampling, its double subdivision, and each non-pair couple of
/// subdivision vertices joined with probability supp_edge_prob. Deterministic
/// in seed; nullopt once the rejection budget is spent.
inline std::optional<PartitionedInstance> random_h_instance(int f_size, double f_edge_prob, double supp_edge_prob,
                                                            std::uint64_t seed) {
  if (f_size < 1) throw Error("random_h_instance needs f_size >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < kRandomHAttempts; ++attempt) {
    std::vector<Edge> f_edges;
    for (Vertex u = 0; u < f_size; ++u)
      for (Vertex v = u + 1; v < f_size; ++v)
        if (rng.chance(f_edge_prob)) f_edges.push_back({u, v});
    Graph f = Graph::from_edges(f_size, f_edges);
    if (!is_c3_c4_free(f)) continue;

    ConstructionSpec spec{f, {}, {}};
    const int x_begin = f_size;
    const int x_end = f_size + 2 * static_cast<int>(f.size());
    for (Vertex u = x_begin; u < x_end; ++u)
      for (Vertex v = u + 1; v < x_end; ++v) {
        if ((u - x_begin) / 2 == (v - x_begin) / 2) continue;
        if (rng.chance(supp_edge_prob)) spec.supp_edges.push_back({u, v});
      }
    return build(spec);
  }
  return std::nullopt;
}

}  // namespace domeq
