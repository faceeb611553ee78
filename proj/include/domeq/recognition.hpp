#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "domeq/constructions.hpp"
#include "domeq/domination.hpp"
#include "domeq/error.hpp"
#include "domeq/graph.hpp"
#include "domeq/matching.hpp"

namespace domeq {

// ---------------------------------------------------------------------------
// Membership in H
// ---------------------------------------------------------------------------

enum class HFailureKind {
  kBadUniverse,       // d does not range over V(g)
  kPairEndpoint,      // pair endpoints not two distinct D-vertices
  kPairVertexInD,     // subdivision vertex lies in D
  kPairVertexReused,  // vertex listed in two pairs (or twice in one)
  kDuplicatePair,     // two pairs for the same F-edge
  kPairNeighborhood,  // N(x) n D differs from the pair's endpoints
  kPairAdjacent,      // the two vertices of a pair are adjacent
  kDNotIndependent,   // edge inside D
  kUnassignedVertex,  // vertex outside D and outside every pair
  kUnderlyingC3,
  kUnderlyingC4,
};

inline const char* to_string(HFailureKind k) {
  switch (k) {
    case HFailureKind::kBadUniverse: return "bad-universe";
    case HFailureKind::kPairEndpoint: return "pair-endpoint";
    case HFailureKind::kPairVertexInD: return "pair-vertex-in-d";
    case HFailureKind::kPairVertexReused: return "pair-vertex-reused";
    case HFailureKind::kDuplicatePair: return "duplicate-pair";
    case HFailureKind::kPairNeighborhood: return "pair-neighborhood";
    case HFailureKind::kPairAdjacent: return "pair-independent";
    case HFailureKind::kDNotIndependent: return "d-independent";
    case HFailureKind::kUnassignedVertex: return "unassigned-vertex";
    case HFailureKind::kUnderlyingC3: return "underlying-c3";
    case HFailureKind::kUnderlyingC4: return "underlying-c4";
  }
  return "unknown";
}

struct HFailure {
  HFailureKind kind;
  std::string message;
};

struct HValidationReport {
  bool valid = false;
  /// F on the D-vertices (relabelled in ascending order), built from the pairs.
  Graph underlying;
  std::vector<HFailure> failures;
};

/// Checks the G_2 rules for inst's pair labelling plus girth >= 5 of F.
/// Failures are collected, never thrown.
inline HValidationReport validate_h(const PartitionedInstance& inst) {
  HValidationReport report;
  const Graph& g = inst.g;
  const int n = g.order();
  auto fail = [&](HFailureKind kind, std::string msg) { report.failures.push_back({kind, std::move(msg)}); };

  if (inst.d.universe() != n) {
    fail(HFailureKind::kBadUniverse, "D is over " + std::to_string(inst.d.universe()) + " vertices, graph has " +
                                         std::to_string(n));
    return report;
  }
  const auto d_members = inst.d.members();
  std::vector<Vertex> f_index(n, -1);
  for (std::size_t i = 0; i < d_members.size(); ++i) f_index[d_members[i]] = static_cast<Vertex>(i);

  for (auto [u, v] : g.edges()) {
    if (inst.d.contains(u) && inst.d.contains(v)) {
      fail(HFailureKind::kDNotIndependent, "edge " + std::to_string(u) + "-" + std::to_string(v) + " inside D");
    }
  }

  std::vector<char> assigned(n, 0);
  std::vector<Edge> f_edges;
  for (std::size_t p = 0; p < inst.pairs.size(); ++p) {
    const auto& pair = inst.pairs[p];
    const std::string tag = "pair #" + std::to_string(p);
    const bool endpoints_ok = pair.fu != pair.fv && pair.fu >= 0 && pair.fu < n && pair.fv >= 0 && pair.fv < n &&
                              inst.d.contains(pair.fu) && inst.d.contains(pair.fv);
    if (!endpoints_ok) {
      fail(HFailureKind::kPairEndpoint, tag + " endpoints are not two distinct D-vertices");
      continue;
    }
    Edge fe{std::min(f_index[pair.fu], f_index[pair.fv]), std::max(f_index[pair.fu], f_index[pair.fv])};
    if (std::find(f_edges.begin(), f_edges.end(), fe) != f_edges.end()) {
      fail(HFailureKind::kDuplicatePair, tag + " repeats F-edge " + std::to_string(pair.fu) + "-" +
                                             std::to_string(pair.fv));
    } else {
      f_edges.push_back(fe);
    }
    bool vertices_ok = true;
    for (Vertex x : pair.x) {
      if (x < 0 || x >= n) {
        fail(HFailureKind::kPairEndpoint, tag + " vertex " + std::to_string(x) + " out of range");
        vertices_ok = false;
        continue;
      }
      if (inst.d.contains(x)) {
        fail(HFailureKind::kPairVertexInD, tag + " vertex " + std::to_string(x) + " lies in D");
        vertices_ok = false;
        continue;
      }
      if (assigned[x]) {
        fail(HFailureKind::kPairVertexReused, tag + " vertex " + std::to_string(x) + " already used");
      }
      assigned[x] = 1;
      std::vector<Vertex> expected{std::min(pair.fu, pair.fv), std::max(pair.fu, pair.fv)};
      if (d_neighbors(inst, x) != expected) {
        fail(HFailureKind::kPairNeighborhood, tag + " vertex " + std::to_string(x) +
                                                  " does not have D-neighbourhood {" + std::to_string(expected[0]) +
                                                  "," + std::to_string(expected[1]) + "}");
      }
    }
    if (vertices_ok && g.adjacent(pair.x[0], pair.x[1])) {
      fail(HFailureKind::kPairAdjacent, tag + " vertices are adjacent");
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!inst.d.contains(v) && !assigned[v]) {
      fail(HFailureKind::kUnassignedVertex, "vertex " + std::to_string(v) + " is in neither D nor a pair");
    }
  }

  report.underlying = Graph::from_edges(static_cast<int>(d_members.size()), f_edges);
  const Graph& f = report.underlying;
  bool has_c3 = false, has_c4 = false;
  for (Vertex u = 0; u < f.order(); ++u)
    for (Vertex v = u + 1; v < f.order(); ++v) {
      int common = 0;
      for (Vertex w : f.neighbors(u)) common += f.adjacent(w, v) ? 1 : 0;
      if (common >= 1 && f.adjacent(u, v)) has_c3 = true;
      if (common >= 2) has_c4 = true;
    }
  if (has_c3) fail(HFailureKind::kUnderlyingC3, "underlying graph contains a triangle");
  if (has_c4) fail(HFailureKind::kUnderlyingC4, "underlying graph contains a 4-cycle");

  report.valid = report.failures.empty();
  return report;
}

/// G^2[D], on the members of d relabelled in ascending order.
inline Graph extract_underlying(const Graph& g, const VertexSet& d) { return induced_subgraph(power(g, 2), d).graph; }

// ---------------------------------------------------------------------------
// gamma = gamma_2 over H
// ---------------------------------------------------------------------------

/// Copy of B^W: W = {v1, u1, v2, u2} maps into D, pairs {x11, x12} and {x21, x22}.
struct BCertificate {
  Vertex v1, u1, v2, u2;
  Vertex x11, x12, x21, x22;
};

/// Copy of A_t^W: W = {center, leaves...} maps into D; the pair of leaf j is
/// {first[j], second[j]} and first[j] ~ second[(j + 1) % t].
struct ACertificate {
  Vertex center = 0;
  std::vector<Vertex> leaves;
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

using Certificate = std::variant<BCertificate, ACertificate>;

/// Work done by recognize_h. The matching work is bounded by
/// sum over D of deg_F(v) matchings on graphs with 2 deg_F(v) vertices.
struct RecognitionStats {
  long long supplementary_edges_checked = 0;
  long long matching_calls = 0;
  long long aux_vertices = 0;
  long long aux_edges = 0;
  int max_aux_order = 0;
};

struct RecognitionVerdict {
  bool equal = true;
  std::optional<Certificate> certificate;
  RecognitionStats stats;
};

class InvalidInstanceError : public Error {
 public:
  explicit InvalidInstanceError(HValidationReport report)
      : Error("instance is not a member of H: " +
              (report.failures.empty() ? std::string("unknown") : report.failures.front().message)),
        report_(std::move(report)) {}

  const HValidationReport& report() const noexcept { return report_; }

 private:
  HValidationReport report_;
};

/// Replays a certificate against inst: all listed vertices distinct, W inside
/// D, the other vertices outside D, and every gadget edge present in g.
inline bool verify_certificate(const PartitionedInstance& inst, const Certificate& cert) {
  const Graph& g = inst.g;
  auto in_range = [&](Vertex v) { return v >= 0 && v < g.order(); };
  auto distinct = [](std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
  };
  if (const auto* b = std::get_if<BCertificate>(&cert)) {
    const std::vector<Vertex> all{b->v1, b->u1, b->v2, b->u2, b->x11, b->x12, b->x21, b->x22};
    if (!std::all_of(all.begin(), all.end(), in_range) || !distinct(all)) return false;
    for (Vertex w : {b->v1, b->u1, b->v2, b->u2})
      if (!inst.d.contains(w)) return false;
    for (Vertex x : {b->x11, b->x12, b->x21, b->x22})
      if (inst.d.contains(x)) return false;
    for (Vertex x : {b->x11, b->x12})
      if (!g.adjacent(b->v1, x) || !g.adjacent(b->u1, x)) return false;
    for (Vertex x : {b->x21, b->x22})
      if (!g.adjacent(b->v2, x) || !g.adjacent(b->u2, x)) return false;
    return g.adjacent(b->x11, b->x21);
  }
  const auto& a = std::get<ACertificate>(cert);
  const std::size_t t = a.leaves.size();
  if (t < 2 || a.first.size() != t || a.second.size() != t) return false;
  std::vector<Vertex> all{a.center};
  all.insert(all.end(), a.leaves.begin(), a.leaves.end());
  all.insert(all.end(), a.first.begin(), a.first.end());
  all.insert(all.end(), a.second.begin(), a.second.end());
  if (!std::all_of(all.begin(), all.end(), in_range) || !distinct(all)) return false;
  if (!inst.d.contains(a.center)) return false;
  for (std::size_t j = 0; j < t; ++j) {
    if (!inst.d.contains(a.leaves[j]) || inst.d.contains(a.first[j]) || inst.d.contains(a.second[j])) return false;
    for (Vertex x : {a.first[j], a.second[j]}) {
      if (!g.adjacent(a.center, x) || !g.adjacent(a.leaves[j], x)) return false;
    }
    if (!g.adjacent(a.first[j], a.second[(j + 1) % t])) return false;
  }
  return true;
}

/// Decides gamma(G) = gamma_2(G) for G^D in H in polynomial time.
///
/// A supplementary edge with no common D-neighbour yields a copy of B^W.
/// Otherwise, for each D-vertex v, the auxiliary graph on N(v) (edges of
/// G[N(v)] plus the pair edges of v) has the pair edges as a perfect
/// matching; a second perfect matching avoiding some pair edge exists iff
/// G^D contains a copy of A_t^W centred at v, read off the alternating cycle.
/// Throws InvalidInstanceError when validate_h rejects the instance.
inline RecognitionVerdict recognize_h(const PartitionedInstance& inst) {
  auto report = validate_h(inst);
  if (!report.valid) throw InvalidInstanceError(std::move(report));

  const Graph& g = inst.g;
  const int n = g.order();
  RecognitionVerdict verdict;
  auto& stats = verdict.stats;

  std::vector<int> pair_of(n, -1);
  std::vector<int> slot_of(n, -1);
  for (std::size_t p = 0; p < inst.pairs.size(); ++p) {
    for (int s = 0; s < 2; ++s) {
      pair_of[inst.pairs[p].x[s]] = static_cast<int>(p);
      slot_of[inst.pairs[p].x[s]] = s;
    }
  }
  auto partner = [&](Vertex x) { return inst.pairs[pair_of[x]].x[1 - slot_of[x]]; };

  for (auto [u, v] : g.edges()) {
    if (inst.d.contains(u) || inst.d.contains(v)) continue;
    ++stats.supplementary_edges_checked;
    const auto du = d_neighbors(inst, u);
    const auto dv = d_neighbors(inst, v);
    const bool share = std::find_first_of(du.begin(), du.end(), dv.begin(), dv.end()) != du.end();
    if (!share) {
      const auto& pu = inst.pairs[pair_of[u]];
      const auto& pv = inst.pairs[pair_of[v]];
      verdict.equal = false;
      verdict.certificate = BCertificate{pu.fu, pu.fv, pv.fu, pv.fv, u, partner(u), v, partner(v)};
      return verdict;
    }
  }

  for (Vertex center : inst.d.members()) {
    std::vector<int> incident;
    for (std::size_t p = 0; p < inst.pairs.size(); ++p) {
      if (inst.pairs[p].fu == center || inst.pairs[p].fv == center) incident.push_back(static_cast<int>(p));
    }
    const int k = static_cast<int>(incident.size());
    if (k == 0) continue;

    // Local vertex 2t + s is slot s of the t-th incident pair.
    std::vector<Vertex> host(2 * k);
    std::vector<int> local(n, -1);
    for (int t = 0; t < k; ++t) {
      for (int s = 0; s < 2; ++s) {
        host[2 * t + s] = inst.pairs[incident[t]].x[s];
        local[host[2 * t + s]] = 2 * t + s;
      }
    }
    std::vector<Edge> inner;
    for (Vertex u : g.neighbors(center)) {
      for (Vertex w : g.neighbors(u)) {
        if (u < w && local[u] >= 0 && local[w] >= 0) inner.push_back({local[u], local[w]});
      }
    }
    for (int skip = 0; skip < k; ++skip) {
      auto edges = inner;
      for (int t = 0; t < k; ++t) {
        if (t != skip) edges.push_back({2 * t, 2 * t + 1});
      }
      Graph aux = Graph::from_edges(2 * k, edges);
      ++stats.matching_calls;
      stats.aux_vertices += aux.order();
      stats.aux_edges += static_cast<long long>(aux.size());
      stats.max_aux_order = std::max(stats.max_aux_order, aux.order());
      Matching m = maximum_matching(aux);
      if (m.size() != k) continue;

      // Walk the alternating cycle through the skipped pair.
      ACertificate a;
      a.center = center;
      const Vertex start = 2 * skip;
      Vertex cur = start;
      std::vector<Vertex> entered;
      do {
        const Vertex next = m.mate(cur);
        a.first.push_back(host[cur]);
        entered.push_back(host[next]);
        cur = next ^ 1;
      } while (cur != start);
      // entered[j] is x^2 of the pair after the j-th one.
      const std::size_t t = a.first.size();
      a.second.resize(t);
      for (std::size_t j = 0; j < t; ++j) a.second[(j + 1) % t] = entered[j];
      for (Vertex x : a.first) {
        const auto& p = inst.pairs[pair_of[x]];
        a.leaves.push_back(p.fu == center ? p.fv : p.fu);
      }
      verdict.equal = false;
      verdict.certificate = std::move(a);
      return verdict;
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// (gamma, gamma_2)-perfect graphs
// ---------------------------------------------------------------------------

enum class ForbiddenKind { kEmpty, kDisconnected, kLowDegree, kCycle, kT6, kP8 };

inline const char* to_string(ForbiddenKind k) {
  switch (k) {
    case ForbiddenKind::kEmpty: return "empty";
    case ForbiddenKind::kDisconnected: return "disconnected";
    case ForbiddenKind::kLowDegree: return "low-degree";
    case ForbiddenKind::kCycle: return "cycle";
    case ForbiddenKind::kT6: return "T6";
    case ForbiddenKind::kP8: return "P8";
  }
  return "unknown";
}

/// A forbidden structure: for kCycle and kP8 the vertices in order; for kT6
/// the centre edge a, b followed by two leaves of a and two leaves of b.
struct ForbiddenWitness {
  ForbiddenKind kind;
  std::vector<Vertex> vertices;
};

inline constexpr int kForbiddenSearchLimit = 14;

namespace detail {

inline std::optional<std::vector<Vertex>> find_non4_cycle(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);
  // Cycles are found from their smallest vertex.
  auto dfs = [&](auto&& self, Vertex start, Vertex v) -> bool {
    for (Vertex w : g.neighbors(v)) {
      if (w == start && path.size() >= 3 && path.size() != 4) return true;
      if (w <= start || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      if (self(self, start, w)) return true;
      on_path[w] = 0;
      path.pop_back();
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    if (dfs(dfs, s, s)) return path;
  }
  return std::nullopt;
}

inline std::optional<std::vector<Vertex>> find_path(const Graph& g, std::size_t length) {
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);
  auto dfs = [&](auto&& self, Vertex v) -> bool {
    if (path.size() == length) return true;
    for (Vertex w : g.neighbors(v)) {
      if (on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      if (self(self, w)) return true;
      on_path[w] = 0;
      path.pop_back();
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    if (dfs(dfs, s)) return path;
  }
  return std::nullopt;
}

inline std::optional<std::vector<Vertex>> find_t6(const Graph& g) {
  for (auto [a, b] : g.edges()) {
    std::vector<Vertex> na, nb;
    for (Vertex w : g.neighbors(a))
      if (w != b) na.push_back(w);
    for (Vertex w : g.neighbors(b))
      if (w != a) nb.push_back(w);
    for (std::size_t i = 0; i < na.size(); ++i)
      for (std::size_t j = i + 1; j < na.size(); ++j)
        for (std::size_t p = 0; p < nb.size(); ++p)
          for (std::size_t q = p + 1; q < nb.size(); ++q) {
            if (nb[p] == na[i] || nb[p] == na[j] || nb[q] == na[i] || nb[q] == na[j]) continue;
            return std::vector<Vertex>{a, b, na[i], na[j], nb[p], nb[q]};
          }
  }
  return std::nullopt;
}

// Why a connected graph fails to be some S(i_1..i_k) around the given centre,
// or nullopt if it is one.
inline std::optional<std::string> star_structure_violation(const Graph& g, Vertex center) {
  const int n = g.order();
  std::vector<char> in_ring(n, 0);
  for (Vertex x : g.neighbors(center)) in_ring[x] = 1;
  std::map<Vertex, int> ray_size;
  for (Vertex x : g.neighbors(center)) {
    if (g.degree(x) != 2) return "neighbour " + std::to_string(x) + " of the centre has degree " +
                                 std::to_string(g.degree(x));
    const Vertex far = g.neighbors(x)[0] == center ? g.neighbors(x)[1] : g.neighbors(x)[0];
    if (in_ring[far]) return "edge " + std::to_string(x) + "-" + std::to_string(far) + " inside the centre's neighbourhood";
    ++ray_size[far];
  }
  for (auto [leaf, size] : ray_size) {
    if (size < 2) return "leaf " + std::to_string(leaf) + " is reached by a single subdivision vertex";
    if (g.degree(leaf) != size) return "leaf " + std::to_string(leaf) + " has neighbours off the centre's rays";
  }
  if (1 + g.degree(center) + static_cast<int>(ray_size.size()) != n) {
    return "vertices beyond distance 2 from the centre";
  }
  return std::nullopt;
}

}  // namespace detail

/// Searches g for the obstructions to membership in S: disconnection, a
/// vertex of degree < 2, a cycle of length other than 4, a T6 subgraph or a
/// P8 subgraph. Exhaustive; refuses n > 14.
inline std::optional<ForbiddenWitness> find_forbidden_subgraph(const Graph& g) {
  require_oracle_size(g, kForbiddenSearchLimit, "forbidden_subgraph_check");
  if (g.order() == 0) return ForbiddenWitness{ForbiddenKind::kEmpty, {}};
  auto comps = components(g);
  if (comps.size() > 1) return ForbiddenWitness{ForbiddenKind::kDisconnected, comps[1]};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) return ForbiddenWitness{ForbiddenKind::kLowDegree, {v}};
  }
  if (auto c = detail::find_non4_cycle(g)) return ForbiddenWitness{ForbiddenKind::kCycle, *c};
  if (auto t = detail::find_t6(g)) return ForbiddenWitness{ForbiddenKind::kT6, *t};
  if (auto p = detail::find_path(g, 8)) return ForbiddenWitness{ForbiddenKind::kP8, *p};
  return std::nullopt;
}

/// True iff g is connected, has minimum degree >= 2 and contains none of
/// T6, P8 or a cycle of length other than 4 as a subgraph.
inline bool forbidden_subgraph_check(const Graph& g) { return !find_forbidden_subgraph(g).has_value(); }

struct PerfectVerdict {
  bool perfect = true;
  /// First component outside S, in host vertex ids.
  std::vector<Vertex> failing_component;
  std::string reason;
  /// Forbidden subgraph inside the failing component, when it is small enough to search.
  std::optional<ForbiddenWitness> witness;
};

/// Thrown when a perfectness test is handed a graph with a vertex of degree < 2.
class LowDegreeError : public Error {
 public:
  LowDegreeError(Vertex v, int degree)
      : Error("vertex " + std::to_string(v) + " has degree " + std::to_string(degree) + " < 2"), vertex_(v) {}
  Vertex vertex() const noexcept { return vertex_; }

 private:
  Vertex vertex_;
};

inline void require_min_degree_two(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) throw LowDegreeError(v, g.degree(v));
  }
}

/// Polynomial recognition of (gamma, gamma_2)-perfect graphs: every component
/// must be a doubled subdivided star S(i_1..i_k). A vertex of maximum degree
/// serves as the candidate centre; all of them are tried. Requires
/// min degree >= 2 (throws LowDegreeError).
inline PerfectVerdict recognize_perfect(const Graph& g) {
  require_min_degree_two(g);
  PerfectVerdict verdict;
  for (const auto& comp : components(g)) {
    auto sub = induced_subgraph(g, VertexSet::from_range(g.order(), comp));
    const Graph& h = sub.graph;
    const int top = max_degree(h);
    std::optional<std::string> violation = "no centre candidate";
    for (Vertex c = 0; c < h.order() && violation; ++c) {
      if (h.degree(c) == top) violation = detail::star_structure_violation(h, c);
    }
    if (!violation) continue;
    verdict.perfect = false;
    verdict.failing_component = comp;
    verdict.reason = *violation;
    if (h.order() <= kForbiddenSearchLimit) {
      if (auto w = find_forbidden_subgraph(h)) {
        for (Vertex& v : w->vertices) v = sub.to_host[v];
        verdict.witness = std::move(w);
      }
    }
    return verdict;
  }
  return verdict;
}

inline constexpr int kPerfectOracleLimit = 13;

/// Induced subgraph with min degree >= 2 and gamma < gamma_2, if any, found by
/// enumerating every vertex subset. Requires min degree >= 2; refuses n > 13.
inline std::optional<std::vector<Vertex>> perfect_oracle_counterexample(const Graph& g) {
  require_oracle_size(g, kPerfectOracleLimit, "perfect_oracle");
  require_min_degree_two(g);
  const int n = g.order();
  const auto adj = detail::adjacency_masks(g);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    bool min_deg_ok = true;
    for (int v = 0; v < n && min_deg_ok; ++v) {
      if ((mask >> v) & 1U) min_deg_ok = std::popcount(adj[v] & mask) >= 2;
    }
    if (!min_deg_ok) continue;
    auto sub = induced_subgraph(g, detail::set_from_mask(n, mask));
    if (!is_gamma_gamma2_graph(sub.graph)) return sub.to_host;
  }
  return std::nullopt;
}

/// Definitional test: every induced subgraph with min degree >= 2 has gamma = gamma_2.
inline bool perfect_oracle(const Graph& g) { return !perfect_oracle_counterexample(g).has_value(); }

}  // namespace domeq
