#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "domeq/error.hpp"

namespace domeq {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Membership set over the vertex range [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  template <typename Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }

  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  /// Members in ascending order.
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1) {
        out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      }
    }
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic comparison of the ascending member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); }

 private:
  void check(Vertex v) const {
    if (v < 0 || v >= universe_) {
      throw Error("vertex " + std::to_string(v) + " outside set universe " + std::to_string(universe_));
    }
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range endpoints throw EdgeListError carrying the pair index.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw Error("negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw EdgeListError("endpoint out of range [0," + std::to_string(n) + ")", i);
      }
      if (u == v) throw EdgeListError("self-loop on vertex " + std::to_string(u), i);
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    std::size_t half = 0;
    for (auto& nb : g.adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      half += nb.size();
    }
    g.m_ = half / 2;
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

inline int min_degree(const Graph& g) {
  if (g.order() == 0) throw Error("min_degree of the empty graph");
  int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline int max_degree(const Graph& g) {
  if (g.order() == 0) throw Error("max_degree of the empty graph");
  int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

struct InducedSubgraph {
  Graph graph;
  /// to_host[i] is the host vertex behind subgraph vertex i (ascending).
  std::vector<Vertex> to_host;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw Error("vertex set universe does not match graph order");
  InducedSubgraph out;
  out.to_host = s.members();
  std::vector<Vertex> local(g.order(), -1);
  for (std::size_t i = 0; i < out.to_host.size(); ++i) local[out.to_host[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : out.to_host) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && local[v] >= 0) edges.push_back({local[u], local[v]});
    }
  }
  out.graph = Graph::from_edges(static_cast<int>(out.to_host.size()), edges);
  return out;
}

/// BFS distances from source; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source, int limit = -1) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    if (limit >= 0 && dist[u] == limit) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

/// k-th power: u ~ v iff 1 <= dist(u, v) <= k.
inline Graph power(const Graph& g, int k) {
  if (k < 1) throw Error("graph power requires k >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto dist = bfs_distances(g, u, k);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (dist[v] > 0) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(g.order(), edges);
}

/// Connected components, each sorted ascending, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex u : s.members()) {
    for (Vertex v : g.neighbors(u)) {
      if (s.contains(v)) return false;
    }
  }
  return true;
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.push_back({u + a.order(), v + a.order()});
  return Graph::from_edges(a.order() + b.order(), edges);
}

/// Copy of g with one extra edge.
inline Graph with_edge(const Graph& g, Edge e) {
  auto edges = g.edges();
  edges.push_back(e);
  return Graph::from_edges(g.order(), edges);
}

/// Relabels vertex v as perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
  return Graph::from_edges(g.order(), edges);
}

// Standard families.

inline Graph empty_graph(int n) { return Graph::from_edges(n, std::span<const Edge>{}); }

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

/// Star with center 0 and leaves 1..leaves.
inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_edges(leaves + 1, e);
}

inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::from_edges(10, e);
}

}  // namespace domeq
