#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "domeq/error.hpp"
#include "domeq/graph.hpp"

namespace domeq {

inline constexpr Vertex kUnmatched = -1;

/// Vertex-disjoint edge set of a host graph, stored as a mate array.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int n) : mate_(n, kUnmatched) {}

  /// Adopts a mate array. Throws if it is not symmetric.
  static Matching from_mates(std::vector<Vertex> mate) {
    Matching m;
    const int n = static_cast<int>(mate.size());
    for (Vertex v = 0; v < n; ++v) {
      Vertex w = mate[v];
      if (w == kUnmatched) continue;
      if (w < 0 || w >= n || w == v || mate[w] != v) throw Error("mate array is not a matching");
      if (v < w) ++m.size_;
    }
    m.mate_ = std::move(mate);
    return m;
  }

  int size() const noexcept { return size_; }
  int order() const noexcept { return static_cast<int>(mate_.size()); }
  Vertex mate(Vertex v) const { return mate_.at(v); }
  bool covers(Vertex v) const { return mate_.at(v) != kUnmatched; }
  const std::vector<Vertex>& mates() const noexcept { return mate_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < order(); ++v) {
      if (mate_[v] > v) out.push_back({v, mate_[v]});
    }
    return out;
  }

  /// Every matched pair is an edge of g and the orders agree.
  bool is_valid_for(const Graph& g) const {
    if (g.order() != order()) return false;
    for (auto [u, v] : edges()) {
      if (!g.adjacent(u, v)) return false;
    }
    return true;
  }

 private:
  std::vector<Vertex> mate_;
  int size_ = 0;
};

/// True iff m covers every vertex of g.
inline bool is_perfect(const Matching& m, const Graph& g) { return 2 * m.size() == g.order(); }

namespace detail {

// Edmonds' augmenting path search with blossom contraction, O(n^3).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g), n_(g.order()), mate_(n_, kUnmatched), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

  std::vector<Vertex> run() {
    // Greedy warm start.
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != kUnmatched) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (mate_[w] == kUnmatched) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != kUnmatched) continue;
      Vertex v = find_augmenting_path(root);
      while (v != kUnmatched) {
        Vertex pv = parent_[v];
        Vertex ppv = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = ppv;
      }
    }
    return mate_;
  }

 private:
  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == kUnmatched) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kUnmatched);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    std::queue<Vertex> q;
    used_[root] = 1;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kUnmatched && parent_[mate_[to]] != kUnmatched)) {
          // Odd cycle: contract the blossom.
          Vertex b = lowest_common_base(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == kUnmatched) {
          parent_[to] = v;
          if (mate_[to] == kUnmatched) return to;
          used_[mate_[to]] = 1;
          q.push(mate_[to]);
        }
      }
    }
    return kUnmatched;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

}  // namespace detail

/// Maximum-cardinality matching in a general graph.
inline Matching maximum_matching(const Graph& g) {
  return Matching::from_mates(detail::BlossomMatcher(g).run());
}

inline constexpr std::size_t kBruteForceMatchingEdgeLimit = 25;

/// Exhaustive maximum matching, used to validate maximum_matching.
/// Refuses graphs with more than 25 edges.
inline Matching brute_force_maximum_matching(const Graph& g) {
  if (g.size() > kBruteForceMatchingEdgeLimit) {
    throw SizeGuardError("brute-force matching edge limit exceeded", kBruteForceMatchingEdgeLimit, g.size());
  }
  const int n = g.order();
  std::vector<Vertex> mate(n, kUnmatched), best = mate;
  int best_size = 0;

  // Decide vertices in order: leave v exposed, or match it to a later free neighbour.
  auto search = [&](auto&& self, Vertex v, int size) -> void {
    while (v < n && mate[v] != kUnmatched) ++v;
    if (size + (n - v) / 2 <= best_size) return;
    if (v >= n) {
      best_size = size;
      best = mate;
      return;
    }
    for (Vertex w : g.neighbors(v)) {
      if (w > v && mate[w] == kUnmatched) {
        mate[v] = w;
        mate[w] = v;
        self(self, v + 1, size + 1);
        mate[v] = mate[w] = kUnmatched;
      }
    }
    self(self, v + 1, size);
  };
  search(search, 0, 0);
  return Matching::from_mates(std::move(best));
}

}  // namespace domeq
