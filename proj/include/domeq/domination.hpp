#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <vector>

#include "domeq/error.hpp"
#include "domeq/graph.hpp"

namespace domeq {

/// Minimum k-dominating set of a graph.
struct DominationResult {
  int k = 1;
  int number = 0;
  VertexSet witness;
};

/// True iff every vertex outside s has at least k neighbours in s.
inline bool is_k_dominating(const Graph& g, const VertexSet& s, int k) {
  if (k < 1) throw Error("k-domination requires k >= 1");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    int hits = 0;
    for (Vertex w : g.neighbors(v)) hits += s.contains(w) ? 1 : 0;
    if (hits < k) return false;
  }
  return true;
}

namespace detail {

// Depth-first branch and bound for gamma_k on one graph. Branches on the
// unsatisfied vertex with the fewest candidates: either some candidate joins
// the set, with earlier candidates excluded in later branches.
class KDominationSearch {
 public:
  KDominationSearch(const Graph& g, int k)
      : g_(g), k_(k), n_(g.order()), cover_(n_, 0), state_(n_, kFree) {}

  std::vector<Vertex> solve() {
    for (Vertex v = 0; v < n_; ++v) {
      if (g_.degree(v) < k_) include(v);
    }
    best_ = greedy_completion();
    search();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

  long long nodes() const noexcept { return nodes_; }

 private:
  enum : char { kFree, kIn, kOut };

  int deficit(Vertex v) const { return state_[v] == kIn ? 0 : std::max(0, k_ - cover_[v]); }

  void include(Vertex v) {
    state_[v] = kIn;
    chosen_.push_back(v);
    for (Vertex w : g_.neighbors(v)) ++cover_[w];
  }

  void uninclude(Vertex v) {
    for (Vertex w : g_.neighbors(v)) --cover_[w];
    chosen_.pop_back();
    state_[v] = kFree;
  }

  int gain(Vertex w) const {
    int total = deficit(w);
    for (Vertex x : g_.neighbors(w)) total += deficit(x) > 0 ? 1 : 0;
    return total;
  }

  std::vector<Vertex> greedy_completion() {
    const auto saved_state = state_;
    const auto saved_cover = cover_;
    const auto saved_chosen = chosen_;
    for (;;) {
      Vertex pick = -1;
      int pick_gain = 0;
      for (Vertex w = 0; w < n_; ++w) {
        if (state_[w] != kFree) continue;
        int gw = gain(w);
        if (gw > pick_gain) {
          pick_gain = gw;
          pick = w;
        }
      }
      if (pick < 0) break;
      include(pick);
    }
    auto result = chosen_;
    state_ = saved_state;
    cover_ = saved_cover;
    chosen_ = saved_chosen;
    return result;
  }

  int free_neighbors(Vertex v) const {
    int c = 0;
    for (Vertex w : g_.neighbors(v)) c += state_[w] == kFree ? 1 : 0;
    return c;
  }

  // max(packing bound, gain bound) on the number of vertices still to add.
  int lower_bound() {
    int total_deficit = 0;
    gains_.clear();
    for (Vertex v = 0; v < n_; ++v) {
      total_deficit += deficit(v);
      if (state_[v] == kFree) gains_.push_back(gain(v));
    }
    std::sort(gains_.begin(), gains_.end(), std::greater<>());
    int by_gain = 0;
    for (int acc = 0; acc < total_deficit; ++by_gain) {
      if (by_gain >= static_cast<int>(gains_.size()) || gains_[by_gain] == 0) return INT_MAX / 2;
      acc += gains_[by_gain];
    }

    // Unsatisfied vertices with pairwise disjoint candidate sets each need their own additions.
    order_.clear();
    for (Vertex v = 0; v < n_; ++v) {
      if (deficit(v) > 0) order_.push_back({free_neighbors(v) + (state_[v] == kFree ? 1 : 0), v});
    }
    std::sort(order_.begin(), order_.end());
    marks_.assign(n_, 0);
    int by_packing = 0;
    for (auto [size, v] : order_) {
      bool clash = state_[v] == kFree && marks_[v];
      for (Vertex w : g_.neighbors(v)) clash = clash || (state_[w] == kFree && marks_[w]);
      if (clash) continue;
      if (state_[v] == kFree) marks_[v] = 1;
      for (Vertex w : g_.neighbors(v)) {
        if (state_[w] == kFree) marks_[w] = 1;
      }
      by_packing += state_[v] == kOut ? deficit(v) : 1;
    }
    return std::max(by_gain, by_packing);
  }

  void search() {
    ++nodes_;
    Vertex branch = -1;
    int branch_width = INT_MAX;
    for (Vertex v = 0; v < n_; ++v) {
      int d = deficit(v);
      if (d == 0) continue;
      int fn = free_neighbors(v);
      if (state_[v] == kOut && fn < d) return;
      int width = fn + (state_[v] == kFree ? 1 : 0);
      if (width < branch_width) {
        branch_width = width;
        branch = v;
      }
    }
    if (branch < 0) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (static_cast<int>(chosen_.size()) + lower_bound() >= static_cast<int>(best_.size())) return;

    std::vector<std::pair<int, Vertex>> candidates;
    if (state_[branch] == kFree) candidates.push_back({-gain(branch), branch});
    for (Vertex w : g_.neighbors(branch)) {
      if (state_[w] == kFree) candidates.push_back({-gain(w), w});
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<Vertex> excluded;
    for (auto [neg_gain, c] : candidates) {
      include(c);
      search();
      uninclude(c);
      state_[c] = kOut;
      excluded.push_back(c);
    }
    for (Vertex c : excluded) state_[c] = kFree;
  }

  const Graph& g_;
  int k_;
  int n_;
  std::vector<int> cover_;
  std::vector<char> state_;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> best_;
  long long nodes_ = 0;
  std::vector<int> gains_;
  std::vector<std::pair<int, Vertex>> order_;
  std::vector<char> marks_;
};

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
  }
  return adj;
}

inline bool mask_k_dominating(std::span<const std::uint32_t> adj, std::uint32_t set, int k) {
  const int n = static_cast<int>(adj.size());
  for (int v = 0; v < n; ++v) {
    if ((set >> v) & 1U) continue;
    if (std::popcount(adj[v] & set) < k) return false;
  }
  return true;
}

// Calls visit(mask) for each subset of [0, n) with exactly s bits, in
// increasing numeric order. Stops early when visit returns true.
template <typename Visit>
bool for_each_subset_of_size(int n, int s, Visit&& visit) {
  if (s == 0) return visit(std::uint32_t{0});
  if (s > n) return false;
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t mask = (std::uint64_t{1} << s) - 1;
  while (mask < limit) {
    if (visit(static_cast<std::uint32_t>(mask))) return true;
    std::uint64_t low = mask & (~mask + 1);
    std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return false;
}

inline VertexSet set_from_mask(int n, std::uint32_t mask) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) s.insert(v);
  }
  return s;
}

}  // namespace detail

/// Exact gamma_k by branch and bound, solved per connected component.
/// The empty graph has gamma_k = 0.
inline DominationResult gamma_k(const Graph& g, int k) {
  if (k < 1) throw Error("k-domination requires k >= 1");
  DominationResult result{k, 0, VertexSet(g.order())};
  for (const auto& comp : components(g)) {
    auto sub = induced_subgraph(g, VertexSet::from_range(g.order(), comp));
    for (Vertex v : detail::KDominationSearch(sub.graph, k).solve()) {
      result.witness.insert(sub.to_host[v]);
      ++result.number;
    }
  }
  return result;
}

inline constexpr int kOracleVertexLimit = 22;

inline void require_oracle_size(const Graph& g, int limit, const char* what) {
  if (g.order() > limit) {
    throw SizeGuardError(std::string(what) + ": graph too large for exhaustive search", limit, g.order());
  }
}

/// gamma_k by enumerating subsets in increasing size. Refuses n > 22.
inline DominationResult gamma_k_bruteforce(const Graph& g, int k) {
  if (k < 1) throw Error("k-domination requires k >= 1");
  require_oracle_size(g, kOracleVertexLimit, "gamma_k_bruteforce");
  const int n = g.order();
  const auto adj = detail::adjacency_masks(g);
  for (int s = 0; s <= n; ++s) {
    std::uint32_t found = 0;
    if (detail::for_each_subset_of_size(n, s, [&](std::uint32_t mask) {
          if (!detail::mask_k_dominating(adj, mask, k)) return false;
          found = mask;
          return true;
        })) {
      return {k, s, detail::set_from_mask(n, found)};
    }
  }
  return {k, n, VertexSet::full(n)};  // unreachable: V(g) always dominates
}

/// All k-dominating sets of minimum size, in increasing bitmask order. Refuses n > 22.
inline std::vector<VertexSet> enumerate_min_k_dominating(const Graph& g, int k) {
  const int number = gamma_k_bruteforce(g, k).number;
  const auto adj = detail::adjacency_masks(g);
  std::vector<VertexSet> out;
  detail::for_each_subset_of_size(g.order(), number, [&](std::uint32_t mask) {
    if (detail::mask_k_dominating(adj, mask, k)) out.push_back(detail::set_from_mask(g.order(), mask));
    return false;
  });
  return out;
}

/// Definitional check gamma(g) == gamma_2(g) by exhaustive search. Refuses n > 22.
inline bool is_gamma_gamma2_graph(const Graph& g) {
  return gamma_k_bruteforce(g, 1).number == gamma_k_bruteforce(g, 2).number;
}

}  // namespace domeq
