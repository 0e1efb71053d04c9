#pragma once

// Maximum cuts of simple graphs: an exact branch and bound and a routine
// that is guaranteed to reach the Edwards bound
//   m/2 + (sqrt(8m + 1) - 1) / 8.
//
// All comparisons against the bound are done in integers. For a cut of size
// c in a graph with m edges put s = 8c + 1 - 4m; then c meets the bound iff
// s >= 0 and s^2 >= 8m + 1.
//
// The Edwards routine works per connected component. This is enough for the
// whole graph because f(m) = (sqrt(8m + 1) - 1) / 8 is concave with
// f(0) = 0, hence subadditive: the component bounds add up to at least the
// bound of the union.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "conecross/simple_graph.hpp"

namespace conecross {

/// side[v] == 0 puts v in part A, 1 in part B.
struct Cut {
  std::vector<std::uint8_t> side;
  int size = 0;
};

inline int cut_size(const SimpleGraph& g, const std::vector<std::uint8_t>& side) {
  int c = 0;
  for (auto [u, v] : g.edges()) c += side[u] != side[v];
  return c;
}

/// Edwards lower bound on the max-cut of a graph with m edges.
struct EdwardsBound {
  std::int64_t m = 0;

  /// True iff a cut of `size` edges reaches the bound.
  bool met_by(std::int64_t size) const {
    std::int64_t s = 8 * size + 1 - 4 * m;
    return s >= 0 && s * s >= 8 * m + 1;
  }
  /// Floating value, for display only.
  double value() const { return 0.5 * static_cast<double>(m) + (std::sqrt(8.0 * m + 1.0) - 1.0) / 8.0; }
};

inline EdwardsBound edwards_bound(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("edge count must be non-negative");
  return EdwardsBound{m};
}

class MaxCutLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MaxCutOptions {
  /// Largest component handled by the exact search.
  int exact_limit = 32;
  /// Components up to this size are solved exactly by maxcut_edwards.
  int edwards_exact_below = 20;
};

namespace detail {

// Exact max-cut of the subgraph induced by `verts` (at most 64 vertices).
// Writes sides of those vertices into `side`. Among optimal cuts the one
// whose side vector, read in the order of `verts`, is lexicographically
// smallest is returned.
inline int maxcut_component_exact(const SimpleGraph& g, const std::vector<int>& verts, std::vector<std::uint8_t>& side) {
  const int k = static_cast<int>(verts.size());
  if (k <= 1) {
    for (int v : verts) side[v] = 0;
    return 0;
  }
  std::vector<int> local(g.n(), -1);
  for (int i = 0; i < k; ++i) local[verts[i]] = i;
  std::vector<std::uint64_t> adj(k, 0);
  for (int i = 0; i < k; ++i)
    for (int w : g.neighbors(verts[i]))
      if (local[w] >= 0) adj[i] |= std::uint64_t{1} << local[w];

  std::uint64_t in_b = 0;  // assigned vertices on side B
  int best = -1;
  std::uint64_t best_b = 0;

  // Depth-first in index order, side A first: the first optimum reached is
  // the lexicographically smallest one, so only strict improvements count.
  auto bound = [&](int depth, int current) {
    std::uint64_t assigned = depth == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << depth) - 1;
    int extra = 0;
    int inner = 0;
    for (int i = depth; i < k; ++i) {
      int to_b = std::popcount(adj[i] & assigned & in_b);
      int to_a = std::popcount(adj[i] & assigned & ~in_b);
      extra += std::max(to_a, to_b);
      inner += std::popcount(adj[i] & ~assigned);
    }
    return current + extra + inner / 2;
  };

  auto dfs = [&](auto&& self, int depth, int current) -> void {
    if (depth == k) {
      if (current > best) {
        best = current;
        best_b = in_b;
      }
      return;
    }
    if (bound(depth, current) <= best) return;
    std::uint64_t assigned = (std::uint64_t{1} << depth) - 1;
    std::uint64_t bit = std::uint64_t{1} << depth;
    int to_b = std::popcount(adj[depth] & assigned & in_b);
    int to_a = std::popcount(adj[depth] & assigned & ~in_b);
    self(self, depth + 1, current + to_b);  // side A
    if (depth == 0) return;                 // first vertex stays in A
    in_b |= bit;
    self(self, depth + 1, current + to_a);
    in_b &= ~bit;
  };
  dfs(dfs, 0, 0);
  for (int i = 0; i < k; ++i) side[verts[i]] = (best_b >> i) & 1;
  return best;
}

inline std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

/// Maximum cut; among optimal cuts, the lexicographically smallest side
/// vector (so vertex 0 is in A). Throws MaxCutLimitExceeded when a
/// connected component has more than `opts.exact_limit` vertices.
inline Cut maxcut_exact(const SimpleGraph& g, const MaxCutOptions& opts = {}) {
  Cut cut;
  cut.side.assign(g.n(), 0);
  for (const auto& comp : g.components()) {
    if (static_cast<int>(comp.size()) > std::min(opts.exact_limit, 64))
      throw MaxCutLimitExceeded("component too large for exact max-cut");
    cut.size += detail::maxcut_component_exact(g, detail::sorted_copy(comp), cut.side);
  }
  return cut;
}

/// A cut reaching the Edwards bound, found greedily with local switching and
/// an exact fallback. Throws MaxCutLimitExceeded only if a component misses
/// the bound after local search and is too large for the exact fallback.
inline Cut maxcut_edwards(const SimpleGraph& g, const MaxCutOptions& opts = {}) {
  Cut cut;
  cut.side.assign(g.n(), 0);
  std::vector<int> comp_of(g.n(), -1);
  auto comps = g.components();
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (int v : comps[c]) comp_of[v] = c;
  std::vector<std::int64_t> comp_edges(comps.size(), 0);
  for (auto [u, v] : g.edges()) ++comp_edges[comp_of[u]];

  auto gain = [&](int v) {  // change of cut size when v switches side
    int same = 0, other = 0;
    for (int w : g.neighbors(v)) (cut.side[w] == cut.side[v] ? same : other)++;
    return same - other;
  };

  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    const auto& comp = comps[c];
    if (static_cast<int>(comp.size()) <= opts.edwards_exact_below) {
      detail::maxcut_component_exact(g, detail::sorted_copy(comp), cut.side);
      continue;
    }
    // Greedy placement in BFS order: each vertex joins the side opposite to
    // the majority of its already placed neighbours.
    std::vector<bool> placed(g.n(), false);
    for (int v : comp) {
      int a = 0, b = 0;
      for (int w : g.neighbors(v))
        if (placed[w]) (cut.side[w] == 0 ? a : b)++;
      cut.side[v] = a > b ? 1 : 0;
      placed[v] = true;
    }
    // Local switching: single vertices, then adjacent pairs.
    for (bool improved = true; improved;) {
      improved = false;
      for (int v : comp)
        if (gain(v) > 0) {
          cut.side[v] ^= 1;
          improved = true;
        }
      if (improved) continue;
      for (int v : comp)
        for (int w : g.neighbors(v)) {
          if (w < v) continue;
          // Switching both keeps vw as is.
          int delta = gain(v) + gain(w) + (cut.side[v] == cut.side[w] ? -2 : 2);
          if (delta > 0) {
            cut.side[v] ^= 1;
            cut.side[w] ^= 1;
            improved = true;
          }
        }
    }
    int got = 0;
    for (int v : comp)
      for (int w : g.neighbors(v))
        if (v < w && cut.side[v] != cut.side[w]) ++got;
    if (!edwards_bound(comp_edges[c]).met_by(got)) {
      if (static_cast<int>(comp.size()) > std::min(opts.exact_limit, 64))
        throw MaxCutLimitExceeded("local search missed the Edwards bound on a large component");
      detail::maxcut_component_exact(g, detail::sorted_copy(comp), cut.side);
    }
  }
  cut.size = cut_size(g, cut.side);
  if (!edwards_bound(g.m()).met_by(cut.size))
    throw std::logic_error("Edwards bound not reached");
  return cut;
}

}  // namespace conecross
