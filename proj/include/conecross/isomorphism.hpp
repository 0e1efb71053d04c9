#pragma once

// Isomorphism and automorphisms of small multigraphs by backtracking with
// degree refinement. Intended for graphs with a few dozen vertices.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "conecross/graph.hpp"

namespace conecross {

namespace detail {

struct MultMatrix {
  int n = 0;
  std::vector<int> m;
  explicit MultMatrix(const Multigraph& g) : n(g.n()), m(static_cast<std::size_t>(g.n()) * g.n(), 0) {
    for (const auto& e : g.entries()) {
      m[e.u * n + e.v] = e.mult;
      m[e.v * n + e.u] = e.mult;
    }
  }
  int operator()(int a, int b) const { return m[a * n + b]; }
};

// Sorted multiset of incident multiplicities; an isomorphism invariant.
inline std::vector<std::vector<int>> vertex_signatures(const Multigraph& g) {
  std::vector<std::vector<int>> sig(g.n());
  for (const auto& e : g.entries()) {
    sig[e.u].push_back(e.mult);
    sig[e.v].push_back(e.mult);
  }
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

// Visits every isomorphism G -> H; stops when `visit` returns false.
inline void for_each_isomorphism(const Multigraph& g, const Multigraph& h,
                                 const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (g.n() != h.n() || g.entries().size() != h.entries().size() || g.edge_count() != h.edge_count()) return;
  const int n = g.n();
  MultMatrix mg(g), mh(h);
  auto sg = vertex_signatures(g), sh = vertex_signatures(h);

  // Match vertices in BFS order from the highest-degree vertex of each
  // component so that most candidates are constrained by a mapped neighbour.
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  while (static_cast<int>(order.size()) < n) {
    Vertex start = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!placed[v] && (start < 0 || sg[v].size() > sg[start].size())) start = v;
    placed[start] = true;
    std::size_t head = order.size();
    order.push_back(start);
    for (; head < order.size(); ++head)
      for (Vertex w : g.neighbors(order[head]))
        if (!placed[w]) {
          placed[w] = true;
          order.push_back(w);
        }
  }

  std::vector<Vertex> map(n, -1);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(int)> extend = [&](int depth) {
    if (stop) return;
    if (depth == n) {
      if (!visit(map)) stop = true;
      return;
    }
    Vertex v = order[depth];
    for (Vertex cand = 0; cand < n && !stop; ++cand) {
      if (used[cand] || sh[cand] != sg[v]) continue;
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) {
        Vertex w = order[j];
        ok = mg(v, w) == mh(cand, map[w]);
      }
      if (!ok) continue;
      map[v] = cand;
      used[cand] = true;
      extend(depth + 1);
      used[cand] = false;
      map[v] = -1;
    }
  };
  extend(0);
}

}  // namespace detail

/// A vertex map carrying G onto H (G vertex v -> H vertex map[v]), if any.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Multigraph& g, const Multigraph& h) {
  std::optional<std::vector<Vertex>> found;
  detail::for_each_isomorphism(g, h, [&](const std::vector<Vertex>& m) {
    found = m;
    return false;
  });
  return found;
}

/// Up to `limit` automorphisms of G, the identity included.
inline std::vector<std::vector<Vertex>> automorphisms(const Multigraph& g, std::size_t limit = 100000) {
  std::vector<std::vector<Vertex>> out;
  detail::for_each_isomorphism(g, g, [&](const std::vector<Vertex>& m) {
    out.push_back(m);
    return out.size() < limit;
  });
  return out;
}

}  // namespace conecross
