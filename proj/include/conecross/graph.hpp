#pragma once

// Loopless undirected multigraphs and the graph families used throughout the
// library (complete graphs, cycles, cones, the F_k family and two hand-drawn
// fixtures).

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conecross {

using Vertex = int;
using EdgeId = int;

/// One (u, v, mult) entry of a multigraph, normalized so that u < v.
struct EdgeEntry {
  Vertex u = 0;
  Vertex v = 0;
  int mult = 1;

  friend bool operator==(const EdgeEntry&, const EdgeEntry&) = default;
};

/// A single copy of an edge. `entry` indexes Multigraph::entries().
struct EdgeInstance {
  EdgeId id = 0;
  Vertex u = 0;
  Vertex v = 0;
  int entry = 0;
  int copy = 0;

  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
};

inline bool adjacent(const EdgeInstance& a, const EdgeInstance& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

/// Loopless undirected multigraph on vertices 0..n-1.
///
/// Multiplicities are stored compressed, one entry per unordered pair, sorted
/// by (u, v). Edge instances are expanded in that order, copy by copy, so the
/// instance ids are sorted by (min endpoint, max endpoint, copy index) and
/// survive any round-trip through the entry list.
class Multigraph {
 public:
  Multigraph() = default;

  explicit Multigraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  }

  /// Duplicate pairs are merged by adding multiplicities.
  Multigraph(int n, const std::vector<EdgeEntry>& entries) : Multigraph(n) {
    std::map<std::pair<Vertex, Vertex>, int> merged;
    for (const auto& e : entries) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
      if (e.mult < 1) throw std::invalid_argument("multiplicity must be positive");
      merged[std::minmax(e.u, e.v)] += e.mult;
    }
    for (const auto& [uv, m] : merged) entries_.push_back({uv.first, uv.second, m});
    expand();
  }

  Multigraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : Multigraph(n, to_entries(edges)) {}

  int n() const { return n_; }
  const std::vector<EdgeEntry>& entries() const { return entries_; }
  const std::vector<EdgeInstance>& instances() const { return instances_; }
  int edge_count() const { return static_cast<int>(instances_.size()); }
  const EdgeInstance& edge(EdgeId id) const { return instances_.at(id); }

  /// First instance id of entry i; copies are contiguous.
  EdgeId first_instance(int entry) const { return first_.at(entry); }

  bool is_simple() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const EdgeEntry& e) { return e.mult == 1; });
  }

  int multiplicity(Vertex a, Vertex b) const {
    auto idx = find_entry(a, b);
    return idx < 0 ? 0 : entries_[idx].mult;
  }

  /// Entry index of the pair {a, b}, or -1.
  int find_entry(Vertex a, Vertex b) const {
    auto [u, v] = std::minmax(a, b);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), EdgeEntry{u, v, 0},
                               [](const EdgeEntry& x, const EdgeEntry& y) {
                                 return std::pair(x.u, x.v) < std::pair(y.u, y.v);
                               });
    if (it == entries_.end() || it->u != u || it->v != v) return -1;
    return static_cast<int>(it - entries_.begin());
  }

  /// Degree counting multiplicity.
  int degree(Vertex w) const {
    int d = 0;
    for (const auto& e : entries_)
      if (e.u == w || e.v == w) d += e.mult;
    return d;
  }

  /// Distinct neighbours, ascending.
  std::vector<Vertex> neighbors(Vertex w) const {
    std::vector<Vertex> out;
    for (const auto& e : entries_) {
      if (e.u == w) out.push_back(e.v);
      else if (e.v == w) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Underlying simple graph.
  Multigraph simplified() const {
    std::vector<EdgeEntry> es = entries_;
    for (auto& e : es) e.mult = 1;
    return Multigraph(n_, es);
  }

  /// Connected components as sorted vertex lists, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<Vertex>> adj(n_);
    for (const auto& e : entries_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<Vertex> members{s};
      comp[s] = static_cast<int>(out.size());
      for (std::size_t i = 0; i < members.size(); ++i)
        for (Vertex w : adj[members[i]])
          if (comp[w] < 0) {
            comp[w] = comp[s];
            members.push_back(w);
          }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  }

  /// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
  Multigraph induced(const std::vector<Vertex>& vertices) const {
    std::vector<int> map(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) map[vertices[i]] = static_cast<int>(i);
    std::vector<EdgeEntry> es;
    for (const auto& e : entries_)
      if (map[e.u] >= 0 && map[e.v] >= 0) es.push_back({map[e.u], map[e.v], e.mult});
    return Multigraph(static_cast<int>(vertices.size()), es);
  }

  /// Apply a vertex permutation: vertex v becomes perm[v].
  Multigraph relabeled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    std::vector<EdgeEntry> es;
    for (const auto& e : entries_) es.push_back({perm[e.u], perm[e.v], e.mult});
    return Multigraph(n_, es);
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  static std::vector<EdgeEntry> to_entries(const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<EdgeEntry> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) es.push_back({u, v, 1});
    return es;
  }

  void expand() {
    instances_.clear();
    first_.clear();
    for (int i = 0; i < static_cast<int>(entries_.size()); ++i) {
      first_.push_back(static_cast<EdgeId>(instances_.size()));
      for (int c = 0; c < entries_[i].mult; ++c)
        instances_.push_back({static_cast<EdgeId>(instances_.size()), entries_[i].u, entries_[i].v, i, c});
    }
  }

  int n_ = 0;
  std::vector<EdgeEntry> entries_;
  std::vector<EdgeInstance> instances_;
  std::vector<EdgeId> first_;
};

// ---------------------------------------------------------------------------
// Generators

inline Multigraph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph requires n >= 1");
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Multigraph(n, es);
}

inline Multigraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite requires positive sides");
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) es.emplace_back(u, a + v);
  return Multigraph(a + b, es);
}

inline Multigraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex u = 0; u < n; ++u) es.emplace_back(u, (u + 1) % n);
  return Multigraph(n, es);
}

/// Adds an apex with id n joined by a simple edge to every vertex.
inline Multigraph cone(const Multigraph& g) {
  std::vector<EdgeEntry> es = g.entries();
  for (Vertex v = 0; v < g.n(); ++v) es.push_back({v, g.n(), 1});
  return Multigraph(g.n() + 1, es);
}

inline Multigraph multiply_edges(const Multigraph& g, int r) {
  if (r < 1) throw std::invalid_argument("multiplier must be positive");
  std::vector<EdgeEntry> es = g.entries();
  for (auto& e : es) e.mult *= r;
  return Multigraph(g.n(), es);
}

/// H's vertices are shifted by G.n().
inline Multigraph disjoint_union(const Multigraph& g, const Multigraph& h) {
  std::vector<EdgeEntry> es = g.entries();
  for (auto e : h.entries()) es.push_back({e.u + g.n(), e.v + g.n(), e.mult});
  return Multigraph(g.n() + h.n(), es);
}

/// Replaces edge instance `id` by a path of t+1 edges through t new vertices
/// (ids n..n+t-1, ordered from the smaller endpoint).
inline Multigraph subdivide_edge(const Multigraph& g, EdgeId id, int t) {
  if (id < 0 || id >= g.edge_count()) throw std::out_of_range("invalid edge instance id");
  if (t < 1) throw std::invalid_argument("subdivision count must be positive");
  const EdgeInstance& target = g.edge(id);
  std::vector<EdgeEntry> es = g.entries();
  if (--es[target.entry].mult == 0) es.erase(es.begin() + target.entry);
  Vertex prev = target.u;
  for (int i = 0; i < t; ++i) {
    es.push_back({prev, g.n() + i, 1});
    prev = g.n() + i;
  }
  es.push_back({prev, target.v, 1});
  return Multigraph(g.n() + t, es);
}

/// F_k: inner cycle x_0..x_{k-1} (ids 0..k-1), outer cycle y_0..y_{2k-1}
/// (ids k..3k-1), and spokes x_i y_j for j = 2i-2, .., 2i+1 (mod 2k).
inline Multigraph f_graph(int k) {
  if (k < 3) throw std::invalid_argument("f_graph requires k >= 3");
  auto y = [k](int j) { return k + ((j % (2 * k)) + 2 * k) % (2 * k); };
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
  for (int j = 0; j < 2 * k; ++j) es.emplace_back(y(j), y(j + 1));
  for (int i = 0; i < k; ++i)
    for (int d = -2; d <= 1; ++d) es.emplace_back(i, y(2 * i + d));
  return Multigraph(3 * k, es);
}

/// The nine-vertex counterexample graph drawn as a triangle inside a hexagon.
///
/// Vertex ids: the triangle corners "1", "2", "3" are 0, 1, 2. The hexagon
/// vertices, counter-clockwise from angle 0, are "32", "11", "12", "21",
/// "22", "31" with ids 3..8. Transcribed edges:
///   triangle  1-2, 1-3, 2-3
///   hexagon   32-11, 11-12, 12-21, 21-22, 22-31, 31-32
///   corner 1  11, 12, 31, 32
///   corner 2  11, 12, 21, 22
///   corner 3  21, 22, 31, 32
inline Multigraph fig1_graph() {
  enum : Vertex { c1, c2, c3, h32, h11, h12, h21, h22, h31 };
  return Multigraph(9, std::vector<std::pair<Vertex, Vertex>>{
                           {c1, c2}, {c1, c3}, {c2, c3},
                           {h32, h11}, {h11, h12}, {h12, h21}, {h21, h22}, {h22, h31}, {h31, h32},
                           {c1, h11}, {c1, h12}, {c1, h31}, {c1, h32},
                           {c2, h11}, {c2, h12}, {c2, h21}, {c2, h22},
                           {c3, h21}, {c3, h22}, {c3, h31}, {c3, h32}});
}

/// Seven-vertex wheel with four extra chords: hub 0 joined to 1..6, rim
/// cycle 1-2-3-4-5-6-1, chords 1-3 and 3-5 drawn inside the rim and 2-4,
/// 4-6 drawn outside it.
inline Multigraph fig3_graph() {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex v = 1; v <= 6; ++v) es.emplace_back(0, v);
  for (Vertex v = 1; v <= 6; ++v) es.emplace_back(v, v % 6 + 1);
  es.insert(es.end(), {{1, 3}, {3, 5}, {2, 4}, {4, 6}});
  return Multigraph(7, es);
}

/// Maps an edge instance of G to the corresponding instance of cone(G).
inline EdgeId cone_edge_id(const Multigraph& g, EdgeId id) {
  // Apex edges (w, n) sort after every original edge with min endpoint w.
  return id + g.edge(id).u;
}

/// Id of the apex edge {v, apex} in cone(G).
inline EdgeId cone_apex_edge_id(const Multigraph& g, Vertex v) {
  int before = 0;
  for (const auto& e : g.entries())
    if (e.u <= v) before += e.mult;
  return before + v;
}

}  // namespace conecross
