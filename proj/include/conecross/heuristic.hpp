#pragma once

// Upper bounds by the planarization method: start from a planar subgraph,
// insert the remaining edges one at a time along shortest paths in the dual
// of a planar embedding, then repeatedly take an edge out and reinsert it
// while that helps. Certificates are verified before they are returned.
//
// Also: expansion of a certificate of G to a multigraph with the same
// underlying entries, where every instance is drawn as parallel offsets of
// its entry.

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "conecross/certificate.hpp"
#include "conecross/graph.hpp"
#include "conecross/planarity.hpp"

namespace conecross {

namespace detail {

using EmbeddingEdge = boost::graph_traits<PlanarityGraph>::edge_descriptor;
using EmbeddingStorage = std::vector<std::vector<EmbeddingEdge>>;

// Planar embedding of a simple edge list: for every vertex, the positions
// (in `edges`) of its incident edges in rotation order. Empty if not planar.
inline std::optional<std::vector<std::vector<int>>> rotation_system(int n,
                                                                     const std::vector<std::pair<int, int>>& edges) {
  auto g = build_simple(n, edges);
  EmbeddingStorage storage(n);
  auto emb = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, g));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                           boost::boyer_myrvold_params::embedding = emb))
    return std::nullopt;
  auto index = boost::get(boost::edge_index, g);
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v)
    for (auto e : storage[v]) rot[v].push_back(index[e]);
  return rot;
}

// Faces of a planar embedding: face ids on both sides of every edge and the
// faces around every vertex.
struct Faces {
  int count = 0;
  std::vector<std::pair<int, int>> sides;  // per edge position
  std::vector<std::vector<int>> at_vertex;
};

inline std::optional<Faces> faces_of(int n, const std::vector<std::pair<int, int>>& edges) {
  auto g = build_simple(n, edges);
  EmbeddingStorage storage(n);
  auto emb = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, g));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                           boost::boyer_myrvold_params::embedding = emb))
    return std::nullopt;

  struct Visitor : boost::planar_face_traversal_visitor {
    Faces* f;
    boost::property_map<PlanarityGraph, boost::edge_index_t>::type index;
    void begin_face() { ++f->count; }
    void next_vertex(int v) { f->at_vertex[v].push_back(f->count - 1); }
    void next_edge(EmbeddingEdge e) {
      auto& s = f->sides[index[e]];
      (s.first < 0 ? s.first : s.second) = f->count - 1;
    }
  };
  Faces f;
  f.sides.assign(edges.size(), {-1, -1});
  f.at_vertex.resize(n);
  Visitor vis;
  vis.f = &f;
  vis.index = boost::get(boost::edge_index, g);
  boost::planar_face_traversal(g, emb, vis);
  for (auto& s : f.sides)
    if (s.second < 0) s.second = s.first;
  return f;
}

// A partial good drawing: some edges present, crossings among them.
class InsertionDrawing {
 public:
  explicit InsertionDrawing(const Multigraph& g) : g_(&g), present_(g.edge_count(), false), along_(g.edge_count()) {}

  int crossings() const { return static_cast<int>(crossings_.size()); }
  bool present(EdgeId e) const { return present_[e]; }

  void add_uncrossed(EdgeId e) { present_[e] = true; }

  // Inserts e (absent) with the fewest crossings for the current embedding
  // of the planarization. Returns false when no admissible route exists.
  bool insert(EdgeId e) {
    std::vector<std::pair<int, int>> pedges;
    std::vector<std::pair<EdgeId, int>> seg;  // (edge, segment index)
    planarization(pedges, seg);
    auto faces = faces_of(n_planar(), pedges);
    if (!faces) return false;
    const auto& ee = g_->edge(e);
    // Dual BFS from the faces at e.u to a face at e.v. Segments of edges
    // adjacent to e cannot be crossed.
    std::vector<std::vector<std::pair<int, int>>> dual(faces->count);
    for (int i = 0; i < static_cast<int>(pedges.size()); ++i) {
      auto [a, b] = faces->sides[i];
      if (a == b || adjacent(g_->edge(seg[i].first), ee)) continue;
      dual[a].emplace_back(b, i);
      dual[b].emplace_back(a, i);
    }
    std::vector<int> dist(faces->count, -1), via(faces->count, -1), from(faces->count, -1);
    std::deque<int> queue;
    for (int f : faces->at_vertex[ee.u])
      if (dist[f] < 0) {
        dist[f] = 0;
        queue.push_back(f);
      }
    std::vector<bool> target(faces->count, false);
    for (int f : faces->at_vertex[ee.v]) target[f] = true;
    int hit = -1;
    while (!queue.empty() && hit < 0) {
      int f = queue.front();
      queue.pop_front();
      if (target[f]) {
        hit = f;
        break;
      }
      for (auto [h, i] : dual[f])
        if (dist[h] < 0) {
          dist[h] = dist[f] + 1;
          via[h] = i;
          from[h] = f;
          queue.push_back(h);
        }
    }
    if (hit < 0) return false;
    std::vector<int> path;
    for (int f = hit; via[f] >= 0; f = from[f]) path.push_back(via[f]);
    std::reverse(path.begin(), path.end());
    std::vector<EdgeId> crossed;
    for (int i : path) crossed.push_back(seg[i].first);
    auto sorted = crossed;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    // Segment i of f lies between along[f][i-1] and along[f][i]; the path
    // meets every f at most once.
    present_[e] = true;
    for (std::size_t j = 0; j < path.size(); ++j) {
      EdgeId f = seg[path[j]].first;
      int c = crossings();
      crossings_.emplace_back(std::min(e, f), std::max(e, f));
      along_[f].insert(along_[f].begin() + seg[path[j]].second, c);
      along_[e].push_back(c);
    }
    return true;
  }

  // Takes e out, dropping its crossings.
  void remove(EdgeId e) {
    present_[e] = false;
    std::vector<int> renumber(crossings_.size(), -1);
    std::vector<std::pair<EdgeId, EdgeId>> kept;
    for (int c = 0; c < crossings(); ++c)
      if (crossings_[c].first != e && crossings_[c].second != e) {
        renumber[c] = static_cast<int>(kept.size());
        kept.push_back(crossings_[c]);
      }
    crossings_ = std::move(kept);
    for (auto& list : along_) {
      std::vector<int> next;
      for (int c : list)
        if (renumber[c] >= 0) next.push_back(renumber[c]);
      list = std::move(next);
    }
    along_[e].clear();
  }

  int crossings_on(EdgeId e) const { return static_cast<int>(along_[e].size()); }

  CrossingCertificate certificate() const {
    CrossingCertificate cert;
    cert.crossings = crossings_;
    set_orders(cert, along_);
    return cert;
  }

 private:
  int n_planar() const { return g_->n() + crossings(); }

  void planarization(std::vector<std::pair<int, int>>& pedges, std::vector<std::pair<EdgeId, int>>& seg) const {
    for (const auto& e : g_->instances()) {
      if (!present_[e.id]) continue;
      int prev = e.u;
      int i = 0;
      for (int c : along_[e.id]) {
        pedges.emplace_back(prev, g_->n() + c);
        seg.emplace_back(e.id, i++);
        prev = g_->n() + c;
      }
      pedges.emplace_back(prev, e.v);
      seg.emplace_back(e.id, i);
    }
  }

  const Multigraph* g_;
  std::vector<bool> present_;
  std::vector<std::pair<EdgeId, EdgeId>> crossings_;
  std::vector<std::vector<int>> along_;
};

}  // namespace detail

struct HeuristicOptions {
  int restarts = 20;
  std::uint64_t seed = 1;
};

/// Best certificate of the planarization heuristic over several random edge
/// orders. Only simple graphs are drawn directly; parallel copies are added
/// by expand_certificate. Returns nullopt if no attempt succeeded.
inline std::optional<CrossingCertificate> insertion_heuristic(const Multigraph& g, const HeuristicOptions& opts = {});

/// Expands a certificate of the simplification of h to h itself: each
/// instance is a parallel offset of its entry, so a crossing of entries with
/// multiplicities a and b becomes a*b crossings. The offset directions are
/// read off a planar embedding of the planarization.
inline std::optional<CrossingCertificate> expand_certificate(const Multigraph& h, const CrossingCertificate& simple_cert) {
  const Multigraph s = h.simplified();
  if (!verify_certificate(s, simple_cert).valid) return std::nullopt;
  if (h.is_simple()) return simple_cert;
  auto plan = planarize_edges(s, simple_cert);
  auto rot = detail::rotation_system(plan.n, plan.edges);
  if (!rot) return std::nullopt;
  const auto along = crossings_along_edges(s, simple_cert);

  // Orientation of crossing c: +1 if the second edge passes from the right
  // of the first edge to its left (both directed from the smaller
  // endpoint), read from the rotation at the dummy vertex.
  auto segment_pos = [&](EdgeId e, int seg_index) {
    int pos = 0;
    for (EdgeId x = 0; x < e; ++x) pos += static_cast<int>(along[x].size()) + 1;
    return pos + seg_index;
  };
  std::vector<int> orient(simple_cert.size(), 1);
  for (int c = 0; c < simple_cert.size(); ++c) {
    auto [e, f] = simple_cert.crossings[c];
    auto idx = [&](EdgeId x) {
      return static_cast<int>(std::find(along[x].begin(), along[x].end(), c) - along[x].begin());
    };
    int ie = idx(e), jf = idx(f);
    int e_out = segment_pos(e, ie + 1), f_out = segment_pos(f, jf + 1);
    const auto& r = (*rot)[s.n() + c];
    auto at = [&](int p) { return static_cast<int>(std::find(r.begin(), r.end(), p) - r.begin()); };
    // Rotation e_out, f_out, e_in, f_in (cyclically) means f goes right to left.
    int step = (at(f_out) - at(e_out) + 4) % 4;
    orient[c] = step == 1 ? 1 : -1;
  }

  // Instance crossings and orders along every instance of h.
  CrossingCertificate out;
  std::vector<std::vector<int>> h_along(h.edge_count());
  auto inst = [&](EdgeId simple_edge, int copy) {
    const auto& se = s.edge(simple_edge);
    return h.first_instance(h.find_entry(se.u, se.v)) + copy;
  };
  auto mult = [&](EdgeId simple_edge) {
    const auto& se = s.edge(simple_edge);
    return h.multiplicity(se.u, se.v);
  };
  std::vector<std::vector<std::vector<int>>> id(simple_cert.size());
  for (int c = 0; c < simple_cert.size(); ++c) {
    auto [e, f] = simple_cert.crossings[c];
    id[c].assign(mult(e), std::vector<int>(mult(f)));
    for (int i = 0; i < mult(e); ++i)
      for (int j = 0; j < mult(f); ++j) {
        id[c][i][j] = out.size();
        out.crossings.emplace_back(std::min(inst(e, i), inst(f, j)), std::max(inst(e, i), inst(f, j)));
      }
  }
  for (EdgeId e = 0; e < s.edge_count(); ++e)
    for (int i = 0; i < mult(e); ++i)
      for (int c : along[e]) {
        auto [a, b] = simple_cert.crossings[c];
        bool first = a == e;
        EdgeId other = first ? b : a;
        // Along e, copies of `other` (offset to its left) ascend iff other
        // passes from e's left to e's right.
        int sign = first ? orient[c] : -orient[c];
        for (int t = 0; t < mult(other); ++t) {
          int j = sign < 0 ? t : mult(other) - 1 - t;
          h_along[inst(e, i)].push_back(first ? id[c][i][j] : id[c][j][i]);
        }
      }
  set_orders(out, h_along);
  if (!verify_certificate(h, out).valid) return std::nullopt;
  return out;
}

inline std::optional<CrossingCertificate> insertion_heuristic(const Multigraph& g, const HeuristicOptions& opts) {
  const Multigraph s = g.simplified();
  const int m = s.edge_count();
  std::mt19937_64 rng(opts.seed);
  std::optional<CrossingCertificate> best;

  for (int attempt = 0; attempt < std::max(1, opts.restarts); ++attempt) {
    std::vector<EdgeId> order(m);
    std::iota(order.begin(), order.end(), 0);
    if (attempt > 0) std::shuffle(order.begin(), order.end(), rng);

    detail::InsertionDrawing d(s);
    // Greedy planar subgraph in the chosen order.
    std::vector<std::pair<int, int>> kept;
    std::vector<EdgeId> rest;
    for (EdgeId e : order) {
      kept.emplace_back(s.edge(e).u, s.edge(e).v);
      if (is_planar_edges(s.n(), kept)) {
        d.add_uncrossed(e);
      } else {
        kept.pop_back();
        rest.push_back(e);
      }
    }
    bool ok = true;
    for (EdgeId e : rest)
      if (!(ok = d.insert(e))) break;
    if (!ok) continue;

    // Reinsert edges with crossings while the total goes down.
    for (bool improved = true; improved;) {
      improved = false;
      for (EdgeId e : order) {
        if (d.crossings_on(e) == 0) continue;
        detail::InsertionDrawing trial = d;
        int before = d.crossings();
        trial.remove(e);
        if (trial.insert(e) && trial.crossings() < before) {
          d = std::move(trial);
          improved = true;
        }
      }
    }
    auto cert = d.certificate();
    if (!best || cert.size() < best->size()) best = cert;
  }
  if (!best) return std::nullopt;
  return expand_certificate(g, *best);
}

}  // namespace conecross
