#pragma once

// Book drawings in the circular model: vertices sit on a circle in a cyclic
// order and every edge instance is a chord drawn in one of p disks (pages).
//
// Parallel instances on one page are drawn nested, so they never cross each
// other and any third chord crosses all of them or none.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "conecross/certificate.hpp"
#include "conecross/graph.hpp"
#include "conecross/simple_graph.hpp"

namespace conecross {

/// Positions of the vertices on the spine, read cyclically.
class CyclicOrder {
 public:
  CyclicOrder() = default;

  /// `order[i]` is the vertex at position i. Must be a permutation of 0..n-1.
  explicit CyclicOrder(std::vector<Vertex> order) : order_(std::move(order)), pos_(order_.size(), -1) {
    for (int i = 0; i < size(); ++i) {
      Vertex v = order_[i];
      if (v < 0 || v >= size() || pos_[v] >= 0) throw std::invalid_argument("order is not a permutation");
      pos_[v] = i;
    }
  }

  static CyclicOrder identity(int n) {
    std::vector<Vertex> o(n);
    std::iota(o.begin(), o.end(), 0);
    return CyclicOrder(std::move(o));
  }

  int size() const { return static_cast<int>(order_.size()); }
  Vertex at(int position) const { return order_[position]; }
  int position(Vertex v) const { return pos_[v]; }
  const std::vector<Vertex>& vertices() const { return order_; }

  /// Rotation putting vertex 0 first, reflected if needed so that position 1
  /// holds the smaller of vertex 0's two spine neighbours.
  CyclicOrder canonical() const {
    const int n = size();
    if (n == 0) return *this;
    std::vector<Vertex> o(n);
    int p0 = pos_[0];
    for (int i = 0; i < n; ++i) o[i] = order_[(p0 + i) % n];
    if (n > 2 && o[1] > o[n - 1]) std::reverse(o.begin() + 1, o.end());
    return CyclicOrder(std::move(o));
  }

  bool is_canonical() const { return *this == canonical(); }

  friend bool operator==(const CyclicOrder& a, const CyclicOrder& b) { return a.order_ == b.order_; }

 private:
  std::vector<Vertex> order_;
  std::vector<int> pos_;
};

/// True iff the chords of e and f cross: they share no endpoint and exactly
/// one endpoint of f lies strictly between the endpoints of e.
inline bool interleaves(const CyclicOrder& order, const EdgeInstance& e, const EdgeInstance& f) {
  if (adjacent(e, f)) return false;
  const int lo = std::min(order.position(e.u), order.position(e.v));
  const int hi = std::max(order.position(e.u), order.position(e.v));
  auto inside = [&](Vertex w) {
    int p = order.position(w);
    return lo < p && p < hi;
  };
  return inside(f.u) != inside(f.v);
}

struct BookDrawing {
  Multigraph graph;
  CyclicOrder order;
  /// Page of every edge instance, indexed by edge id.
  std::vector<int> pages;
  int page_count = 1;

  static BookDrawing one_page(Multigraph g, CyclicOrder order) {
    BookDrawing d{std::move(g), std::move(order), {}, 1};
    d.pages.assign(d.graph.edge_count(), 0);
    d.validate();
    return d;
  }

  void validate() const {
    if (order.size() != graph.n()) throw std::invalid_argument("order size does not match the graph");
    if (page_count < 1) throw std::invalid_argument("page count must be positive");
    if (static_cast<int>(pages.size()) != graph.edge_count())
      throw std::invalid_argument("every edge instance needs exactly one page");
    for (int p : pages)
      if (p < 0 || p >= page_count) throw std::invalid_argument("page index out of range");
  }
};

inline std::int64_t count_crossings(const BookDrawing& d) {
  const auto& es = d.graph.instances();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (d.pages[i] == d.pages[j] && interleaves(d.order, es[i], es[j])) ++total;
  return total;
}

/// Intersection graph of the chords: one vertex per edge instance, one edge
/// per interleaving pair. Pages play no role.
inline SimpleGraph circle_graph(const Multigraph& g, const CyclicOrder& order) {
  SimpleGraph c(g.edge_count());
  const auto& es = g.instances();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (interleaves(order, es[i], es[j])) c.add_edge(static_cast<int>(i), static_cast<int>(j));
  return c;
}

/// Adds a twin v' of v (id n) right after v on the spine. Every edge vu gets
/// a copy v'u on the same page; with `with_edge`, the edge vv' goes on page 0.
/// Since v' is adjacent to v on the spine, each copy crosses what its
/// template crosses plus possibly edges at v on the same page.
inline BookDrawing clone_vertex_book(const BookDrawing& d, Vertex v, bool with_edge) {
  const Multigraph& g = d.graph;
  if (v < 0 || v >= g.n()) throw std::out_of_range("invalid vertex");
  const Vertex twin = g.n();
  std::vector<EdgeEntry> es = g.entries();
  for (const auto& e : g.entries())
    if (e.u == v || e.v == v) es.push_back({e.u == v ? e.v : e.u, twin, e.mult});
  if (with_edge) es.push_back({v, twin, 1});
  Multigraph h(g.n() + 1, es);

  std::vector<Vertex> order;
  for (Vertex w : d.order.vertices()) {
    order.push_back(w);
    if (w == v) order.push_back(twin);
  }
  BookDrawing out{h, CyclicOrder(order), std::vector<int>(h.edge_count(), 0), d.page_count};
  for (const auto& e : h.instances()) {
    if (e.v != twin) {
      out.pages[e.id] = d.pages[g.first_instance(g.find_entry(e.u, e.v)) + e.copy];
    } else if (e.u != v) {
      out.pages[e.id] = d.pages[g.first_instance(g.find_entry(e.u, v)) + e.copy];
    }
  }
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Certificates from book drawings

namespace detail {

__extension__ using i128 = __int128;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

inline i128 cross(Point a, Point b) { return static_cast<i128>(a.x) * b.y - static_cast<i128>(a.y) * b.x; }
inline Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

// Parameter t = num/den (den > 0) of the intersection of segment p->q with
// the line through a, b.
struct Param {
  i128 num = 0;
  i128 den = 1;
};

inline Param intersect_param(Point p, Point q, Point a, Point b) {
  Point ab = sub(b, a);
  Param t{cross(sub(a, p), ab), cross(sub(q, p), ab)};
  if (t.den < 0) {
    t.num = -t.num;
    t.den = -t.den;
  }
  return t;
}

inline int compare(const Param& a, const Param& b) {
  i128 l = a.num * b.den, r = b.num * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

}  // namespace detail

/// Crossing certificate of a 1- or 2-page drawing realised in the plane:
/// page 0 inside the circle, page 1 outside it. Chords are straight segments
/// between points in convex position chosen so that no three chords meet;
/// parallel instances are infinitesimal offsets of their chord.
inline CrossingCertificate book_certificate(const BookDrawing& d) {
  using namespace detail;
  d.validate();
  for (int p : d.pages)
    if (p > 1) throw std::invalid_argument("only 1- and 2-page drawings embed in the plane this way");
  const Multigraph& g = d.graph;
  const int n = g.n();
  const auto& es = g.instances();

  // Pairs of entries (parallel classes) that cross, grouped by page.
  std::vector<std::pair<int, int>> entry_pairs;
  const auto& entries = g.entries();
  auto rep = [&](int entry) -> const EdgeInstance& { return es[g.first_instance(entry)]; };
  for (int a = 0; a < static_cast<int>(entries.size()); ++a)
    for (int b = a + 1; b < static_cast<int>(entries.size()); ++b)
      if (interleaves(d.order, rep(a), rep(b))) entry_pairs.emplace_back(a, b);

  // Points on the parabola y = x^2 in spine order. A deterministic jitter
  // is re-drawn until no chord carries two coincident crossing points.
  std::vector<Point> pt(n);
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  std::vector<std::vector<std::pair<Param, int>>> along_entry(entries.size());
  for (int attempt = 0;; ++attempt) {
    if (attempt == 200) throw std::runtime_error("could not place vertices in general position");
    std::int64_t x = 0;
    for (int i = 0; i < n; ++i) {
      x += 1 + (attempt == 0 ? 0 : static_cast<std::int64_t>(next() % 37));
      pt[d.order.at(i)] = {x, x * x};
    }
    for (auto& v : along_entry) v.clear();
    for (int idx = 0; idx < static_cast<int>(entry_pairs.size()); ++idx) {
      auto [a, b] = entry_pairs[idx];
      const auto &ea = entries[a], &eb = entries[b];
      along_entry[a].emplace_back(intersect_param(pt[ea.u], pt[ea.v], pt[eb.u], pt[eb.v]), idx);
      along_entry[b].emplace_back(intersect_param(pt[eb.u], pt[eb.v], pt[ea.u], pt[ea.v]), idx);
    }
    bool general = true;
    for (auto& v : along_entry) {
      std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return compare(l.first, r.first) < 0; });
      for (std::size_t i = 1; i < v.size() && general; ++i) general = compare(v[i - 1].first, v[i].first) != 0;
    }
    if (general) break;
  }

  // Expand entry crossings into instance crossings. Copy i of an entry is
  // offset by i*eps to the left of its direction (smaller endpoint first);
  // along copy i of a, the copies of b then appear in increasing index
  // order iff cross(dir a, dir b) < 0.
  CrossingCertificate cert;
  std::vector<std::vector<int>> along(es.size());
  std::vector<std::vector<std::vector<int>>> block(entry_pairs.size());  // [pair][copy of a][copy of b] -> crossing id
  for (int idx = 0; idx < static_cast<int>(entry_pairs.size()); ++idx) {
    auto [a, b] = entry_pairs[idx];
    int ma = entries[a].mult, mb = entries[b].mult;
    block[idx].assign(ma, std::vector<int>(mb, -1));
    for (int i = 0; i < ma; ++i)
      for (int j = 0; j < mb; ++j) {
        EdgeId ea = g.first_instance(a) + i, eb = g.first_instance(b) + j;
        if (d.pages[ea] != d.pages[eb]) continue;
        block[idx][i][j] = cert.size();
        cert.crossings.emplace_back(ea, eb);
      }
  }
  for (int entry = 0; entry < static_cast<int>(entries.size()); ++entry) {
    const auto& me = entries[entry];
    Point dir_me = sub(pt[me.v], pt[me.u]);
    for (int i = 0; i < me.mult; ++i) {
      EdgeId id = g.first_instance(entry) + i;
      for (const auto& [param, idx] : along_entry[entry]) {
        auto [a, b] = entry_pairs[idx];
        int other = a == entry ? b : a;
        const auto& mo = entries[other];
        bool ascending = cross(dir_me, sub(pt[mo.v], pt[mo.u])) < 0;
        for (int s = 0; s < mo.mult; ++s) {
          int j = ascending ? s : mo.mult - 1 - s;
          int c = a == entry ? block[idx][i][j] : block[idx][j][i];
          if (c >= 0) along[id].push_back(c);
        }
      }
    }
  }
  set_orders(cert, along);
  return cert;
}

}  // namespace conecross
