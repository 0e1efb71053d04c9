#pragma once

// Crossing certificates: a combinatorial description of a good drawing as a
// set of crossing pairs plus the order of crossings along every edge crossed
// more than once. A certificate witnesses cr(G) <= |crossings| exactly when
// its planarization is planar.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conecross/graph.hpp"
#include "conecross/planarity.hpp"

namespace conecross {

struct CrossingCertificate {
  /// Unordered pairs of edge-instance ids.
  std::vector<std::pair<EdgeId, EdgeId>> crossings;
  /// For each edge crossed at least twice: indices into `crossings`, in the
  /// order met when walking the edge from its smaller endpoint.
  std::map<EdgeId, std::vector<int>> edge_orders;

  int size() const { return static_cast<int>(crossings.size()); }
};

enum class SolveStatus { exact, bounds_only };

inline const char* to_string(SolveStatus s) { return s == SolveStatus::exact ? "exact" : "bounds-only"; }

struct SolveStats {
  std::int64_t nodes = 0;
  std::int64_t planarity_calls = 0;
  double elapsed_ms = 0.0;
};

/// Bracket on a crossing number. `status == exact` implies lower == upper.
struct SolveResult {
  int lower = 0;
  int upper = 0;
  SolveStatus status = SolveStatus::bounds_only;
  std::optional<CrossingCertificate> certificate;
  SolveStats stats;

  bool exact() const { return status == SolveStatus::exact; }
};

/// Crossing ids along each edge, from the smaller endpoint. Edges crossed at
/// most once get their single crossing (or nothing) without consulting
/// `edge_orders`.
inline std::vector<std::vector<int>> crossings_along_edges(const Multigraph& g, const CrossingCertificate& cert) {
  std::vector<std::vector<int>> along(g.edge_count());
  for (int c = 0; c < cert.size(); ++c) {
    along.at(cert.crossings[c].first).push_back(c);
    along.at(cert.crossings[c].second).push_back(c);
  }
  for (auto& [e, order] : cert.edge_orders)
    if (e >= 0 && e < g.edge_count()) along[e] = order;
  return along;
}

/// Empty string when the certificate respects the good-drawing rules and
/// its orders are complete; otherwise a description of the first problem.
inline std::string certificate_problem(const Multigraph& g, const CrossingCertificate& cert) {
  const int m = g.edge_count();
  std::set<std::pair<EdgeId, EdgeId>> seen;
  std::vector<std::vector<int>> incident(m);
  for (int c = 0; c < cert.size(); ++c) {
    auto [a, b] = cert.crossings[c];
    if (a < 0 || b < 0 || a >= m || b >= m) return "crossing refers to an unknown edge";
    if (a == b) return "edge crossing itself";
    if (adjacent(g.edge(a), g.edge(b))) return "adjacent edges cross";
    if (!seen.insert(std::minmax(a, b)).second) return "pair crosses twice";
    incident[a].push_back(c);
    incident[b].push_back(c);
  }
  for (const auto& [e, order] : cert.edge_orders) {
    if (e < 0 || e >= m) return "order given for an unknown edge";
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != incident[e]) return "order list does not match the crossings of its edge";
  }
  for (int e = 0; e < m; ++e)
    if (incident[e].size() >= 2 && !cert.edge_orders.contains(e)) return "missing order for a multiply crossed edge";
  return {};
}

/// Planarization as a raw edge list: crossing c becomes vertex n + c and
/// each edge is split along its crossing order. `segment_of[i]` names the
/// original edge of list entry i.
struct Planarization {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<EdgeId> segment_of;
};

inline Planarization planarize_edges(const Multigraph& g, const CrossingCertificate& cert) {
  Planarization p;
  p.n = g.n() + cert.size();
  auto along = crossings_along_edges(g, cert);
  for (const auto& e : g.instances()) {
    int prev = e.u;
    for (int c : along[e.id]) {
      p.edges.emplace_back(prev, g.n() + c);
      p.segment_of.push_back(e.id);
      prev = g.n() + c;
    }
    p.edges.emplace_back(prev, e.v);
    p.segment_of.push_back(e.id);
  }
  return p;
}

/// Replaces each crossing by a degree-4 vertex (ids n, n+1, ...).
/// Throws std::invalid_argument on a malformed certificate.
inline Multigraph planarize(const Multigraph& g, const CrossingCertificate& cert) {
  if (auto problem = certificate_problem(g, cert); !problem.empty())
    throw std::invalid_argument("malformed certificate: " + problem);
  auto p = planarize_edges(g, cert);
  return Multigraph(p.n, p.edges);
}

struct CertificateCheck {
  int count = 0;
  bool valid = false;
  std::string reason;
};

inline CertificateCheck verify_certificate(const Multigraph& g, const CrossingCertificate& cert) {
  CertificateCheck out{cert.size(), false, certificate_problem(g, cert)};
  if (!out.reason.empty()) return out;
  auto p = planarize_edges(g, cert);
  out.valid = is_planar_edges(p.n, p.edges);
  if (!out.valid) out.reason = "planarization is not planar";
  return out;
}

/// Lower bound on cr(G): the sum over components of the Euler bound
/// m' - 3n + 6 on the simplification (components with n >= 3).
inline int cr_lower(const Multigraph& g) {
  int total = 0;
  for (const auto& comp : g.components()) {
    if (comp.size() < 3) continue;
    auto h = g.induced(comp);
    int excess = static_cast<int>(h.entries().size()) - 3 * h.n() + 6;
    total += std::max(0, excess);
  }
  return total;
}

/// Builds `edge_orders` from per-edge crossing sequences, keeping only the
/// edges crossed at least twice.
inline void set_orders(CrossingCertificate& cert, const std::vector<std::vector<int>>& along) {
  cert.edge_orders.clear();
  for (int e = 0; e < static_cast<int>(along.size()); ++e)
    if (along[e].size() >= 2) cert.edge_orders[e] = along[e];
}

/// Renames edge ids through `map` (old id -> new id). Only valid when every
/// edge keeps its smaller endpoint, e.g. when passing from G to cone(G).
inline CrossingCertificate rename_edges(const CrossingCertificate& cert, const std::vector<EdgeId>& map) {
  CrossingCertificate out;
  for (auto [a, b] : cert.crossings) out.crossings.emplace_back(map.at(a), map.at(b));
  for (const auto& [e, order] : cert.edge_orders) out.edge_orders[map.at(e)] = order;
  return out;
}

/// Carries a certificate of G over to H = G relabelled by `vertex_map`
/// (G vertex v becomes H vertex vertex_map[v]). Copies keep their index;
/// orders are reversed where the smaller endpoint changes.
inline CrossingCertificate transport_certificate(const Multigraph& g, const CrossingCertificate& cert,
                                                 const Multigraph& h, const std::vector<Vertex>& vertex_map) {
  std::vector<EdgeId> map(g.edge_count());
  for (const auto& e : g.instances()) {
    int entry = h.find_entry(vertex_map.at(e.u), vertex_map.at(e.v));
    if (entry < 0 || h.entries()[entry].mult <= e.copy)
      throw std::invalid_argument("vertex map does not carry G into H");
    map[e.id] = h.first_instance(entry) + e.copy;
  }
  CrossingCertificate out;
  for (auto [a, b] : cert.crossings) out.crossings.emplace_back(map[a], map[b]);
  for (const auto& [e, order] : cert.edge_orders) {
    auto& dst = out.edge_orders[map[e]];
    dst = order;
    if (vertex_map[g.edge(e).u] > vertex_map[g.edge(e).v]) std::reverse(dst.begin(), dst.end());
  }
  return out;
}

}  // namespace conecross
