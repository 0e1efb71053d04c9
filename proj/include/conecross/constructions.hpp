#pragma once

// Explicit drawings of the F_k family and of the fig1 graph.
//
// F_k is drawn with the inner cycle inside the outer one and every spoke
// straight. Neighbouring hubs x_i and x_{i+1} share the outer vertices
// y_{2i} and y_{2i+1}; the only crossing in the fan between them is
// x_i y_{2i+1} with x_{i+1} y_{2i}. That is k crossings, each edge crossed
// at most once.
//
// For the cone, the apex sits outside the outer cycle. The edge apex-x_i
// enters the triangle x_i y_{2i-1} y_{2i} through its outer side, so it
// crosses y_{2i-1} y_{2i} and nothing else: k more crossings.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "conecross/certificate.hpp"
#include "conecross/graph.hpp"
#include "conecross/isomorphism.hpp"

namespace conecross {

namespace detail {

inline EdgeId instance_of(const Multigraph& g, Vertex a, Vertex b) {
  int entry = g.find_entry(a, b);
  if (entry < 0) throw std::logic_error("expected edge is missing");
  return g.first_instance(entry);
}

inline CrossingCertificate fk_crossings(const Multigraph& g, int k, bool with_apex) {
  auto y = [k](int j) { return k + ((j % (2 * k)) + 2 * k) % (2 * k); };
  CrossingCertificate cert;
  auto add = [&](EdgeId a, EdgeId b) { cert.crossings.emplace_back(std::min(a, b), std::max(a, b)); };
  for (int i = 0; i < k; ++i)
    add(instance_of(g, i, y(2 * i + 1)), instance_of(g, (i + 1) % k, y(2 * i)));
  if (with_apex)
    for (int i = 0; i < k; ++i) add(instance_of(g, i, 3 * k), instance_of(g, y(2 * i - 1), y(2 * i)));
  return cert;
}

}  // namespace detail

/// k-crossing certificate of f_graph(k).
inline CrossingCertificate fk_certificate(int k) { return detail::fk_crossings(f_graph(k), k, false); }

/// 2k-crossing certificate of cone(f_graph(k)).
inline CrossingCertificate fk_cone_certificate(int k) { return detail::fk_crossings(cone(f_graph(k)), k, true); }

/// Isomorphism f_graph(3) -> fig1_graph(), as a vertex map.
inline std::vector<Vertex> f3_to_fig1() {
  auto iso = find_isomorphism(f_graph(3), fig1_graph());
  if (!iso) throw std::logic_error("fig1_graph is not isomorphic to F_3");
  return *iso;
}

/// 3-crossing certificate of fig1_graph(), carried over from F_3.
inline CrossingCertificate fig1_certificate() {
  return transport_certificate(f_graph(3), fk_certificate(3), fig1_graph(), f3_to_fig1());
}

/// 6-crossing certificate of cone(fig1_graph()), carried over from cone(F_3).
inline CrossingCertificate fig1_cone_certificate() {
  auto map = f3_to_fig1();
  map.push_back(9);
  return transport_certificate(cone(f_graph(3)), fk_cone_certificate(3), cone(fig1_graph()), map);
}

}  // namespace conecross
