#pragma once

// Planarity testing. The decision procedure is the Boyer-Myrvold edge
// addition algorithm from Boost.Graph; this header adapts it to plain edge
// lists and to Multigraph.

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "conecross/graph.hpp"

namespace conecross {

namespace detail {

using PlanarityGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

// Builds a simple Boost graph from `edges`, dropping parallel copies. The
// edge_index property of each kept edge is its position in `edges`.
inline PlanarityGraph build_simple(int n, const std::vector<std::pair<int, int>>& edges) {
  PlanarityGraph g(n);
  std::vector<std::pair<int, int>> added;
  added.reserve(edges.size());
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    std::pair<int, int> key = std::minmax(edges[i].first, edges[i].second);
    if (key.first == key.second) continue;
    auto it = std::lower_bound(added.begin(), added.end(), key);
    if (it != added.end() && *it == key) continue;
    added.insert(it, key);
    boost::add_edge(key.first, key.second, i, g);
  }
  return g;
}

}  // namespace detail

/// Planarity of the simple graph underlying an edge list on vertices 0..n-1.
inline bool is_planar_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  auto g = detail::build_simple(n, edges);
  return boost::boyer_myrvold_planarity_test(g);
}

/// Returns std::nullopt when planar; otherwise the positions in `edges` of
/// the edges of a Kuratowski subdivision (ascending, minimal: removing any
/// one of them leaves a planar graph).
inline std::optional<std::vector<int>> kuratowski_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  auto g = detail::build_simple(n, edges);
  std::vector<boost::graph_traits<detail::PlanarityGraph>::edge_descriptor> witness;
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                                    boost::boyer_myrvold_params::kuratowski_subgraph =
                                                        std::back_inserter(witness));
  if (planar) return std::nullopt;
  auto index = boost::get(boost::edge_index, g);
  std::vector<int> out;
  out.reserve(witness.size());
  for (auto e : witness) out.push_back(index[e]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  // Boost may report a few superfluous edges; drop them one at a time.
  std::vector<std::pair<int, int>> sub;
  for (std::size_t i = 0; i < out.size();) {
    sub.clear();
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) sub.push_back(edges[out[j]]);
    if (is_planar_edges(n, sub)) ++i;
    else out.erase(out.begin() + i);
  }
  return out;
}

inline std::vector<std::pair<int, int>> edge_list(const Multigraph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.entries().size());
  for (const auto& e : g.entries()) out.emplace_back(e.u, e.v);
  return out;
}

/// True iff the simplification of `g` is planar. Disconnected input is fine.
inline bool is_planar(const Multigraph& g) { return is_planar_edges(g.n(), edge_list(g)); }

}  // namespace conecross
