#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace conecross {

/// Simple undirected graph as an edge list plus adjacency lists. Used for
/// circle graphs and as max-cut input.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : adj_(n) {}

  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  /// Ignores an edge that is already present.
  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n() || v >= n()) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (has_edge(u, v)) return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

  bool has_edge(int u, int v) const {
    const auto& a = adj_[u].size() < adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() < adj_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
  }

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  /// Components as vertex lists in order of discovery (BFS from the
  /// smallest unvisited vertex).
  std::vector<std::vector<int>> components() const {
    std::vector<bool> seen(n(), false);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n(); ++s) {
      if (seen[s]) continue;
      std::vector<int> comp{s};
      seen[s] = true;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (int w : adj_[comp[i]])
          if (!seen[w]) {
            seen[w] = true;
            comp.push_back(w);
          }
      out.push_back(std::move(comp));
    }
    return out;
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace conecross
