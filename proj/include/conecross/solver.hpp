#pragma once

// Exact crossing numbers of small graphs.
//
// The solver looks for a crossing certificate with exactly k crossings for
// k = lower, lower + 1, ... (iterative deepening). Only good drawings are
// considered: no pair of edges crosses twice and adjacent edges (including
// parallel copies) never cross. Some optimal drawing of every loopless
// multigraph is good, since a double crossing or a crossing of adjacent
// edges can be removed by swapping arcs without adding crossings.
//
// Branching. Let P be the planarization of the partial certificate. If P is
// not planar it contains a Kuratowski subdivision K. A completed
// certificate destroys K only with a crossing whose two edges both run
// through K at that point; otherwise K survives in the final planarization.
// So with P_1, .., P_r the edge pairs that have segments in K, branch i adds
// P_i (at every combination of positions along the two edges' current
// crossing sequences) and forbids P_1, .., P_{i-1} in its subtree. Every
// completion lies in exactly one branch.
//
// Pruning. Kuratowski subdivisions of P that share no segment must be
// destroyed by distinct crossings, so a greedy packing of them gives a lower
// bound on the crossings still to add.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "conecross/book.hpp"
#include "conecross/certificate.hpp"
#include "conecross/graph.hpp"
#include "conecross/heuristic.hpp"
#include "conecross/isomorphism.hpp"
#include "conecross/page_transform.hpp"
#include "conecross/planarity.hpp"

namespace conecross {

struct SolverOptions {
  /// Largest k tried by the search.
  int max_k = 64;
  /// Wall-clock budget in milliseconds; 0 means unlimited.
  double budget_ms = 0;
  int threads = 1;
  /// Skip root branches equivalent under an automorphism of G to an
  /// earlier one.
  bool symmetry = false;
  /// Greedy packing of disjoint Kuratowski subdivisions as a lower bound.
  bool packing_bound = true;
  /// Extra upper-bound witnesses; invalid ones are ignored.
  std::vector<CrossingCertificate> seeds;
  /// Restarts of the insertion heuristic for the initial upper bound.
  int heuristic_restarts = 20;
  std::uint64_t seed = 1;
};

namespace detail {

class CrossingSearch {
 public:
  CrossingSearch(const Multigraph& g, const SolverOptions& opts, const Deadline& deadline)
      : g_(g), m_(g.edge_count()), opts_(opts), deadline_(deadline) {
    adjacent_.assign(static_cast<std::size_t>(m_) * m_, 0);
    for (const auto& a : g.instances())
      for (const auto& b : g.instances()) adjacent_[a.id * m_ + b.id] = a.id == b.id || adjacent(a, b);
    if (opts.symmetry) init_symmetry();
  }

  std::atomic<std::int64_t> nodes{0};
  std::atomic<std::int64_t> planarity_calls{0};

  enum class Outcome { found, exhausted, timed_out };

  /// Searches for a certificate with exactly k crossings.
  Outcome search(int k, CrossingCertificate& found) {
    State root(m_);
    auto branches = root_branches(root, k);
    if (branches.found) {
      found = branches.certificate;
      return Outcome::found;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best_index{std::numeric_limits<std::size_t>::max()};
    std::atomic<bool> timed_out{false};
    std::mutex mu;
    std::optional<CrossingCertificate> best;

    auto worker = [&]() {
      for (std::size_t i; (i = next.fetch_add(1)) < branches.pairs.size();) {
        if (i > best_index.load()) continue;
        if (branches.skip[i]) continue;
        State st(m_);
        for (std::size_t j = 0; j < i; ++j) st.forbid(branches.pairs[j], m_);
        add_crossing(st, branches.pairs[i].first, branches.pairs[i].second, 0, 0);
        CrossingCertificate cert;
        auto abort = [&] { return best_index.load() < i; };
        auto r = dfs(st, k, cert, abort);
        if (r == Outcome::found) {
          std::lock_guard lock(mu);
          if (i < best_index.load()) {
            best_index = i;
            best = cert;
          }
        } else if (r == Outcome::timed_out && !abort()) {
          timed_out = true;
        }
      }
    };
    if (opts_.threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < opts_.threads; ++t) pool.emplace_back(worker);
    }
    if (best) {
      found = *best;
      return Outcome::found;
    }
    return timed_out ? Outcome::timed_out : Outcome::exhausted;
  }

  /// Segment-disjoint Kuratowski packing size of G itself.
  int root_packing_bound() {
    State st(m_);
    auto p = planarization(st);
    return static_cast<int>(packing(st, p, std::numeric_limits<int>::max()).size());
  }

 private:
  struct State {
    explicit State(int m) : along(m), crossed(static_cast<std::size_t>(m) * m, 0), forbidden(crossed) {}
    std::vector<std::pair<EdgeId, EdgeId>> crossings;
    std::vector<std::vector<int>> along;
    std::vector<std::uint8_t> crossed;
    std::vector<std::uint8_t> forbidden;

    void forbid(std::pair<EdgeId, EdgeId> p, int m) {
      forbidden[p.first * m + p.second] = forbidden[p.second * m + p.first] = 1;
    }
    void allow(std::pair<EdgeId, EdgeId> p, int m) {
      forbidden[p.first * m + p.second] = forbidden[p.second * m + p.first] = 0;
    }
  };

  struct Planar {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<EdgeId> edge_of;
  };

  struct RootBranches {
    bool found = false;
    CrossingCertificate certificate;
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    std::vector<bool> skip;
  };

  Planar planarization(const State& st) const {
    Planar p;
    p.n = g_.n() + static_cast<int>(st.crossings.size());
    p.edges.reserve(m_ + 2 * st.crossings.size());
    p.edge_of.reserve(p.edges.capacity());
    for (const auto& e : g_.instances()) {
      int prev = e.u;
      for (int c : st.along[e.id]) {
        p.edges.emplace_back(prev, g_.n() + c);
        p.edge_of.push_back(e.id);
        prev = g_.n() + c;
      }
      p.edges.emplace_back(prev, e.v);
      p.edge_of.push_back(e.id);
    }
    return p;
  }

  void add_crossing(State& st, EdgeId e, EdgeId f, int pos_e, int pos_f) const {
    int c = static_cast<int>(st.crossings.size());
    st.crossings.emplace_back(e, f);
    st.along[e].insert(st.along[e].begin() + pos_e, c);
    st.along[f].insert(st.along[f].begin() + pos_f, c);
    st.crossed[e * m_ + f] = st.crossed[f * m_ + e] = 1;
  }

  void remove_crossing(State& st, int pos_e, int pos_f) const {
    auto [e, f] = st.crossings.back();
    st.crossings.pop_back();
    st.along[e].erase(st.along[e].begin() + pos_e);
    st.along[f].erase(st.along[f].begin() + pos_f);
    st.crossed[e * m_ + f] = st.crossed[f * m_ + e] = 0;
  }

  CrossingCertificate certificate_of(const State& st) const {
    CrossingCertificate cert;
    cert.crossings = st.crossings;
    for (auto& [a, b] : cert.crossings)
      if (a > b) std::swap(a, b);
    set_orders(cert, st.along);
    return cert;
  }

  // Candidate pairs for destroying the subdivision given by `k_edges`
  // (positions in the planarization edge list).
  std::vector<std::pair<EdgeId, EdgeId>> candidates(const State& st, const Planar& p,
                                                    const std::vector<int>& k_edges) const {
    std::vector<EdgeId> in_k;
    for (int i : k_edges) in_k.push_back(p.edge_of[i]);
    std::sort(in_k.begin(), in_k.end());
    in_k.erase(std::unique(in_k.begin(), in_k.end()), in_k.end());
    std::vector<std::pair<EdgeId, EdgeId>> out;
    for (std::size_t i = 0; i < in_k.size(); ++i)
      for (std::size_t j = i + 1; j < in_k.size(); ++j) {
        EdgeId a = in_k[i], b = in_k[j];
        std::size_t idx = static_cast<std::size_t>(a) * m_ + b;
        if (adjacent_[idx] || st.crossed[idx] || st.forbidden[idx]) continue;
        out.emplace_back(a, b);
      }
    return out;
  }

  // Greedy segment-disjoint packing of Kuratowski subdivisions, stopping
  // after `cap` of them. Each entry lists the candidate pairs of one
  // subdivision; an empty list means that subdivision cannot be destroyed.
  std::vector<std::vector<std::pair<EdgeId, EdgeId>>> packing(const State& st, const Planar& p, int cap) {
    std::vector<std::vector<std::pair<EdgeId, EdgeId>>> out;
    std::vector<std::pair<int, int>> rest = p.edges;
    std::vector<int> origin(rest.size());
    for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = static_cast<int>(i);
    while (static_cast<int>(out.size()) < cap) {
      ++planarity_calls;
      auto witness = kuratowski_edges(p.n, rest);
      if (!witness) break;
      std::vector<int> k_edges;
      for (int i : *witness) k_edges.push_back(origin[i]);
      out.push_back(candidates(st, p, k_edges));
      if (out.back().empty()) break;
      if (!opts_.packing_bound) break;
      std::vector<bool> drop(rest.size(), false);
      for (int i : *witness) drop[i] = true;
      std::vector<std::pair<int, int>> kept;
      std::vector<int> kept_origin;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (!drop[i]) {
          kept.push_back(rest[i]);
          kept_origin.push_back(origin[i]);
        }
      rest = std::move(kept);
      origin = std::move(kept_origin);
    }
    return out;
  }

  RootBranches root_branches(State& root, int k) {
    RootBranches rb;
    ++nodes;
    auto p = planarization(root);
    auto pack = packing(root, p, k + 1);
    if (pack.empty()) {
      rb.found = true;
      rb.certificate = certificate_of(root);
      return rb;
    }
    if (static_cast<int>(pack.size()) > k || pack.front().empty()) return rb;
    rb.pairs = best_branching(pack);
    rb.skip.assign(rb.pairs.size(), false);
    if (opts_.symmetry) {
      std::set<std::pair<int, int>> seen;
      for (std::size_t i = 0; i < rb.pairs.size(); ++i) {
        auto key = orbit_key(rb.pairs[i]);
        if (!seen.insert(key).second) rb.skip[i] = true;
      }
    }
    return rb;
  }

  static std::vector<std::pair<EdgeId, EdgeId>> best_branching(
      const std::vector<std::vector<std::pair<EdgeId, EdgeId>>>& pack) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pack.size(); ++i)
      if (pack[i].size() < pack[best].size()) best = i;
    return pack[best];
  }

  template <class Abort>
  Outcome dfs(State& st, int k, CrossingCertificate& found, const Abort& abort) {
    ++nodes;
    if (deadline_.expired()) return Outcome::timed_out;
    if (abort()) return Outcome::exhausted;
    const int d = static_cast<int>(st.crossings.size());
    auto p = planarization(st);
    if (d == k) {
      ++planarity_calls;
      if (is_planar_edges(p.n, p.edges)) {
        found = certificate_of(st);
        return Outcome::found;
      }
      return Outcome::exhausted;
    }
    auto pack = packing(st, p, k - d + 1);
    if (pack.empty()) {
      found = certificate_of(st);
      return Outcome::found;
    }
    if (d + static_cast<int>(pack.size()) > k) return Outcome::exhausted;
    for (const auto& c : pack)
      if (c.empty()) return Outcome::exhausted;
    auto pairs = best_branching(pack);

    Outcome result = Outcome::exhausted;
    std::size_t forbidden_count = 0;
    for (const auto& [e, f] : pairs) {
      const int le = static_cast<int>(st.along[e].size());
      const int lf = static_cast<int>(st.along[f].size());
      for (int pe = 0; pe <= le && result == Outcome::exhausted; ++pe)
        for (int pf = 0; pf <= lf && result == Outcome::exhausted; ++pf) {
          add_crossing(st, e, f, pe, pf);
          result = dfs(st, k, found, abort);
          remove_crossing(st, pe, pf);
        }
      if (result != Outcome::exhausted) break;
      st.forbid({e, f}, m_);
      ++forbidden_count;
    }
    for (std::size_t i = 0; i < forbidden_count; ++i) st.allow(pairs[i], m_);
    return result;
  }

  // Symmetry: edge pairs are compared through the entries (parallel
  // classes) they belong to, since copies of an entry are interchangeable.
  void init_symmetry() {
    auto autos = automorphisms(g_, 20000);
    const auto& entries = g_.entries();
    for (const auto& perm : autos) {
      std::vector<int> entry_map(entries.size());
      for (std::size_t i = 0; i < entries.size(); ++i)
        entry_map[i] = g_.find_entry(perm[entries[i].u], perm[entries[i].v]);
      entry_perms_.push_back(std::move(entry_map));
    }
  }

  std::pair<int, int> orbit_key(std::pair<EdgeId, EdgeId> p) const {
    std::pair<int, int> best{std::numeric_limits<int>::max(), 0};
    int a = g_.edge(p.first).entry, b = g_.edge(p.second).entry;
    for (const auto& em : entry_perms_) best = std::min(best, std::pair<int, int>(std::minmax(em[a], em[b])));
    return best;
  }

  const Multigraph& g_;
  const int m_;
  const SolverOptions& opts_;
  const Deadline& deadline_;
  std::vector<std::uint8_t> adjacent_;
  std::vector<std::vector<int>> entry_perms_;
};

}  // namespace detail

/// Exact crossing number by iterative deepening, or an honest bracket when
/// max_k or the budget is reached first.
inline SolveResult cr_exact(const Multigraph& g, const SolverOptions& opts = {}) {
  detail::Deadline deadline(opts.budget_ms);
  SolveResult out;
  detail::CrossingSearch search(g, opts, deadline);

  // Upper bound: seeds and a 1-page / 2-page drawing on the identity order.
  std::optional<CrossingCertificate> best_cert;
  auto offer = [&](const CrossingCertificate& c) {
    if ((!best_cert || c.size() < best_cert->size()) && verify_certificate(g, c).valid) best_cert = c;
  };
  for (const auto& s : opts.seeds) offer(s);
  CyclicOrder identity = CyclicOrder::identity(g.n());
  offer(book_certificate(BookDrawing::one_page(g, identity)));
  try {
    offer(book_certificate(one_to_two(g, identity).drawing));
  } catch (const MaxCutLimitExceeded&) {
  }
  if (opts.heuristic_restarts > 0)
    if (auto h = insertion_heuristic(g, {opts.heuristic_restarts, opts.seed})) offer(*h);

  int lower = cr_lower(g);
  if (opts.packing_bound) lower = std::max(lower, search.root_packing_bound());
  int upper = best_cert->size();

  bool timed_out = false;
  for (int k = lower; k < upper && k <= opts.max_k; ++k) {
    CrossingCertificate cert;
    auto r = search.search(k, cert);
    if (r == detail::CrossingSearch::Outcome::found) {
      best_cert = cert;
      upper = k;
      break;
    }
    if (r == detail::CrossingSearch::Outcome::timed_out) {
      timed_out = true;
      break;
    }
    lower = k + 1;
  }
  (void)timed_out;
  out.lower = std::min(lower, upper);
  out.upper = upper;
  out.status = out.lower == out.upper ? SolveStatus::exact : SolveStatus::bounds_only;
  out.certificate = best_cert;
  out.stats.nodes = search.nodes.load();
  out.stats.planarity_calls = search.planarity_calls.load();
  out.stats.elapsed_ms = deadline.elapsed_ms();
  return out;
}

/// Drawing of cone(G) with G on page 0 in the given spine order and the
/// apex edges alone on page 1: as many crossings as the 1-page drawing of G.
inline BookDrawing cone_book_drawing(const Multigraph& g, const CyclicOrder& order) {
  Multigraph h = cone(g);
  std::vector<Vertex> o = order.vertices();
  o.push_back(g.n());
  BookDrawing d{h, CyclicOrder(o), std::vector<int>(h.edge_count(), 0), 2};
  for (Vertex v = 0; v < g.n(); ++v) d.pages[cone_apex_edge_id(g, v)] = 1;
  return d;
}

/// cr(cone(G)), with the upper bound seeded by the best 1-page drawing of G.
inline SolveResult cone_cr(const Multigraph& g, SolverOptions opts = {},
                           const OrderSearchOptions& order_opts = {}) {
  auto op = outerplanar_cr(g, order_opts);
  opts.seeds.push_back(book_certificate(cone_book_drawing(g, op.drawing.order)));
  return cr_exact(cone(g), opts);
}

}  // namespace conecross
