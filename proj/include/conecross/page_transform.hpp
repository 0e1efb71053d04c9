#pragma once

// From 1-page to 2-page drawings, and optimisation of book drawings over
// page assignments and spine orders.
//
// Moving the edges of one side of a cut of the circle graph C_D to a second
// page leaves exactly the uncut edges of C_D as crossings. With an Edwards
// cut this gives at most k/2 - (sqrt(8k + 1) - 1)/8 crossings for a 1-page
// drawing with k >= 1 crossings, checked in integers as
//   s = 4k + 1 - 8 * crossings,  s >= 0  and  s^2 >= 8k + 1.
//
// Order searches enumerate canonical cyclic orders only (vertex 0 first,
// position 1 smaller than the last position): (n-1)!/2 orders for n >= 3.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "conecross/book.hpp"
#include "conecross/certificate.hpp"
#include "conecross/maxcut.hpp"

namespace conecross {

/// Integer form of the 1-page to 2-page crossing bound.
inline bool two_page_bound_met(std::int64_t k, std::int64_t crossings) {
  if (k == 0) return crossings == 0;
  std::int64_t s = 4 * k + 1 - 8 * crossings;
  return s >= 0 && s * s >= 8 * k + 1;
}

struct OneToTwoResult {
  BookDrawing drawing;
  std::int64_t k = 0;    // crossings of the 1-page drawing
  std::int64_t cut = 0;  // cut size in the circle graph
  std::int64_t crossings = 0;
  bool bound_met = false;
};

/// Redraws one side of a max-cut of the circle graph on a second page. The
/// spine order is kept; k == 0 returns the 1-page drawing unchanged.
inline OneToTwoResult one_to_two(const Multigraph& g, const CyclicOrder& order, const MaxCutOptions& opts = {}) {
  OneToTwoResult out{BookDrawing::one_page(g, order)};
  SimpleGraph c = circle_graph(g, order);
  out.k = c.m();
  if (out.k == 0) {
    out.bound_met = true;
    return out;
  }
  Cut cut = maxcut_edwards(c, opts);
  out.drawing.page_count = 2;
  for (int e = 0; e < g.edge_count(); ++e) out.drawing.pages[e] = cut.side[e];
  out.cut = cut.size;
  out.crossings = count_crossings(out.drawing);
  out.bound_met = two_page_bound_met(out.k, out.crossings);
  return out;
}

struct FixedOrderResult {
  BookDrawing drawing;
  std::int64_t crossings = 0;
};

/// Optimal 2-page drawing for a fixed spine order: k minus the exact max-cut
/// of the circle graph. Throws MaxCutLimitExceeded for large circle graphs.
inline FixedOrderResult two_page_fixed_order(const Multigraph& g, const CyclicOrder& order,
                                             const MaxCutOptions& opts = {}) {
  SimpleGraph c = circle_graph(g, order);
  Cut cut = maxcut_exact(c, opts);
  FixedOrderResult out{BookDrawing::one_page(g, order), c.m() - cut.size};
  out.drawing.page_count = 2;
  for (int e = 0; e < g.edge_count(); ++e) out.drawing.pages[e] = cut.side[e];
  return out;
}

inline std::int64_t two_page_cr_fixed_order(const Multigraph& g, const CyclicOrder& order,
                                            const MaxCutOptions& opts = {}) {
  return two_page_fixed_order(g, order, opts).crossings;
}

struct OrderSearchOptions {
  /// Largest n searched exhaustively.
  int exact_limit = 11;
  /// Wall-clock budget in milliseconds; 0 means unlimited.
  double budget_ms = 0;
  int threads = 1;
};

/// A bracket together with the best drawing found.
struct BookSolveResult {
  SolveResult bracket;
  BookDrawing drawing;
};

namespace detail {

class Deadline {
 public:
  explicit Deadline(double budget_ms)
      : start_(std::chrono::steady_clock::now()), budget_ms_(budget_ms) {}
  bool expired() const { return budget_ms_ > 0 && elapsed_ms() > budget_ms_; }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
  double budget_ms_;
};

// Multiplicity matrix, row-major.
inline std::vector<int> mult_matrix(const Multigraph& g) {
  std::vector<int> m(static_cast<std::size_t>(g.n()) * g.n(), 0);
  for (const auto& e : g.entries()) m[e.u * g.n() + e.v] = m[e.v * g.n() + e.u] = e.mult;
  return m;
}

// Lower bound on the crossings of any 1-page drawing: a 1-page drawing
// without crossings is outerplanar, so it has at most 2n - 3 distinct pairs
// per component, and removing one pair per crossing gets there.
inline std::int64_t one_page_lower_bound(const Multigraph& g) {
  std::int64_t lb = 0;
  for (const auto& comp : g.components()) {
    auto h = g.induced(comp);
    std::int64_t excess = static_cast<std::int64_t>(h.entries().size()) - (2 * h.n() - 3);
    if (h.n() >= 2 && excess > 0) lb += excess;
  }
  return lb;
}

// Depth-first enumeration of canonical orders, split into independent
// subtrees by the choice of order[1]. Each subtree gets a fresh visitor from
// `make_visitor()`, with
//   bool step(const std::vector<Vertex>& order, int depth)  // false prunes
//   void leaf(const std::vector<Vertex>& order)
// Returns false when the deadline cut the enumeration short.
template <class MakeVisitor>
bool for_each_canonical_order(int n, int threads, const Deadline& deadline, MakeVisitor&& make_visitor) {
  std::atomic<bool> timed_out{false};
  auto run_subtree = [&](Vertex second) {
    auto visitor = make_visitor();
    std::vector<Vertex> order(n, 0);
    std::vector<bool> used(n, false);
    used[0] = true;
    std::int64_t ticks = 0;
    auto rec = [&](auto&& self, int depth) -> void {
      if (timed_out.load(std::memory_order_relaxed)) return;
      if ((++ticks & 1023) == 0 && deadline.expired()) {
        timed_out = true;
        return;
      }
      if (depth == n) {
        visitor.leaf(order);
        return;
      }
      for (Vertex w = 1; w < n; ++w) {
        if (used[w]) continue;
        if (depth == 1 && w != second) continue;
        if (depth == n - 1 && depth > 1 && w < order[1]) continue;
        order[depth] = w;
        used[w] = true;
        if (visitor.step(order, depth)) self(self, depth + 1);
        used[w] = false;
      }
    };
    rec(rec, 1);
  };
  if (n <= 2) {
    run_subtree(1);
    return !timed_out;
  }
  // order[1] = n-1 can never be smaller than the last position.
  std::atomic<Vertex> next{1};
  auto worker = [&]() {
    for (Vertex s; (s = next.fetch_add(1)) < n - 1;) run_subtree(s);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return !timed_out;
}

// Best (value, order) across workers: smaller value, then smaller order.
struct BestOrder {
  std::mutex mu;
  std::atomic<std::int64_t> value{std::numeric_limits<std::int64_t>::max()};
  std::vector<Vertex> order;

  void offer(std::int64_t v, const std::vector<Vertex>& o) {
    std::lock_guard lock(mu);
    if (v < value.load() || (v == value.load() && o < order)) {
      order = o;
      value = v;
    }
  }
};

inline SolveResult bracket_from(std::int64_t lower, std::int64_t upper, bool complete) {
  SolveResult r;
  r.upper = static_cast<int>(upper);
  r.lower = complete ? r.upper : static_cast<int>(std::min(lower, upper));
  r.status = r.lower == r.upper ? SolveStatus::exact : SolveStatus::bounds_only;
  return r;
}

}  // namespace detail

/// Minimum number of crossings over 1-page drawings (all vertices on one
/// face). Exhaustive for n <= opts.exact_limit within the budget; otherwise
/// the best order seen is an upper bound and the bracket is bounds-only.
inline BookSolveResult outerplanar_cr(const Multigraph& g, const OrderSearchOptions& opts = {}) {
  detail::Deadline deadline(opts.budget_ms);
  const int n = g.n();
  const auto mult = detail::mult_matrix(g);
  detail::BestOrder best;
  const CyclicOrder seed = CyclicOrder::identity(n).canonical();
  best.offer(count_crossings(BookDrawing::one_page(g, seed)), seed.vertices());

  // partial[d] counts crossings among chords with both ends at positions
  // <= d. Later vertices are appended after all of them, so those
  // crossings are final and partial[d] is a lower bound.
  struct Visitor {
    int n;
    const std::vector<int>* mult;
    detail::BestOrder* best;
    std::vector<std::int64_t> partial;

    bool step(const std::vector<Vertex>& order, int depth) {
      const Vertex w = order[depth];
      std::int64_t add = 0;
      for (int xi = 0; xi < depth; ++xi) {
        int mxw = (*mult)[order[xi] * n + w];
        if (mxw == 0) continue;
        // chords with one end strictly between x and w, the other before x
        for (int ai = xi + 1; ai < depth; ++ai)
          for (int bi = 0; bi < xi; ++bi) add += static_cast<std::int64_t>(mxw) * (*mult)[order[ai] * n + order[bi]];
      }
      partial[depth] = partial[depth - 1] + add;
      return partial[depth] <= best->value.load();
    }
    void leaf(const std::vector<Vertex>& order) {
      std::int64_t v = n >= 2 ? partial[n - 1] : 0;
      if (v <= best->value.load()) best->offer(v, order);
    }
  };

  bool complete = false;
  if (n <= 2) {
    complete = true;
  } else if (n <= opts.exact_limit) {
    complete = detail::for_each_canonical_order(n, opts.threads, deadline, [&] {
      return Visitor{n, &mult, &best, std::vector<std::int64_t>(n + 1, 0)};
    });
  } else {
    // Beyond the exhaustive range: improve the seed by moving single
    // vertices to other positions until nothing helps or time runs out.
    std::vector<Vertex> cur = best.order;
    for (bool improved = true; improved && !deadline.expired();) {
      improved = false;
      for (int from = 1; from < n && !improved; ++from)
        for (int to = 1; to < n && !improved; ++to) {
          if (from == to) continue;
          std::vector<Vertex> cand = cur;
          Vertex v = cand[from];
          cand.erase(cand.begin() + from);
          cand.insert(cand.begin() + to, v);
          CyclicOrder co = CyclicOrder(cand).canonical();
          auto val = count_crossings(BookDrawing::one_page(g, co));
          if (val < best.value.load()) {
            best.offer(val, co.vertices());
            cur = co.vertices();
            improved = true;
          }
        }
    }
  }

  BookSolveResult out{detail::bracket_from(detail::one_page_lower_bound(g), best.value.load(), complete),
                      BookDrawing::one_page(g, CyclicOrder(best.order))};
  out.bracket.certificate = book_certificate(out.drawing);
  out.bracket.stats.elapsed_ms = deadline.elapsed_ms();
  return out;
}

/// Minimum over canonical spine orders of the optimal 2-page drawing for
/// that order. Exhaustive for n <= opts.exact_limit within the budget.
inline BookSolveResult two_page_cr(const Multigraph& g, const OrderSearchOptions& opts = {},
                                   const MaxCutOptions& cut_opts = {}) {
  detail::Deadline deadline(opts.budget_ms);
  const int n = g.n();
  detail::BestOrder best;
  std::atomic<bool> inexact{false};

  auto value_of = [&](const CyclicOrder& o) -> std::int64_t {
    try {
      return two_page_cr_fixed_order(g, o, cut_opts);
    } catch (const MaxCutLimitExceeded&) {
      inexact = true;
      return one_to_two(g, o, cut_opts).crossings;
    }
  };
  const CyclicOrder seed = CyclicOrder::identity(n).canonical();
  best.offer(value_of(seed), seed.vertices());

  struct Visitor {
    std::function<std::int64_t(const CyclicOrder&)> value_of;
    detail::BestOrder* best;
    bool step(const std::vector<Vertex>&, int) { return best->value.load() > 0; }
    void leaf(const std::vector<Vertex>& order) {
      CyclicOrder o(order);
      std::int64_t v = value_of(o);
      if (v <= best->value.load()) best->offer(v, order);
    }
  };

  bool complete = n <= 2;
  if (!complete && n <= opts.exact_limit)
    complete = detail::for_each_canonical_order(n, opts.threads, deadline, [&] { return Visitor{value_of, &best}; });
  if (best.value.load() == 0) complete = true;
  complete = complete && !inexact;

  // A 2-page drawing is a plane drawing, so cr_lower applies.
  BookSolveResult out{detail::bracket_from(cr_lower(g), best.value.load(), complete), {}};
  CyclicOrder order(best.order);
  try {
    out.drawing = two_page_fixed_order(g, order, cut_opts).drawing;
  } catch (const MaxCutLimitExceeded&) {
    out.drawing = one_to_two(g, order, cut_opts).drawing;
  }
  out.bracket.certificate = book_certificate(out.drawing);
  out.bracket.stats.elapsed_ms = deadline.elapsed_ms();
  return out;
}

}  // namespace conecross
