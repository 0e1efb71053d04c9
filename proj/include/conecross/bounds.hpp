#pragma once

// Closed-form bounds on cone crossing numbers, evaluated exactly.
//
// Radicals never meet floating point in a comparison:
//   c >= k + sqrt(k/2)  <=>  c >= k  and  2(c - k)^2 >= k
//   c <= k + sqrt(3k)   <=>  c <= k  or   (c - k)^2 <= 3k
// Floating point appears only in conjecture_ratio, which is diagnostic.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conecross {

/// True iff c >= k + sqrt(k/2).
inline bool thm12_check(std::int64_t k, std::int64_t c) {
  if (k < 0 || c < 0) throw std::invalid_argument("k and c must be non-negative");
  if (c < k) return false;
  std::int64_t d = c - k;
  return 2 * d * d >= k;
}

/// Smallest integer c with thm12_check(k, c).
inline std::int64_t thm12_threshold(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  auto d = static_cast<std::int64_t>(std::sqrt(static_cast<double>(k) / 2.0));
  while (d > 0 && 2 * (d - 1) * (d - 1) >= k) --d;
  while (2 * d * d < k) ++d;
  return k + d;
}

/// Lower bound on cr(CG) for simple G with cr(G) >= k.
inline std::int64_t thm41_lower(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (k == 0) return 0;
  if (k == 1) return 3;
  if (k <= 3) return k + 3;
  if (k == 4) return k + 4;
  return k + 5;
}

/// True iff c <= k + sqrt(3k).
inline bool multigraph_upper_check(std::int64_t k, std::int64_t c) {
  if (k < 0 || c < 0) throw std::invalid_argument("k and c must be non-negative");
  if (c <= k) return true;
  std::int64_t d = c - k;
  return d * d <= 3 * k;
}

/// Largest integer c with multigraph_upper_check(k, c).
inline std::int64_t multigraph_upper(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  auto d = static_cast<std::int64_t>(std::sqrt(3.0 * static_cast<double>(k)));
  while ((d + 1) * (d + 1) <= 3 * k) ++d;
  while (d * d > 3 * k) --d;
  return k + d;
}

/// The r-fold fig1 multigraph: (cr of the graph, cr of its cone).
inline std::pair<std::int64_t, std::int64_t> multigraph_family_point(std::int64_t r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  return {3 * r * r, 3 * r * r + 3 * r};
}

/// Harary-Hill value Z(n).
inline std::int64_t harary_hill(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n % 2 == 0) return n * (n - 2) * (n - 2) * (n - 4) / 64;
  return (n - 1) * (n - 1) * (n - 3) * (n - 3) / 64;
}

/// Smallest n >= 1 with k <= Z(n); for k >= 1 this is the n with
/// Z(n-1) < k <= Z(n).
inline std::int64_t harary_hill_index(std::int64_t k) {
  std::int64_t n = 1;
  while (harary_hill(n) < k) ++n;
  return n;
}

/// Upper bound on phi_s(k) from the union of two complete graphs, valid if
/// the Harary-Hill conjecture holds.
struct HHPhiUpper {
  std::int64_t n = 0;
  std::int64_t n1 = 0;
  std::int64_t crG = 0;
  std::int64_t crCG = 0;
  std::int64_t phi_upper = 0;
  bool conditional = true;
};

inline HHPhiUpper hh_phi_upper(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  HHPhiUpper out;
  out.n = harary_hill_index(k);
  std::int64_t k1 = k - harary_hill(out.n - 1);
  out.n1 = harary_hill_index(k1);
  out.crG = harary_hill(out.n - 1) + harary_hill(out.n1);
  out.crCG = harary_hill(out.n) + harary_hill(out.n1 + 1);
  out.phi_upper = out.crCG - k;
  return out;
}

/// hh_phi_upper(k).phi_upper / (sqrt(2) k^(3/4)).
inline double conjecture_ratio(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  return static_cast<double>(hh_phi_upper(k).phi_upper) / (std::sqrt(2.0) * std::pow(static_cast<double>(k), 0.75));
}

/// The known values of f_s.
inline std::optional<std::int64_t> fs_known(std::int64_t k) {
  switch (k) {
    case 1: return 3;
    case 2: return 5;
    case 3: return 6;
    case 4: return 8;
    case 5: return 10;
    default: return std::nullopt;
  }
}

struct BoundRow {
  std::int64_t k = 0;
  std::string bound;
  std::int64_t value = 0;
  bool conditional = false;
};

/// All bounds at k. Integer forms: thm12_lower is the least admissible
/// cone value, multigraph_upper the largest value allowed by k + sqrt(3k).
inline std::vector<BoundRow> bound_report(std::int64_t k) {
  std::vector<BoundRow> rows{{k, "thm12_lower", thm12_threshold(k), false},
                             {k, "thm41_lower", thm41_lower(k), false},
                             {k, "multigraph_upper", multigraph_upper(k), false}};
  if (auto fs = fs_known(k)) rows.push_back({k, "fs_known", *fs, false});
  if (k >= 1) {
    auto hh = hh_phi_upper(k);
    rows.push_back({k, "hh_n", hh.n, true});
    rows.push_back({k, "hh_n1", hh.n1, true});
    rows.push_back({k, "hh_crG", hh.crG, true});
    rows.push_back({k, "hh_crCG", hh.crCG, true});
    rows.push_back({k, "hh_phi_upper", hh.phi_upper, true});
  }
  return rows;
}

}  // namespace conecross
