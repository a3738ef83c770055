#pragma once

// Both directions of "wide <=> tau^(2)(H(Y)) = |Y|" made constructive:
//  * a non-wide diagram yields an explicit 2-cover smaller than |Y|;
//  * a 2-cover smaller than |Y| yields a row subset that fails dominance.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "widecover/bipartite.hpp"
#include "widecover/covers.hpp"
#include "widecover/errors.hpp"
#include "widecover/partition.hpp"
#include "widecover/profile.hpp"

namespace widecover {

struct ViolationData {
  RowSubset subset;  // rows of the original diagram
  Partition sub;     // the sub-diagram they form
  int k = 0;         // least prefix where sub falls below its conjugate
};

/// Uses the wideness witness (least cardinality, then lexicographic) and
/// its first failing prefix. A failing prefix k always has k <= a_k.
inline std::optional<ViolationData> minimal_violation(const Partition& y) {
  WidenessResult w = is_wide(y);
  if (w.wide) return std::nullopt;
  ViolationData v;
  v.subset = *w.witness;
  v.sub = sub_diagram(y, v.subset);
  auto k = first_dominance_failure(v.sub);
  detail::ensure(k.has_value(), "wideness witness dominates its conjugate");
  v.k = *k;
  detail::ensure(v.k <= v.sub.row(v.k), "minimal violation has k = " + std::to_string(v.k) + " > a_k = " +
                                            std::to_string(v.sub.row(v.k)));
  return v;
}

/// Size of the cover built from Q = [k] x [a_k] on y, summed over the row
/// classes T0..T3:  k a_k + sum_T1 (a_i - k) + sum_T2 (2 a_i - k - a_k) + sum_T3 a_i.
inline int rectangle_cover_size(const Partition& y, int k) {
  const int ak = y.row(k);
  int total = k * ak;
  for (int i = 1; i <= y.num_rows(); ++i) {
    int a = y.row(i);
    if (a > k + ak) {
      total += a;  // T3
    } else if (i <= k) {
      total += 2 * a - k - ak;  // T2
    } else if (a > k) {
      total += a - k;  // T1
    }
    // T0 rows (i > k, a_i <= k) contribute nothing.
  }
  return total;
}

struct NonwideCover {
  ViolationData violation;
  PairCover cover;      // a 2-cover of H(Z)
  int sub_cover = 0;    // size of its part covering H(sub-diagram)
};

/// Cover of H(Z) smaller than |Z| for a non-wide Z: on the violating
/// sub-diagram take Q = [k] x [a_k] plus per-row Koenig covers, then cover
/// the remaining rows of Z with their own row-column pairs.
inline NonwideCover cover_witness_for_nonwide(const Partition& z) {
  auto violation = minimal_violation(z);
  detail::require(violation.has_value(), "diagram " + z.to_string() + " is wide; no cover below |Z| exists");

  const Partition& sub = violation->sub;
  const int k = violation->k;
  GridSet q = GridSet::rectangle(sub.width(), k, sub.row(k));
  PairCover sub_cover = cover_from_Q(sub, q);
  detail::ensure(sub_cover.size() == rectangle_cover_size(sub, k), "rectangle cover size mismatch");
  detail::ensure(sub_cover.size() < sub.size(), "rectangle cover is not smaller than the sub-diagram");

  NonwideCover out{*violation, PairCover(z.width()), sub_cover.size()};
  for (auto [c, s] : sub_cover.cs.cells()) out.cover.cs.insert(c, s);
  const auto& rows = violation->subset.indices;
  for (auto [r, c] : sub_cover.rc) out.cover.rc.insert({rows[static_cast<std::size_t>(r - 1)], c});
  for (auto [r, s] : sub_cover.rs) out.cover.rs.insert({rows[static_cast<std::size_t>(r - 1)], s});
  for (int i = 1; i <= z.num_rows(); ++i) {
    if (violation->subset.contains(i)) continue;
    for (int j = 1; j <= z.row(i); ++j) out.cover.rc.insert({i, j});
  }
  return out;
}

struct DominanceWitness {
  RowSubset subset;    // rows of Z_j
  int block = 0;       // the j in Z_j
  Profile profile;     // profile of the normalized Q
  PairCover normalized;
};

/// Row classes of Y relative to a profile: D (a_i <= p), A_{O_j}, A_{T_j}
/// and U (a_i > p + q). Rows keep their 1-based index order.
struct RowClasses {
  std::vector<int> low;                  // D
  std::vector<std::vector<int>> ones;    // A_{O_0} .. A_{O_{k-1}}
  std::vector<std::vector<int>> twos;    // A_{T_1} .. A_{T_k}
  std::vector<int> high;                 // U
};

inline RowClasses classify_rows(const Partition& y, const Profile& prof) {
  RowClasses rc;
  rc.ones.resize(static_cast<std::size_t>(prof.k()));
  rc.twos.resize(static_cast<std::size_t>(prof.k()));
  for (int i = 1; i <= y.num_rows(); ++i) {
    int a = y.row(i);
    if (a <= prof.p) {
      rc.low.push_back(i);
      continue;
    }
    if (a > prof.p + prof.q) {
      rc.high.push_back(i);
      continue;
    }
    bool placed = false;
    for (int j = 0; j < prof.k() && !placed; ++j) {
      auto [olo, ohi] = prof.o_interval(j);
      if (a > olo && a <= ohi) {
        rc.ones[static_cast<std::size_t>(j)].push_back(i);
        placed = true;
      }
      auto [tlo, thi] = prof.t_interval(j + 1);
      if (!placed && a > tlo && a <= thi) {
        rc.twos[static_cast<std::size_t>(j)].push_back(i);
        placed = true;
      }
    }
    detail::ensure(placed, "row length " + std::to_string(a) + " falls in no profile interval");
  }
  return rc;
}

/// Normalizes P to a closed-down Q, takes its profile, and scans
/// Z_j = D u A_{O_0..j-1} u A_{T_1..j} for j = 1..k, returning the first
/// whose first II_j rows are shorter in total than its first II_j columns.
inline DominanceWitness nonwide_witness_from_cover(const Partition& y, const PairCover& p) {
  detail::require(validate_2cover(y, p), "input is not a 2-cover of H(Y)");
  detail::require(p.size() < y.size(), "cover size " + std::to_string(p.size()) + " is not below |Y| = " +
                                           std::to_string(y.size()));
  DominanceWitness out;
  out.normalized = normalize_closed_down(p, y);
  const GridSet& q = out.normalized.cs;
  detail::ensure(!q.empty(), "a cover below |Y| has an empty column/symbol part");
  out.profile = extract_profile(q);
  RowClasses classes = classify_rows(y, out.profile);

  std::vector<int> rows = classes.low;
  for (int j = 1; j <= out.profile.k(); ++j) {
    const auto& o_prev = classes.ones[static_cast<std::size_t>(j - 1)];
    const auto& t_cur = classes.twos[static_cast<std::size_t>(j - 1)];
    rows.insert(rows.end(), o_prev.begin(), o_prev.end());
    rows.insert(rows.end(), t_cur.begin(), t_cur.end());
    std::sort(rows.begin(), rows.end());

    const int width = out.profile.II(j);
    int row_sum = 0;
    int col_sum = 0;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      int a = y.row(rows[t]);
      if (static_cast<int>(t) < width) row_sum += a;
      col_sum += std::min(a, width);
    }
    if (row_sum < col_sum) {
      out.subset = RowSubset(rows);
      out.block = j;
      return out;
    }
  }
  throw InternalConsistencyError("no Z_j fails dominance for cover of size " + std::to_string(p.size()) +
                                 " on " + y.to_string());
}

}  // namespace widecover
