#pragma once

// 2-covers of H(Y): validation, the row-column cover, shifting towards a
// closed-down column/symbol part, covers synthesized from a chosen Q, and
// the exact 2-cover number.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "widecover/bipartite.hpp"
#include "widecover/errors.hpp"
#include "widecover/partition.hpp"

namespace widecover {

using IndexPair = std::pair<int, int>;

/// Pairs from (R x C) u (R x S) u (C x S). `rc` holds (row, col), `rs` holds
/// (row, sym) and `cs` is Q(P), the column/symbol part.
struct PairCover {
  std::set<IndexPair> rc;
  std::set<IndexPair> rs;
  GridSet cs;

  PairCover() = default;
  explicit PairCover(int width) : cs(width) {}

  int size() const { return static_cast<int>(rc.size() + rs.size()) + cs.count(); }

  friend bool operator==(const PairCover& a, const PairCover& b) {
    return a.rc == b.rc && a.rs == b.rs && a.cs == b.cs;
  }
};

/// L_t: rows whose length is below t.
struct LowRowSet {
  int threshold = 0;
  std::set<int> rows;
  bool contains(int row) const { return rows.count(row) != 0; }
};

inline LowRowSet low_rows(const Partition& y, int t) {
  LowRowSet out{t, {}};
  for (int i = 1; i <= y.num_rows(); ++i)
    if (y.row(i) < t) out.rows.insert(i);
  return out;
}

/// Every edge r_i c_j s_k of H(Y) contains a pair of P.
inline bool validate_2cover(const Partition& y, const PairCover& p) {
  for (int i = 1; i <= y.num_rows(); ++i) {
    int a = y.row(i);
    for (int j = 1; j <= a; ++j) {
      if (p.rc.count({i, j})) continue;
      for (int k = 1; k <= a; ++k) {
        if (!p.rs.count({i, k}) && !p.cs.contains(j, k)) return false;
      }
    }
  }
  return true;
}

/// {r_i c_j : j <= a_i}, a cover of size |Y|.
inline PairCover trivial_cover(const Partition& y) {
  PairCover p(y.width());
  for (int i = 1; i <= y.num_rows(); ++i)
    for (int j = 1; j <= y.row(i); ++j) p.rc.insert({i, j});
  return p;
}

namespace detail {
inline void check_cover_indices(const Partition& y, const PairCover& p) {
  require(p.cs.size() == y.width(), "cover grid size " + std::to_string(p.cs.size()) + " differs from a_1 = " +
                                        std::to_string(y.width()));
  for (const auto* part : {&p.rc, &p.rs}) {
    for (auto [row, other] : *part) {
      require(row >= 1 && row <= y.num_rows() && other >= 1 && other <= y.width(),
              "cover pair (" + std::to_string(row) + "," + std::to_string(other) + ") out of range");
    }
  }
}
}  // namespace detail

enum class ShiftAxis { column, symbol };

/// phi_{x_i, x_j} for i < j on the chosen side. On the column side, with
/// Q = P n (C x S), W = P n (R x C) and L_j the rows shorter than j:
///   c_i gets N_Q(c_i) u N_Q(c_j),        c_j gets N_Q(c_i) n N_Q(c_j),
///   c_i gets N_W(c_i) n (N_W(c_j) u L_j), c_j gets N_W(c_j) u (N_W(c_i) \ L_j).
/// The symbol side is the mirror image with W = P n (R x S). Pairs not
/// touching x_i or x_j are kept.
inline PairCover shift(const PairCover& p, const Partition& y, ShiftAxis axis, int i, int j) {
  detail::require(i >= 1 && i < j && j <= p.cs.size(),
                  "shift needs 1 <= i < j <= a_1, got i=" + std::to_string(i) + " j=" + std::to_string(j));
  const int width = p.cs.size();
  const bool by_column = axis == ShiftAxis::column;
  auto in_q = [&](int x, int other) { return by_column ? p.cs.contains(x, other) : p.cs.contains(other, x); };

  PairCover out = p;
  std::vector<int> q_i;
  std::vector<int> q_j;
  for (int other = 1; other <= width; ++other) {
    bool hi = in_q(i, other);
    bool hj = in_q(j, other);
    if (hi || hj) q_i.push_back(other);
    if (hi && hj) q_j.push_back(other);
    if (by_column) {
      out.cs.erase(i, other);
      out.cs.erase(j, other);
    } else {
      out.cs.erase(other, i);
      out.cs.erase(other, j);
    }
  }
  for (int other : q_i) by_column ? out.cs.insert(i, other) : out.cs.insert(other, i);
  for (int other : q_j) by_column ? out.cs.insert(j, other) : out.cs.insert(other, j);

  const std::set<IndexPair>& w = by_column ? p.rc : p.rs;
  std::set<IndexPair>& w_out = by_column ? out.rc : out.rs;
  LowRowSet low = low_rows(y, j);
  std::set<int> rows_i;
  std::set<int> rows_j;
  for (auto [row, x] : w) {
    if (x == i) rows_i.insert(row);
    if (x == j) rows_j.insert(row);
  }
  for (int row : rows_i) w_out.erase({row, i});
  for (int row : rows_j) w_out.erase({row, j});
  for (int row : rows_i)
    if (rows_j.count(row) || low.contains(row)) w_out.insert({row, i});
  for (int row : rows_j) w_out.insert({row, j});
  for (int row : rows_i)
    if (!low.contains(row)) w_out.insert({row, j});
  return out;
}

/// sum_i i * (|N_Q(c_i)| + |N_Q(s_i)|).
inline long potential_f(const GridSet& q) {
  long f = 0;
  for (auto [c, s] : q.cells()) f += c + s;
  return f;
}

inline bool is_closed_down(const GridSet& q) {
  for (auto [c, s] : q.cells()) {
    if (c > 1 && !q.contains(c - 1, s)) return false;
    if (s > 1 && !q.contains(c, s - 1)) return false;
  }
  return true;
}

struct ShiftStep {
  ShiftAxis axis;
  int i;
  int j;
  const PairCover& before;
  const PairCover& after;
};

using ShiftObserver = std::function<void(const ShiftStep&)>;

/// Repeated sweeps (all column pairs i < j ascending, then all symbol
/// pairs) until a sweep leaves Q unchanged. The observer sees every shift.
inline PairCover normalize_closed_down(const PairCover& p, const Partition& y, const ShiftObserver& observer) {
  detail::check_cover_indices(y, p);
  detail::require(validate_2cover(y, p), "normalization needs a 2-cover of H(Y)");
  const int width = p.cs.size();
  PairCover current = p;
  while (true) {
    bool q_changed = false;
    for (ShiftAxis axis : {ShiftAxis::column, ShiftAxis::symbol}) {
      for (int i = 1; i <= width; ++i) {
        for (int j = i + 1; j <= width; ++j) {
          PairCover next = shift(current, y, axis, i, j);
          if (observer) observer(ShiftStep{axis, i, j, current, next});
          if (!(next.cs == current.cs)) q_changed = true;
          current = std::move(next);
        }
      }
    }
    if (!q_changed) break;
  }
  detail::ensure(is_closed_down(current.cs), "shift-stable column/symbol part is not closed down");
  return current;
}

inline PairCover normalize_closed_down(const PairCover& p, const Partition& y) {
  return normalize_closed_down(p, y, nullptr);
}

/// Q together with, for every row i, r_i times a Koenig cover of
/// [a_i] x [a_i] - Q. Size |Q| + sum_i nu(a_i, Q).
inline PairCover cover_from_Q(const Partition& y, const GridSet& q) {
  PairCover p;
  p.cs = q;
  for (int i = 1; i <= y.num_rows(); ++i) {
    BipartiteGraph g = grid_complement(y.row(i), q);
    VertexCover z = konig_cover(g);
    for (int col : z.left) p.rc.insert({i, col + 1});
    for (int sym : z.right) p.rs.insert({i, sym + 1});
  }
  return p;
}

/// |Q| + sum_i nu(a_i, Q), evaluating each distinct row length once.
inline int cover_cost(const Partition& y, const GridSet& q) {
  int cost = q.count();
  int last_len = -1;
  int last_nu = 0;
  for (int a : y.rows()) {
    if (a != last_len) {
      last_len = a;
      last_nu = nu_ell_Q(a, q);
    }
    cost += last_nu;
  }
  return cost;
}

inline constexpr int kMaxTau2Size = 40;

struct Tau2Result {
  int value = 0;
  GridSet q_opt;
  PairCover p_opt;
};

/// tau^(2)(H(Y)) as the minimum of |Q| + sum_i nu(a_i, Q) over closed-down Q
/// in the a_1 x a_1 grid. Only |Q| < running best can improve, so shapes
/// are visited by size and the search stops once |Q| reaches the best.
/// Ties go to the smallest |Q|, then to the lexicographically smallest cell
/// list.
inline Tau2Result tau2_exact(const Partition& y) {
  if (y.size() > kMaxTau2Size)
    throw CapacityError("tau2_exact limited to |Y| <= " + std::to_string(kMaxTau2Size));
  const int width = y.width();
  Tau2Result result;
  result.q_opt = GridSet(width);
  result.value = cover_cost(y, result.q_opt);
  for (int q_size = 1; q_size < result.value; ++q_size) {
    for_each_partition_in_box(q_size, width, width, [&](std::span<const int> heights) {
      GridSet q = GridSet::from_column_heights(width, heights);
      int cost = cover_cost(y, q);
      if (cost < result.value) {
        result.value = cost;
        result.q_opt = std::move(q);
      }
    });
  }
  result.p_opt = cover_from_Q(y, result.q_opt);
  detail::ensure(result.p_opt.size() == result.value, "synthesized cover size differs from its cost");
  return result;
}

}  // namespace widecover
