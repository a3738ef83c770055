#pragma once

// Profiles of closed-down Q: the square side p, the offset q past which
// nu(l, Q) = l, and the run lengths of the +1 / +2 steps of l -> nu(l, Q)
// on (p, p+q]. Includes the closed-form nu, the sum identities, the |Q|
// lower bound and the shapes attaining it.

#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "widecover/bipartite.hpp"
#include "widecover/covers.hpp"
#include "widecover/errors.hpp"
#include "widecover/partition.hpp"

namespace widecover {

/// (p, p+q] splits into O_0, T_1, O_1, ..., O_{k-1}, T_k where nu grows by
/// one on each O-run and by two on each T-run. `ones[j]` is |O_j| for
/// 0 <= j < k and `twos[j-1]` is |T_j| for 1 <= j <= k.
struct Profile {
  int p = 0;
  int q = 0;
  std::vector<int> ones;
  std::vector<int> twos;

  int k() const { return static_cast<int>(twos.size()); }
  int I(int j) const { return ones.at(static_cast<std::size_t>(j)); }
  int II(int j) const { return twos.at(static_cast<std::size_t>(j - 1)); }

  /// Left-open, right-closed (lo, hi] for O_j.
  std::pair<int, int> o_interval(int j) const {
    int lo = p;
    for (int t = 0; t < j; ++t) lo += I(t);
    for (int t = 1; t <= j; ++t) lo += II(t);
    return {lo, lo + I(j)};
  }

  /// (lo, hi] for T_j.
  std::pair<int, int> t_interval(int j) const {
    int lo = p;
    for (int t = 0; t < j; ++t) lo += I(t);
    for (int t = 1; t < j; ++t) lo += II(t);
    return {lo, lo + II(j)};
  }

  /// p + I_0 + sum_{t<j} (II_t + I_t), the right end of O_{j-1}.
  int w(int j) const {
    int out = p + I(0);
    for (int t = 1; t < j; ++t) out += II(t) + I(t);
    return out;
  }

  friend bool operator==(const Profile&, const Profile&) = default;
};

inline std::string to_string(const Profile& prof) {
  std::ostringstream os;
  os << "{p=" << prof.p << ", q=" << prof.q << ", I=[";
  for (std::size_t t = 0; t < prof.ones.size(); ++t) os << (t ? "," : "") << prof.ones[t];
  os << "], II=[";
  for (std::size_t t = 0; t < prof.twos.size(); ++t) os << (t ? "," : "") << prof.twos[t];
  os << "]}";
  return os.str();
}

/// Largest p with [p] x [p] inside Q.
inline int square_side(const GridSet& q) {
  int p = 0;
  while (q.contains(p + 1, p + 1)) ++p;
  return p;
}

/// Empty Q gets the degenerate {0, 0, [], []}; otherwise Q must be closed
/// down and the nu sequence is computed by matching up to l = 2|Q|.
inline Profile extract_profile_allow_empty(const GridSet& q) {
  detail::require(is_closed_down(q), "profile needs a closed-down set");
  Profile prof;
  if (q.empty()) return prof;
  prof.p = square_side(q);

  const int horizon = std::max(2 * q.count(), prof.p + 1);
  std::vector<int> nu(static_cast<std::size_t>(horizon) + 1);
  for (int ell = 0; ell <= horizon; ++ell) nu[static_cast<std::size_t>(ell)] = nu_ell_Q(ell, q);
  detail::ensure(nu[static_cast<std::size_t>(horizon)] == horizon, "nu(l, Q) < l at l = 2|Q|");

  int last_deficient = 0;
  for (int ell = 0; ell <= horizon; ++ell)
    if (nu[static_cast<std::size_t>(ell)] < ell) last_deficient = ell;
  prof.q = last_deficient + 1 - prof.p;
  detail::ensure(prof.q >= prof.p, "q < p for a non-empty closed-down set");

  int run_step = 1;
  int run_length = 0;
  for (int ell = prof.p + 1; ell <= prof.p + prof.q; ++ell) {
    int step = nu[static_cast<std::size_t>(ell)] - nu[static_cast<std::size_t>(ell - 1)];
    detail::ensure(step == 1 || step == 2,
                   "nu(l, Q) - nu(l-1, Q) = " + std::to_string(step) + " at l = " + std::to_string(ell));
    if (step != run_step) {
      (run_step == 1 ? prof.ones : prof.twos).push_back(run_length);
      run_step = step;
      run_length = 0;
    }
    ++run_length;
  }
  detail::ensure(run_step == 2, "last run of (p, p+q] is not a +2 run");
  prof.twos.push_back(run_length);
  detail::ensure(prof.ones.size() == prof.twos.size(), "unbalanced O/T runs");
  return prof;
}

inline Profile extract_profile(const GridSet& q) {
  detail::require(is_closed_down(q), "profile needs a closed-down set");
  detail::require(!q.empty(), "profile needs a non-empty set");
  return extract_profile_allow_empty(q);
}

/// nu(l, Q) from the profile alone.
inline int nu_from_profile(const Profile& prof, int ell) {
  detail::require(ell >= 0, "l must be non-negative");
  if (ell <= prof.p) return 0;
  if (ell > prof.p + prof.q) return ell;
  int sum_ones = 0;
  int sum_twos = 0;
  for (int j = 0; j < prof.k(); ++j) {
    if (j > 0) {
      auto [lo, hi] = prof.t_interval(j);
      sum_twos += prof.II(j);
      if (ell > lo && ell <= hi) return 2 * ell - 2 * prof.p - sum_ones;
    }
    auto [lo, hi] = prof.o_interval(j);
    if (ell > lo && ell <= hi) return ell - prof.p + sum_twos;
    sum_ones += prof.I(j);
  }
  auto [lo, hi] = prof.t_interval(prof.k());
  detail::require(ell > lo && ell <= hi, "profile intervals do not cover l = " + std::to_string(ell));
  return 2 * ell - 2 * prof.p - sum_ones;
}

/// sum_j II_j * (p + I_0 + sum_{t<j} (II_t + I_t)).
inline long size_lower_bound(const Profile& prof) {
  long bound = 0;
  for (int j = 1; j <= prof.k(); ++j) bound += static_cast<long>(prof.II(j)) * prof.w(j);
  return bound;
}

struct CheckReport {
  std::vector<std::string> violations;
  int checks = 0;
  bool ok() const { return violations.empty(); }

  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition) violations.push_back(what);
  }
};

/// Sum identities, the |Q| bound, and closed-form nu against matching for
/// every l <= max(p+q+2, max_ell).
inline CheckReport profile_checks(const GridSet& q, int max_ell = 0) {
  Profile prof = extract_profile(q);
  CheckReport report;
  int sum_twos = std::accumulate(prof.twos.begin(), prof.twos.end(), 0);
  int sum_ones = std::accumulate(prof.ones.begin(), prof.ones.end(), 0);
  report.expect(sum_twos == prof.p, "sum II = " + std::to_string(sum_twos) + " != p = " + std::to_string(prof.p));
  report.expect(sum_ones == prof.q - prof.p,
                "sum I = " + std::to_string(sum_ones) + " != q - p = " + std::to_string(prof.q - prof.p));
  long bound = size_lower_bound(prof);
  report.expect(q.count() >= bound, "|Q| = " + std::to_string(q.count()) + " < bound " + std::to_string(bound));
  int top = std::max(prof.p + prof.q + 2, max_ell);
  for (int ell = 0; ell <= top; ++ell) {
    int by_formula = nu_from_profile(prof, ell);
    int by_matching = nu_ell_Q(ell, q);
    report.expect(by_formula == by_matching, "l = " + std::to_string(ell) + ": formula " +
                                                 std::to_string(by_formula) + " vs matching " +
                                                 std::to_string(by_matching));
  }
  return report;
}

/// The closed-down set attaining the |Q| lower bound for the given runs:
/// for block j (columns p - sum_{t<=j} II_t + 1 .. p - sum_{t<j} II_t) the
/// symbols 1 .. w_j. The grid has side p + q.
inline GridSet construct_extremal_Q(int p, int q, const std::vector<int>& ones, const std::vector<int>& twos) {
  detail::require(p >= 1 && p <= q, "extremal construction needs 1 <= p <= q");
  detail::require(!twos.empty() && ones.size() == twos.size(), "need k >= 1 O-runs and T-runs");
  detail::require(ones[0] >= 0, "I_0 must be non-negative");
  for (std::size_t t = 1; t < ones.size(); ++t) detail::require(ones[t] >= 1, "I_j must be positive for j >= 1");
  for (int len : twos) detail::require(len >= 1, "II_j must be positive");
  detail::require(std::accumulate(twos.begin(), twos.end(), 0) == p, "sum II must equal p");
  detail::require(std::accumulate(ones.begin(), ones.end(), 0) == q - p, "sum I must equal q - p");

  Profile prof{p, q, ones, twos};
  GridSet out(p + q);
  int top_col = p;
  for (int j = 1; j <= prof.k(); ++j) {
    int width = prof.w(j);
    for (int col = top_col - prof.II(j) + 1; col <= top_col; ++col)
      for (int sym = 1; sym <= width; ++sym) out.insert(col, sym);
    top_col -= prof.II(j);
  }
  return out;
}

inline GridSet construct_extremal_Q(const Profile& prof) {
  return construct_extremal_Q(prof.p, prof.q, prof.ones, prof.twos);
}

/// size_lower_bound(profile(Q)) + sum_i nu(a_i, Q); never exceeds the cover
/// cost |Q| + sum_i nu(a_i, Q).
inline long f_of_Q(const Partition& y, const GridSet& q) {
  Profile prof = extract_profile(q);
  long f = size_lower_bound(prof);
  for (int a : y.rows()) f += nu_ell_Q(a, q);
  return f;
}

/// All run layouts with 1 <= p <= q <= max_q, in a fixed order.
inline std::vector<Profile> enumerate_profiles(int max_q) {
  std::vector<Profile> out;
  // Cut (p, p+q] into alternating runs O_0, T_1, ..., O_{k-1}, T_k with
  // |O_0| >= 0 and every other run >= 1.
  for (int q = 1; q <= max_q; ++q) {
    for (int p = 1; p <= q; ++p) {
      std::vector<int> ones;
      std::vector<int> twos;
      std::function<void(int, int)> rec = [&](int ones_left, int twos_left) {
        // Next is an O-run (the first may be empty) followed by a T-run.
        int min_one = ones.empty() ? 0 : 1;
        for (int o = min_one; o <= ones_left; ++o) {
          for (int t = 1; t <= twos_left; ++t) {
            ones.push_back(o);
            twos.push_back(t);
            if (o == ones_left && t == twos_left) out.push_back({p, q, ones, twos});
            else rec(ones_left - o, twos_left - t);
            ones.pop_back();
            twos.pop_back();
          }
        }
      };
      rec(q - p, p);
    }
  }
  return out;
}

}  // namespace widecover
