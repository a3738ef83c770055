#pragma once

// H(Y) and exhaustive packing / covering searches on its k-expansions.
// These searches know nothing about diagrams beyond the edge list; they are
// the reference values the structured algorithms are checked against.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "widecover/errors.hpp"
#include "widecover/partition.hpp"

namespace widecover {

/// Edge r_row c_col s_sym, all 1-based.
struct Triple {
  int row = 0;
  int col = 0;
  int sym = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct TripartiteHypergraph {
  int rows = 0;   // |R| = m
  int width = 0;  // |C| = |S| = a_1
  std::vector<Triple> edges;
};

/// Edges r_i c_j s_k for every row i and 1 <= j, k <= a_i, in (i, j, k) order.
inline TripartiteHypergraph build_H(const Partition& y) {
  TripartiteHypergraph h{y.num_rows(), y.width(), {}};
  for (int i = 1; i <= y.num_rows(); ++i) {
    int a = y.row(i);
    for (int j = 1; j <= a; ++j)
      for (int k = 1; k <= a; ++k) h.edges.push_back({i, j, k});
  }
  return h;
}

enum class Side { row = 0, column = 1, symbol = 2 };

struct Vertex {
  Side side;
  int index;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Sorted k-subset of H's vertices (one vertex per chosen side).
using VertexSet = std::vector<Vertex>;

/// H^(k): vertices are the k-subsets of H-edges, and each H-edge becomes
/// the set of its k-subsets. `vertex_class` is the bitmask of sides a vertex
/// touches; every expanded edge holds exactly one vertex of each class.
struct ExpandedHypergraph {
  int k = 0;
  std::vector<VertexSet> vertices;
  std::vector<unsigned> vertex_class;
  std::vector<std::vector<int>> edges;  // vertex ids, ascending
  std::vector<unsigned> classes;        // distinct class masks, ascending
};

inline ExpandedHypergraph expand_k(const TripartiteHypergraph& h, int k) {
  detail::require(k >= 1 && k <= 3, "expansion order must be 1, 2 or 3");
  ExpandedHypergraph out;
  out.k = k;
  std::map<VertexSet, int> ids;
  for (unsigned mask = 1; mask < 8; ++mask)
    if (__builtin_popcount(mask) == k) out.classes.push_back(mask);

  for (const Triple& e : h.edges) {
    const Vertex corners[3] = {{Side::row, e.row}, {Side::column, e.col}, {Side::symbol, e.sym}};
    std::vector<int> expanded;
    for (unsigned mask : out.classes) {
      VertexSet vs;
      for (unsigned bit = 0; bit < 3; ++bit)
        if (mask & (1U << bit)) vs.push_back(corners[bit]);
      auto [it, inserted] = ids.try_emplace(vs, static_cast<int>(out.vertices.size()));
      if (inserted) {
        out.vertices.push_back(vs);
        out.vertex_class.push_back(mask);
      }
      expanded.push_back(it->second);
    }
    std::sort(expanded.begin(), expanded.end());
    out.edges.push_back(std::move(expanded));
  }
  return out;
}

struct PackingResult {
  int size = 0;
  std::vector<int> edges;  // indices into ExpandedHypergraph::edges
};

struct TransversalResult {
  int size = 0;
  std::vector<int> vertices;  // indices into ExpandedHypergraph::vertices
};

namespace detail {

class PackingSearch {
 public:
  explicit PackingSearch(const ExpandedHypergraph& g)
      : g_(g), used_(g.vertices.size(), 0), seen_(g.vertices.size(), 0) {}

  PackingResult run() {
    recurse(0);
    return {static_cast<int>(best_.size()), best_};
  }

 private:
  bool fits(const std::vector<int>& edge) const {
    return std::none_of(edge.begin(), edge.end(), [&](int v) { return used_[static_cast<std::size_t>(v)]; });
  }

  // Every edge of a packing takes a fresh vertex from each class, so the
  // number of free vertices of any one class still reachable bounds the gain.
  int bound(std::size_t from) {
    ++stamp_;
    std::vector<int> per_class(8, 0);
    int edges_left = 0;
    for (std::size_t e = from; e < g_.edges.size(); ++e) {
      const auto& edge = g_.edges[e];
      if (!fits(edge)) continue;
      ++edges_left;
      for (int v : edge) {
        if (seen_[static_cast<std::size_t>(v)] != stamp_) {
          seen_[static_cast<std::size_t>(v)] = stamp_;
          ++per_class[g_.vertex_class[static_cast<std::size_t>(v)]];
        }
      }
    }
    int b = edges_left;
    for (unsigned c : g_.classes) b = std::min(b, per_class[c]);
    return b;
  }

  void recurse(std::size_t from) {
    if (current_.size() > best_.size()) best_ = current_;
    if (from >= g_.edges.size()) return;
    if (static_cast<int>(current_.size()) + bound(from) <= static_cast<int>(best_.size())) return;

    std::size_t e = from;
    while (e < g_.edges.size() && !fits(g_.edges[e])) ++e;
    if (e == g_.edges.size()) return;

    const auto& edge = g_.edges[e];
    for (int v : edge) used_[static_cast<std::size_t>(v)] = 1;
    current_.push_back(static_cast<int>(e));
    recurse(e + 1);
    current_.pop_back();
    for (int v : edge) used_[static_cast<std::size_t>(v)] = 0;

    recurse(e + 1);
  }

  const ExpandedHypergraph& g_;
  std::vector<char> used_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  std::vector<int> current_;
  std::vector<int> best_;
};

class TransversalSearch {
 public:
  explicit TransversalSearch(const ExpandedHypergraph& g)
      : g_(g),
        hits_(g.edges.size(), 0),
        forbidden_(g.vertices.size(), 0),
        mark_(g.vertices.size(), 0),
        incident_(g.vertices.size()) {
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      for (int v : g.edges[e]) incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
  }

  TransversalResult run() {
    best_ = greedy();
    recurse();
    return {static_cast<int>(best_.size()), best_};
  }

 private:
  std::vector<int> greedy() const {
    std::vector<char> covered(g_.edges.size(), 0);
    std::vector<int> picked;
    std::size_t remaining = g_.edges.size();
    while (remaining > 0) {
      int best_v = -1;
      int best_gain = 0;
      for (std::size_t v = 0; v < g_.vertices.size(); ++v) {
        int gain = 0;
        for (int e : incident_[v]) gain += covered[static_cast<std::size_t>(e)] ? 0 : 1;
        if (gain > best_gain) {
          best_gain = gain;
          best_v = static_cast<int>(v);
        }
      }
      picked.push_back(best_v);
      for (int e : incident_[static_cast<std::size_t>(best_v)]) {
        if (!covered[static_cast<std::size_t>(e)]) {
          covered[static_cast<std::size_t>(e)] = 1;
          --remaining;
        }
      }
    }
    return picked;
  }

  void take(int v, int delta) {
    for (int e : incident_[static_cast<std::size_t>(v)]) hits_[static_cast<std::size_t>(e)] += delta;
  }

  // Uncovered edges that share no vertex need distinct transversal vertices.
  int lower_bound() {
    ++stamp_;
    int count = 0;
    for (std::size_t e = 0; e < g_.edges.size(); ++e) {
      if (hits_[e]) continue;
      const auto& edge = g_.edges[e];
      if (std::any_of(edge.begin(), edge.end(), [&](int v) { return mark_[static_cast<std::size_t>(v)] == stamp_; }))
        continue;
      for (int v : edge) mark_[static_cast<std::size_t>(v)] = stamp_;
      ++count;
    }
    return count;
  }

  void recurse() {
    int branch_edge = -1;
    int fewest = 1 << 30;
    for (std::size_t e = 0; e < g_.edges.size(); ++e) {
      if (hits_[e]) continue;
      int options = 0;
      for (int v : g_.edges[e]) options += forbidden_[static_cast<std::size_t>(v)] ? 0 : 1;
      if (options == 0) return;
      if (options < fewest) {
        fewest = options;
        branch_edge = static_cast<int>(e);
      }
    }
    if (branch_edge < 0) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + static_cast<std::size_t>(lower_bound()) >= best_.size()) return;

    std::vector<int> newly_forbidden;
    for (int v : g_.edges[static_cast<std::size_t>(branch_edge)]) {
      if (forbidden_[static_cast<std::size_t>(v)]) continue;
      current_.push_back(v);
      take(v, +1);
      recurse();
      take(v, -1);
      current_.pop_back();
      // Later siblings may assume v is out; any cover using v was just seen.
      forbidden_[static_cast<std::size_t>(v)] = 1;
      newly_forbidden.push_back(v);
    }
    for (int v : newly_forbidden) forbidden_[static_cast<std::size_t>(v)] = 0;
  }

  const ExpandedHypergraph& g_;
  std::vector<int> hits_;
  std::vector<char> forbidden_;
  std::vector<unsigned> mark_;
  unsigned stamp_ = 0;
  std::vector<std::vector<int>> incident_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace detail

/// Maximum matching of an expanded hypergraph by branch and bound.
inline PackingResult max_packing(const ExpandedHypergraph& g) { return detail::PackingSearch(g).run(); }

/// Minimum vertex cover (transversal) of an expanded hypergraph.
inline TransversalResult min_transversal(const ExpandedHypergraph& g) { return detail::TransversalSearch(g).run(); }

inline constexpr std::size_t kBruteForceEdgeLimit = 64;

namespace detail {
inline void guard_edges(const TripartiteHypergraph& h, std::size_t limit) {
  if (h.edges.size() > limit) {
    throw CapacityError("exhaustive search limited to " + std::to_string(limit) + " edges, hypergraph has " +
                        std::to_string(h.edges.size()));
  }
}
}  // namespace detail

/// nu^(k)(H) by exhaustive search.
inline int brute_nu(const TripartiteHypergraph& h, int k, std::size_t edge_limit = kBruteForceEdgeLimit) {
  detail::guard_edges(h, edge_limit);
  return max_packing(expand_k(h, k)).size;
}

/// tau^(k)(H) by exhaustive search.
inline int brute_tau(const TripartiteHypergraph& h, int k, std::size_t edge_limit = kBruteForceEdgeLimit) {
  detail::guard_edges(h, edge_limit);
  return min_transversal(expand_k(h, k)).size;
}

inline int brute_nu2(const TripartiteHypergraph& h) { return brute_nu(h, 2); }
inline int brute_tau2(const TripartiteHypergraph& h) { return brute_tau(h, 2); }

}  // namespace widecover
