#pragma once

// Bipartite matching (Hopcroft-Karp), Koenig covers, and the matching
// numbers nu(l, Q) of a full l x l column/symbol grid with Q removed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "widecover/errors.hpp"

namespace widecover {

/// Subset Q of columns x symbols as a dense boolean grid. Cells are (col,
/// sym) with both coordinates in 1..size(); lookups outside the grid read
/// as absent so a grid can be queried against any larger window.
class GridSet {
 public:
  GridSet() = default;
  explicit GridSet(int size) : size_(size), cells_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0) {
    detail::require(size >= 0, "grid size must be non-negative");
  }

  /// [cols] x [syms] inside a grid of the given size.
  static GridSet rectangle(int size, int cols, int syms) {
    detail::require(cols >= 0 && syms >= 0, "rectangle sides must be non-negative");
    GridSet g(size);
    for (int c = 1; c <= cols; ++c)
      for (int s = 1; s <= syms; ++s) g.insert(c, s);
    return g;
  }

  /// Closed-down set whose column c holds symbols 1..heights[c-1].
  static GridSet from_column_heights(int size, std::span<const int> heights) {
    GridSet g(size);
    for (std::size_t c = 0; c < heights.size(); ++c)
      for (int s = 1; s <= heights[c]; ++s) g.insert(static_cast<int>(c) + 1, s);
    return g;
  }

  int size() const { return size_; }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int col, int sym) const {
    if (col < 1 || sym < 1 || col > size_ || sym > size_) return false;
    return cells_[index(col, sym)] != 0;
  }

  void insert(int col, int sym) {
    check(col, sym);
    auto& cell = cells_[index(col, sym)];
    if (!cell) ++count_;
    cell = 1;
  }

  void erase(int col, int sym) {
    check(col, sym);
    auto& cell = cells_[index(col, sym)];
    if (cell) --count_;
    cell = 0;
  }

  /// Cells in (col, sym) lexicographic order.
  std::vector<std::pair<int, int>> cells() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (int c = 1; c <= size_; ++c)
      for (int s = 1; s <= size_; ++s)
        if (contains(c, s)) out.emplace_back(c, s);
    return out;
  }

  /// Symbols adjacent to a column (N_Q(c)).
  std::vector<int> symbols_of(int col) const {
    std::vector<int> out;
    for (int s = 1; s <= size_; ++s)
      if (contains(col, s)) out.push_back(s);
    return out;
  }

  /// Columns adjacent to a symbol (N_Q(s)).
  std::vector<int> columns_of(int sym) const {
    std::vector<int> out;
    for (int c = 1; c <= size_; ++c)
      if (contains(c, sym)) out.push_back(c);
    return out;
  }

  /// Copy re-embedded in a grid of another size; cells that fall outside
  /// are a contract violation.
  GridSet resized(int new_size) const {
    GridSet g(new_size);
    for (auto [c, s] : cells()) g.insert(c, s);
    return g;
  }

  friend bool operator==(const GridSet& a, const GridSet& b) { return a.size_ == b.size_ && a.cells_ == b.cells_; }

 private:
  std::size_t index(int col, int sym) const {
    return static_cast<std::size_t>(col - 1) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(sym - 1);
  }
  void check(int col, int sym) const {
    detail::require(col >= 1 && sym >= 1 && col <= size_ && sym <= size_,
                    "cell (" + std::to_string(col) + "," + std::to_string(sym) + ") outside a grid of size " +
                        std::to_string(size_));
  }

  int size_ = 0;
  int count_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Simple bipartite graph with 0-based vertex indices on each side.
class BipartiteGraph {
 public:
  BipartiteGraph(int left_size, int right_size)
      : left_size_(left_size), right_size_(right_size), adj_(static_cast<std::size_t>(std::max(left_size, 0))) {
    detail::require(left_size >= 0 && right_size >= 0, "bipartite sides must be non-negative");
  }

  int left_size() const { return left_size_; }
  int right_size() const { return right_size_; }

  /// Repeated edges are ignored.
  void add_edge(int left, int right) {
    detail::require(left >= 0 && left < left_size_ && right >= 0 && right < right_size_,
                    "edge (" + std::to_string(left) + "," + std::to_string(right) + ") out of range");
    auto& row = adj_[static_cast<std::size_t>(left)];
    if (std::find(row.begin(), row.end(), right) == row.end()) {
      row.push_back(right);
      ++edge_count_;
    }
  }

  bool has_edge(int left, int right) const {
    if (left < 0 || left >= left_size_) return false;
    const auto& row = adj_[static_cast<std::size_t>(left)];
    return std::find(row.begin(), row.end(), right) != row.end();
  }

  const std::vector<int>& neighbors(int left) const { return adj_[static_cast<std::size_t>(left)]; }
  int edge_count() const { return edge_count_; }

 private:
  int left_size_;
  int right_size_;
  int edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
};

inline constexpr int kUnmatched = -1;

struct Matching {
  std::vector<int> mate_left;   // right partner of each left vertex, or kUnmatched
  std::vector<int> mate_right;  // left partner of each right vertex, or kUnmatched
  int size = 0;

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t l = 0; l < mate_left.size(); ++l)
      if (mate_left[l] != kUnmatched) out.emplace_back(static_cast<int>(l), mate_left[l]);
    return out;
  }
};

struct VertexCover {
  std::vector<int> left;
  std::vector<int> right;
  int size() const { return static_cast<int>(left.size() + right.size()); }
};

namespace detail {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        mate_left_(static_cast<std::size_t>(g.left_size()), kUnmatched),
        mate_right_(static_cast<std::size_t>(g.right_size()), kUnmatched),
        dist_(static_cast<std::size_t>(g.left_size()), 0) {}

  Matching run() {
    int size = 0;
    while (bfs()) {
      for (int l = 0; l < g_.left_size(); ++l)
        if (mate_left_[static_cast<std::size_t>(l)] == kUnmatched && dfs(l)) ++size;
    }
    return Matching{mate_left_, mate_right_, size};
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> queue;
    for (int l = 0; l < g_.left_size(); ++l) {
      if (mate_left_[static_cast<std::size_t>(l)] == kUnmatched) {
        dist_[static_cast<std::size_t>(l)] = 0;
        queue.push(l);
      } else {
        dist_[static_cast<std::size_t>(l)] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      int l = queue.front();
      queue.pop();
      for (int r : g_.neighbors(l)) {
        int next = mate_right_[static_cast<std::size_t>(r)];
        if (next == kUnmatched) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(next)] == kInf) {
          dist_[static_cast<std::size_t>(next)] = dist_[static_cast<std::size_t>(l)] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(int l) {
    for (int r : g_.neighbors(l)) {
      int next = mate_right_[static_cast<std::size_t>(r)];
      if (next == kUnmatched ||
          (dist_[static_cast<std::size_t>(next)] == dist_[static_cast<std::size_t>(l)] + 1 && dfs(next))) {
        mate_left_[static_cast<std::size_t>(l)] = r;
        mate_right_[static_cast<std::size_t>(r)] = l;
        return true;
      }
    }
    dist_[static_cast<std::size_t>(l)] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> dist_;
};

}  // namespace detail

inline Matching max_matching(const BipartiteGraph& g) { return detail::HopcroftKarp(g).run(); }

/// Koenig cover from the alternating-reachability set Z of the unmatched
/// left vertices: (left \ Z) u (right n Z).
inline VertexCover konig_cover(const BipartiteGraph& g, const Matching& m) {
  std::vector<char> left_seen(static_cast<std::size_t>(g.left_size()), 0);
  std::vector<char> right_seen(static_cast<std::size_t>(g.right_size()), 0);
  std::queue<int> queue;
  for (int l = 0; l < g.left_size(); ++l) {
    if (m.mate_left[static_cast<std::size_t>(l)] == kUnmatched) {
      left_seen[static_cast<std::size_t>(l)] = 1;
      queue.push(l);
    }
  }
  while (!queue.empty()) {
    int l = queue.front();
    queue.pop();
    for (int r : g.neighbors(l)) {
      if (right_seen[static_cast<std::size_t>(r)]) continue;
      right_seen[static_cast<std::size_t>(r)] = 1;
      int next = m.mate_right[static_cast<std::size_t>(r)];
      if (next != kUnmatched && !left_seen[static_cast<std::size_t>(next)]) {
        left_seen[static_cast<std::size_t>(next)] = 1;
        queue.push(next);
      }
    }
  }
  VertexCover cover;
  for (int l = 0; l < g.left_size(); ++l)
    if (!left_seen[static_cast<std::size_t>(l)]) cover.left.push_back(l);
  for (int r = 0; r < g.right_size(); ++r)
    if (right_seen[static_cast<std::size_t>(r)]) cover.right.push_back(r);
  return cover;
}

inline VertexCover konig_cover(const BipartiteGraph& g) { return konig_cover(g, max_matching(g)); }

/// The graph [l] x [l] - Q, columns on the left and symbols on the right
/// (vertex c_j is left index j-1, s_k is right index k-1).
inline BipartiteGraph grid_complement(int ell, const GridSet& q) {
  detail::require(ell >= 0, "l must be non-negative");
  BipartiteGraph g(ell, ell);
  for (int c = 1; c <= ell; ++c)
    for (int s = 1; s <= ell; ++s)
      if (!q.contains(c, s)) g.add_edge(c - 1, s - 1);
  return g;
}

inline int nu_ell_Q(int ell, const GridSet& q) { return max_matching(grid_complement(ell, q)).size; }

/// Closed form of nu(l, [p] x [q]) for 0 <= p <= q.
inline int nu_rect_formula(int ell, int p, int q) {
  detail::require(p >= 0 && p <= q, "rectangle formula needs 0 <= p <= q, got p=" + std::to_string(p) +
                                        " q=" + std::to_string(q));
  detail::require(ell >= 0, "l must be non-negative");
  if (ell <= p) return 0;
  if (ell <= q) return ell - p;
  if (ell <= p + q) return 2 * ell - p - q;
  return ell;
}

}  // namespace widecover
