#pragma once

// Fillings of Young diagrams. A partial filling with row- and
// column-injective entries is the same thing as a 2-matching of H(Y), so
// the largest partial filling gives nu^(2)(H(Y)).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "widecover/errors.hpp"
#include "widecover/hypergraph.hpp"
#include "widecover/partition.hpp"

namespace widecover {

/// Row-major cell entries; row i has at most a_i entries and 0 marks an
/// unfilled cell. Missing trailing cells also count as unfilled.
struct Filling {
  std::vector<std::vector<int>> rows;

  /// Empty filling shaped like y.
  static Filling blank(const Partition& y) {
    Filling f;
    for (int a : y.rows()) f.rows.emplace_back(static_cast<std::size_t>(a), 0);
    return f;
  }

  int at(int row, int col) const {
    if (row < 1 || static_cast<std::size_t>(row) > rows.size()) return 0;
    const auto& r = rows[static_cast<std::size_t>(row - 1)];
    return (col >= 1 && static_cast<std::size_t>(col) <= r.size()) ? r[static_cast<std::size_t>(col - 1)] : 0;
  }

  int filled() const {
    int n = 0;
    for (const auto& r : rows)
      for (int v : r) n += v != 0;
    return n;
  }

  friend bool operator==(const Filling&, const Filling&) = default;
};

struct CellRef {
  int row = 0;
  int col = 0;
  friend bool operator==(const CellRef&, const CellRef&) = default;
};

/// A value seen twice in the same row (line = row) or column (line = column).
struct Duplicate {
  int line = 0;
  int value = 0;
  friend bool operator==(const Duplicate&, const Duplicate&) = default;
};

struct ValidationReport {
  bool complete = false;
  std::vector<CellRef> range_violations;
  std::vector<Duplicate> row_duplicates;
  std::vector<Duplicate> column_duplicates;

  bool valid() const { return range_violations.empty() && row_duplicates.empty() && column_duplicates.empty(); }
  bool latin() const { return valid() && complete; }
};

namespace detail {
inline void check_shape(const Partition& y, const Filling& f) {
  require(static_cast<int>(f.rows.size()) <= y.num_rows(),
          "filling has " + std::to_string(f.rows.size()) + " rows, diagram has " + std::to_string(y.num_rows()));
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    int a = y.row(static_cast<int>(i) + 1);
    require(static_cast<int>(f.rows[i].size()) <= a, "filling row " + std::to_string(i + 1) + " has " +
                                                         std::to_string(f.rows[i].size()) +
                                                         " cells, diagram row has " + std::to_string(a));
  }
}
}  // namespace detail

inline ValidationReport validate_filling(const Partition& y, const Filling& f) {
  detail::check_shape(y, f);
  ValidationReport report;
  report.complete = f.filled() == y.size();

  for (int i = 1; i <= y.num_rows(); ++i) {
    std::vector<int> seen(static_cast<std::size_t>(y.row(i)) + 1, 0);
    for (int j = 1; j <= y.row(i); ++j) {
      int v = f.at(i, j);
      if (v == 0) continue;
      if (v < 0 || v > y.row(i)) {
        report.range_violations.push_back({i, j});
        continue;
      }
      if (seen[static_cast<std::size_t>(v)]++ == 1) report.row_duplicates.push_back({i, v});
    }
  }
  for (int j = 1; j <= y.width(); ++j) {
    std::vector<int> seen(static_cast<std::size_t>(y.width()) + 1, 0);
    for (int i = 1; i <= y.num_rows() && y.row(i) >= j; ++i) {
      int v = f.at(i, j);
      if (v < 1 || v > y.row(i)) continue;
      if (seen[static_cast<std::size_t>(v)]++ == 1) report.column_duplicates.push_back({j, v});
    }
  }
  return report;
}

inline constexpr int kMaxFillingWidth = 64;
inline constexpr int kMaxPartialFillingSize = 30;

namespace detail {

using SymbolMask = std::uint64_t;

inline SymbolMask first_symbols(int a) { return a >= 64 ? ~SymbolMask{0} : ((SymbolMask{1} << a) - 1); }

// Shared row/column bookkeeping for both fillers. Symbol s is bit s-1.
class FillingState {
 public:
  explicit FillingState(const Partition& y)
      : y_(y),
        filling_(Filling::blank(y)),
        row_used_(static_cast<std::size_t>(y.num_rows()), 0),
        col_used_(static_cast<std::size_t>(y.width()), 0) {
    for (int i = 1; i <= y.num_rows(); ++i)
      for (int j = 1; j <= y.row(i); ++j) cells_.push_back({i, j});
  }

  SymbolMask domain(const CellRef& c) const {
    return first_symbols(y_.row(c.row)) & ~row_used_[static_cast<std::size_t>(c.row - 1)] &
           ~col_used_[static_cast<std::size_t>(c.col - 1)];
  }

  void assign(const CellRef& c, int sym) {
    SymbolMask bit = SymbolMask{1} << (sym - 1);
    row_used_[static_cast<std::size_t>(c.row - 1)] |= bit;
    col_used_[static_cast<std::size_t>(c.col - 1)] |= bit;
    filling_.rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = sym;
  }

  void unassign(const CellRef& c, int sym) {
    SymbolMask bit = SymbolMask{1} << (sym - 1);
    row_used_[static_cast<std::size_t>(c.row - 1)] &= ~bit;
    col_used_[static_cast<std::size_t>(c.col - 1)] &= ~bit;
    filling_.rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = 0;
  }

  const std::vector<CellRef>& cells() const { return cells_; }
  const Filling& filling() const { return filling_; }
  const Partition& diagram() const { return y_; }

 private:
  const Partition& y_;
  Filling filling_;
  std::vector<SymbolMask> row_used_;
  std::vector<SymbolMask> col_used_;
  std::vector<CellRef> cells_;
};

inline void guard_width(const Partition& y) {
  if (y.width() > kMaxFillingWidth)
    throw CapacityError("fillings support rows of length at most " + std::to_string(kMaxFillingWidth));
}

class LatinSearch {
 public:
  explicit LatinSearch(const Partition& y) : state_(y), open_(state_.cells().size(), 1) {}

  std::optional<Filling> run() {
    if (solve(state_.cells().size())) return state_.filling();
    return std::nullopt;
  }

 private:
  // Every unfilled row/column must still be able to draw distinct symbols
  // from the union of its cells' domains.
  bool hall_ok() const {
    const Partition& y = state_.diagram();
    std::vector<SymbolMask> col_union(static_cast<std::size_t>(y.width()), 0);
    std::vector<int> col_open(static_cast<std::size_t>(y.width()), 0);
    for (std::size_t c = 0; c < open_.size(); ++c) {
      if (!open_[c]) continue;
      const CellRef& cell = state_.cells()[c];
      col_union[static_cast<std::size_t>(cell.col - 1)] |= state_.domain(cell);
      ++col_open[static_cast<std::size_t>(cell.col - 1)];
    }
    for (std::size_t j = 0; j < col_union.size(); ++j)
      if (std::popcount(col_union[j]) < col_open[j]) return false;
    return true;
  }

  bool solve(std::size_t remaining) {
    if (remaining == 0) return true;
    // Fewest candidates first, row-major among ties.
    std::size_t pick = open_.size();
    int fewest = 1 << 30;
    for (std::size_t c = 0; c < open_.size(); ++c) {
      if (!open_[c]) continue;
      int options = std::popcount(state_.domain(state_.cells()[c]));
      if (options == 0) return false;
      if (options < fewest) {
        fewest = options;
        pick = c;
      }
    }
    if (!hall_ok()) return false;

    const CellRef cell = state_.cells()[pick];
    SymbolMask dom = state_.domain(cell);
    open_[pick] = 0;
    while (dom) {
      int sym = std::countr_zero(dom) + 1;
      dom &= dom - 1;
      state_.assign(cell, sym);
      if (solve(remaining - 1)) return true;
      state_.unassign(cell, sym);
    }
    open_[pick] = 1;
    return false;
  }

  FillingState state_;
  std::vector<char> open_;
};

class PartialFillingSearch {
 public:
  explicit PartialFillingSearch(const Partition& y)
      : state_(y), open_(state_.cells().size(), 1), best_(Filling::blank(y)) {}

  std::pair<int, Filling> run() {
    recurse(0);
    return {best_size_, best_};
  }

 private:
  // Each column and each symbol contributes at most once per distinct
  // partner, so both sums bound how many open cells can still be filled.
  int bound() const {
    const Partition& y = state_.diagram();
    std::vector<SymbolMask> col_union(static_cast<std::size_t>(y.width()), 0);
    std::vector<int> col_open(static_cast<std::size_t>(y.width()), 0);
    std::vector<SymbolMask> row_union(static_cast<std::size_t>(y.num_rows()), 0);
    std::vector<int> sym_cols(static_cast<std::size_t>(y.width()), 0);
    std::vector<int> sym_rows(static_cast<std::size_t>(y.width()), 0);
    for (std::size_t c = 0; c < open_.size(); ++c) {
      if (!open_[c]) continue;
      const CellRef& cell = state_.cells()[c];
      SymbolMask dom = state_.domain(cell);
      col_union[static_cast<std::size_t>(cell.col - 1)] |= dom;
      row_union[static_cast<std::size_t>(cell.row - 1)] |= dom;
      if (dom) ++col_open[static_cast<std::size_t>(cell.col - 1)];
    }
    int by_column = 0;
    for (std::size_t j = 0; j < col_union.size(); ++j) {
      by_column += std::min(col_open[j], std::popcount(col_union[j]));
      for (SymbolMask m = col_union[j]; m; m &= m - 1) ++sym_cols[static_cast<std::size_t>(std::countr_zero(m))];
    }
    for (SymbolMask r : row_union)
      for (SymbolMask m = r; m; m &= m - 1) ++sym_rows[static_cast<std::size_t>(std::countr_zero(m))];
    int by_symbol = 0;
    for (std::size_t s = 0; s < sym_cols.size(); ++s) by_symbol += std::min(sym_cols[s], sym_rows[s]);
    return std::min(by_column, by_symbol);
  }

  void recurse(int current) {
    if (current > best_size_) {
      best_size_ = current;
      best_ = state_.filling();
    }
    if (best_size_ == state_.diagram().size()) return;

    std::size_t pick = open_.size();
    int fewest = 1 << 30;
    for (std::size_t c = 0; c < open_.size(); ++c) {
      if (!open_[c]) continue;
      int options = std::popcount(state_.domain(state_.cells()[c]));
      if (options > 0 && options < fewest) {
        fewest = options;
        pick = c;
      }
    }
    if (pick == open_.size()) return;
    if (current + bound() <= best_size_) return;

    const CellRef cell = state_.cells()[pick];
    SymbolMask dom = state_.domain(cell);
    open_[pick] = 0;
    while (dom) {
      int sym = std::countr_zero(dom) + 1;
      dom &= dom - 1;
      state_.assign(cell, sym);
      recurse(current + 1);
      state_.unassign(cell, sym);
      if (best_size_ == state_.diagram().size()) break;
    }
    if (best_size_ < state_.diagram().size()) recurse(current);  // leave the cell empty
    open_[pick] = 1;
  }

  FillingState state_;
  std::vector<char> open_;
  int best_size_ = 0;
  Filling best_;
};

}  // namespace detail

struct PartialFillingResult {
  int size = 0;
  Filling filling;
};

/// Largest row- and column-injective partial filling, i.e. nu^(2)(H(Y)).
inline PartialFillingResult max_partial_filling(const Partition& y) {
  detail::guard_width(y);
  if (y.size() > kMaxPartialFillingSize)
    throw CapacityError("maximum partial filling limited to |Y| <= " + std::to_string(kMaxPartialFillingSize));
  auto [size, filling] = detail::PartialFillingSearch(y).run();
  return {size, std::move(filling)};
}

/// A complete Latin filling, if the diagram has one.
inline std::optional<Filling> find_latin_filling(const Partition& y) {
  detail::guard_width(y);
  return detail::LatinSearch(y).run();
}

/// Latin filling -> the 2-matching {r_i c_j s_y(i,j)} of size |Y|.
inline std::vector<Triple> filling_to_matching(const Partition& y, const Filling& f) {
  ValidationReport report = validate_filling(y, f);
  if (!report.complete) {
    for (int i = 1; i <= y.num_rows(); ++i)
      for (int j = 1; j <= y.row(i); ++j)
        detail::require(f.at(i, j) != 0, "filling is not complete: cell (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") is empty");
  }
  if (!report.range_violations.empty()) {
    auto c = report.range_violations.front();
    throw ContractViolation("entry out of range at cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ")");
  }
  if (!report.row_duplicates.empty()) {
    auto d = report.row_duplicates.front();
    throw ContractViolation("row " + std::to_string(d.line) + " repeats " + std::to_string(d.value));
  }
  if (!report.column_duplicates.empty()) {
    auto d = report.column_duplicates.front();
    throw ContractViolation("column " + std::to_string(d.line) + " repeats " + std::to_string(d.value));
  }
  std::vector<Triple> m;
  for (int i = 1; i <= y.num_rows(); ++i)
    for (int j = 1; j <= y.row(i); ++j) m.push_back({i, j, f.at(i, j)});
  return m;
}

/// 2-matching of H(Y) with |Y| edges -> Latin filling y(i,j) = k.
inline Filling matching_to_filling(const Partition& y, const std::vector<Triple>& m) {
  auto text = [](const Triple& t) {
    return "(" + std::to_string(t.row) + "," + std::to_string(t.col) + "," + std::to_string(t.sym) + ")";
  };
  detail::require(static_cast<int>(m.size()) == y.size(), "matching has " + std::to_string(m.size()) +
                                                              " triples, diagram has " + std::to_string(y.size()) +
                                                              " cells");
  Filling f = Filling::blank(y);
  std::vector<std::vector<char>> sym_in_col(static_cast<std::size_t>(y.width()) + 1,
                                            std::vector<char>(static_cast<std::size_t>(y.width()) + 1, 0));
  std::vector<std::vector<char>> sym_in_row(static_cast<std::size_t>(y.num_rows()) + 1,
                                            std::vector<char>(static_cast<std::size_t>(y.width()) + 1, 0));
  for (const Triple& t : m) {
    bool edge = t.row >= 1 && t.row <= y.num_rows() && t.col >= 1 && t.col <= y.row(t.row) && t.sym >= 1 &&
                t.sym <= y.row(t.row);
    detail::require(edge, "triple " + text(t) + " is not an edge of H(Y)");
    auto& cell = f.rows[static_cast<std::size_t>(t.row - 1)][static_cast<std::size_t>(t.col - 1)];
    detail::require(cell == 0, "triple " + text(t) + " reuses the pair r" + std::to_string(t.row) + "c" +
                                   std::to_string(t.col));
    auto& rs = sym_in_row[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.sym)];
    detail::require(!rs, "triple " + text(t) + " reuses the pair r" + std::to_string(t.row) + "s" +
                             std::to_string(t.sym));
    auto& cs = sym_in_col[static_cast<std::size_t>(t.col)][static_cast<std::size_t>(t.sym)];
    detail::require(!cs, "triple " + text(t) + " reuses the pair c" + std::to_string(t.col) + "s" +
                             std::to_string(t.sym));
    cell = t.sym;
    rs = 1;
    cs = 1;
  }
  return f;
}

}  // namespace widecover
