#pragma once

// Young diagrams as integer partitions: canonical form, conjugation,
// dominance, row sub-diagrams, wideness and enumeration.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <iterator>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "widecover/errors.hpp"

namespace widecover {

/// A Young diagram stored as its non-increasing list of positive row lengths.
/// Rows are addressed 1-based in the public API (row(1) is the longest).
class Partition {
 public:
  Partition() = default;

  /// Sorts into non-increasing order and drops zero parts.
  explicit Partition(std::vector<int> parts) : rows_(std::move(parts)) {
    for (int part : rows_) {
      detail::require(part >= 0, "partition parts must be non-negative, got " + std::to_string(part));
    }
    std::sort(rows_.begin(), rows_.end(), std::greater<>());
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> rows() const { return rows_; }
  const std::vector<int>& parts() const { return rows_; }

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int size() const { return size_; }
  bool empty() const { return rows_.empty(); }

  /// a_i for 1 <= i <= m; rows past the end read as zero, matching the
  /// zero-padding convention used by dominance.
  int row(int i) const {
    detail::require(i >= 1, "row index must be >= 1");
    return i <= num_rows() ? rows_[static_cast<std::size_t>(i - 1)] : 0;
  }

  /// a_1, or 0 for the empty diagram.
  int width() const { return rows_.empty() ? 0 : rows_.front(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(rows_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

/// Sorted, duplicate-free set of 1-based row indices.
struct RowSubset {
  std::vector<int> indices;

  RowSubset() = default;
  explicit RowSubset(std::vector<int> idx) : indices(std::move(idx)) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  }
  RowSubset(std::initializer_list<int> idx) : RowSubset(std::vector<int>(idx)) {}

  std::size_t size() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
  bool contains(int i) const { return std::binary_search(indices.begin(), indices.end(), i); }

  friend bool operator==(const RowSubset&, const RowSubset&) = default;
};

/// Accepts integers separated by commas and/or whitespace. An empty or
/// all-separator string is the empty partition.
inline Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string token(text.substr(pos, end - pos));
    pos = end;

    std::size_t digits_from = (token[0] == '+' || token[0] == '-') ? 1 : 0;
    bool numeric = digits_from < token.size() &&
                   std::all_of(token.begin() + static_cast<std::ptrdiff_t>(digits_from), token.end(),
                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!numeric) throw ParseError("not an integer: '" + token + "'");
    if (token[0] == '-') {
      // "-0" is harmless but still rejected: negative syntax is never a part.
      throw ParseError("negative part: '" + token + "'");
    }
    if (token.size() - digits_from > 9) throw ParseError("part too large: '" + token + "'");
    parts.push_back(std::stoi(token));
  }
  return Partition(std::move(parts));
}

/// b_j = |{i : a_i >= j}|.
inline Partition conjugate(const Partition& y) {
  std::vector<int> cols(static_cast<std::size_t>(y.width()), 0);
  for (int a : y.rows()) {
    for (int j = 0; j < a; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

/// Prefix-sum dominance; both sides are padded with zero parts.
inline bool dominates(const Partition& x, const Partition& y) {
  detail::require(x.size() == y.size(), "dominance compares partitions of equal size, got " +
                                            std::to_string(x.size()) + " and " + std::to_string(y.size()));
  int len = std::max(x.num_rows(), y.num_rows());
  int sx = 0;
  int sy = 0;
  for (int k = 1; k <= len; ++k) {
    sx += x.row(k);
    sy += y.row(k);
    if (sx < sy) return false;
  }
  return true;
}

inline Partition sub_diagram(const Partition& y, const RowSubset& s) {
  std::vector<int> rows;
  rows.reserve(s.size());
  for (int i : s.indices) {
    detail::require(i >= 1 && i <= y.num_rows(),
                    "row index " + std::to_string(i) + " out of range for a diagram with " +
                        std::to_string(y.num_rows()) + " rows");
    rows.push_back(y.row(i));
  }
  return Partition(std::move(rows));
}

/// Smallest k with sum_{i<=k} a_i(z) < sum_{i<=k} b_i(z), if any.
inline std::optional<int> first_dominance_failure(const Partition& z) {
  Partition zc = conjugate(z);
  int len = std::max(z.num_rows(), zc.num_rows());
  int sa = 0;
  int sb = 0;
  for (int k = 1; k <= len; ++k) {
    sa += z.row(k);
    sb += zc.row(k);
    if (sa < sb) return k;
  }
  return std::nullopt;
}

struct WidenessResult {
  bool wide = true;
  std::optional<RowSubset> witness;
};

/// Checks every row subset by enumerating how many rows of each distinct
/// length are taken; subsets with the same length multiset give the same
/// sub-diagram. The witness is the violating subset of least cardinality,
/// ties broken lexicographically on sorted indices.
inline WidenessResult is_wide(const Partition& y) {
  struct Group {
    int length;
    int first;  // 1-based index of the first row with this length
    int count;
  };
  std::vector<Group> groups;
  for (int i = 1; i <= y.num_rows(); ++i) {
    if (groups.empty() || groups.back().length != y.row(i)) {
      groups.push_back({y.row(i), i, 0});
    }
    ++groups.back().count;
  }

  WidenessResult result;
  std::vector<int> take(groups.size(), 0);
  std::vector<int> rows;
  while (true) {
    rows.clear();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      rows.insert(rows.end(), static_cast<std::size_t>(take[g]), groups[g].length);
    }
    if (first_dominance_failure(Partition(rows))) {
      std::vector<int> idx;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        for (int t = 0; t < take[g]; ++t) idx.push_back(groups[g].first + t);
      }
      const auto& best = result.witness;
      if (!best || idx.size() < best->size() || (idx.size() == best->size() && idx < best->indices)) {
        result.wide = false;
        result.witness = RowSubset(std::move(idx));
      }
    }

    std::size_t g = 0;
    while (g < groups.size() && take[g] == groups[g].count) take[g++] = 0;
    if (g == groups.size()) break;
    ++take[g];
  }
  return result;
}

/// Forward range over the partitions of n in reverse lexicographic order,
/// starting at (n) and ending at (1,...,1). n = 0 yields one empty partition.
class PartitionRange {
 public:
  explicit PartitionRange(int n) : n_(n) { detail::require(n >= 0, "cannot partition a negative number"); }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    explicit iterator(int n) : done_(false) {
      if (n > 0) parts_.push_back(n);
      current_ = Partition(parts_);
    }

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.done_ || b.done_) return a.done_ == b.done_;
      return a.parts_ == b.parts_;
    }

   private:
    void advance() {
      // Rightmost part larger than one gets decremented; everything after it
      // is refilled greedily with parts no larger than the new value.
      int remainder = 0;
      while (!parts_.empty() && parts_.back() == 1) {
        ++remainder;
        parts_.pop_back();
      }
      if (parts_.empty()) {
        done_ = true;
        return;
      }
      int cap = --parts_.back();
      ++remainder;
      while (remainder > 0) {
        int part = std::min(cap, remainder);
        parts_.push_back(part);
        remainder -= part;
      }
      current_ = Partition(parts_);
    }

    std::vector<int> parts_;
    Partition current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for (const Partition& p : PartitionRange(n)) out.push_back(p);
  return out;
}

/// All partitions with |Y| <= max_n, grouped by n ascending.
inline std::vector<Partition> partitions_up_to(int max_n, int min_n = 0) {
  std::vector<Partition> out;
  for (int n = std::max(min_n, 0); n <= max_n; ++n) {
    for (const Partition& p : PartitionRange(n)) out.push_back(p);
  }
  return out;
}

/// Visits partitions of `total` with at most `max_parts` parts, each at most
/// `max_part`, in reverse lexicographic order. The visitor gets the parts
/// (non-increasing, no zeros).
inline void for_each_partition_in_box(int total, int max_parts, int max_part,
                                      const std::function<void(std::span<const int>)>& visit) {
  if (total < 0 || max_parts < 0 || max_part < 0) return;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    if (static_cast<int>(parts.size()) == max_parts) return;
    int slots = max_parts - static_cast<int>(parts.size());
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      if (static_cast<long>(part) * slots < remaining) break;
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(total, max_part);
}

}  // namespace widecover
