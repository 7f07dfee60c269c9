#pragma once

#include <algorithm>
#include <climits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aiii/error.hpp"
#include "aiii/partition.hpp"

namespace aiii {

// Straight-shape tableau with distinct integer entries (not necessarily 1..n),
// strictly increasing along rows and down columns.
class StandardTableau {
public:
  using Rows = std::vector<std::vector<int>>;

  StandardTableau() = default;
  explicit StandardTableau(Rows rows) : rows_(std::move(rows)) { validate(); }

  // Vertical tableau on the given entries.
  static StandardTableau column(std::vector<int> entries) {
    std::sort(entries.begin(), entries.end());
    Rows rows;
    for (int x : entries) rows.push_back({x});
    return StandardTableau(std::move(rows));
  }

  const Rows& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  int size() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
  }

  Partition shape() const {
    std::vector<int> lens;
    for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
    return Partition(std::move(lens));
  }

  // Entries in increasing order.
  std::vector<int> entries() const {
    std::vector<int> out;
    for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  // Row reading word: rows from bottom to top, each left to right.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += ",";
      s += "[";
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j) s += ",";
        s += std::to_string(rows_[i][j]);
      }
      s += "]";
    }
    return s + "]";
  }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
  void validate() const {
    std::set<int> seen;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& r = rows_[i];
      if (r.empty()) throw ValidationError("tableau rows must be nonempty");
      if (i > 0 && r.size() > rows_[i - 1].size())
        throw ValidationError("tableau row lengths must weakly decrease");
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (!seen.insert(r[j]).second) throw ValidationError("tableau entries must be distinct");
        if (j > 0 && r[j] <= r[j - 1]) throw ValidationError("tableau rows must strictly increase");
        if (i > 0 && r[j] <= rows_[i - 1][j])
          throw ValidationError("tableau columns must strictly increase");
      }
    }
  }

  Rows rows_;
};

// Bijection between two finite sets of integers, as (source, target) pairs
// sorted by source.
class BijectionWord {
public:
  using Pair = std::pair<int, int>;

  BijectionWord() = default;
  explicit BijectionWord(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    std::set<int> targets;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (i > 0 && pairs_[i].first == pairs_[i - 1].first)
        throw ValidationError("bijection has duplicate source " + std::to_string(pairs_[i].first));
      if (!targets.insert(pairs_[i].second).second)
        throw ValidationError("bijection has duplicate target " + std::to_string(pairs_[i].second));
    }
  }

  // Permutation in one-line notation on 1..n.
  static BijectionWord one_line(const std::vector<int>& word) {
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < word.size(); ++i) pairs.emplace_back(static_cast<int>(i) + 1, word[i]);
    return BijectionWord(std::move(pairs));
  }

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  std::vector<int> sources() const {
    std::vector<int> s;
    for (const auto& [a, b] : pairs_) s.push_back(a);
    return s;
  }

  // Targets listed in increasing source order.
  std::vector<int> word() const {
    std::vector<int> w;
    for (const auto& [a, b] : pairs_) w.push_back(b);
    return w;
  }

  BijectionWord inverse() const {
    std::vector<Pair> inv;
    for (const auto& [a, b] : pairs_) inv.emplace_back(b, a);
    return BijectionWord(std::move(inv));
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(pairs_[i].first) + "->" + std::to_string(pairs_[i].second);
    }
    return s + "}";
  }

  friend bool operator==(const BijectionWord&, const BijectionWord&) = default;

private:
  std::vector<Pair> pairs_;
};

namespace detail {

// Schensted row insertion; returns the row index of the new box.
inline std::size_t row_insert(StandardTableau::Rows& rows, int x) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& row = rows[i];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return i;
    }
    std::swap(*it, x);
  }
  rows.push_back({x});
  return rows.size() - 1;
}

// Removes the last box of row i and undoes the row insertion that created it.
// Returns the ejected value.
inline int reverse_row_bump(StandardTableau::Rows& rows, std::size_t i) {
  int y = rows[i].back();
  rows[i].pop_back();
  if (rows[i].empty()) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
  while (i > 0) {
    --i;
    auto& row = rows[i];
    auto it = std::lower_bound(row.begin(), row.end(), y);
    --it;  // largest entry smaller than y
    std::swap(*it, y);
  }
  return y;
}

// Removes the box (i, j), which must be a corner, and undoes the column insertion
// that created it. Returns the ejected value.
inline int reverse_column_bump(StandardTableau::Rows& rows, std::size_t i, std::size_t j) {
  int y = rows[i][j];
  rows[i].pop_back();
  if (rows[i].empty()) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
  while (j > 0) {
    --j;
    // largest entry of column j smaller than y
    std::size_t best = 0;
    bool found = false;
    for (std::size_t r = 0; r < rows.size() && rows[r].size() > j; ++r) {
      if (rows[r][j] < y) {
        best = r;
        found = true;
      }
    }
    if (!found) throw InternalError("reverse column bump: no smaller entry in column");
    std::swap(rows[best][j], y);
  }
  return y;
}

}  // namespace detail

// Robinson-Schensted: inserts w(s) for s in increasing source order.
// Returns (insertion tableau on the targets, recording tableau on the sources).
inline std::pair<StandardTableau, StandardTableau> rs_correspondence(const BijectionWord& w) {
  StandardTableau::Rows p, q;
  for (const auto& [src, tgt] : w.pairs()) {
    std::size_t row = detail::row_insert(p, tgt);
    if (row == q.size()) q.emplace_back();
    q[row].push_back(src);
  }
  return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

// Inverse of rs_correspondence.
inline BijectionWord rs_inverse(const StandardTableau& insertion, const StandardTableau& recording) {
  if (insertion.shape() != recording.shape())
    throw ValidationError("rs_inverse: tableaux have different shapes");
  StandardTableau::Rows p = insertion.rows();
  StandardTableau::Rows q = recording.rows();
  std::vector<BijectionWord::Pair> pairs;
  while (!q.empty()) {
    std::size_t row = 0;
    for (std::size_t i = 1; i < q.size(); ++i)
      if (q[i].back() > q[row].back()) row = i;
    int src = q[row].back();
    q[row].pop_back();
    if (q[row].empty()) q.erase(q.begin() + static_cast<std::ptrdiff_t>(row));
    pairs.emplace_back(src, detail::reverse_row_bump(p, row));
  }
  return BijectionWord(std::move(pairs));
}

// Row-inserts the letters of word into T, in order.
inline StandardTableau insert_word(const StandardTableau& t, const std::vector<int>& word) {
  StandardTableau::Rows rows = t.rows();
  for (int x : word) detail::row_insert(rows, x);
  return StandardTableau(std::move(rows));
}

// Skew tableau: rows[i] lists the entries of row i of outer/inner, left to right.
struct SkewTableau {
  Partition inner;
  std::vector<std::vector<int>> rows;

  // Rectification by jeu de taquin. Slides always start at the inner corner in
  // the topmost row.
  StandardTableau rectify() const {
    constexpr int kHole = INT_MIN;
    const std::size_t n = rows.size();
    if (static_cast<std::size_t>(inner.length()) > n)
      throw ValidationError("skew tableau: inner shape has more rows than the tableau");
    std::vector<std::vector<int>> grid(n);
    std::vector<int> in(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      in[i] = inner[static_cast<int>(i)];
      grid[i].assign(static_cast<std::size_t>(in[i]), kHole);
      grid[i].insert(grid[i].end(), rows[i].begin(), rows[i].end());
      if (i > 0 && grid[i].size() > grid[i - 1].size())
        throw ValidationError("skew tableau: outer shape is not a partition");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = static_cast<std::size_t>(in[i]); j < grid[i].size(); ++j) {
        if (j > static_cast<std::size_t>(in[i]) && grid[i][j] <= grid[i][j - 1])
          throw ValidationError("skew tableau: rows must increase");
        if (i > 0 && j >= static_cast<std::size_t>(in[i - 1]) && grid[i][j] <= grid[i - 1][j])
          throw ValidationError("skew tableau: columns must increase");
      }

    for (;;) {
      std::size_t ci = n;
      for (std::size_t i = 0; i < n; ++i) {
        int below = i + 1 < n ? in[i + 1] : 0;
        if (in[i] > below) {
          ci = i;
          break;
        }
      }
      if (ci == n) break;
      std::size_t i = ci;
      std::size_t j = static_cast<std::size_t>(--in[ci]);
      for (;;) {
        bool has_right = j + 1 < grid[i].size();
        bool has_down = i + 1 < n && j < grid[i + 1].size();
        if (!has_right && !has_down) break;
        if (has_right && (!has_down || grid[i][j + 1] < grid[i + 1][j])) {
          grid[i][j] = grid[i][j + 1];
          ++j;
        } else {
          grid[i][j] = grid[i + 1][j];
          ++i;
        }
      }
      grid[i].pop_back();
    }
    while (!grid.empty() && grid.back().empty()) grid.pop_back();
    return StandardTableau(std::move(grid));
  }
};

// T * S: rectification of S placed at the top-right corner of T.
inline StandardTableau star_product(const StandardTableau& t, const StandardTableau& s) {
  std::vector<int> a = t.entries(), b = s.entries();
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty())
    throw ValidationError("star product: tableaux share entry " + std::to_string(common.front()));
  if (s.empty()) return t;
  if (t.empty()) return s;
  const int width = static_cast<int>(t.rows().front().size());
  const int height = static_cast<int>(s.rows().size());
  SkewTableau skew;
  skew.inner = Partition(std::vector<int>(static_cast<std::size_t>(height), width));
  skew.rows = s.rows();
  skew.rows.insert(skew.rows.end(), t.rows().begin(), t.rows().end());
  return skew.rectify();
}

namespace detail {
inline void standard_tableaux_rec(std::vector<int>& shape, int n, StandardTableau::Rows& cur,
                                  std::vector<StandardTableau>& out) {
  if (n == 0) {
    StandardTableau::Rows rows;
    for (std::size_t i = 0; i < shape.size(); ++i) rows.push_back(cur[i]);
    out.emplace_back(std::move(rows));
    return;
  }
  // n occupies a removable corner of the current shape
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] == 0) break;
    int below = i + 1 < shape.size() ? shape[i + 1] : 0;
    if (shape[i] > below) {
      --shape[i];
      cur[i][static_cast<std::size_t>(shape[i])] = n;
      standard_tableaux_rec(shape, n - 1, cur, out);
      ++shape[i];
    }
  }
}
}  // namespace detail

inline constexpr int kDefaultTableauBound = 12;

// All standard tableaux of shape lambda with entries 1..|lambda|.
inline std::vector<StandardTableau> standard_tableaux(const Partition& lambda,
                                                      int bound = kDefaultTableauBound) {
  if (lambda.size() > bound)
    throw RefusalError("standard_tableaux: |lambda| = " + std::to_string(lambda.size()) +
                       " exceeds bound " + std::to_string(bound));
  std::vector<int> shape = lambda.parts();
  StandardTableau::Rows cur;
  for (int x : shape) cur.emplace_back(static_cast<std::size_t>(x), 0);
  std::vector<StandardTableau> out;
  if (shape.empty()) {
    out.emplace_back();
    return out;
  }
  detail::standard_tableaux_rec(shape, lambda.size(), cur, out);
  return out;
}

}  // namespace aiii
