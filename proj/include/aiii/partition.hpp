#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "aiii/error.hpp"

namespace aiii {

// Integer partition, stored as weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw ValidationError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw ValidationError("partition parts must be weakly decreasing");
    }
  }

  // Builds a partition from row lengths, dropping trailing zeros.
  static Partition from_row_lengths(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
  }

  // (1^n)
  static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Part i (0-based); zero beyond the last part.
  int operator[](int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  int size() const {
    int n = 0;
    for (int x : parts_) n += x;
    return n;
  }

  Partition conjugate() const {
    std::vector<int> cols(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int x : parts_)
      for (int c = 0; c < x; ++c) ++cols[static_cast<std::size_t>(c)];
    return Partition(std::move(cols));
  }

  // Cellwise containment of Young diagrams.
  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
      if (inner[i] > (*this)[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

// Number of boxes in the first c columns: sum of min(part, c).
inline int first_columns_count(const Partition& lambda, int c) {
  int n = 0;
  for (int x : lambda.parts()) n += std::min(x, c);
  return n;
}

// True iff inner is a subdiagram of outer and outer/inner has at most one box per row.
inline bool is_column_strip(const Partition& inner, const Partition& outer) {
  if (!outer.contains(inner)) return false;
  for (int i = 0; i < outer.length(); ++i)
    if (outer[i] - inner[i] > 1) return false;
  return true;
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int x = std::min(remaining, max_part); x >= 1; --x) {
    cur.push_back(x);
    partitions_rec(remaining - x, x, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// All partitions of n in reverse lexicographic order, (n) first.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw ValidationError("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

// Number of standard tableaux of the given shape (hook length formula).
inline std::uint64_t count_standard_tableaux(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<std::uint64_t> hooks;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      hooks.push_back(static_cast<std::uint64_t>(lambda[i] - j + conj[j] - i - 1));
  std::vector<std::uint64_t> factors;
  for (int k = 2; k <= lambda.size(); ++k) factors.push_back(static_cast<std::uint64_t>(k));
  // n! / prod(hooks): cancel each hook against the factors of n!.
  for (std::uint64_t h : hooks) {
    for (auto& f : factors) {
      if (h == 1) break;
      std::uint64_t g = std::gcd(h, f);
      f /= g;
      h /= g;
    }
    if (h != 1) throw InternalError("hook length formula did not divide");
  }
  std::uint64_t num = 1;
  for (auto f : factors) num *= f;
  return num;
}

}  // namespace aiii
