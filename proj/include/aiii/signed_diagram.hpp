#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "aiii/error.hpp"
#include "aiii/partition.hpp"

namespace aiii {

enum class Sign { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

struct SignedRow {
  int length = 0;
  Sign lead = Sign::plus;

  // Sign in column c (1-based): signs alternate from the leading one.
  Sign sign_at(int c) const { return c % 2 == 1 ? lead : flip(lead); }

  std::string to_string() const {
    std::string s;
    for (int c = 1; c <= length; ++c) s += sign_at(c) == Sign::plus ? '+' : '-';
    return s;
  }

  friend bool operator==(const SignedRow&, const SignedRow&) = default;
};

// Multiset of signed rows, kept in canonical order: longer rows first, then
// rows leading with + before rows leading with -.
class SignedYoungDiagram {
public:
  SignedYoungDiagram() = default;
  explicit SignedYoungDiagram(std::vector<SignedRow> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.length < 1) throw ValidationError("signed diagram rows must be nonempty");
    std::sort(rows_.begin(), rows_.end(), [](const SignedRow& a, const SignedRow& b) {
      if (a.length != b.length) return a.length > b.length;
      return a.lead == Sign::plus && b.lead == Sign::minus;
    });
  }

  // Parses rows such as {"-+", "+"}; each row must alternate.
  static SignedYoungDiagram parse(const std::vector<std::string>& rows) {
    std::vector<SignedRow> out;
    for (const auto& s : rows) {
      if (s.empty()) throw ValidationError("signed diagram row is empty");
      SignedRow r{static_cast<int>(s.size()), s[0] == '+' ? Sign::plus : Sign::minus};
      if (r.to_string() != s) throw ValidationError("signed diagram row '" + s + "' does not alternate");
      out.push_back(r);
    }
    return SignedYoungDiagram(std::move(out));
  }

  const std::vector<SignedRow>& rows() const { return rows_; }

  // Number of + (or -) boxes in the first c columns.
  int count_in_first_columns(Sign sign, int c) const {
    int n = 0;
    for (const auto& r : rows_)
      for (int k = 1; k <= std::min(c, r.length); ++k)
        if (r.sign_at(k) == sign) ++n;
    return n;
  }

  int plus_count() const { return count_in_first_columns(Sign::plus, width()); }
  int minus_count() const { return count_in_first_columns(Sign::minus, width()); }

  int width() const { return rows_.empty() ? 0 : rows_.front().length; }

  Partition shape() const {
    std::vector<int> lens;
    for (const auto& r : rows_) lens.push_back(r.length);
    return Partition(std::move(lens));
  }

  // Same diagram with every sign switched.
  SignedYoungDiagram starred() const {
    std::vector<SignedRow> out = rows_;
    for (auto& r : out) r.lead = flip(r.lead);
    return SignedYoungDiagram(std::move(out));
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& r : rows_) out.push_back(r.to_string());
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += ",";
      s += rows_[i].to_string();
    }
    return s + ")";
  }

  friend bool operator==(const SignedYoungDiagram&, const SignedYoungDiagram&) = default;

private:
  std::vector<SignedRow> rows_;
};

// Cumulative (plus, minus) counts for columns 1..columns.
inline std::pair<std::vector<int>, std::vector<int>> cumulative_column_counts(
    const SignedYoungDiagram& d, int columns) {
  std::vector<int> plus, minus;
  for (int c = 1; c <= columns; ++c) {
    plus.push_back(d.count_in_first_columns(Sign::plus, c));
    minus.push_back(d.count_in_first_columns(Sign::minus, c));
  }
  return {plus, minus};
}

// Reconstructs the unique signed diagram whose first-c-columns sign counts are
// plus_cum[c-1], minus_cum[c-1]. Counts past the end are taken as saturated.
inline SignedYoungDiagram signed_diagram_from_counts(const std::vector<int>& plus_cum,
                                                     const std::vector<int>& minus_cum) {
  if (plus_cum.size() != minus_cum.size())
    throw ValidationError("signed diagram counts: length mismatch");
  const std::size_t cols = plus_cum.size();
  // per-column counts, with one trailing zero column
  std::vector<int> pc(cols + 1, 0), mc(cols + 1, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    pc[c] = plus_cum[c] - (c ? plus_cum[c - 1] : 0);
    mc[c] = minus_cum[c] - (c ? minus_cum[c - 1] : 0);
    if (pc[c] < 0 || mc[c] < 0) throw InternalError("signed diagram counts: decreasing cumulative count");
    if (c > 0 && pc[c] + mc[c] > pc[c - 1] + mc[c - 1])
      throw InternalError("signed diagram counts: column lengths increase");
  }
  // a[c]: rows of length > c leading with +; b[c]: leading with -
  std::vector<int> a(cols + 1), b(cols + 1);
  for (std::size_t c = 0; c <= cols; ++c) {
    bool odd = c % 2 == 0;  // column c+1
    a[c] = odd ? pc[c] : mc[c];
    b[c] = odd ? mc[c] : pc[c];
  }
  std::vector<SignedRow> rows;
  for (std::size_t c = 0; c < cols; ++c) {
    int np = a[c] - a[c + 1];
    int nm = b[c] - b[c + 1];
    if (np < 0 || nm < 0) throw InternalError("signed diagram counts are inconsistent");
    for (int k = 0; k < np; ++k) rows.push_back({static_cast<int>(c) + 1, Sign::plus});
    for (int k = 0; k < nm; ++k) rows.push_back({static_cast<int>(c) + 1, Sign::minus});
  }
  return SignedYoungDiagram(std::move(rows));
}

}  // namespace aiii
