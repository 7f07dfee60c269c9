#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aiii/matrix.hpp"
#include "aiii/orbit.hpp"
#include "aiii/partition.hpp"
#include "aiii/tableau.hpp"

namespace testsupport {

using namespace aiii;

inline const char* const kOmega0 = "5x3x4:2-3,4-1:5:2";

// All parameters of (p, q, r), built as 0/1 matrices E of size (p+1)x(q+1)
// with E(0,0) = 0 and at most one 1 in every row i >= 1 and column j >= 1.
inline std::vector<OrbitGraph> brute_parameters(int p, int q, int r) {
  std::vector<OrbitGraph> out;
  std::vector<int> row_choice(static_cast<std::size_t>(p) + 1, -1);  // -1 none, 0 mark, c edge
  auto rec = [&](auto&& self, int i, std::vector<bool>& col_used) -> void {
    if (i > p) {
      // choose minus marks among unused columns
      std::vector<int> free_cols;
      for (int c = 1; c <= q; ++c)
        if (!col_used[static_cast<std::size_t>(c)]) free_cols.push_back(c);
      const auto nf = free_cols.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << nf); ++mask) {
        std::vector<OrbitGraph::Edge> edges;
        std::vector<int> plus, minus;
        for (int a = 1; a <= p; ++a) {
          const int ch = row_choice[static_cast<std::size_t>(a)];
          if (ch == 0) plus.push_back(a);
          if (ch > 0) edges.emplace_back(a, ch);
        }
        for (std::size_t b = 0; b < nf; ++b)
          if (mask >> b & 1U) minus.push_back(free_cols[b]);
        if (static_cast<int>(edges.size() + plus.size() + minus.size()) == r)
          out.emplace_back(p, q, edges, plus, minus);
      }
      return;
    }
    for (int ch = -1; ch <= q; ++ch) {
      if (ch > 0 && col_used[static_cast<std::size_t>(ch)]) continue;
      row_choice[static_cast<std::size_t>(i)] = ch;
      if (ch > 0) col_used[static_cast<std::size_t>(ch)] = true;
      self(self, i + 1, col_used);
      if (ch > 0) col_used[static_cast<std::size_t>(ch)] = false;
    }
  };
  std::vector<bool> used(static_cast<std::size_t>(q) + 1, false);
  rec(rec, 1, used);
  return out;
}

inline std::set<std::string> canonical_set(const std::vector<OrbitGraph>& gs) {
  std::set<std::string> s;
  for (const auto& g : gs) s.insert(g.to_string());
  return s;
}

// Random parameter with r drawn uniformly from 0..p+q.
inline OrbitGraph random_parameter(int p, int q, std::mt19937_64& rng) {
  std::vector<int> plus_state(static_cast<std::size_t>(p) + 1, -1);
  std::vector<int> minus_perm;
  for (int c = 1; c <= q; ++c) minus_perm.push_back(c);
  std::shuffle(minus_perm.begin(), minus_perm.end(), rng);
  std::vector<bool> minus_used(static_cast<std::size_t>(q) + 1, false);
  std::vector<OrbitGraph::Edge> edges;
  std::vector<int> plus, minus;
  std::uniform_int_distribution<int> three(0, 2);
  std::size_t next = 0;
  for (int a = 1; a <= p; ++a) {
    const int kind = three(rng);
    if (kind == 1) plus.push_back(a);
    if (kind == 2 && next < minus_perm.size()) {
      edges.emplace_back(a, minus_perm[next]);
      minus_used[static_cast<std::size_t>(minus_perm[next++])] = true;
    }
  }
  std::bernoulli_distribution coin(0.5);
  for (int c = 1; c <= q; ++c)
    if (!minus_used[static_cast<std::size_t>(c)] && coin(rng)) minus.push_back(c);
  return OrbitGraph(p, q, std::move(edges), std::move(plus), std::move(minus));
}

// Star product via the insertion characterization: T * S = P(rw(T) rw(S)).
inline StandardTableau star_by_insertion(const StandardTableau& t, const StandardTableau& s) {
  return insert_word(t, s.reading_word());
}

// Random standard tableau on the given entries: insertion tableau of a random
// arrangement.
inline StandardTableau random_tableau(std::vector<int> entries, std::mt19937_64& rng) {
  std::shuffle(entries.begin(), entries.end(), rng);
  return insert_word(StandardTableau{}, entries);
}

// Transitive reduction by the definition: u covers v iff v < u and nothing
// lies strictly between.
template <typename Less>
std::vector<std::pair<std::size_t, std::size_t>> naive_covers(std::size_t n, Less less) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (!less(v, u)) continue;
      bool between = false;
      for (std::size_t w = 0; w < n && !between; ++w) between = less(v, w) && less(w, u);
      if (!between) out.emplace_back(u, v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Direct sum of nilpotent Jordan blocks of the given sizes.
inline RationalMatrix jordan_matrix(const std::vector<int>& blocks) {
  int n = 0;
  for (int b : blocks) n += b;
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::size_t off = 0;
  for (int b : blocks) {
    for (int k = 0; k + 1 < b; ++k) m(off + static_cast<std::size_t>(k), off + static_cast<std::size_t>(k) + 1) = 1;
    off += static_cast<std::size_t>(b);
  }
  return m;
}

// Random unimodular matrix (product of unit triangular factors) and its inverse.
inline std::pair<RationalMatrix, RationalMatrix> random_unimodular(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  RationalMatrix lower = RationalMatrix::identity(n), upper = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = dist(rng);
      upper(j, i) = dist(rng);
    }
  // inverses of unit triangular matrices by forward substitution
  auto invert_lower = [n](const RationalMatrix& l) {
    RationalMatrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t i = 0; i < n; ++i) {
        Rational v = i == c ? 1 : 0;
        for (std::size_t k = 0; k < i; ++k) v -= l(i, k) * inv(k, c);
        inv(i, c) = v;
      }
    return inv;
  };
  const RationalMatrix lower_inv = invert_lower(lower);
  const RationalMatrix upper_inv = invert_lower(upper.transpose()).transpose();
  return {lower * upper, upper_inv * lower_inv};
}

}  // namespace testsupport
