#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "aiii/error.hpp"
#include "aiii/orbit.hpp"
#include "aiii/partition.hpp"
#include "aiii/signed_diagram.hpp"
#include "aiii/tableau.hpp"

namespace aiii {

// Label (lambda, mu) of a nilpotent orbit in gl_p x gl_q.
struct KTypePair {
  Partition lambda;
  Partition mu;

  friend bool operator==(const KTypePair&, const KTypePair&) = default;
  friend auto operator<=>(const KTypePair&, const KTypePair&) = default;
};

// (w_k+, w_k-): w_k+ lists L descending, sigma(J ascending), L' descending;
// w_k- lists M descending, sigma^-1(I ascending), M' descending.
inline std::pair<BijectionWord, BijectionWord> wk_permutations(const OrbitGraph& g) {
  const DerivedData d = derived_data(g);
  std::vector<int> plus(d.L.rbegin(), d.L.rend());
  for (int j : d.J) plus.push_back(d.sigma_of(j));
  plus.insert(plus.end(), d.Lp.rbegin(), d.Lp.rend());
  std::vector<int> minus(d.M.rbegin(), d.M.rend());
  for (int i : d.I) minus.push_back(d.sigma_inv_of(i));
  minus.insert(minus.end(), d.Mp.rbegin(), d.Mp.rend());
  return {BijectionWord::one_line(plus), BijectionWord::one_line(minus)};
}

// (w_s+, w_s-):
//   w_s+ : m_i -> -i, j -> sigma(j), q+i -> l'_{s'+1-i}
//   w_s- : l_i -> -i, i -> sigma^-1(i), p+i -> m'_{t'+1-i}
inline std::pair<BijectionWord, BijectionWord> ws_bijections(const OrbitGraph& g) {
  const DerivedData d = derived_data(g);
  std::vector<BijectionWord::Pair> plus, minus;
  for (int i = 1; i <= d.t; ++i) plus.emplace_back(d.M[static_cast<std::size_t>(i - 1)], -i);
  for (int j : d.J) plus.emplace_back(j, d.sigma_of(j));
  for (int i = 1; i <= d.sp; ++i) plus.emplace_back(g.q() + i, d.Lp[static_cast<std::size_t>(d.sp - i)]);
  for (int i = 1; i <= d.s; ++i) minus.emplace_back(d.L[static_cast<std::size_t>(i - 1)], -i);
  for (int i : d.I) minus.emplace_back(i, d.sigma_inv_of(i));
  for (int i = 1; i <= d.tp; ++i) minus.emplace_back(g.p() + i, d.Mp[static_cast<std::size_t>(d.tp - i)]);
  return {BijectionWord(std::move(plus)), BijectionWord(std::move(minus))};
}

inline Partition insertion_shape(const BijectionWord& w) { return rs_correspondence(w).first.shape(); }

inline KTypePair phi_k(const OrbitGraph& g) {
  const auto [wp, wm] = wk_permutations(g);
  return {insertion_shape(wp), insertion_shape(wm)};
}

// Signed diagram from the column counts
//   c even: n+(c) = n_c(lambda),        n-(c) = n_c(mu)
//   c odd:  n+(c) = s - t + n_c(lambda'), n-(c) = t - s + n_c(mu')
// where lambda', mu' are the insertion shapes of w_s+, w_s-.
inline SignedYoungDiagram phi_s(const OrbitGraph& g) {
  const DerivedData d = derived_data(g);
  const KTypePair km = phi_k(g);
  const auto [wp, wm] = ws_bijections(g);
  const Partition lp = insertion_shape(wp), mp = insertion_shape(wm);
  const int columns = std::max({km.lambda[0], km.mu[0], lp[0], mp[0]}) + 1;
  std::vector<int> plus, minus;
  for (int c = 1; c <= columns; ++c) {
    if (c % 2 == 0) {
      plus.push_back(first_columns_count(km.lambda, c));
      minus.push_back(first_columns_count(km.mu, c));
    } else {
      plus.push_back(d.s - d.t + first_columns_count(lp, c));
      minus.push_back(d.t - d.s + first_columns_count(mp, c));
    }
  }
  SignedYoungDiagram diagram = signed_diagram_from_counts(plus, minus);
  if (diagram.plus_count() != g.p() || diagram.minus_count() != g.q())
    throw InternalError("phi_s: signed diagram has the wrong signature for " + g.to_string());
  for (int c = 2; c <= columns; c += 2)
    if (diagram.count_in_first_columns(Sign::plus, c) != first_columns_count(km.lambda, c) ||
        diagram.count_in_first_columns(Sign::minus, c) != first_columns_count(km.mu, c))
      throw InternalError("phi_s: even column counts do not match phi_k for " + g.to_string());
  return diagram;
}

}  // namespace aiii
