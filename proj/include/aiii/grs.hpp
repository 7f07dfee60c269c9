#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "aiii/error.hpp"
#include "aiii/orbit.hpp"
#include "aiii/partition.hpp"
#include "aiii/steinberg.hpp"
#include "aiii/tableau.hpp"

namespace aiii {

// (T1, T2; lambda', mu'; nu)
struct GrsTuple {
  StandardTableau T1, T2;
  Partition lambda_prime, mu_prime, nu;

  friend bool operator==(const GrsTuple&, const GrsTuple&) = default;
};

// T1 = [L]*RS1(sigma)*[L'], T2 = [M]*RS2(sigma)*[M'], with lambda', mu' the
// shapes after the first two factors and nu = shape(RS1(sigma)).
inline GrsTuple grs(const OrbitGraph& g) {
  const DerivedData d = derived_data(g);
  const auto [rs1, rs2] = rs_correspondence(d.sigma);
  const StandardTableau left = star_product(StandardTableau::column(d.L), rs1);
  const StandardTableau right = star_product(StandardTableau::column(d.M), rs2);
  return {star_product(left, StandardTableau::column(d.Lp)), star_product(right, StandardTableau::column(d.Mp)),
          left.shape(), right.shape(), rs1.shape()};
}

namespace detail {

inline bool entries_are_one_to(const StandardTableau& t, int n) {
  const auto e = t.entries();
  for (int i = 0; i < static_cast<int>(e.size()); ++i)
    if (e[static_cast<std::size_t>(i)] != i + 1) return false;
  return static_cast<int>(e.size()) == n;
}

// Checks the two conditions that characterize the image of grs for the given
// r; throws ValidationError naming the first failure.
inline void check_grs_tuple(const GrsTuple& t, int r) {
  const int p = t.T1.size(), q = t.T2.size();
  if (!entries_are_one_to(t.T1, p)) throw ValidationError("gRS tuple: entries of T1 must be 1..p");
  if (!entries_are_one_to(t.T2, q)) throw ValidationError("gRS tuple: entries of T2 must be 1..q");
  const Partition lambda = t.T1.shape(), mu = t.T2.shape();
  if (!is_column_strip(t.nu, t.lambda_prime) || !is_column_strip(t.lambda_prime, lambda))
    throw ValidationError("gRS tuple: nu, lambda', lambda must form column strips");
  if (!is_column_strip(t.nu, t.mu_prime) || !is_column_strip(t.mu_prime, mu))
    throw ValidationError("gRS tuple: nu, mu', mu must form column strips");
  if (t.lambda_prime.size() + t.mu_prime.size() != t.nu.size() + r)
    throw ValidationError("gRS tuple: |lambda'| + |mu'| must equal |nu| + r");
}

// Boxes of outer/inner (a column strip), lowest first, as (row, column).
inline std::vector<std::pair<std::size_t, std::size_t>> strip_boxes_lowest_first(const Partition& inner,
                                                                                 const Partition& outer) {
  std::vector<std::pair<std::size_t, std::size_t>> boxes;
  for (int i = outer.length() - 1; i >= 0; --i)
    if (outer[i] > inner[i]) boxes.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(outer[i] - 1));
  return boxes;
}

// Undoes X*[B] then [A]*S for a tableau T = ([A]*S)*[B] whose intermediate
// shapes are given. Returns (S, A, B).
inline std::tuple<StandardTableau, std::vector<int>, std::vector<int>> peel(const StandardTableau& t,
                                                                            const Partition& middle,
                                                                            const Partition& inner) {
  StandardTableau::Rows rows = t.rows();
  std::vector<int> right, left;
  // X*[B] row-inserts B in decreasing order: each new box lies below the last
  for (const auto& [i, j] : strip_boxes_lowest_first(middle, t.shape())) right.push_back(reverse_row_bump(rows, i));
  // [A]*S column-inserts A in increasing order: each new box lies below the last
  for (const auto& [i, j] : strip_boxes_lowest_first(inner, middle)) left.push_back(reverse_column_bump(rows, i, j));
  std::sort(right.begin(), right.end());
  std::sort(left.begin(), left.end());
  return {StandardTableau(std::move(rows)), std::move(left), std::move(right)};
}

}  // namespace detail

// Inverse of grs by peeling the column strips off T1 and T2, then inverting
// Robinson-Schensted on the remaining pair of shape nu.
inline OrbitGraph grs_inverse(const GrsTuple& t, int r) {
  detail::check_grs_tuple(t, r);
  const auto [s1, L, Lp] = detail::peel(t.T1, t.lambda_prime, t.nu);
  const auto [s2, M, Mp] = detail::peel(t.T2, t.mu_prime, t.nu);
  const BijectionWord sigma = rs_inverse(s1, s2);  // J -> I
  std::vector<OrbitGraph::Edge> edges;
  for (const auto& [j, i] : sigma.pairs()) edges.emplace_back(i, j);
  OrbitGraph g(t.T1.size(), t.T2.size(), std::move(edges), L, M);
  if (g.r() != r || grs(g) != t) throw InternalError("grs_inverse: reconstructed parameter does not map back");
  return g;
}

// Inverse of grs by exhaustive search; must find exactly one preimage.
inline OrbitGraph grs_inverse_search(const GrsTuple& t, int r, int bound = kDefaultEnumerationBound) {
  detail::check_grs_tuple(t, r);
  std::vector<OrbitGraph> found;
  for (auto& g : enumerate_parameters(t.T1.size(), t.T2.size(), r, bound))
    if (grs(g) == t) found.push_back(std::move(g));
  if (found.size() != 1)
    throw InternalError("grs_inverse_search: tuple has " + std::to_string(found.size()) + " preimages");
  return found.front();
}

// All parameters of (p, q, r) with phi_k equal to target.
inline std::vector<OrbitGraph> fiber(int p, int q, int r, const KTypePair& target,
                                     int bound = kDefaultEnumerationBound) {
  std::vector<OrbitGraph> out;
  for (auto& g : enumerate_parameters(p, q, r, bound))
    if (phi_k(g) == target) out.push_back(std::move(g));
  return out;
}

// Number of chains nu <cs lambda' <cs lambda, nu <cs mu' <cs mu with
// |nu| = k, |lambda'| = k+s, |mu'| = k+t.
inline std::uint64_t multiplicity(int k, int s, int t, const Partition& lambda, const Partition& mu) {
  if (k < 0 || s < 0 || t < 0) return 0;
  std::uint64_t n = 0;
  for (const auto& nu : partitions_of(k)) {
    std::uint64_t left = 0, right = 0;
    for (const auto& lp : partitions_of(k + s))
      if (is_column_strip(nu, lp) && is_column_strip(lp, lambda)) ++left;
    if (!left) continue;
    for (const auto& mp : partitions_of(k + t))
      if (is_column_strip(nu, mp) && is_column_strip(mp, mu)) ++right;
    n += left * right;
  }
  return n;
}

// Size of the phi_k fiber over (lambda, mu) in rank r, from the multiplicities
// and the hook length formula.
inline std::uint64_t fiber_cardinality(const Partition& lambda, const Partition& mu, int r) {
  const int p = lambda.size(), q = mu.size();
  const std::uint64_t dims = count_standard_tableaux(lambda) * count_standard_tableaux(mu);
  std::uint64_t total = 0;
  for (int k = 0; k <= r; ++k)
    for (int s = 0; s <= r - k; ++s) {
      const int t = r - k - s;
      if (p - k - s < 0 || q - k - t < 0) continue;
      total += multiplicity(k, s, t, lambda, mu) * dims;
    }
  return total;
}

}  // namespace aiii
