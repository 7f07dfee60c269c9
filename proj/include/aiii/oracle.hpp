#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "aiii/error.hpp"
#include "aiii/matrix.hpp"
#include "aiii/orbit.hpp"
#include "aiii/partition.hpp"
#include "aiii/signed_diagram.hpp"
#include "aiii/steinberg.hpp"

namespace aiii {

// x = [[a, b], [c, d]] in the conormal direction of omega, with a (p x p) and
// d (q x q) strictly upper triangular and Im x inside [omega] inside Ker x.
struct ConormalElement {
  OrbitGraph omega;
  RationalMatrix x, a, b, c, d;
  RationalMatrix xK, xS;  // diagonal blocks, off-diagonal blocks

  // Validates x against omega; throws ValidationError when x is not in the
  // conormal direction.
  static ConormalElement from_matrix(const OrbitGraph& omega, const RationalMatrix& x) {
    const auto p = static_cast<std::size_t>(omega.p()), q = static_cast<std::size_t>(omega.q());
    if (x.rows() != p + q || x.cols() != p + q) throw ValidationError("conormal element: matrix must be (p+q)x(p+q)");
    ConormalElement e{omega, x, x.block(0, 0, p, p), x.block(0, p, p, q), x.block(p, 0, q, p), x.block(p, p, q, q), {}, {}};
    auto strictly_upper = [](const RationalMatrix& m) {
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
          if (m(i, j) != 0) return false;
      return true;
    };
    if (!strictly_upper(e.a) || !strictly_upper(e.d))
      throw ValidationError("conormal element: diagonal blocks must be strictly upper triangular");
    const RationalMatrix w = representative_matrix(omega);
    if (!(x * w).is_zero()) throw ValidationError("conormal element: x does not vanish on [omega]");
    if (static_cast<int>(rank(w.hconcat(x))) != omega.r())
      throw ValidationError("conormal element: image of x is not inside [omega]");
    if (!(x * x).is_zero()) throw ValidationError("conormal element: x^2 != 0");
    e.xK = RationalMatrix(p + q, p + q);
    e.xK.set_block(0, 0, e.a);
    e.xK.set_block(p, p, e.d);
    e.xS = x - e.xK;
    return e;
  }
};

inline constexpr int kDefaultSampleBound = 99;
inline constexpr int kDefaultTrials = 3;
inline constexpr int kDefaultRetries = 3;

// Random element of the conormal direction: free entries uniform in
// [-bound, bound], the remaining entries forced by the defining equations.
inline ConormalElement sample_conormal(const OrbitGraph& g, int bound, std::uint64_t seed) {
  if (bound < 1) throw ValidationError("sample bound must be positive");
  const DerivedData dd = derived_data(g);
  const auto p = static_cast<std::size_t>(g.p()), q = static_cast<std::size_t>(g.q());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-bound, bound);
  auto draw = [&]() { return Rational(dist(rng)); };
  auto at = [](int v) { return static_cast<std::size_t>(v - 1); };

  RationalMatrix a(p, p), b(p, q), c(q, p), d(q, q);
  // c: rows J and M, columns I and L'
  for (int j : dd.J) {
    for (int i : dd.I)
      if (dd.sigma_of(j) < i && j < dd.sigma_inv_of(i)) c(at(j), at(i)) = draw();
    for (int l : dd.Lp)
      if (dd.sigma_of(j) < l) c(at(j), at(l)) = draw();
  }
  for (int m : dd.M) {
    for (int i : dd.I)
      if (m < dd.sigma_inv_of(i)) c(at(m), at(i)) = draw();
    for (int l : dd.Lp) c(at(m), at(l)) = draw();
  }
  // free parts of a (rows L), d (columns M') and b (rows L, columns M')
  for (int l : dd.L) {
    for (int i : dd.I)
      if (l < i) a(at(l), at(i)) = draw();
    for (int lp : dd.Lp)
      if (l < lp) a(at(l), at(lp)) = draw();
  }
  for (int mp : dd.Mp) {
    for (int j : dd.J)
      if (j < mp) d(at(j), at(mp)) = draw();
    for (int m : dd.M)
      if (m < mp) d(at(m), at(mp)) = draw();
  }
  for (int l : dd.L)
    for (int mp : dd.Mp) b(at(l), at(mp)) = draw();
  // forced entries
  for (int j : dd.J)
    for (std::size_t col = 0; col < p; ++col) a(at(dd.sigma_of(j)), col) = c(at(j), col);
  for (int jp : dd.J)
    for (std::size_t row = 0; row < q; ++row) d(row, at(jp)) = -c(row, at(dd.sigma_of(jp)));
  for (int j : dd.J) {
    for (int mp : dd.Mp) b(at(dd.sigma_of(j)), at(mp)) = d(at(j), at(mp));
    for (int jp : dd.J) b(at(dd.sigma_of(j)), at(jp)) = -c(at(j), at(dd.sigma_of(jp)));
  }
  for (int l : dd.L)
    for (int jp : dd.J) b(at(l), at(jp)) = -a(at(l), at(dd.sigma_of(jp)));

  RationalMatrix x(p + q, p + q);
  x.set_block(0, 0, a);
  x.set_block(0, p, b);
  x.set_block(p, 0, c);
  x.set_block(p, p, d);
  try {
    return ConormalElement::from_matrix(g, x);
  } catch (const ValidationError& e) {
    throw InternalError(std::string("sample_conormal produced an invalid element: ") + e.what());
  }
}

namespace detail {
inline void require_nilpotent(const RationalMatrix& n) {
  if (n.rows() != n.cols()) throw ValidationError("expected a square matrix");
  if (!n.pow(static_cast<unsigned>(n.rows())).is_zero()) throw ValidationError("matrix is not nilpotent");
}
}  // namespace detail

// (rank N, rank N^2, ..., rank N^n)
inline std::vector<int> power_ranks(const RationalMatrix& n) {
  std::vector<int> out;
  RationalMatrix power = RationalMatrix::identity(n.rows());
  for (std::size_t k = 1; k <= n.rows(); ++k) {
    power = power * n;
    out.push_back(static_cast<int>(rank(power)));
  }
  return out;
}

inline Partition jordan_type_from_ranks(int n, const std::vector<int>& ranks) {
  // number of blocks of size >= k is d_k - d_{k-1} with d_k = n - rank N^k
  std::vector<int> at_least;
  int prev = 0;
  for (int r : ranks) {
    const int dk = n - r;
    if (dk - prev > 0) at_least.push_back(dk - prev);
    prev = dk;
  }
  return Partition(std::move(at_least)).conjugate();
}

// Jordan type of a nilpotent matrix.
inline Partition jordan_type(const RationalMatrix& n) {
  detail::require_nilpotent(n);
  return jordan_type_from_ranks(static_cast<int>(n.rows()), power_ranks(n));
}

// For k = 1..p+q: (rank of x^k on V+, rank of x^k on V-), with V+ the first p
// coordinates.
inline std::vector<std::pair<int, int>> restricted_power_ranks(const RationalMatrix& x, int p, int q) {
  const auto n = static_cast<std::size_t>(p + q);
  std::vector<std::size_t> all(n), plus, minus;
  for (std::size_t i = 0; i < n; ++i) (i < static_cast<std::size_t>(p) ? plus : minus).push_back(all[i] = i);
  std::vector<std::pair<int, int>> out;
  RationalMatrix power = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * x;
    out.emplace_back(static_cast<int>(rank(power.select(all, plus))), static_cast<int>(rank(power.select(all, minus))));
  }
  return out;
}

inline SignedYoungDiagram signed_type_from_ranks(int p, int q, const std::vector<std::pair<int, int>>& ranks) {
  // dim(V+ cap ker x^k) = p - rank(x^k restricted to V+)
  std::vector<int> plus, minus;
  for (const auto& [rp, rm] : ranks) {
    plus.push_back(p - rp);
    minus.push_back(q - rm);
  }
  if (plus.empty()) return {};
  return signed_diagram_from_counts(plus, minus);
}

// Signed Jordan type of a nilpotent x that swaps V+ and V-.
inline SignedYoungDiagram signed_jordan_type(const RationalMatrix& xs, int p, int q) {
  if (xs.rows() != static_cast<std::size_t>(p + q)) throw ValidationError("signed_jordan_type: matrix must be (p+q)x(p+q)");
  detail::require_nilpotent(xs);
  for (std::size_t i = 0; i < xs.rows(); ++i)
    for (std::size_t j = 0; j < xs.cols(); ++j)
      if ((i < static_cast<std::size_t>(p)) == (j < static_cast<std::size_t>(p)) && xs(i, j) != 0)
        throw ValidationError("signed_jordan_type: matrix must be off-diagonal in blocks");
  return signed_type_from_ranks(p, q, restricted_power_ranks(xs, p, q));
}

struct OracleOptions {
  std::uint64_t seed = 1;
  int bound = kDefaultSampleBound;
  int trials = kDefaultTrials;
  int retries = kDefaultRetries;
};

namespace detail {

// Runs trials until one sample's rank profile dominates all others
// componentwise, doubling the bound on incomparable results.
template <typename Profile, typename ProfileOf>
Profile dominant_profile(const OrbitGraph& g, const OracleOptions& opt, ProfileOf profile_of) {
  if (opt.trials < 1) throw ValidationError("oracle needs at least one trial");
  int bound = opt.bound;
  std::uint64_t seed = opt.seed;
  for (int attempt = 0; attempt <= opt.retries; ++attempt, bound *= 2) {
    std::vector<Profile> profiles;
    for (int t = 0; t < opt.trials; ++t) profiles.push_back(profile_of(sample_conormal(g, bound, seed++)));
    for (const auto& cand : profiles) {
      bool dominates = true;
      for (const auto& other : profiles)
        for (std::size_t k = 0; k < cand.size() && dominates; ++k)
          if (cand[k] < other[k]) dominates = false;
      if (dominates) return cand;
    }
  }
  throw GenericityError("oracle: samples for " + g.to_string() + " stayed incomparable after " +
                        std::to_string(opt.retries) + " retries");
}

}  // namespace detail

// Jordan types of the diagonal blocks of a generic conormal element.
inline KTypePair oracle_phi_k(const OrbitGraph& g, const OracleOptions& opt = {}) {
  const auto p = static_cast<std::size_t>(g.p());
  auto profile_of = [&](const ConormalElement& e) {
    std::vector<int> ranks = power_ranks(e.a);
    const std::vector<int> rd = power_ranks(e.d);
    ranks.insert(ranks.end(), rd.begin(), rd.end());
    return ranks;
  };
  const std::vector<int> best = detail::dominant_profile<std::vector<int>>(g, opt, profile_of);
  const std::vector<int> ra(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(p));
  const std::vector<int> rd(best.begin() + static_cast<std::ptrdiff_t>(p), best.end());
  return {jordan_type_from_ranks(g.p(), ra), jordan_type_from_ranks(g.q(), rd)};
}

// Signed Jordan type of the off-diagonal part of a generic conormal element.
inline SignedYoungDiagram oracle_phi_s(const OrbitGraph& g, const OracleOptions& opt = {}) {
  auto profile_of = [&](const ConormalElement& e) {
    std::vector<int> flat;
    for (const auto& [rp, rm] : restricted_power_ranks(e.xS, g.p(), g.q())) {
      flat.push_back(rp);
      flat.push_back(rm);
    }
    return flat;
  };
  const std::vector<int> best = detail::dominant_profile<std::vector<int>>(g, opt, profile_of);
  std::vector<std::pair<int, int>> ranks;
  for (std::size_t k = 0; k + 1 < best.size(); k += 2) ranks.emplace_back(best[k], best[k + 1]);
  return signed_type_from_ranks(g.p(), g.q(), ranks);
}

// Checks, for 0 <= m <= m_max,
//   xS^{2m} = (-1)^m diag(a^{2m}, d^{2m})
//   lower-left block of xS^{2m+1} = (-1)^m (c tau)^{2m} c
// with tau the p x q matrix of sigma: tau[sigma(j), j] = 1.
inline bool power_identity_check(const ConormalElement& e, int m_max) {
  const auto p = static_cast<std::size_t>(e.omega.p()), q = static_cast<std::size_t>(e.omega.q());
  RationalMatrix tau(p, q);
  for (const auto& [a, c] : e.omega.edges()) tau(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(c - 1)) = 1;
  const RationalMatrix ct = e.c * tau;
  for (int m = 0; m <= m_max; ++m) {
    const Rational sign = m % 2 ? -1 : 1;
    const auto even = static_cast<unsigned>(2 * m);
    RationalMatrix expected(p + q, p + q);
    expected.set_block(0, 0, e.a.pow(even));
    expected.set_block(p, p, e.d.pow(even));
    const RationalMatrix xs_even = e.xS.pow(even);
    if (xs_even != sign * expected) return false;
    const RationalMatrix odd = xs_even * e.xS;
    if (odd.block(p, 0, q, p) != sign * (ct.pow(even) * e.c)) return false;
  }
  return true;
}

}  // namespace aiii
