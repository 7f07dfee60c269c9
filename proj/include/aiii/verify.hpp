#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "aiii/error.hpp"
#include "aiii/grs.hpp"
#include "aiii/oracle.hpp"
#include "aiii/orbit.hpp"
#include "aiii/poset.hpp"
#include "aiii/serialize.hpp"
#include "aiii/steinberg.hpp"

namespace aiii {

// Outcome of a verification sweep: per-check case counts and failure messages.
struct VerifyReport {
  std::map<std::string, int> cases;
  std::map<std::string, std::vector<std::string>> failures;

  void record(const std::string& check, bool ok, const std::string& detail) {
    ++cases[check];
    if (!ok) failures[check].push_back(detail);
  }
  bool ok() const { return failures.empty(); }
};

namespace detail {

template <typename F>
void guarded(VerifyReport& rep, const std::string& check, const std::string& label, F&& f) {
  try {
    rep.record(check, f(), label);
  } catch (const Error& e) {
    rep.record(check, false, label + ": " + e.what());
  }
}

}  // namespace detail

// Checks every property that can be evaluated on the parameters of (p, q, r):
// per-parameter oracle agreement, bijections and identities, and the global
// counting, poset and fiber statements.
inline VerifyReport verify_sweep(int p, int q, int r, const OracleOptions& opt,
                                 int bound = kDefaultEnumerationBound) {
  VerifyReport rep;
  const std::vector<OrbitGraph> params = enumerate_parameters(p, q, r, bound);
  std::uint64_t sample_seed = opt.seed;

  rep.record("count", BigInt(params.size()) == count_parameters(p, q, r),
             "formula " + count_parameters(p, q, r).str() + " vs enumerated " + std::to_string(params.size()));

  std::set<std::string> grs_images;
  for (const auto& g : params) {
    const std::string label = g.to_string();
    OracleOptions o = opt;
    o.seed = sample_seed;
    sample_seed += static_cast<std::uint64_t>(opt.trials * (opt.retries + 1));
    detail::guarded(rep, "oracle-phi-k", label, [&] { return oracle_phi_k(g, o) == phi_k(g); });
    detail::guarded(rep, "oracle-phi-s", label, [&] { return oracle_phi_s(g, o) == phi_s(g); });
    detail::guarded(rep, "power-identities", label, [&] { return power_identity_check(sample_conormal(g, opt.bound, o.seed), 3); });
    detail::guarded(rep, "rank-matrix-roundtrip", label, [&] { return omega_from_rank_matrix(rank_matrix(g)) == g; });
    detail::guarded(rep, "classify-roundtrip", label,
                    [&] { return classify_subspace(representative_matrix(g), g.p(), g.q()) == g; });
    detail::guarded(rep, "star-identities", label, [&] {
      const GrsTuple t = grs(g);
      const auto [wp, wm] = wk_permutations(g);
      return rs_correspondence(wp).first == t.T1 && rs_correspondence(wm).first == t.T2;
    });
    detail::guarded(rep, "grs-roundtrip", label, [&] {
      const GrsTuple t = grs(g);
      grs_images.insert(Json(t).dump());
      return grs_inverse(t, r) == g;
    });
    detail::guarded(rep, "duality", label, [&] {
      const KTypePair k = phi_k(g), kd = phi_k(dual(g));
      return kd.lambda == k.mu && kd.mu == k.lambda && phi_s(dual(g)) == phi_s(g).starred() && dual(dual(g)) == g;
    });
  }
  rep.record("grs-injective", grs_images.size() == params.size(), "distinct gRS images");

  detail::guarded(rep, "hasse", "transitive reduction vs covers", [&] {
    const HasseDiagram h = hasse_diagram(p, q, r, bound);
    for (const auto& [u, l] : h.cover_edges)
      if (h.dimensions[u] != h.dimensions[l] + 1) return false;
    return true;
  });

  std::map<std::pair<std::string, std::string>, std::uint64_t> fiber_sizes;
  for (const auto& g : params) {
    const KTypePair k = phi_k(g);
    ++fiber_sizes[{k.lambda.to_string(), k.mu.to_string()}];
  }
  std::uint64_t total = 0;
  for (const auto& lambda : partitions_of(p))
    for (const auto& mu : partitions_of(q)) {
      const std::uint64_t formula = fiber_cardinality(lambda, mu, r);
      const auto it = fiber_sizes.find({lambda.to_string(), mu.to_string()});
      const std::uint64_t counted = it == fiber_sizes.end() ? 0 : it->second;
      total += formula;
      rep.record("fiber-cardinality", formula == counted,
                 lambda.to_string() + "," + mu.to_string() + ": formula " + std::to_string(formula) + " vs " +
                     std::to_string(counted));
    }
  rep.record("fiber-total", BigInt(total) == count_parameters(p, q, r), "sum of fiber cardinalities");
  return rep;
}

}  // namespace aiii
