// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "aiii/grs.hpp"
#include "aiii/oracle.hpp"
#include "aiii/poset.hpp"
#include "aiii/serialize.hpp"
#include "aiii/steinberg.hpp"
#include "support.hpp"

using namespace aiii;
using testsupport::kOmega0;

namespace {

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string s;
    for (const auto& n : notes_) s += "\n    " + n;
    if (failures_ > 5) s += "\n    ... " + std::to_string(failures_ - 5) + " more";
    return s;
  }

 private:
  int failures_ = 0;
  std::vector<std::string> notes_;
};

template <typename F>
void for_all_sizes(int max_p, int max_q, F f) {
  for (int p = 0; p <= max_p; ++p)
    for (int q = 0; q <= max_q; ++q)
      for (int r = 0; r <= p + q; ++r) f(p, q, r);
}

std::string pair_key(const KTypePair& k) { return k.lambda.to_string() + k.mu.to_string(); }

void counts(Check& c) {
  c.expect(enumerate_parameters(2, 2, 2).size() == 16, "enumerate(2,2,2) != 16");
  c.expect(enumerate_parameters(3, 2, 2).size() == 34, "enumerate(3,2,2) != 34");
  for_all_sizes(3, 3, [&](int p, int q, int r) {
    const auto n = enumerate_parameters(p, q, r).size();
    c.expect(count_parameters(p, q, r) == n, "count != enumeration at " + std::to_string(p) + "," +
                                                 std::to_string(q) + "," + std::to_string(r));
    c.expect(testsupport::brute_parameters(p, q, r).size() == n, "brute force disagrees");
  });
}

void pipeline(Check& c) {
  const auto g = OrbitGraph::parse(kOmega0);
  const auto d = derived_data(g);
  c.expect(d.I == std::vector<int>{2, 4} && d.L == std::vector<int>{5} && d.Lp == std::vector<int>{1, 3},
           "plus-side vertex classes");
  c.expect(d.J == std::vector<int>{1, 3} && d.M == std::vector<int>{2} && d.Mp.empty(), "minus-side vertex classes");
  c.expect(d.sigma == BijectionWord({{1, 4}, {3, 2}}), "sigma");
  c.expect(d.a_plus == 7 && d.a_minus == 1 && d.b == 2 && d.c == 1, "(a+, a-, b, c) != (7, 1, 2, 1)");
  const RankMatrix R{5, 3, 4, {{0, 0, 1, 1}, {0, 0, 1, 1}, {0, 0, 1, 2}, {0, 0, 1, 2}, {0, 1, 2, 3}, {1, 2, 3, 4}}};
  c.expect(rank_matrix(g) == R, "rank matrix");
  const auto [kp, km] = wk_permutations(g);
  c.expect(kp.word() == std::vector<int>{5, 4, 2, 3, 1}, "w_k+");
  c.expect(km.word() == std::vector<int>{2, 3, 1}, "w_k-");
  const auto [sp, sm] = ws_bijections(g);
  c.expect(sp == BijectionWord({{1, 4}, {2, -1}, {3, 2}, {4, 3}, {5, 1}}), "w_s+ = " + sp.to_string());
  c.expect(sm == BijectionWord({{2, 3}, {4, 1}, {5, -1}}), "w_s- = " + sm.to_string());
  c.expect(phi_k(g) == KTypePair{Partition({2, 1, 1, 1}), Partition({2, 1})}, "(lambda, mu)");
  c.expect(insertion_shape(sp) == Partition({3, 1, 1}), "lambda' from w_s+");
  c.expect(insertion_shape(sm) == Partition({1, 1, 1}), "mu' from w_s-");
  c.expect(phi_s(g) == SignedYoungDiagram::parse({"-+", "-+", "+", "+", "+", "-"}), "Lambda = " + phi_s(g).to_string());
  const auto t = grs(g);
  c.expect(t.T1 == StandardTableau({{1, 3}, {2}, {4}, {5}}) && t.T2 == StandardTableau({{1, 3}, {2}}), "gRS tableaux");
  c.expect(t.lambda_prime == Partition({1, 1, 1}) && t.mu_prime == Partition({2, 1}) && t.nu == Partition({1, 1}),
           "gRS shapes");
}

void type_multisets(Check& c) {
  std::map<std::string, int> pairs, diagrams;
  for (const auto& g : enumerate_parameters(2, 2, 2)) {
    ++pairs[pair_key(phi_k(g))];
    ++diagrams[phi_s(g).to_string()];
  }
  const std::map<std::string, int> want_pairs{
      {pair_key({Partition({1, 1}), Partition({1, 1})}), 6},
      {pair_key({Partition({2}), Partition({2})}), 4},
      {pair_key({Partition({1, 1}), Partition({2})}), 3},
      {pair_key({Partition({2}), Partition({1, 1})}), 3}};
  const auto sd = [](std::vector<std::string> rows) { return SignedYoungDiagram::parse(rows).to_string(); };
  const std::map<std::string, int> want_diagrams{{sd({"+", "+", "-", "-"}), 1}, {sd({"+-", "+", "-"}), 3},
                                                 {sd({"-+", "+", "-"}), 3},     {sd({"+-", "-+"}), 5},
                                                 {sd({"+-", "+-"}), 2},         {sd({"-+", "-+"}), 2}};
  c.expect(pairs == want_pairs, "multiset of (lambda, mu)");
  c.expect(diagrams == want_diagrams, "multiset of Lambda");
}

void oracle_equivalence(Check& c) {
  const auto compare = [&](const OrbitGraph& g) {
    c.expect(oracle_phi_k(g) == phi_k(g), "phi_k mismatch at " + g.to_string());
    c.expect(oracle_phi_s(g) == phi_s(g), "phi_s mismatch at " + g.to_string());
  };
  for_all_sizes(3, 3, [&](int p, int q, int r) {
    for (const auto& g : enumerate_parameters(p, q, r)) compare(g);
  });
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) compare(testsupport::random_parameter(4, 4, rng));
}

void poset_consistency(Check& c) {
  for_all_sizes(3, 3, [&](int p, int q, int r) {
    const auto h = hasse_diagram(p, q, r);
    const auto naive = testsupport::naive_covers(
        h.nodes.size(), [&](std::size_t a, std::size_t b) { return a != b && leq(h.nodes[a], h.nodes[b]); });
    c.expect(h.cover_edges == naive, "covers != transitive reduction");
    for (const auto& [u, l] : h.cover_edges)
      c.expect(h.dimensions[u] == h.dimensions[l] + 1, "cover does not drop dimension by 1");
  });
  std::map<int, int> hist;
  for (int d : hasse_diagram(2, 2, 2).dimensions) ++hist[d];
  c.expect(hist == std::map<int, int>{{6, 1}, {5, 3}, {4, 5}, {3, 4}, {2, 3}}, "(2,2,2) dimension histogram");
}

void grs_bijectivity(Check& c) {
  for_all_sizes(3, 3, [&](int p, int q, int r) {
    const auto gs = enumerate_parameters(p, q, r);
    std::set<std::string> images;
    std::map<std::string, std::uint64_t> sizes;
    for (const auto& g : gs) {
      const auto t = grs(g);
      images.insert(Json(t).dump());
      c.expect(grs_inverse(t, r) == g, "roundtrip at " + g.to_string());
      ++sizes[pair_key(phi_k(g))];
    }
    c.expect(images.size() == gs.size(), "gRS not injective");
    // every tuple satisfying the strip conditions, counted independently
    std::uint64_t valid = 0, total = 0;
    for (const auto& lambda : partitions_of(p))
      for (const auto& mu : partitions_of(q)) {
        std::uint64_t chains = 0;
        for (int k = 0; k <= std::min(p, q); ++k)
          for (const auto& nu : partitions_of(k))
            for (int a = k; a <= p; ++a)
              for (const auto& lp : partitions_of(a))
                for (int b = k; b <= q; ++b)
                  for (const auto& mp : partitions_of(b))
                    if (a + b == k + r && is_column_strip(nu, lp) && is_column_strip(lp, lambda) &&
                        is_column_strip(nu, mp) && is_column_strip(mp, mu))
                      ++chains;
        valid += chains * count_standard_tableaux(lambda) * count_standard_tableaux(mu);
        const auto f = fiber_cardinality(lambda, mu, r);
        c.expect(f == sizes[lambda.to_string() + mu.to_string()], "fiber formula at " + lambda.to_string() + mu.to_string());
        total += f;
      }
    c.expect(valid == gs.size(), "image is not the set of valid tuples");
    c.expect(count_parameters(p, q, r) == total, "fiber sizes do not sum to the count");
  });
}

void star_identities(Check& c) {
  for_all_sizes(4, 4, [&](int p, int q, int r) {
    for (const auto& g : enumerate_parameters(p, q, r)) {
      const auto d = derived_data(g);
      const auto [rs1, rs2] = rs_correspondence(d.sigma);
      const auto [wp, wm] = wk_permutations(g);
      const auto left = star_product(star_product(StandardTableau::column(d.L), rs1), StandardTableau::column(d.Lp));
      const auto right = star_product(star_product(StandardTableau::column(d.M), rs2), StandardTableau::column(d.Mp));
      c.expect(rs_correspondence(wp).first == left, "plus identity at " + g.to_string());
      c.expect(rs_correspondence(wm).first == right, "minus identity at " + g.to_string());
    }
  });
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    std::uniform_int_distribution<int> size(0, 5);
    std::vector<int> pool(15);
    for (int k = 0; k < 15; ++k) pool[static_cast<std::size_t>(k)] = k + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    const auto take = [&](std::size_t from, std::size_t n) {
      return std::vector<int>(pool.begin() + static_cast<std::ptrdiff_t>(from),
                              pool.begin() + static_cast<std::ptrdiff_t>(from + n));
    };
    const auto n1 = static_cast<std::size_t>(size(rng)), n2 = static_cast<std::size_t>(size(rng)),
               n3 = static_cast<std::size_t>(size(rng));
    const auto t = testsupport::random_tableau(take(0, n1), rng);
    const auto s = testsupport::random_tableau(take(n1, n2), rng);
    const auto u = testsupport::random_tableau(take(n1 + n2, n3), rng);
    c.expect(star_product(star_product(t, s), u) == star_product(t, star_product(s, u)),
             "associativity for " + t.to_string() + " " + s.to_string() + " " + u.to_string());
  }
  const auto w = star_product(StandardTableau({{1, 3}, {6}}), StandardTableau({{2, 4, 5}, {7}}));
  c.expect(w == StandardTableau({{1, 2, 4, 5}, {3, 7}, {6}}), "worked example gives " + w.to_string());
}

void power_identities(Check& c) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> side(0, 4);
  for (int i = 0; i < 100; ++i) {
    const auto g = testsupport::random_parameter(side(rng), side(rng), rng);
    const auto e = sample_conormal(g, kDefaultSampleBound, static_cast<std::uint64_t>(i));
    c.expect((e.x * e.x).is_zero(), "x^2 != 0 at " + g.to_string());
    c.expect(power_identity_check(e, 3), "power identities fail at " + g.to_string());
  }
}

void grassmann(Check& c) {
  std::set<std::pair<int, int>> classes;
  std::map<std::pair<int, int>, int> dims;
  for (const auto& g : enumerate_parameters(2, 2, 2)) {
    const auto inv = grassmann_invariants(g);
    const std::pair<int, int> key{inv.s_plus, inv.t_minus};
    if (classes.insert(key).second) dims[key] = inv.k_orbit_dimension;
    c.expect(dims[key] == inv.k_orbit_dimension, "K-orbit dimension not constant on a class");
  }
  std::multiset<int> got;
  for (const auto& [key, d] : dims) got.insert(d);
  c.expect(classes.size() == 6, "class count " + std::to_string(classes.size()));
  c.expect(got == std::multiset<int>{4, 3, 3, 2, 0, 0}, "K-orbit dimension multiset");
}

void degenerate(Check& c) {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q)
      for (int r : {0, p + q}) {
        const auto gs = enumerate_parameters(p, q, r);
        c.expect(gs.size() == 1, "not a single parameter");
        if (gs.size() != 1) continue;
        const auto& g = gs.front();
        c.expect(sample_conormal(g, kDefaultSampleBound, 1).x.is_zero(), "conormal space not zero at " + g.to_string());
        c.expect(phi_k(g) == KTypePair{Partition::column(p), Partition::column(q)}, "phi_k at " + g.to_string());
        c.expect(phi_s(g).width() <= 1 && phi_s(g).plus_count() == p && phi_s(g).minus_count() == q,
                 "phi_s at " + g.to_string());
        c.expect(oracle_phi_s(g) == phi_s(g), "oracle phi_s at " + g.to_string());
      }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"enumeration counts", counts},
      {"worked example pipeline", pipeline},
      {"(2,2,2) multisets of K-types and signed diagrams", type_multisets},
      {"oracle equivalence", oracle_equivalence},
      {"poset consistency", poset_consistency},
      {"gRS bijectivity and fiber formula", grs_bijectivity},
      {"star product identities", star_identities},
      {"conormal power identities", power_identities},
      {"Grassmannian invariants", grassmann},
      {"degenerate cases", degenerate},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << ms.count() << " ms)" << c.summary() << '\n';
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
