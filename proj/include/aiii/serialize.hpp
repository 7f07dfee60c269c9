#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aiii/error.hpp"
#include "aiii/grs.hpp"
#include "aiii/orbit.hpp"
#include "aiii/partition.hpp"
#include "aiii/poset.hpp"
#include "aiii/signed_diagram.hpp"
#include "aiii/steinberg.hpp"
#include "aiii/tableau.hpp"

namespace aiii {

using Json = nlohmann::ordered_json;

inline void to_json(Json& j, const Partition& p) { j = p.parts(); }
inline void to_json(Json& j, const StandardTableau& t) { j = t.rows(); }
inline void to_json(Json& j, const SignedYoungDiagram& d) { j = d.to_strings(); }
inline void to_json(Json& j, const RankMatrix& r) { j = r.entries; }

inline void to_json(Json& j, const BijectionWord& w) {
  j = Json::array();
  for (const auto& [s, t] : w.pairs()) j.push_back({s, t});
}

inline void to_json(Json& j, const OrbitGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, c] : g.edges()) edges.push_back({a, c});
  j = Json{{"p", g.p()}, {"q", g.q()}, {"r", g.r()}, {"edges", edges}, {"plus", g.plus_marks()}, {"minus", g.minus_marks()}};
}

inline void to_json(Json& j, const GrsTuple& t) {
  j = Json{{"T1", t.T1}, {"T2", t.T2}, {"lambdaPrime", t.lambda_prime}, {"muPrime", t.mu_prime}, {"nu", t.nu}};
}

inline OrbitGraph orbit_from_json(const Json& j) {
  try {
    std::vector<OrbitGraph::Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    OrbitGraph g(j.at("p").get<int>(), j.at("q").get<int>(), std::move(edges), j.at("plus").get<std::vector<int>>(),
                 j.at("minus").get<std::vector<int>>());
    if (j.contains("r") && j.at("r").get<int>() != g.r()) throw ValidationError("orbit JSON: r does not match");
    return g;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("orbit JSON: ") + e.what());
  }
}

// Everything the library computes for one parameter.
inline Json report_json(const OrbitGraph& g) {
  const DerivedData d = derived_data(g);
  const auto [wkp, wkm] = wk_permutations(g);
  const auto [wsp, wsm] = ws_bijections(g);
  const KTypePair k = phi_k(g);
  const GrassmannInvariants gi = grassmann_invariants(g);
  Json derived{{"I", d.I},         {"L", d.L},       {"Lprime", d.Lp}, {"J", d.J},           {"M", d.M},
               {"Mprime", d.Mp},   {"sigma", d.sigma}, {"k", d.k},     {"s", d.s},           {"t", d.t},
               {"aPlus", d.a_plus}, {"aMinus", d.a_minus}, {"b", d.b},  {"c", d.c}};
  return Json{{"omega", g.to_string()},
              {"graph", g},
              {"derived", derived},
              {"rankMatrix", rank_matrix(g)},
              {"dimension", dimension(g)},
              {"wkPlus", wkp.word()},
              {"wkMinus", wkm.word()},
              {"wsPlus", wsp},
              {"wsMinus", wsm},
              {"lambda", k.lambda},
              {"mu", k.mu},
              {"Lambda", phi_s(g)},
              {"grs", grs(g)},
              {"grassmann", {{"sPlus", gi.s_plus}, {"tMinus", gi.t_minus}, {"kOrbitDimension", gi.k_orbit_dimension}}}};
}

inline Json hasse_json(const HasseDiagram& h) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
    nodes.push_back({{"omega", h.nodes[i].to_string()}, {"dimension", h.dimensions[i]}});
  Json cov = Json::array();
  for (const auto& [u, l] : h.cover_edges) cov.push_back({u, l});
  return Json{{"nodes", nodes}, {"covers", cov}};
}

}  // namespace aiii
