#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "aiii/error.hpp"
#include "aiii/orbit.hpp"

namespace aiii {

// Closure order: leq(w, w') iff r_{i,j}(w) >= r_{i,j}(w') for all (i, j).
inline bool leq(const RankMatrix& lower, const RankMatrix& upper) {
  if (lower.p != upper.p || lower.q != upper.q || lower.r != upper.r)
    throw ValidationError("leq: parameters have different (p, q, r)");
  for (int i = 0; i <= lower.p; ++i)
    for (int j = 0; j <= lower.q; ++j)
      if (lower(i, j) < upper(i, j)) return false;
  return true;
}

inline bool leq(const OrbitGraph& lower, const OrbitGraph& upper) {
  return leq(rank_matrix(lower), rank_matrix(upper));
}

namespace detail {

// Mutable vertex-state view of a parameter graph used to apply moves.
struct GraphState {
  int p = 0, q = 0;
  std::vector<int> plus_partner, minus_partner;  // 0 when not on an edge
  std::vector<bool> plus_mark, minus_mark;

  explicit GraphState(const OrbitGraph& g)
      : p(g.p()), q(g.q()),
        plus_partner(static_cast<std::size_t>(g.p()) + 1, 0), minus_partner(static_cast<std::size_t>(g.q()) + 1, 0),
        plus_mark(static_cast<std::size_t>(g.p()) + 1, false), minus_mark(static_cast<std::size_t>(g.q()) + 1, false) {
    for (const auto& [a, c] : g.edges()) link(a, c);
    for (int a : g.plus_marks()) plus_mark[static_cast<std::size_t>(a)] = true;
    for (int c : g.minus_marks()) minus_mark[static_cast<std::size_t>(c)] = true;
  }

  int& pp(int a) { return plus_partner[static_cast<std::size_t>(a)]; }
  int& mp(int c) { return minus_partner[static_cast<std::size_t>(c)]; }
  bool plus_free(int a) const { return !plus_partner[static_cast<std::size_t>(a)] && !plus_mark[static_cast<std::size_t>(a)]; }
  bool minus_free(int c) const { return !minus_partner[static_cast<std::size_t>(c)] && !minus_mark[static_cast<std::size_t>(c)]; }

  void link(int a, int c) { pp(a) = c; mp(c) = a; }
  void unlink(int a, int c) { pp(a) = 0; mp(c) = 0; }

  OrbitGraph graph() const {
    std::vector<OrbitGraph::Edge> edges;
    std::vector<int> plus, minus;
    for (int a = 1; a <= p; ++a) {
      if (plus_partner[static_cast<std::size_t>(a)]) edges.emplace_back(a, plus_partner[static_cast<std::size_t>(a)]);
      if (plus_mark[static_cast<std::size_t>(a)]) plus.push_back(a);
    }
    for (int c = 1; c <= q; ++c)
      if (minus_mark[static_cast<std::size_t>(c)]) minus.push_back(c);
    return OrbitGraph(p, q, std::move(edges), std::move(plus), std::move(minus));
  }
};

}  // namespace detail

// Every parameter reachable from upper by one elementary move (each move
// strictly lowers the orbit). Sorted by canonical string, without repeats.
inline std::vector<OrbitGraph> downward_moves(const OrbitGraph& upper) {
  const detail::GraphState base(upper);
  std::vector<OrbitGraph> out;
  auto apply = [&](auto&& edit) {
    detail::GraphState s = base;
    edit(s);
    out.push_back(s.graph());
  };
  const int p = upper.p(), q = upper.q();

  for (const auto& [a, d] : upper.edges()) {
    const int c0 = d;
    // Case 1: crossing edges (a,d), (b,c) with a<b, c<d become (a,c), (b,d)
    for (const auto& [b, c] : upper.edges())
      if (a < b && c < d)
        apply([&, a = a, b = b, c = c, d = d](detail::GraphState& s) {
          s.unlink(a, d);
          s.unlink(b, c);
          s.link(a, c);
          s.link(b, d);
        });
    // Case 2+: edge (a,c) and mark b+ with a<b become mark a+ and edge (b,c)
    for (int b = a + 1; b <= p; ++b)
      if (base.plus_mark[static_cast<std::size_t>(b)])
        apply([&, a = a, b, c0](detail::GraphState& s) {
          s.unlink(a, c0);
          s.plus_mark[static_cast<std::size_t>(b)] = false;
          s.plus_mark[static_cast<std::size_t>(a)] = true;
          s.link(b, c0);
        });
    // Case 2-: edge (a,c) and mark d- with c<d become mark c- and edge (a,d)
    for (int dd = c0 + 1; dd <= q; ++dd)
      if (base.minus_mark[static_cast<std::size_t>(dd)])
        apply([&, a = a, dd, c0](detail::GraphState& s) {
          s.unlink(a, c0);
          s.minus_mark[static_cast<std::size_t>(dd)] = false;
          s.minus_mark[static_cast<std::size_t>(c0)] = true;
          s.link(a, dd);
        });
    // Case 3+: edge (b,c) slides to a free a+ with a<b
    for (int a2 = 1; a2 < a; ++a2)
      if (base.plus_free(a2))
        apply([&, a = a, a2, c0](detail::GraphState& s) {
          s.unlink(a, c0);
          s.link(a2, c0);
        });
    // Case 3-: edge (a,d) slides to a free c- with c<d
    for (int c2 = 1; c2 < c0; ++c2)
      if (base.minus_free(c2))
        apply([&, a = a, c2, c0](detail::GraphState& s) {
          s.unlink(a, c0);
          s.link(a, c2);
        });
    // Case 4+/4-: edge (a,c) becomes a mark at one end
    apply([&, a = a, c0](detail::GraphState& s) {
      s.unlink(a, c0);
      s.plus_mark[static_cast<std::size_t>(a)] = true;
    });
    apply([&, a = a, c0](detail::GraphState& s) {
      s.unlink(a, c0);
      s.minus_mark[static_cast<std::size_t>(c0)] = true;
    });
  }
  // Case 5+/5-: a mark moves to a free vertex further left
  for (int b : upper.plus_marks())
    for (int a = 1; a < b; ++a)
      if (base.plus_free(a))
        apply([&, a, b](detail::GraphState& s) {
          s.plus_mark[static_cast<std::size_t>(b)] = false;
          s.plus_mark[static_cast<std::size_t>(a)] = true;
        });
  for (int d : upper.minus_marks())
    for (int c = 1; c < d; ++c)
      if (base.minus_free(c))
        apply([&, c, d](detail::GraphState& s) {
          s.minus_mark[static_cast<std::size_t>(d)] = false;
          s.minus_mark[static_cast<std::size_t>(c)] = true;
        });

  std::vector<std::pair<std::string, OrbitGraph>> keyed;
  for (auto& g : out) keyed.emplace_back(g.to_string(), std::move(g));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  std::vector<OrbitGraph> result;
  for (auto& [key, g] : keyed) result.push_back(std::move(g));
  return result;
}

// Lower covers of upper: the moves that drop the dimension by exactly one.
inline std::vector<OrbitGraph> covers(const OrbitGraph& upper) {
  const int dim = dimension(upper);
  std::vector<OrbitGraph> out;
  for (auto& g : downward_moves(upper))
    if (dimension(g) + 1 == dim) out.push_back(std::move(g));
  return out;
}

struct HasseDiagram {
  std::vector<OrbitGraph> nodes;
  std::vector<int> dimensions;
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges;  // (upper, lower), sorted
};

// Cover pairs of the closure order by transitive reduction of leq.
inline std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<OrbitGraph>& nodes) {
  const std::size_t n = nodes.size();
  std::vector<RankMatrix> ranks;
  for (const auto& g : nodes) ranks.push_back(rank_matrix(g));
  std::vector<boost::dynamic_bitset<>> below(n, boost::dynamic_bitset<>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && leq(ranks[v], ranks[u])) below[u].set(v);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    boost::dynamic_bitset<> indirect(n);
    for (std::size_t w = below[u].find_first(); w != boost::dynamic_bitset<>::npos; w = below[u].find_next(w))
      indirect |= below[w];
    const boost::dynamic_bitset<> direct = below[u] - indirect;
    for (std::size_t v = direct.find_first(); v != boost::dynamic_bitset<>::npos; v = direct.find_next(v))
      edges.emplace_back(u, v);
  }
  return edges;
}

// Hasse diagram of the closure order on all parameters of (p, q, r). Cover
// edges come from the elementary moves and are checked against the
// transitive reduction of leq.
inline HasseDiagram hasse_diagram(int p, int q, int r, int bound = kDefaultEnumerationBound) {
  HasseDiagram h;
  h.nodes = enumerate_parameters(p, q, r, bound);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    index.emplace(h.nodes[i].to_string(), i);
    h.dimensions.push_back(dimension(h.nodes[i]));
  }
  for (std::size_t u = 0; u < h.nodes.size(); ++u)
    for (const auto& g : covers(h.nodes[u])) h.cover_edges.emplace_back(u, index.at(g.to_string()));
  std::sort(h.cover_edges.begin(), h.cover_edges.end());
  if (transitive_reduction(h.nodes) != h.cover_edges)
    throw InternalError("hasse diagram: move covers differ from the transitive reduction of leq");
  return h;
}

// Graphviz digraph: edges point from upper to lower; nodes of equal dimension
// share a rank.
inline std::string emit_dot(const HasseDiagram& h) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  if (!h.nodes.empty()) {
    os << "  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < h.nodes.size(); ++i)
      os << "  n" << i << " [label=\"" << h.nodes[i].to_string() << "\\ndim " << h.dimensions[i] << "\"];\n";
    std::map<int, std::vector<std::size_t>, std::greater<>> by_dim;
    for (std::size_t i = 0; i < h.nodes.size(); ++i) by_dim[h.dimensions[i]].push_back(i);
    for (const auto& [dim, ids] : by_dim) {
      os << "  { rank=same;";
      for (std::size_t i : ids) os << " n" << i << ";";
      os << " }\n";
    }
    for (const auto& [u, l] : h.cover_edges) os << "  n" << u << " -> n" << l << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace aiii
