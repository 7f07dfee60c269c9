#pragma once

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aiii/error.hpp"
#include "aiii/matrix.hpp"
#include "aiii/tableau.hpp"

namespace aiii {

// Marked matching graph on vertices 1+..p+ and 1-..q-: a partial matching
// between the two rows plus marked unmatched vertices. Identifies one orbit.
class OrbitGraph {
public:
  using Edge = std::pair<int, int>;  // (a, c): a+ joined to c-

  OrbitGraph() = default;
  OrbitGraph(int p, int q, std::vector<Edge> edges, std::vector<int> plus, std::vector<int> minus)
      : p_(p), q_(q), edges_(std::move(edges)), plus_(std::move(plus)), minus_(std::move(minus)) {
    std::sort(edges_.begin(), edges_.end());
    std::sort(plus_.begin(), plus_.end());
    std::sort(minus_.begin(), minus_.end());
    r_ = static_cast<int>(edges_.size() + plus_.size() + minus_.size());
    validate();
  }

  // Parses "<p>x<q>x<r>:<edges>:<plus>:<minus>", e.g. "5x3x4:2-3,4-1:5:2".
  static OrbitGraph parse(std::string_view s);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& plus_marks() const { return plus_; }
  const std::vector<int>& minus_marks() const { return minus_; }

  std::string to_string() const {
    std::string s = std::to_string(p_) + "x" + std::to_string(q_) + "x" + std::to_string(r_) + ":";
    for (std::size_t i = 0; i < edges_.size(); ++i)
      s += (i ? "," : "") + std::to_string(edges_[i].first) + "-" + std::to_string(edges_[i].second);
    s += ":";
    for (std::size_t i = 0; i < plus_.size(); ++i) s += (i ? "," : "") + std::to_string(plus_[i]);
    s += ":";
    for (std::size_t i = 0; i < minus_.size(); ++i) s += (i ? "," : "") + std::to_string(minus_[i]);
    return s;
  }

  friend bool operator==(const OrbitGraph&, const OrbitGraph&) = default;

private:
  void validate() const {
    if (p_ < 0 || q_ < 0) throw ValidationError("p and q must be nonnegative");
    std::vector<int> deg_plus(static_cast<std::size_t>(p_) + 1, 0), deg_minus(static_cast<std::size_t>(q_) + 1, 0);
    auto touch = [](std::vector<int>& deg, int v, int n, const char* side) {
      if (v < 1 || v > n)
        throw ValidationError(std::string("vertex ") + std::to_string(v) + side + " out of range");
      if (deg[static_cast<std::size_t>(v)]++)
        throw ValidationError(std::string("vertex ") + std::to_string(v) + side + " used twice");
    };
    for (const auto& [a, c] : edges_) {
      touch(deg_plus, a, p_, "+");
      touch(deg_minus, c, q_, "-");
    }
    for (int a : plus_) touch(deg_plus, a, p_, "+");
    for (int c : minus_) touch(deg_minus, c, q_, "-");
  }

  int p_ = 0, q_ = 0, r_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> plus_, minus_;
};

namespace detail {

inline int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ValidationError("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::vector<int> parse_int_list(std::string_view s, std::string_view what) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (auto part : split(s, ',')) out.push_back(parse_int(part, what));
  return out;
}

}  // namespace detail

inline OrbitGraph OrbitGraph::parse(std::string_view s) {
  auto sections = detail::split(s, ':');
  if (sections.size() != 4) throw ValidationError("orbit string needs 4 ':'-separated sections: '" + std::string(s) + "'");
  auto dims = detail::split(sections[0], 'x');
  if (dims.size() != 3) throw ValidationError("orbit string must start with <p>x<q>x<r>");
  int p = detail::parse_int(dims[0], "p"), q = detail::parse_int(dims[1], "q"), r = detail::parse_int(dims[2], "r");
  std::vector<Edge> edges;
  if (!sections[1].empty()) {
    for (auto e : detail::split(sections[1], ',')) {
      auto ends = detail::split(e, '-');
      if (ends.size() != 2) throw ValidationError("edge must look like a-c: '" + std::string(e) + "'");
      edges.emplace_back(detail::parse_int(ends[0], "edge end"), detail::parse_int(ends[1], "edge end"));
    }
  }
  OrbitGraph g(p, q, std::move(edges), detail::parse_int_list(sections[2], "plus mark"),
               detail::parse_int_list(sections[3], "minus mark"));
  if (g.r() != r)
    throw ValidationError("orbit string declares r=" + std::to_string(r) + " but has " + std::to_string(g.r()) +
                          " edges and marks");
  return g;
}

enum class Degree { free = 0, edge = 1, marked = 2 };

// Sets, bijection and numerical invariants attached to a parameter graph.
struct DerivedData {
  std::vector<int> I, L, Lp;  // + vertices: on an edge, marked, free
  std::vector<int> J, M, Mp;  // - vertices: on an edge, marked, free
  BijectionWord sigma;        // J -> I, sigma(j) = i iff (i, j) is an edge
  int k = 0, s = 0, t = 0, sp = 0, tp = 0;
  int a_plus = 0, a_minus = 0, b = 0, c = 0;

  int sigma_of(int j) const {
    for (const auto& [src, tgt] : sigma.pairs())
      if (src == j) return tgt;
    throw ValidationError("sigma is not defined at " + std::to_string(j));
  }
  int sigma_inv_of(int i) const {
    for (const auto& [src, tgt] : sigma.pairs())
      if (tgt == i) return src;
    throw ValidationError("sigma^-1 is not defined at " + std::to_string(i));
  }
};

inline std::vector<Degree> plus_degrees(const OrbitGraph& g) {
  std::vector<Degree> deg(static_cast<std::size_t>(g.p()) + 1, Degree::free);
  for (const auto& [a, c] : g.edges()) deg[static_cast<std::size_t>(a)] = Degree::edge;
  for (int a : g.plus_marks()) deg[static_cast<std::size_t>(a)] = Degree::marked;
  return deg;
}

inline std::vector<Degree> minus_degrees(const OrbitGraph& g) {
  std::vector<Degree> deg(static_cast<std::size_t>(g.q()) + 1, Degree::free);
  for (const auto& [a, c] : g.edges()) deg[static_cast<std::size_t>(c)] = Degree::edge;
  for (int c : g.minus_marks()) deg[static_cast<std::size_t>(c)] = Degree::marked;
  return deg;
}

namespace detail {
inline int degree_ascents(const std::vector<Degree>& deg) {
  int n = 0;
  for (std::size_t i = 1; i < deg.size(); ++i)
    for (std::size_t j = i + 1; j < deg.size(); ++j)
      if (deg[i] < deg[j]) ++n;
  return n;
}
}  // namespace detail

inline DerivedData derived_data(const OrbitGraph& g) {
  DerivedData d;
  const auto dp = plus_degrees(g);
  const auto dm = minus_degrees(g);
  for (int a = 1; a <= g.p(); ++a) {
    switch (dp[static_cast<std::size_t>(a)]) {
      case Degree::edge: d.I.push_back(a); break;
      case Degree::marked: d.L.push_back(a); break;
      case Degree::free: d.Lp.push_back(a); break;
    }
  }
  for (int c = 1; c <= g.q(); ++c) {
    switch (dm[static_cast<std::size_t>(c)]) {
      case Degree::edge: d.J.push_back(c); break;
      case Degree::marked: d.M.push_back(c); break;
      case Degree::free: d.Mp.push_back(c); break;
    }
  }
  std::vector<BijectionWord::Pair> pairs;
  for (const auto& [a, c] : g.edges()) pairs.emplace_back(c, a);
  d.sigma = BijectionWord(std::move(pairs));
  d.k = static_cast<int>(d.I.size());
  d.s = static_cast<int>(d.L.size());
  d.t = static_cast<int>(d.M.size());
  d.sp = static_cast<int>(d.Lp.size());
  d.tp = static_cast<int>(d.Mp.size());
  d.a_plus = detail::degree_ascents(dp);
  d.a_minus = detail::degree_ascents(dm);
  d.b = d.k;
  const auto& e = g.edges();
  for (std::size_t x = 0; x < e.size(); ++x)
    for (std::size_t y = x + 1; y < e.size(); ++y)
      if ((e[x].first < e[y].first) != (e[x].second < e[y].second)) ++d.c;
  return d;
}

// r_{i,j}: number of edges and marks among vertices 1+..i+ and 1-..j-.
struct RankMatrix {
  int p = 0, q = 0, r = 0;
  std::vector<std::vector<int>> entries;  // (p+1) x (q+1)

  int operator()(int i, int j) const { return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  // Second difference e_{i,j}, with out-of-range terms zero.
  int second_difference(int i, int j) const {
    auto at = [&](int a, int b) { return a < 0 || b < 0 ? 0 : (*this)(a, b); };
    return at(i, j) - at(i - 1, j) - at(i, j - 1) + at(i - 1, j - 1);
  }

  friend bool operator==(const RankMatrix&, const RankMatrix&) = default;
};

inline RankMatrix rank_matrix(const OrbitGraph& g) {
  RankMatrix R{g.p(), g.q(), g.r(), {}};
  // E(omega) as unit masses at (a,c), (a,0), (0,c), then 2D prefix sums
  std::vector<std::vector<int>> e(static_cast<std::size_t>(g.p()) + 1, std::vector<int>(static_cast<std::size_t>(g.q()) + 1, 0));
  for (const auto& [a, c] : g.edges()) e[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = 1;
  for (int a : g.plus_marks()) e[static_cast<std::size_t>(a)][0] = 1;
  for (int c : g.minus_marks()) e[0][static_cast<std::size_t>(c)] = 1;
  R.entries = e;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e[i].size(); ++j) {
      int v = e[i][j];
      if (i) v += R.entries[i - 1][j];
      if (j) v += R.entries[i][j - 1];
      if (i && j) v -= R.entries[i - 1][j - 1];
      R.entries[i][j] = v;
    }
  return R;
}

// Inverse of rank_matrix, reading E(omega) off the second differences.
inline OrbitGraph omega_from_rank_matrix(const RankMatrix& R) {
  if (R.p < 0 || R.q < 0 || R.entries.size() != static_cast<std::size_t>(R.p) + 1)
    throw ValidationError("not a rank matrix: wrong number of rows");
  for (const auto& row : R.entries)
    if (row.size() != static_cast<std::size_t>(R.q) + 1) throw ValidationError("not a rank matrix: wrong row length");
  if (R(0, 0) != 0) throw ValidationError("not a rank matrix: r_{0,0} != 0");
  if (R(R.p, R.q) != R.r) throw ValidationError("not a rank matrix: r_{p,q} != r");
  std::vector<OrbitGraph::Edge> edges;
  std::vector<int> plus, minus;
  std::vector<int> row_use(static_cast<std::size_t>(R.p) + 1, 0), col_use(static_cast<std::size_t>(R.q) + 1, 0);
  for (int i = 0; i <= R.p; ++i)
    for (int j = 0; j <= R.q; ++j) {
      int e = R.second_difference(i, j);
      if (e != 0 && e != 1) throw ValidationError("not a rank matrix: second difference outside {0,1}");
      if (e == 0) continue;
      if (i > 0 && row_use[static_cast<std::size_t>(i)]++) throw ValidationError("not a rank matrix: row step exceeds 1");
      if (j > 0 && col_use[static_cast<std::size_t>(j)]++) throw ValidationError("not a rank matrix: column step exceeds 1");
      if (i > 0 && j > 0) edges.emplace_back(i, j);
      else if (i > 0) plus.push_back(i);
      else minus.push_back(j);
    }
  OrbitGraph g(R.p, R.q, std::move(edges), std::move(plus), std::move(minus));
  if (g.r() != R.r) throw ValidationError("not a rank matrix: r does not match");
  return g;
}

// p(p-1)/2 + q(q-1)/2 + a+ + a- + b(b+1)/2 + c
inline int dimension(const OrbitGraph& g) {
  const DerivedData d = derived_data(g);
  return g.p() * (g.p() - 1) / 2 + g.q() * (g.q() - 1) / 2 + d.a_plus + d.a_minus + d.b * (d.b + 1) / 2 + d.c;
}

// Dimension of the ambient variety: r(p+q-r) + p(p-1)/2 + q(q-1)/2.
inline int ambient_dimension(int p, int q, int r) { return r * (p + q - r) + p * (p - 1) / 2 + q * (q - 1) / 2; }

inline constexpr int kDefaultEnumerationBound = 6;

namespace detail {
inline void check_bounds(int p, int q, int r, int bound) {
  if (p < 0 || q < 0 || r < 0) throw ValidationError("p, q, r must be nonnegative");
  if (r > p + q) throw ValidationError("r must not exceed p+q");
  if (p > bound || q > bound)
    throw RefusalError("p, q must not exceed the enumeration bound " + std::to_string(bound));
}
}  // namespace detail

// Every parameter graph for (p, q, r), sorted by canonical string.
inline std::vector<OrbitGraph> enumerate_parameters(int p, int q, int r, int bound = kDefaultEnumerationBound) {
  detail::check_bounds(p, q, r, bound);
  std::vector<OrbitGraph> out;
  std::vector<OrbitGraph::Edge> edges;
  std::vector<int> plus, minus;
  std::vector<bool> used(static_cast<std::size_t>(q) + 1, false);
  auto minus_side = [&](auto&& self, int c, int count) -> void {
    if (count > r) return;
    if (c > q) {
      if (count == r) out.emplace_back(p, q, edges, plus, minus);
      return;
    }
    self(self, c + 1, count);
    if (!used[static_cast<std::size_t>(c)]) {
      minus.push_back(c);
      self(self, c + 1, count + 1);
      minus.pop_back();
    }
  };
  auto plus_side = [&](auto&& self, int a, int count) -> void {
    if (count > r) return;
    if (a > p) {
      minus_side(minus_side, 1, count);
      return;
    }
    self(self, a + 1, count);
    plus.push_back(a);
    self(self, a + 1, count + 1);
    plus.pop_back();
    for (int c = 1; c <= q; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      used[static_cast<std::size_t>(c)] = true;
      edges.emplace_back(a, c);
      self(self, a + 1, count + 1);
      edges.pop_back();
      used[static_cast<std::size_t>(c)] = false;
    }
  };
  plus_side(plus_side, 1, 0);
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(out[i].to_string(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<OrbitGraph> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(out[i]));
  return sorted;
}

namespace detail {
inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
}  // namespace detail

// Closed form: sum over k+s+t=r, s'=p-k-s>=0, t'=q-k-t>=0 of
// p!/(k! s! s'!) * q!/(k! t! t'!) * k!.
inline BigInt count_parameters(int p, int q, int r) {
  using detail::factorial;
  BigInt total = 0;
  for (int k = 0; k <= r; ++k)
    for (int s = 0; s <= r - k; ++s) {
      int t = r - k - s;
      int sp = p - k - s, tp = q - k - t;
      if (sp < 0 || tp < 0) continue;
      total += factorial(p) / (factorial(k) * factorial(s) * factorial(sp)) * factorial(q) /
               (factorial(k) * factorial(t) * factorial(tp)) * factorial(k);
    }
  return total;
}

// 0/1 matrix of size (p+q) x r whose image is [omega]. Columns: edges by a,
// then plus marks, then minus marks.
inline RationalMatrix representative_matrix(const OrbitGraph& g) {
  RationalMatrix m(static_cast<std::size_t>(g.p() + g.q()), static_cast<std::size_t>(g.r()));
  std::size_t col = 0;
  for (const auto& [a, c] : g.edges()) {
    m(static_cast<std::size_t>(a - 1), col) = 1;
    m(static_cast<std::size_t>(g.p() + c - 1), col) = 1;
    ++col;
  }
  for (int a : g.plus_marks()) m(static_cast<std::size_t>(a - 1), col++) = 1;
  for (int c : g.minus_marks()) m(static_cast<std::size_t>(g.p() + c - 1), col++) = 1;
  return m;
}

// Identifies the orbit of the subspace spanned by the columns of m (rank r):
// r_{i,j} = dim(W) + dim(U) - dim(W + U) with U = span(e1+..ei+, e1-..ej-).
inline OrbitGraph classify_subspace(const RationalMatrix& m, int p, int q) {
  if (m.rows() != static_cast<std::size_t>(p + q))
    throw ValidationError("classify: matrix must have p+q rows");
  const int r = static_cast<int>(m.cols());
  if (static_cast<int>(rank(m)) != r) throw ValidationError("classify: matrix columns are not linearly independent");
  RankMatrix R{p, q, r, std::vector<std::vector<int>>(static_cast<std::size_t>(p) + 1, std::vector<int>(static_cast<std::size_t>(q) + 1, 0))};
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j <= q; ++j) {
      RationalMatrix u(static_cast<std::size_t>(p + q), static_cast<std::size_t>(i + j));
      for (int a = 0; a < i; ++a) u(static_cast<std::size_t>(a), static_cast<std::size_t>(a)) = 1;
      for (int c = 0; c < j; ++c) u(static_cast<std::size_t>(p + c), static_cast<std::size_t>(i + c)) = 1;
      const int sum = static_cast<int>(rank(m.hconcat(u)));
      R.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r + i + j - sum;
    }
  return omega_from_rank_matrix(R);
}

// Switches the two vertex rows.
inline OrbitGraph dual(const OrbitGraph& g) {
  std::vector<OrbitGraph::Edge> edges;
  for (const auto& [a, c] : g.edges()) edges.emplace_back(c, a);
  return OrbitGraph(g.q(), g.p(), std::move(edges), g.minus_marks(), g.plus_marks());
}

struct GrassmannInvariants {
  int s_plus = 0;   // dim W cap V+
  int t_minus = 0;  // dim W cap V-
  int k_orbit_dimension = 0;

  friend bool operator==(const GrassmannInvariants&, const GrassmannInvariants&) = default;
};

// Invariants of the K-orbit of [omega] in the Grassmannian.
inline GrassmannInvariants grassmann_invariants(const OrbitGraph& g) {
  const RankMatrix R = rank_matrix(g);
  const int s = R(g.p(), 0), t = R(0, g.q());
  const int k = g.r() - s - t;
  return {s, t, (s + k) * (g.p() - s) + (t + k) * (g.q() - t) - k * k};
}

}  // namespace aiii
