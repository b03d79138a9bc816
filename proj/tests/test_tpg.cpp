#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "branching_oracle.hpp"
#include "twistr/errors.hpp"
#include "twistr/tpg.hpp"

using namespace twistr;

namespace {

// lambda_c for the gl-type families: first c coordinates equal to one
Weight fund(int l, int c) {
  Weight w(static_cast<std::size_t>(l));
  for (int i = 0; i < c; ++i) w.twice(static_cast<std::size_t>(i)) = 2;
  return w;
}

// (a-1) lambda_l + lambda_{l-i} for the spinor family
Weight spinor_mu(int l, int a, int i) {
  Weight w(static_cast<std::size_t>(l));
  for (int t = 0; t < l; ++t) w.twice(static_cast<std::size_t>(t)) = a - 1 + (t < l - i ? 2 : 0);
  return w;
}

std::map<std::string, int> parities(const TPGraph& g) {
  std::map<std::string, int> out;
  for (const auto& n : g.nodes) out[n.label] = n.parity;
  return out;
}

std::set<std::pair<Weight, Weight>> edge_set(const TPGraph& g) {
  std::set<std::pair<Weight, Weight>> out;
  for (auto [i, j] : g.edges) {
    const Weight& a = g.nodes[static_cast<std::size_t>(i)].nu;
    const Weight& b = g.nodes[static_cast<std::size_t>(j)].nu;
    out.insert(a < b ? std::pair{a, b} : std::pair{b, a});
  }
  return out;
}

void add_edge(std::set<std::pair<Weight, Weight>>& s, const Weight& a, const Weight& b) {
  s.insert(a < b ? std::pair{a, b} : std::pair{b, a});
}

// path through the given weights in order
std::set<std::pair<Weight, Weight>> path(const std::vector<Weight>& ws) {
  std::set<std::pair<Weight, Weight>> s;
  for (std::size_t i = 0; i + 1 < ws.size(); ++i) add_edge(s, ws[i], ws[i + 1]);
  return s;
}

RatFun br(int a, int sign, const QSample& w) { return bracket(Rational(a), sign, RatFun::u(), w); }

}  // namespace

TEST_CASE("first graph: 0 -- 2λ1 -- λ2 with parities + + -") {
  for (int l = 1; l <= 4; ++l) {
    const TPGraph g = build_graph(family_spec(Family::A2Even, l), {1, 1});
    Weight twol1(static_cast<std::size_t>(l));
    twol1.twice(0) = 4;
    const Weight zero(static_cast<std::size_t>(l));
    // λ2, which folds back to λ1 when l = 1
    const Weight third = fund(l, std::min(2, 2 * l - 1));
    CHECK(edge_set(g) == path({zero, twol1, third}));
    CHECK(g.nodes.front().nu == twol1);
    CHECK(g.nodes[static_cast<std::size_t>(g.index_of(zero))].parity == 1);
    CHECK(g.nodes[static_cast<std::size_t>(g.index_of(twol1))].parity == 1);
    CHECK(g.nodes[static_cast<std::size_t>(g.index_of(third))].parity == -1);
  }
}

TEST_CASE("second graph: λ(k-1) -- λ1+λk -- λ(k+1) for k < l") {
  for (int l = 3; l <= 5; ++l)
    for (int k = 2; k < l; ++k) {
      INFO("l=", l, " k=", k);
      const TPGraph g = build_graph(family_spec(Family::A2Even, l), {1, k});
      const Weight lo = fund(l, k - 1), mid = fund(l, 1) + fund(l, k), hi = fund(l, k + 1);
      REQUIRE(g.nodes.size() == 3);
      CHECK(edge_set(g) == path({lo, mid, hi}));
      CHECK(g.nodes[static_cast<std::size_t>(g.index_of(lo))].parity == 1);
      CHECK(g.nodes[static_cast<std::size_t>(g.index_of(mid))].parity == 1);
      CHECK(g.nodes[static_cast<std::size_t>(g.index_of(hi))].parity == -1);
    }
}

TEST_CASE("third graph: 0 -- λ2 -- 2λ1 with parities - - +") {
  for (int l = 3; l <= 4; ++l) {
    const TPGraph g = build_graph(family_spec(Family::A2Odd, l), {1, 1});
    Weight twol1(static_cast<std::size_t>(l));
    twol1.twice(0) = 4;
    const Weight zero(static_cast<std::size_t>(l));
    CHECK(edge_set(g) == path({zero, fund(l, 2), twol1}));
    CHECK(parities(g) == std::map<std::string, int>{{"0", -1}, {"λ2", -1}, {"2λ1", 1}});
  }
}

TEST_CASE("fourth graph: (a+1)λl -- μ1 -- ... -- (a-1)λl") {
  for (int l = 2; l <= 4; ++l)
    for (int a = 1; a <= 3; ++a) {
      INFO("l=", l, " a=", a);
      const TPGraph g = build_graph(family_spec(Family::D2, l), {1, a});
      std::vector<Weight> order;
      Weight top(static_cast<std::size_t>(l));
      for (int t = 0; t < l; ++t) top.twice(static_cast<std::size_t>(t)) = a + 1;
      order.push_back(top);
      for (int i = 1; i <= l; ++i) order.push_back(spinor_mu(l, a, i));
      REQUIRE(g.nodes.size() == order.size());
      CHECK(edge_set(g) == path(order));
      // + - - + + - - ...
      for (std::size_t i = 0; i < order.size(); ++i) {
        const int expected = (i % 4 == 0 || i % 4 == 3) ? 1 : -1;
        CHECK(g.nodes[static_cast<std::size_t>(g.index_of(order[i]))].parity == expected);
      }
    }
}

TEST_CASE("A2-even grid graph (k=2, r=3, l=6)") {
  const int l = 6, k = 2, r = 3;
  const TPGraph g = build_graph(family_spec(Family::A2Even, l), {k, r});
  // node lambda_c + lambda_d sits in row c; d - c = k + r - 2a
  std::map<std::pair<int, int>, Weight> grid;
  for (int a = 0; a <= k; ++a)
    for (int c = 0; c <= a; ++c) {
      const int d = k + r - 2 * a + c;
      grid[{c, d}] = fund(l, c) + fund(l, d);
    }
  REQUIRE(g.nodes.size() == grid.size());
  std::set<std::pair<Weight, Weight>> expected;
  for (const auto& [cd, nu] : grid) {
    const auto [c, d] = cd;
    CHECK(g.index_of(nu) >= 0);
    // equal along northwest-southeast diagonals (d - c fixed), alternating across them
    const int parity = ((d - c - (r - k)) / 2) % 2 == 0 ? 1 : -1;
    CHECK(g.nodes[static_cast<std::size_t>(g.index_of(nu))].parity == parity);
    for (int dd : {d - 1, d + 1})
      if (grid.contains({c + 1, dd})) add_edge(expected, nu, grid.at({c + 1, dd}));
  }
  CHECK(edge_set(g) == expected);
  CHECK(g.nodes.front().nu == fund(l, k) + fund(l, r));
}

TEST_CASE("A2-odd triangle graph (k=2, r=3, l=3)") {
  const int l = 3, k = 2, r = 3;
  const TPGraph g = build_graph(family_spec(Family::A2Odd, l), {k, r});
  // row a holds (k + r - 2a) λ1 + b λ2 for b = 0..a
  std::map<std::pair<int, int>, Weight> grid;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= a; ++b) {
      Weight nu(static_cast<std::size_t>(l));
      nu.twice(0) = 2 * (k + r - 2 * a + b);
      nu.twice(1) = 2 * b;
      grid[{a, b}] = nu;
    }
  REQUIRE(g.nodes.size() == grid.size());
  std::set<std::pair<Weight, Weight>> expected;
  for (const auto& [ab, nu] : grid) {
    const auto [a, b] = ab;
    // same along a row, alternating down the rows
    CHECK(g.nodes[static_cast<std::size_t>(g.index_of(nu))].parity == (a % 2 == 0 ? 1 : -1));
    if (grid.contains({a, b + 1})) add_edge(expected, nu, grid.at({a, b + 1}));
    if (grid.contains({a + 1, b + 1})) add_edge(expected, nu, grid.at({a + 1, b + 1}));
  }
  CHECK(edge_set(g) == expected);
}

TEST_CASE("edges agree with the oracle's theta0 tensor products") {
  const std::vector<std::tuple<Family, int, int, int>> cases{
      {Family::A2Even, 3, 1, 2}, {Family::A2Even, 4, 2, 2}, {Family::A2Odd, 3, 1, 3}, {Family::A2Odd, 3, 2, 2},
      {Family::D2, 2, 1, 2},     {Family::D2, 3, 2, 2}};
  for (const auto& [f, l, p, s] : cases) {
    INFO(family_name(f), " l=", l);
    const FamilySpec spec = family_spec(f, l);
    const TPGraph g = build_graph(spec, {p, s});
    const oracle::Setting st = oracle::setting_for(f, l, p, s);
    const oracle::W theta = spec.theta0.twice_coords();
    std::set<std::pair<Weight, Weight>> expected;
    for (const auto& a : g.nodes) {
      const auto prod = oracle::tensor_decompose(st.small, theta, a.nu.twice_coords());
      for (const auto& b : g.nodes)
        if (!(a.nu == b.nu) && prod.contains(b.nu.twice_coords())) add_edge(expected, a.nu, b.nu);
    }
    CHECK(edge_set(g) == expected);
  }
}

TEST_CASE("recursion examples") {
  const QSample w(Rational(3, 2));
  const RatFun u = RatFun::u();
  for (int l = 1; l <= 3; ++l) {
    const TPGraph g = build_graph(family_spec(Family::A2Even, l), {1, 1});
    const auto t = eigenvalues_by_recursion(g, u, w);
    Weight twol1(static_cast<std::size_t>(l));
    twol1.twice(0) = 4;
    CHECK(t.values.at(twol1) == RatFun(1));
    CHECK(t.values.at(Weight(static_cast<std::size_t>(l))) == br(2 * l + 1, 1, w));
    if (l >= 2) CHECK(t.values.at(fund(l, 2)) == br(2, -1, w));
  }
  {
    const int l = 3;
    const auto t = eigenvalues_by_recursion(build_graph(family_spec(Family::A2Odd, l), {1, 1}), u, w);
    CHECK(t.values.at(fund(l, 2)) == br(2, -1, w));
    CHECK(t.values.at(Weight(3)) == br(2, -1, w) * br(2 * l, 1, w));
  }
  {
    const auto t = eigenvalues_by_recursion(build_graph(family_spec(Family::D2, 2), {1, 1}), u, w);
    CHECK(t.values.at(fund(2, 1)) == br(1, -1, w));
    CHECK(t.values.at(Weight(2)) == br(1, -1, w) * br(2, 1, w));
    CHECK(t.values.at(Weight::from_ints({1, 1})) == RatFun(1));
  }
}

TEST_CASE("u = 1 gives one everywhere and rho(u) rho(1/u) = 1") {
  const QSample w(Rational(5, 3));
  for (const auto& [f, l, p, s] : std::vector<std::tuple<Family, int, int, int>>{
           {Family::A2Even, 6, 2, 3}, {Family::A2Odd, 3, 2, 3}, {Family::D2, 3, 2, 3}}) {
    const TPGraph g = build_graph(family_spec(f, l), {p, s});
    for (const auto& [nu, v] : eigenvalues_by_recursion(g, Rational(1), w).values) CHECK(v == Rational(1));
    const auto at_u = eigenvalues_by_recursion(g, Rational(7, 5), w).values;
    const auto at_inv = eigenvalues_by_recursion(g, Rational(5, 7), w).values;
    for (const auto& [nu, v] : at_u) CHECK(v * at_inv.at(nu) == Rational(1));
  }
}

TEST_CASE("closed forms") {
  const QSample w(Rational(2));
  const RatFun u = RatFun::u();
  const auto top = eigenvalues_closed_form(family_spec(Family::A2Even, 5), {2, 3}, u, w);
  CHECK(top.at(fund(5, 2) + fund(5, 3)) == RatFun(1));
  CHECK_THROWS_AS(eigenvalues_closed_form(family_spec(Family::A2Even, 3), {2, 2}, u, w), UnsupportedRegime);
  // the recursion still applies outside the closed-form regime
  CHECK_NOTHROW(eigenvalues_by_recursion(build_graph(family_spec(Family::A2Even, 3), {2, 2}), u, w));

  const int l = 4;
  const auto odd = eigenvalues_closed_form(family_spec(Family::A2Odd, l), {1, 1}, u, w);
  CHECK(odd.at(Weight(4)) == br(2, -1, w) * br(2 * l, 1, w));
  const auto d = eigenvalues_closed_form(family_spec(Family::D2, 2), {1, 1}, u, w);
  CHECK(d.at(fund(2, 1)) == br(1, -1, w));
  CHECK(d.at(Weight(2)) == br(1, -1, w) * br(2, 1, w));
}

TEST_CASE("closed form equals recursion identically in u") {
  const QSample w(Rational(2));
  const RatFun u = RatFun::u();
  std::vector<std::tuple<Family, int, int, int>> cases;
  for (int l = 1; l <= 4; ++l)
    for (int k = 1; k <= l; ++k)
      for (int r = k; k + r <= l; ++r) cases.emplace_back(Family::A2Even, l, k, r);
  for (int k = 1; k <= 2; ++k)
    for (int r = k; r <= 2; ++r) cases.emplace_back(Family::A2Odd, 3, k, r);
  for (int l = 2; l <= 3; ++l)
    for (int a = 1; a <= 2; ++a)
      for (int b = a; b <= 3; ++b) cases.emplace_back(Family::D2, l, a, b);
  for (const auto& [f, l, p, s] : cases) {
    INFO(family_name(f), " l=", l, " params=", p, ",", s);
    const FamilySpec spec = family_spec(f, l);
    const auto rec = eigenvalues_by_recursion(build_graph(spec, {p, s}), u, w);
    CHECK(rec.values == eigenvalues_closed_form(spec, {p, s}, u, w));
  }
}

TEST_CASE("loops are certified on the grid graphs") {
  const QSample w(Rational(3, 2));
  const auto fig1 = eigenvalues_by_recursion(build_graph(family_spec(Family::A2Even, 6), {2, 3}), RatFun::u(), w);
  CHECK(fig1.loop_edges_checked > 0);
  const auto fig2 = eigenvalues_by_recursion(build_graph(family_spec(Family::A2Odd, 3), {2, 3}), RatFun::u(), w);
  CHECK(fig2.loop_edges_checked > 0);
  CHECK(fig2.tree_edges == 5);
}

TEST_CASE("a wrong parity breaks a loop") {
  TPGraph g = build_graph(family_spec(Family::A2Odd, 3), {2, 3});
  Weight nu(3);
  nu.twice(0) = 4;
  nu.twice(1) = 2;  // λ1+λ2, on two squares
  g.nodes[static_cast<std::size_t>(g.index_of(nu))].parity *= -1;
  CHECK_THROWS_AS(eigenvalues_by_recursion(g, RatFun::u(), QSample(Rational(2))), LoopInconsistency);
}

TEST_CASE("a disconnected graph is rejected") {
  TPGraph g = build_graph(family_spec(Family::A2Even, 2), {1, 1});
  g.edges.pop_back();
  CHECK_THROWS_AS(eigenvalues_by_recursion(g, RatFun::u(), QSample(Rational(2))), ContractViolation);
}

TEST_CASE("graph export") {
  const TPGraph g = build_graph(family_spec(Family::A2Even, 2), {1, 1});
  const std::string dot = export_graph(g, "dot");
  CHECK(dot.rfind("graph tpg {", 0) == 0);
  CHECK(dot.find("2λ1 | 10 | +") != std::string::npos);
  CHECK(dot.find("λ2 | 6 | -") != std::string::npos);
  CHECK(dot.find("0 | 0 | +") != std::string::npos);
  long edges = 0;
  for (std::size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++edges;
  CHECK(edges == 2);
  CHECK(export_graph(g, "dot") == dot);
  const std::string json = export_graph(g, "json");
  CHECK(json.find("\"edges\"") != std::string::npos);
  CHECK_THROWS_AS(export_graph(g, "svg"), ValidationError);
}
