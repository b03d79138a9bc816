#pragma once

#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twistr/branching.hpp"
#include "twistr/errors.hpp"
#include "twistr/scalars.hpp"

namespace twistr {

struct TPNode {
  Weight nu;
  std::string label;
  Rational casimir;
  int parity = 1;
  LParent parent;
};

/// Extended twisted tensor product graph. Node 0 is the top component.
struct TPGraph {
  FamilySpec spec;
  TensorParams params;
  std::vector<TPNode> nodes;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted

  [[nodiscard]] int index_of(const Weight& nu) const;
  [[nodiscard]] std::vector<std::vector<int>> adjacency() const;
};

TPGraph build_graph(const FamilySpec& spec, const TensorParams& tp);

template <Field S>
struct EigenvalueTable {
  std::map<Weight, S> values;
  int tree_edges = 0;
  int loop_edges_checked = 0;
};

/// Exponent (C(nu') - C(nu))/2 of the bracket along an edge nu -> nu'.
inline Rational edge_exponent(const TPNode& nu, const TPNode& nu_prime) {
  return (nu_prime.casimir - nu.casimir) / Rational(2);
}

/// Breadth-first spanning tree from the top node, then every remaining edge is re-checked.
template <Field S>
EigenvalueTable<S> eigenvalues_by_recursion(const TPGraph& g, const S& u, const QSample& w) {
  const auto adj = g.adjacency();
  const std::size_t n = g.nodes.size();
  std::vector<S> rho(n, S(0));
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  rho[0] = S(1);
  EigenvalueTable<S> out;
  auto factor = [&](int to, int from) {
    const auto& a = g.nodes[static_cast<std::size_t>(to)];
    const auto& b = g.nodes[static_cast<std::size_t>(from)];
    return bracket(edge_exponent(a, b), a.parity * b.parity, u, w);
  };
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int x : adj[static_cast<std::size_t>(v)]) {
      const auto X = static_cast<std::size_t>(x);
      if (seen[X]) continue;
      seen[X] = true;
      parent[X] = v;
      rho[X] = factor(x, v) * rho[static_cast<std::size_t>(v)];
      ++out.tree_edges;
      queue.push_back(x);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) throw ContractViolation("graph is not connected: " + g.nodes[i].label + " unreachable");
  for (auto [i, j] : g.edges) {
    if (parent[static_cast<std::size_t>(j)] == i || parent[static_cast<std::size_t>(i)] == j) continue;
    ++out.loop_edges_checked;
    if (!(rho[static_cast<std::size_t>(j)] == factor(j, i) * rho[static_cast<std::size_t>(i)]))
      throw LoopInconsistency("recursion around the cycle through " + g.nodes[static_cast<std::size_t>(i)].label +
                              " -- " + g.nodes[static_cast<std::size_t>(j)].label + " is inconsistent");
  }
  for (std::size_t i = 0; i < n; ++i) out.values.emplace(g.nodes[i].nu, rho[i]);
  return out;
}

/// Closed-form product for each component.
/// a2even needs k + r <= l; otherwise UnsupportedRegime (the recursion still applies).
template <Field S>
std::map<Weight, S> eigenvalues_closed_form(const FamilySpec& spec, const TensorParams& tp, const S& u,
                                            const QSample& w) {
  validate_params(spec, tp);
  const BranchingTable table = decompose_tensor_closed_form(spec, tp);
  const int l = spec.l;
  const int k = tp.p, r = tp.s;
  std::map<Weight, S> out;
  auto br = [&](const Rational& a, int sign) { return bracket(a, sign, u, w); };
  switch (spec.family) {
    case Family::A2Even: {
      if (k + r > l)
        throw UnsupportedRegime("a2even closed form needs k + r <= l (got k + r = " + std::to_string(k + r) + ")");
      const int n = 2 * l + 1;
      for (int a = 0; a <= k; ++a)
        for (int c = 0; c <= a; ++c) {
          const int d = k + r - 2 * a + c;
          Weight nu(static_cast<std::size_t>(l));
          for (int t = 0; t < c; ++t) nu.twice(static_cast<std::size_t>(t)) += 2;
          for (int t = 0; t < d; ++t) nu.twice(static_cast<std::size_t>(t)) += 2;
          S v(1);
          for (int i = a; i <= k - 1; ++i) v = v * br(Rational(k + r - 2 * i), -1);
          for (int j = 1; j <= a - c; ++j) v = v * br(Rational(n - r - k + 2 * j), 1);
          out.emplace(nu, v);
        }
      break;
    }
    case Family::A2Odd: {
      const int n = 2 * l;
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= a; ++b) {
          Weight nu(static_cast<std::size_t>(l));
          nu.twice(0) = 2 * (k + r - 2 * a + b);
          nu.twice(1) = 2 * b;
          S v(1);
          for (int i = 1; i <= a - b; ++i) v = v * br(Rational(n + k + r - 2 * i), 1);
          for (int j = 1; j <= a; ++j) v = v * br(Rational(k + r + 2 - 2 * j), -1);
          out.emplace(nu, v);
        }
      break;
    }
    case Family::D2: {
      const int a = k, b = r;
      for (const auto& e : table.entries) {
        S v(1);
        for (int i = 1; i <= l; ++i) {
          // Lambda_i = nu_i - (b - a)/2
          const int lam_i = (e.nu.twice(static_cast<std::size_t>(i - 1)) - (b - a)) / 2;
          const int sign = ((l + i + 1) % 2 == 0) ? 1 : -1;
          for (int kk = lam_i; kk <= a - 1; ++kk) v = v * br(Rational(2 * (kk - i + l + 1) + (b - a), 2), sign);
        }
        out.emplace(e.nu, v);
      }
      break;
    }
  }
  if (out.size() != table.entries.size()) throw ContractViolation("closed form does not cover the decomposition");
  for (const auto& e : table.entries)
    if (!out.contains(e.nu)) throw ContractViolation("closed form misses component " + e.nu.str());
  return out;
}

/// "dot" or "json"; deterministic node and edge order.
std::string export_graph(const TPGraph& g, const std::string& format);

}  // namespace twistr
