#include "twistr/tpg.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace twistr {

int TPGraph::index_of(const Weight& nu) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].nu == nu) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> TPGraph::adjacency() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (auto [i, j] : edges) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

TPGraph build_graph(const FamilySpec& spec, const TensorParams& tp) {
  const BranchingTable table = decompose_tensor_closed_form(spec, tp);
  TPGraph g;
  g.spec = spec;
  g.params = tp;
  for (const auto& e : table.entries)
    g.nodes.push_back({e.nu, weight_label(spec, e.nu), casimir_eigenvalue(spec, e.nu), 0, e.parent});
  const int n = static_cast<int>(g.nodes.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool fwd = contains_in_theta_tensor(spec, g.nodes[static_cast<std::size_t>(i)].nu, g.nodes[static_cast<std::size_t>(j)].nu);
      const bool bwd = contains_in_theta_tensor(spec, g.nodes[static_cast<std::size_t>(j)].nu, g.nodes[static_cast<std::size_t>(i)].nu);
      if (fwd != bwd) throw ContractViolation("theta_0 containment is not symmetric");
      if (fwd) g.edges.emplace_back(i, j);
    }

  // Two-colour the quotient by parents: same parent, same colour; an edge across parents flips it.
  std::map<LParent, int> colour;
  std::map<LParent, std::vector<LParent>> qadj;
  for (auto [i, j] : g.edges) {
    const auto& pi = g.nodes[static_cast<std::size_t>(i)].parent;
    const auto& pj = g.nodes[static_cast<std::size_t>(j)].parent;
    if (pi == pj) continue;
    qadj[pi].push_back(pj);
    qadj[pj].push_back(pi);
  }
  const LParent root = g.nodes.front().parent;
  colour[root] = 1;
  std::deque<LParent> queue{root};
  while (!queue.empty()) {
    const LParent p = queue.front();
    queue.pop_front();
    for (const auto& x : qadj[p]) {
      const auto it = colour.find(x);
      if (it == colour.end()) {
        colour[x] = -colour[p];
        queue.push_back(x);
      } else if (it->second == colour[p]) {
        throw ContractViolation("parent quotient graph has an odd cycle through " + p.str() + " and " + x.str());
      }
    }
  }
  for (auto& node : g.nodes) {
    const auto it = colour.find(node.parent);
    if (it == colour.end()) throw ContractViolation("component " + node.label + " is not connected to the top");
    node.parity = it->second;
  }
  return g;
}

namespace {

std::string sign_str(int p) { return p > 0 ? "+" : "-"; }

}  // namespace

std::string export_graph(const TPGraph& g, const std::string& format) {
  if (format == "dot") {
    std::ostringstream os;
    os << "graph tpg {\n";
    os << "  label=\"" << family_name(g.spec.family) << " l=" << g.spec.l << " (" << g.params.p << ","
       << g.params.s << ")\";\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const auto& n = g.nodes[i];
      os << "  n" << i << " [label=\"" << n.label << " | " << n.casimir << " | " << sign_str(n.parity) << "\"];\n";
    }
    for (auto [i, j] : g.edges) os << "  n" << i << " -- n" << j << ";\n";
    os << "}\n";
    return os.str();
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["family"] = family_name(g.spec.family);
    j["l"] = g.spec.l;
    j["params"] = {g.params.p, g.params.s};
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : g.nodes) {
      nlohmann::ordered_json node;
      node["label"] = n.label;
      node["weight"] = n.nu.str();
      node["casimir"] = n.casimir.str();
      node["parity"] = n.parity;
      node["parent"] = n.parent.str();
      j["nodes"].push_back(node);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
    return j.dump(2) + "\n";
  }
  throw ValidationError("unknown graph format '" + format + "' (expected dot or json)");
}

}  // namespace twistr
