#include "coxflip/coxeter_graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "coxflip/error.hpp"

namespace coxflip {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::Custom: return "custom";
  }
  return "custom";
}

Family parse_family(std::string_view text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "D" || text == "d") return Family::D;
  if (text == "E" || text == "e") return Family::E;
  if (text == "custom" || text == "Custom") return Family::Custom;
  throw ValidationError("unknown family '" + std::string(text) + "'");
}

int family_minimum(Family family) {
  switch (family) {
    case Family::A: return 1;
    case Family::D: return 4;
    case Family::E: return 6;
    case Family::Custom: return 1;
  }
  return 1;
}

CoxeterGraph::CoxeterGraph(int n, std::vector<Edge> edges, Family family)
    : n_(n), family_(family), edges_(std::move(edges)),
      adjacency_(static_cast<std::size_t>(n)), masks_(static_cast<std::size_t>(n), 0) {
  for (auto [u, v] : edges_) {
    adjacency_[u - 1].push_back(v);
    adjacency_[v - 1].push_back(u);
    masks_[u - 1] |= std::uint64_t{1} << (v - 1);
    masks_[v - 1] |= std::uint64_t{1} << (u - 1);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

CoxeterGraph CoxeterGraph::build_family(Family family, int n) {
  if (family == Family::Custom)
    throw ValidationError("build_family needs A, D or E");
  if (n < family_minimum(family))
    throw RangeError(std::string(family_name(family)) + "_n needs n >= " +
                     std::to_string(family_minimum(family)) + ", got " + std::to_string(n));
  if (n > kMaxDimension)
    throw RangeError("n exceeds the supported maximum of " + std::to_string(kMaxDimension));

  std::vector<Edge> edges;
  const int path_end = family == Family::A ? n : n - 1;
  for (int i = 1; i < path_end; ++i) edges.emplace_back(i, i + 1);
  if (family == Family::D) edges.emplace_back(n - 2, n);
  if (family == Family::E) edges.emplace_back(n - 3, n);
  std::sort(edges.begin(), edges.end());
  return CoxeterGraph(n, std::move(edges), family);
}

CoxeterGraph CoxeterGraph::build_custom(int n, const std::vector<Edge>& edges) {
  if (n < 1 || n > kMaxDimension)
    throw ValidationError("vertex count must be in 1.." + std::to_string(kMaxDimension));
  std::set<Edge> seen;
  std::vector<Edge> normalized;
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside 1.." + std::to_string(n));
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second)
      throw ValidationError("duplicate edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
    normalized.push_back(e);
  }
  std::sort(normalized.begin(), normalized.end());
  return CoxeterGraph(n, std::move(normalized), Family::Custom);
}

const std::vector<Vertex>& CoxeterGraph::neighbors(Vertex s) const {
  if (s < 1 || s > n_)
    throw RangeError("vertex " + std::to_string(s) + " outside 1.." + std::to_string(n_));
  return adjacency_[s - 1];
}

std::uint64_t CoxeterGraph::neighbor_mask(Vertex s) const {
  if (s < 1 || s > n_)
    throw RangeError("vertex " + std::to_string(s) + " outside 1.." + std::to_string(n_));
  return masks_[s - 1];
}

bool CoxeterGraph::adjacent(Vertex u, Vertex v) const {
  return (neighbor_mask(u) >> (v - 1)) & 1u;
}

bool CoxeterGraph::is_connected() const {
  std::uint64_t seen = 1;
  std::vector<Vertex> stack{1};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : adjacency_[v - 1]) {
      const auto bit = std::uint64_t{1} << (u - 1);
      if (!(seen & bit)) {
        seen |= bit;
        stack.push_back(u);
      }
    }
  }
  return std::popcount(seen) == n_;
}

CoxeterGraph CoxeterGraph::induced(const std::vector<Vertex>& subset) const {
  std::vector<Vertex> sorted(subset);
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) throw RangeError("induced subgraph needs a nonempty vertex set");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw RangeError("vertex subset has repeated entries");
  std::vector<int> relabel(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > n_)
      throw RangeError("vertex " + std::to_string(sorted[i]) + " outside 1.." + std::to_string(n_));
    relabel[sorted[i]] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : edges_)
    if (relabel[u] && relabel[v]) edges.emplace_back(relabel[u], relabel[v]);
  return build_custom(static_cast<int>(sorted.size()), edges);
}

} // namespace coxflip
