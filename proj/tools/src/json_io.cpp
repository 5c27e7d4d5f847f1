#include "coxflip_app/json_io.hpp"

#include "coxflip/error.hpp"

namespace coxflip::app {

json graph_to_json(const CoxeterGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"edges", edges}, {"family", std::string(family_name(g.family()))}};
}

CoxeterGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw BadRequest("graph must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw BadRequest("graph.n must be an integer");
  const int n = j["n"].get<int>();
  std::string family = "custom";
  if (j.contains("family")) {
    if (!j["family"].is_string()) throw BadRequest("graph.family must be a string");
    family = j["family"].get<std::string>();
  }
  std::vector<Edge> edges;
  const bool has_edges = j.contains("edges");
  if (has_edges) {
    if (!j["edges"].is_array()) throw BadRequest("graph.edges must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw BadRequest("each edge must be a pair of integers");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  const Family f = parse_family(family);
  if (f == Family::Custom) return CoxeterGraph::build_custom(n, edges);
  auto g = CoxeterGraph::build_family(f, n);
  if (has_edges && !(CoxeterGraph::build_custom(n, edges) == g))
    throw ValidationError("edge list does not match family " + family + "_" + std::to_string(n));
  return g;
}

Gf2Vector parse_config(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    throw BadRequest(std::string(field) + " must be a bitstring");
  try {
    return Gf2Vector::parse(j[field].get<std::string>());
  } catch (const ValidationError& e) {
    throw BadRequest(e.what());
  }
}

std::string to_decimal(const BigInt& v) { return v.str(); }

json orbit_report(const OrbitPartition& p, std::string_view family) {
  json classes = json::array();
  for (const auto& c : p.classes)
    classes.push_back({{"label", c.label}, {"size", std::to_string(c.size)},
                       {"rep", c.representative.to_string()}});
  return {{"n", p.n}, {"family", std::string(family)}, {"classes", classes}};
}

json solve_to_json(const SolveResult& r) {
  json j = {{"reachable", r.reachable}, {"moves", r.moves}};
  if (r.from_label) j["from_label"] = *r.from_label;
  if (r.to_label) j["to_label"] = *r.to_label;
  return j;
}

} // namespace coxflip::app
