#pragma once

#include "json.hpp"

#include "coxflip/coxeter_graph.hpp"
#include "coxflip/gf2.hpp"
#include "coxflip/group.hpp"
#include "coxflip/orbits.hpp"
#include "coxflip/solver.hpp"

namespace coxflip::app {

using nlohmann::json;

/// Malformed request: bad JSON shape or an unparseable bitstring.
class BadRequest : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json graph_to_json(const CoxeterGraph& g);
/// Accepts {"n", "edges", "family"}. For A/D/E the edge list may be
/// omitted; when present it must match the family.
CoxeterGraph graph_from_json(const json& j);

Gf2Vector parse_config(const json& j, const char* field);

std::string to_decimal(const BigInt& v);

json orbit_report(const OrbitPartition& p, std::string_view family);
json solve_to_json(const SolveResult& r);

} // namespace coxflip::app
