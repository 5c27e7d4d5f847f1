#include "coxflip_app/api.hpp"

#include <charconv>

#include "httplib.h"

#include "coxflip/error.hpp"
#include "coxflip/flipping.hpp"
#include "coxflip/orbits.hpp"
#include "coxflip/solver.hpp"

namespace coxflip::app {

namespace {

template <class F> ApiResponse guarded(F&& f) {
  try {
    return {200, f()};
  } catch (const BadRequest& e) {
    return {400, {{"error", e.what()}}};
  } catch (const json::exception& e) {
    return {400, {{"error", std::string("malformed JSON: ") + e.what()}}};
  } catch (const Error& e) {
    return {422, {{"error", e.what()}}};
  }
}

json parse_body(const std::string& body) {
  json j = json::parse(body);
  if (!j.is_object()) throw BadRequest("request body must be a JSON object");
  return j;
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw BadRequest(std::string("missing field '") + name + "'");
  return j[name];
}

int int_field(const json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_number_integer()) throw BadRequest(std::string(name) + " must be an integer");
  return v.get<int>();
}

int parse_int(const std::string& text, const char* name) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw BadRequest(std::string(name) + " must be an integer");
  return value;
}

} // namespace

ApiResponse api_graph(const std::map<std::string, std::string>& query) {
  return guarded([&]() -> json {
    auto f = query.find("family");
    auto n = query.find("n");
    if (f == query.end() || n == query.end()) throw BadRequest("family and n are required");
    const Family family = parse_family(f->second);
    if (family == Family::Custom) throw ValidationError("GET /api/graph serves A, D and E only");
    return graph_to_json(CoxeterGraph::build_family(family, parse_int(n->second, "n")));
  });
}

ApiResponse api_move(const std::string& body) {
  return guarded([&]() -> json {
    const json j = parse_body(body);
    const auto g = graph_from_json(field(j, "graph"));
    const auto config = parse_config(j, "config");
    const auto next = apply_move(g, config, int_field(j, "vertex"));
    return {{"config", next.to_string()}, {"changed", next != config}};
  });
}

ApiResponse api_solve(const std::string& body) {
  return guarded([&]() -> json {
    const json j = parse_body(body);
    const auto g = graph_from_json(field(j, "graph"));
    return solve_to_json(solve(g, parse_config(j, "from"), parse_config(j, "to")));
  });
}

ApiResponse api_classify(const std::string& body) {
  return guarded([&]() -> json {
    const json j = parse_body(body);
    const auto& fam = field(j, "family");
    if (!fam.is_string()) throw BadRequest("family must be a string");
    const Family family = parse_family(fam.get<std::string>());
    const int n = int_field(j, "n");
    const auto basis = SimpleBasis::build(family, n);
    const auto config = parse_config(j, "config");
    if (config.size() != n) throw DimensionError("config length must be " + std::to_string(n));
    json out = {{"label", classify(basis, config).to_string()}, {"weight", weight(basis, config)}};
    if (family == Family::D) out["in_Z"] = in_subspace_Z(basis, config);
    json names = json::array();
    for (const auto& l : orbit_names(basis, config)) names.push_back(l.to_string());
    out["names"] = names;
    return out;
  });
}

ApiResponse api_scramble(const std::string& body) {
  return guarded([&]() -> json {
    const json j = parse_body(body);
    const auto g = graph_from_json(field(j, "graph"));
    const auto config = parse_config(j, "config");
    const auto& seed = field(j, "seed");
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) throw BadRequest("seed must be an integer");
    const auto out = scramble(g, config, int_field(j, "k"), seed.get<std::uint64_t>());
    return {{"config", out.to_string()}};
  });
}

void register_routes(httplib::Server& server) {
  auto send = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get("/api/graph", [send](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query[k] = v;
    send(res, api_graph(query));
  });
  auto post = [&](const char* path, ApiResponse (*handler)(const std::string&)) {
    server.Post(path, [send, handler](const httplib::Request& req, httplib::Response& res) {
      send(res, handler(req.body));
    });
  };
  post("/api/move", api_move);
  post("/api/solve", api_solve);
  post("/api/classify", api_classify);
  post("/api/scramble", api_scramble);
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.status = 204;
  });
}

} // namespace coxflip::app
