#pragma once

#include <map>
#include <string>

#include "coxflip_app/json_io.hpp"

namespace httplib {
class Server;
}

namespace coxflip::app {

struct ApiResponse {
  int status = 200;
  json body;
};

// Handlers are pure functions of their input so they can be exercised
// without a socket. Errors come back as {"error": message} with 400 for
// malformed input and 422 for domain errors.
ApiResponse api_graph(const std::map<std::string, std::string>& query);
ApiResponse api_move(const std::string& body);
ApiResponse api_solve(const std::string& body);
ApiResponse api_classify(const std::string& body);
ApiResponse api_scramble(const std::string& body);

void register_routes(httplib::Server& server);

} // namespace coxflip::app
