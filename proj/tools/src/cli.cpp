#include "coxflip_app/cli.hpp"

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "httplib.h"

#include "coxflip/error.hpp"
#include "coxflip/flipping.hpp"
#include "coxflip/orbits.hpp"
#include "coxflip/solver.hpp"
#include "coxflip_app/api.hpp"
#include "coxflip_app/json_io.hpp"
#include "coxflip_app/suites.hpp"

namespace coxflip::app {

namespace {

httplib::Server* running_server = nullptr;

void stop_server(int) {
  if (running_server) running_server->stop();
}

struct FamilyArgs {
  std::string family;
  int n = 0;

  void attach(CLI::App* cmd, bool required) {
    auto* f = cmd->add_option("--family", family, "Family A, D or E")->check(CLI::IsMember({"A", "D", "E", "a", "d", "e"}));
    auto* k = cmd->add_option("--n", n, "Number of vertices");
    if (required) {
      f->required();
      k->required();
    } else {
      f->needs(k);
      k->needs(f);
    }
  }
  Family parsed() const { return parse_family(family); }
};

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"coxflip: flipping puzzles on simply-laced Coxeter graphs"};
  app.require_subcommand(1);

  auto* graph_cmd = app.add_subcommand("graph", "Print a Coxeter graph as JSON");
  FamilyArgs graph_args;
  graph_args.attach(graph_cmd, false);
  std::string custom_file;
  auto* custom_opt = graph_cmd->add_option("--custom", custom_file, "Graph JSON file")->check(CLI::ExistingFile);
  custom_opt->excludes("--family");

  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit partition of F_2^n");
  FamilyArgs orbits_args;
  orbits_args.attach(orbits_cmd, true);
  std::string orbit_method = "bfs";
  orbits_cmd->add_option("--method", orbit_method)->check(CLI::IsMember({"bfs", "closed-form"}));

  auto* solve_cmd = app.add_subcommand("solve", "Find a move sequence between configurations");
  FamilyArgs solve_args;
  solve_args.attach(solve_cmd, true);
  std::string from_bits, to_bits;
  solve_cmd->add_option("--from", from_bits)->required();
  solve_cmd->add_option("--to", to_bits)->required();

  auto* order_cmd = app.add_subcommand("group-order", "Order of the flipping group");
  FamilyArgs order_args;
  order_args.attach(order_cmd, true);
  std::string order_method = "chain";
  order_cmd->add_option("--method", order_method)->check(CLI::IsMember({"enumerate", "chain"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  FamilyArgs verify_args;
  verify_args.attach(verify_cmd, false);

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP/JSON service");
  int port = 8080;
  std::string host = "0.0.0.0";
  serve_cmd->add_option("--port", port)->required()->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*graph_cmd) {
      if (!custom_file.empty()) {
        std::ifstream in(custom_file);
        out << graph_to_json(graph_from_json(json::parse(in))).dump() << "\n";
      } else if (!graph_args.family.empty()) {
        out << graph_to_json(CoxeterGraph::build_family(graph_args.parsed(), graph_args.n)).dump() << "\n";
      } else {
        err << "graph: give --family/--n or --custom\n";
        return 2;
      }
      return 0;
    }
    if (*orbits_cmd) {
      const Family f = orbits_args.parsed();
      const auto basis = SimpleBasis::build(f, orbits_args.n);
      OrbitPartition p;
      if (orbit_method == "bfs") {
        const GeneratorSet gens(CoxeterGraph::build_family(f, orbits_args.n));
        p = orbit_partition(gens.gens(), orbits_args.n);
        apply_family_labels(p, basis);
      } else {
        p = classifier_partition(basis);
      }
      out << orbit_report(p, family_name(f)).dump() << "\n";
      return 0;
    }
    if (*solve_cmd) {
      const auto g = CoxeterGraph::build_family(solve_args.parsed(), solve_args.n);
      out << solve_to_json(solve(g, Gf2Vector::parse(from_bits), Gf2Vector::parse(to_bits))).dump() << "\n";
      return 0;
    }
    if (*order_cmd) {
      const GeneratorSet gens(CoxeterGraph::build_family(order_args.parsed(), order_args.n));
      const BigInt order = order_method == "chain"
                               ? order_schreier_sims(gens.gens(), order_args.n)
                               : BigInt(enumerate(order_args.n, gens.gens()).size());
      out << to_decimal(order) << "\n";
      return 0;
    }
    if (*verify_cmd) {
      std::optional<SuiteTarget> target;
      if (!verify_args.family.empty()) target = SuiteTarget{verify_args.parsed(), verify_args.n};
      const auto result = run_suite(suite, target);
      out << result.to_json().dump(2) << "\n";
      return result.pass() ? 0 : 1;
    }
    if (*serve_cmd) {
      httplib::Server server;
      register_routes(server);
      running_server = &server;
      std::signal(SIGINT, stop_server);
      std::signal(SIGTERM, stop_server);
      err << "listening on " << host << ":" << port << "\n";
      const bool ok = server.listen(host, port);
      running_server = nullptr;
      if (!ok) {
        err << "could not bind " << host << ":" << port << "\n";
        return 2;
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadRequest& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace coxflip::app
