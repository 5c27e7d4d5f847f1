#include "coxflip_app/suites.hpp"

#include <random>
#include <set>

#include "coxflip/error.hpp"
#include "coxflip/flipping.hpp"
#include "coxflip/structure.hpp"

namespace coxflip::app {

bool VerifySuiteResult::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

json VerifySuiteResult::to_json() const {
  json list = json::array();
  for (const auto& c : checks)
    list.push_back({{"check", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  return {{"suite", suite}, {"pass", pass()}, {"checks", list}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "orbits", "center", "kernel", "tables", "e8-w0"};
  return names;
}

namespace {

using Targets = std::vector<SuiteTarget>;

std::string tag(Family f, int n) { return std::string(family_name(f)) + std::to_string(n); }

Targets range(Family f, int lo, int hi) {
  Targets t;
  for (int n = lo; n <= hi; ++n) t.push_back({f, n});
  return t;
}

Targets concat(std::initializer_list<Targets> parts) {
  Targets out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

void add(VerifySuiteResult& r, std::string name, json expected, json computed) {
  const bool pass = expected == computed;
  r.checks.push_back({std::move(name), std::move(expected), std::move(computed), pass});
}

// Connected random graph: a random spanning tree plus extra random edges.
CoxeterGraph random_connected_graph(std::mt19937_64& rng, int n) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (int v = 2; v <= n; ++v) {
    std::uniform_int_distribution<int> parent(1, v - 1);
    const Edge e{parent(rng), v};
    edges.push_back(e);
    seen.insert(e);
  }
  std::uniform_int_distribution<int> vertex(1, n);
  std::uniform_int_distribution<int> extra(0, n);
  for (int k = extra(rng); k > 0; --k) {
    int a = vertex(rng), b = vertex(rng);
    if (a == b) continue;
    Edge e{std::min(a, b), std::max(a, b)};
    if (seen.insert(e).second) edges.push_back(e);
  }
  return CoxeterGraph::build_custom(n, edges);
}

void relations_suite(VerifySuiteResult& r, const std::optional<SuiteTarget>& target) {
  std::vector<CoxeterGraph> graphs;
  if (target) {
    graphs.push_back(CoxeterGraph::build_family(target->family, target->n));
  } else {
    for (const auto& t : concat({range(Family::A, 1, 8), range(Family::D, 4, 8), range(Family::E, 6, 8)}))
      graphs.push_back(CoxeterGraph::build_family(t.family, t.n));
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> size(2, 10);
    for (int k = 0; k < 20; ++k) graphs.push_back(random_connected_graph(rng, size(rng)));
  }
  int custom = 0;
  for (const auto& g : graphs) {
    const auto report = verify_coxeter_relations(g);
    const std::string name = g.is_named_family() ? tag(g.family(), g.size())
                                                 : "custom#" + std::to_string(custom++) + "(n=" +
                                                       std::to_string(g.size()) + ")";
    add(r, "relations " + name, json::array(), json(report.violations));
  }
}

void orbits_suite(VerifySuiteResult& r, const std::optional<SuiteTarget>& target) {
  const Targets targets = target ? Targets{*target}
                                 : concat({range(Family::A, 1, 12), range(Family::D, 4, 12), range(Family::E, 6, 16)});
  for (const auto& t : targets) {
    const GeneratorSet gens(CoxeterGraph::build_family(t.family, t.n));
    const auto basis = SimpleBasis::build(t.family, t.n);
    const auto bfs = orbit_partition(gens.gens(), t.n);
    const auto fibers = classifier_partition(basis);
    std::uint64_t total = 0;
    for (const auto& c : bfs.classes) total += c.size;
    add(r, "classifier fibers = BFS orbits " + tag(t.family, t.n), true, same_partition(bfs, fibers));
    add(r, "orbit sizes sum to 2^n " + tag(t.family, t.n), std::to_string(std::uint64_t{1} << t.n),
        std::to_string(total));
  }
  if (!target || target->family == Family::E) {
    for (int n = 6; n <= 16; ++n) {
      if (target && target->n != n) continue;
      const auto basis = SimpleBasis::build(Family::E, n);
      std::uint64_t count = 0;
      for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v)
        if (classify(basis, Gf2Vector(n, v)) == OrbitLabel{OrbitLabel::Kind::O, 1}) ++count;
      add(r, "|O1| closed form E" + std::to_string(n), std::to_string(count), to_decimal(o1_size(n)));
    }
  }
}

Targets enumerable_targets() {
  return concat({range(Family::A, 1, 7), range(Family::D, 4, 6), range(Family::E, 6, 7)});
}

void center_suite(VerifySuiteResult& r, const std::optional<SuiteTarget>& target) {
  const Targets targets = target ? Targets{*target} : enumerable_targets();
  for (const auto& t : targets) {
    const GeneratorSet gens(CoxeterGraph::build_family(t.family, t.n));
    const MatrixGroup group(t.n, gens.gens(), Backend::Explicit);
    const auto z = center(group);
    json computed = json::array();
    for (const auto& m : z) computed.push_back(m.column_strings());
    add(r, "center is trivial " + tag(t.family, t.n),
        json::array({Gf2Matrix::identity(t.n).column_strings()}), computed);
  }
  if (!target || target->family == Family::D) {
    for (int n = 4; n <= 10; ++n) {
      if (target && target->n != n) continue;
      const GeneratorSet gens(CoxeterGraph::build_family(Family::D, n));
      const auto basis = SimpleBasis::build(Family::D, n);
      bool stable = true;
      for (int j = 1; j <= n - 1; ++j)
        for (const auto& g : gens.gens())
          stable = stable && in_subspace_Z(basis, g * basis.bar(j));
      add(r, "generators preserve Z D" + std::to_string(n), true, stable);
    }
  }
}

bool expected_irreducible(Family f, int n) {
  switch (f) {
    case Family::A: return n == 1 || n % 2 == 0;
    case Family::D: return false;
    case Family::E: return n % 2 == 0;
    default: return false;
  }
}

std::string expected_kernel(Family f, int n) {
  switch (f) {
    case Family::A: return n == 1 ? "2" : "1";
    case Family::D: return n % 2 == 0 ? "2" : "1";
    case Family::E: return n == 6 ? "1" : "2";
    default: return "?";
  }
}

void kernel_suite(VerifySuiteResult& r, const std::optional<SuiteTarget>& target) {
  const Targets targets =
      target ? Targets{*target} : concat({range(Family::A, 1, 8), range(Family::D, 4, 8), range(Family::E, 6, 8)});
  for (const auto& t : targets) {
    add(r, "|Ker phi| " + tag(t.family, t.n), expected_kernel(t.family, t.n),
        to_decimal(kernel_order(t.family, t.n)));
    const GeneratorSet gens(CoxeterGraph::build_family(t.family, t.n));
    add(r, "irreducible " + tag(t.family, t.n), expected_irreducible(t.family, t.n),
        is_irreducible(gens.gens(), t.n));
  }
}

void e8_w0_suite(VerifySuiteResult& r) {
  const auto w0 = build_e8_w0();
  const auto basis = SimpleBasis::build(Family::E, 8);
  const GeneratorSet gens(CoxeterGraph::build_family(Family::E, 8));
  add(r, "w0 != I", false, w0.is_identity());
  add(r, "w0^2 = I", true, (w0 * w0).is_identity());
  for (int j = 2; j <= 8; ++j)
    add(r, "w0 commutes with s" + std::to_string(j), true, w0 * gens[j] == gens[j] * w0);
  add(r, "w0 maps 8-bar to 1-bar + 8-bar", (basis.bar(1) ^ basis.bar(8)).to_string(),
      (w0 * basis.bar(8)).to_string());
  for (int n = 6; n <= 8; ++n) {
    const auto d = verify_divisibility_e(n);
    add(r, "|W_J| * |O1| = |W| E" + std::to_string(n), to_decimal(d.group_order), to_decimal(d.product));
  }
}

} // namespace

VerifySuiteResult run_suite(const std::string& name, std::optional<SuiteTarget> target) {
  VerifySuiteResult r{name, {}};
  if (name == "relations") {
    relations_suite(r, target);
  } else if (name == "orbits") {
    orbits_suite(r, target);
  } else if (name == "center") {
    center_suite(r, target);
  } else if (name == "kernel") {
    kernel_suite(r, target);
  } else if (name == "tables") {
    kernel_suite(r, target);
    orbits_suite(r, target);
  } else if (name == "e8-w0") {
    e8_w0_suite(r);
  } else {
    throw ValidationError("unknown suite '" + name + "'");
  }
  return r;
}

} // namespace coxflip::app
