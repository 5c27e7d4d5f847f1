// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxflip/flipping.hpp"
#include "coxflip/group.hpp"
#include "coxflip/orbits.hpp"
#include "coxflip/solver.hpp"
#include "coxflip/structure.hpp"
#include "oracles.hpp"

using namespace coxflip;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failure notes for one criterion.
struct Criterion {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

int failed = 0;

void run(const std::string& name, const std::function<void(Criterion&)>& body,
         double limit_seconds = 0) {
  Criterion c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double dt = seconds_since(t0);
  if (limit_seconds > 0 && dt >= limit_seconds)
    c.failures.push_back("took " + std::to_string(dt) + " s (limit " + std::to_string(limit_seconds) + " s)");
  const bool ok = c.failures.empty();
  if (!ok) ++failed;
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << std::fixed;
  line.precision(2);
  line << dt << " s)";
  for (const auto& n : c.notes) line << "  " << n;
  std::cout << line.str() << "\n";
  for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i)
    std::cout << "      - " << c.failures[i] << "\n";
  if (c.failures.size() > 10) std::cout << "      - ... " << c.failures.size() - 10 << " more\n";
  std::cout.flush();
}

std::vector<Gf2Matrix> gens_of(Family f, int n) {
  return GeneratorSet(CoxeterGraph::build_family(f, n)).gens();
}

std::string tag(Family f, int n) { return std::string(family_name(f)) + std::to_string(n); }

oracle::Adjacency adjacency(Family f, int n) {
  switch (f) {
    case Family::A: return oracle::type_a(n);
    case Family::D: return oracle::type_d(n);
    default: return oracle::type_e(n);
  }
}

std::string str(const BigInt& v) { return v.str(); }

// (s t)^m = I with m = 3 on edges and 2 otherwise, computed on dense matrices.
bool dense_relations(const oracle::Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  const auto id = oracle::identity(n);
  for (int s = 0; s < n; ++s) {
    const auto gs = oracle::generator(adj, s);
    if (oracle::multiply(gs, gs) != id) return false;
    for (int t = s + 1; t < n; ++t) {
      const auto gt = oracle::generator(adj, t);
      const auto st = oracle::multiply(gs, gt);
      bool edge = false;
      for (int u : adj[s]) edge |= u == t;
      auto p = oracle::multiply(st, st);
      if (edge) {
        if (p == id) return false;
        p = oracle::multiply(p, st);
      }
      if (p != id) return false;
    }
  }
  return true;
}

void relations(Criterion& c) {
  std::vector<std::pair<CoxeterGraph, oracle::Adjacency>> graphs;
  for (int n = 1; n <= 8; ++n) graphs.emplace_back(CoxeterGraph::build_family(Family::A, n), oracle::type_a(n));
  for (int n = 4; n <= 8; ++n) graphs.emplace_back(CoxeterGraph::build_family(Family::D, n), oracle::type_d(n));
  for (int n = 6; n <= 8; ++n) graphs.emplace_back(CoxeterGraph::build_family(Family::E, n), oracle::type_e(n));
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + static_cast<int>(rng() % 9);
    auto edges = oracle::random_connected_edges(rng, n);
    std::vector<Edge> ce(edges.begin(), edges.end());
    graphs.emplace_back(CoxeterGraph::build_custom(n, ce), oracle::adjacency_from_edges(n, edges));
  }
  const auto t0 = Clock::now();
  int checks = 0;
  for (const auto& [g, adj] : graphs) {
    auto report = verify_coxeter_relations(g);
    checks += report.checks;
    for (const auto& v : report.violations) c.expect(false, "n=" + std::to_string(g.size()) + ": " + v);
  }
  const double dt = seconds_since(t0);
  for (const auto& [g, adj] : graphs)
    c.expect(dense_relations(adj), "dense oracle disagrees on a graph with n=" + std::to_string(g.size()));
  c.expect(dt < 5.0, "relations took " + std::to_string(dt) + " s (limit 5 s)");
  c.note(std::to_string(graphs.size()) + " graphs, " + std::to_string(checks) + " checks, engine " +
         std::to_string(dt).substr(0, 5) + " s");
}

void group_orders(Criterion& c) {
  struct Row {
    Family f;
    int n;
    std::uint64_t expect;
  };
  std::vector<Row> rows;
  // A1: s1 has no neighbors, so the group is trivial (2! over a kernel of order 2)
  rows.push_back({Family::A, 1, 1});
  for (int n = 2; n <= 7; ++n) rows.push_back({Family::A, n, oracle::factorial(n + 1)});
  rows.push_back({Family::D, 4, 96});
  rows.push_back({Family::D, 5, 1920});
  rows.push_back({Family::D, 6, 11520});
  rows.push_back({Family::E, 6, 51840});
  rows.push_back({Family::E, 7, 1451520});
  for (const auto& r : rows) {
    auto gens = gens_of(r.f, r.n);
    const auto t0 = Clock::now();
    const auto enumerated = enumerate(r.n, gens).size();
    const double dt = seconds_since(t0);
    const auto chained = order_schreier_sims(gens, r.n);
    c.expect(enumerated == r.expect, tag(r.f, r.n) + " enumerate " + std::to_string(enumerated) +
                                         " != " + std::to_string(r.expect));
    c.expect(chained == r.expect, tag(r.f, r.n) + " chain " + str(chained) + " != " + std::to_string(r.expect));
    if (r.f == Family::E && r.n == 7) {
      c.expect(dt < 60.0, "E7 enumeration took " + std::to_string(dt) + " s (limit 60 s)");
      c.note("E7 enumerate " + std::to_string(dt).substr(0, 5) + " s");
    }
  }
  // D4 once more against the dense closure oracle
  c.expect(oracle::group_order(oracle::type_d(4)) == 96, "dense oracle D4 order");
  const auto t0 = Clock::now();
  const auto e8 = order_schreier_sims(gens_of(Family::E, 8), 8);
  const double dt = seconds_since(t0);
  c.expect(e8 == BigInt(348364800), "E8 chain " + str(e8));
  c.expect(dt < 30.0, "E8 chain took " + std::to_string(dt) + " s (limit 30 s)");
  c.note("E8 chain " + std::to_string(dt).substr(0, 5) + " s");
  c.note("A1 checked as 1");
}

void table2(Criterion& c) {
  std::vector<std::pair<Family, int>> cases;
  for (int n = 1; n <= 12; ++n) cases.emplace_back(Family::A, n);
  for (int n = 4; n <= 12; ++n) cases.emplace_back(Family::D, n);
  for (int n = 6; n <= 16; ++n) cases.emplace_back(Family::E, n);
  const auto t0 = Clock::now();
  for (auto [f, n] : cases) {
    const auto bfs = orbit_partition(gens_of(f, n), n);
    const auto fibers = classifier_partition(SimpleBasis::build(f, n));
    c.expect(same_partition(bfs, fibers), tag(f, n) + ": BFS orbits differ from classifier fibers");
    std::uint64_t total = 0;
    for (const auto& cls : bfs.classes) total += cls.size;
    c.expect(total == (std::uint64_t{1} << n), tag(f, n) + ": class sizes do not sum to 2^n");
  }
  const double dt = seconds_since(t0);
  // small cases against the neighbor-flip oracle
  for (auto [f, n] : cases) {
    if (n > 10) continue;
    auto sizes = oracle::orbit_sizes(adjacency(f, n));
    const auto fibers = classifier_partition(SimpleBasis::build(f, n));
    std::multiset<std::uint64_t> a(sizes.begin(), sizes.end()), b;
    for (const auto& cls : fibers.classes) b.insert(cls.size);
    c.expect(a == b, tag(f, n) + ": class sizes differ from the flip oracle");
  }
  c.expect(dt < 120.0, "took " + std::to_string(dt) + " s (limit 120 s)");
  c.note(std::to_string(cases.size()) + " graphs");
}

void o1_formula(Criterion& c) {
  for (int n = 6; n <= 16; ++n) {
    // count nonzero coordinate vectors by weight class
    std::uint64_t brute = 0;
    const int r1 = 1, r2 = ((n - 2) % 4 + 4) % 4;
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
      const int w = std::popcount(v) % 4;
      if (w == r1 || w == r2) ++brute;
    }
    c.expect(o1_size(n) == brute, "n=" + std::to_string(n) + ": o1_size " + str(o1_size(n)) +
                                      " vs count " + std::to_string(brute));
    const auto orbit = orbit_of(gens_of(Family::E, n), Gf2Vector::unit(n, 1));
    c.expect(orbit.size() == brute, "n=" + std::to_string(n) + ": orbit of s~1 has " +
                                        std::to_string(orbit.size()) + " elements");
  }
  c.expect(o1_size(6) == 27, "|O1| for n=6");
  c.expect(o1_size(7) == 28, "|O1| for n=7");
  c.expect(o1_size(8) == 120, "|O1| for n=8");
}

void table1(Criterion& c) {
  for (int n = 1; n <= 8; ++n) {
    const BigInt expect = n == 1 ? 2 : 1;
    c.expect(kernel_order(Family::A, n) == expect, tag(Family::A, n) + " kernel " + str(kernel_order(Family::A, n)));
    const bool irr = is_irreducible(gens_of(Family::A, n), n);
    c.expect(irr == (n == 1 || n % 2 == 0), tag(Family::A, n) + " irreducibility");
  }
  for (int n = 4; n <= 8; ++n) {
    const BigInt expect = n % 2 == 0 ? 2 : 1;
    c.expect(kernel_order(Family::D, n) == expect, tag(Family::D, n) + " kernel " + str(kernel_order(Family::D, n)));
    c.expect(!is_irreducible(gens_of(Family::D, n), n), tag(Family::D, n) + " should be reducible");
  }
  const int e_kernel[] = {1, 2, 2};
  for (int n = 6; n <= 8; ++n) {
    c.expect(kernel_order(Family::E, n) == e_kernel[n - 6],
             tag(Family::E, n) + " kernel " + str(kernel_order(Family::E, n)));
    c.expect(is_irreducible(gens_of(Family::E, n), n) == (n % 2 == 0), tag(Family::E, n) + " irreducibility");
  }
}

void center_and_z(Criterion& c) {
  std::vector<std::pair<Family, int>> cases;
  for (int n = 1; n <= 7; ++n) cases.emplace_back(Family::A, n);
  for (int n = 4; n <= 6; ++n) cases.emplace_back(Family::D, n);
  cases.emplace_back(Family::E, 6);
  cases.emplace_back(Family::E, 7);
  for (auto [f, n] : cases) {
    MatrixGroup g(n, gens_of(f, n), Backend::Explicit);
    auto z = center(g);
    c.expect(z.size() == 1 && z.front().is_identity(), tag(f, n) + ": center has " +
                                                           std::to_string(z.size()) + " elements");
  }
  for (int n = 4; n <= 10; ++n) {
    auto basis = SimpleBasis::build(Family::D, n);
    auto gens = gens_of(Family::D, n);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      Gf2Vector a(n, v);
      if (!in_subspace_Z(basis, a)) continue;
      for (const auto& s : gens)
        if (!in_subspace_Z(basis, mat_vec(s, a))) {
          c.expect(false, tag(Family::D, n) + ": Z not stable at " + a.to_string());
          break;
        }
    }
  }
  c.note(std::to_string(cases.size()) + " centers, Z checked D4..D10");
}

void e8_w0(Criterion& c) {
  const auto w0 = build_e8_w0();
  const auto gens = gens_of(Family::E, 8);
  const auto basis = SimpleBasis::build(Family::E, 8);
  c.expect(!w0.is_identity(), "w0 is the identity");
  c.expect((w0 * w0).is_identity(), "w0 does not square to I");
  for (int i = 2; i <= 8; ++i)
    c.expect(w0 * gens[i - 1] == gens[i - 1] * w0, "w0 does not commute with s" + std::to_string(i));
  c.expect(mat_vec(w0, basis.bar(8)) == (basis.bar(1) ^ basis.bar(8)), "w0 8-bar != 1-bar + 8-bar");

  const std::uint64_t sub[] = {1920, 51840, 2903040};
  const std::uint64_t o1[] = {27, 28, 120};
  for (int n = 6; n <= 8; ++n) {
    auto r = verify_divisibility_e(n);
    const int k = n - 6;
    c.expect(r.subgroup_order == sub[k], tag(Family::E, n) + " |W_J| " + str(r.subgroup_order));
    c.expect(r.o1 == o1[k], tag(Family::E, n) + " |O1| " + str(r.o1));
    c.expect(r.product == r.group_order && r.divides && r.equal,
             tag(Family::E, n) + ": " + str(r.product) + " vs " + str(r.group_order));
    c.note(str(r.subgroup_order) + "*" + str(r.o1) + "=" + str(r.group_order));
  }
}

void structure_maps(Criterion& c) {
  for (int n = 2; n <= 5; ++n) {
    auto basis = SimpleBasis::build(Family::A, n);
    auto set = enumerate(n, gens_of(Family::A, n));
    std::set<Permutation> image;
    set.for_each([&](const Gf2Matrix& g) { image.insert(alpha_image(basis, g)); });
    c.expect(image.size() == set.size() && image.size() == oracle::factorial(n + 1),
             tag(Family::A, n) + ": alpha image has " + std::to_string(image.size()) + " elements");
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    for (int k = 0; k < 500; ++k) {
      auto x = set.element(rng() % set.size()), y = set.element(rng() % set.size());
      if (alpha_image(basis, x * y) != alpha_image(basis, x) * alpha_image(basis, y)) {
        c.expect(false, tag(Family::A, n) + ": alpha not multiplicative");
        break;
      }
    }
  }
  for (int n : {4, 5}) {
    auto basis = SimpleBasis::build(Family::D, n);
    auto gens = gens_of(Family::D, n);
    auto set = enumerate(n, gens);
    const auto top = basis.bar(n + 1);
    std::set<std::uint64_t> shifted;
    for (const auto& v : orbit_of(gens, top)) {
      c.expect(classify(basis, v).kind == OrbitLabel::Kind::OmegaOdd, "orbit of (n+1)-bar leaves Omega_o");
      shifted.insert((top ^ v).bits());
    }
    std::set<std::pair<std::uint64_t, Permutation>> image;
    set.for_each([&](const Gf2Matrix& g) {
      auto d = delta_image(basis, g);
      if (!shifted.count(d.translation.bits()))
        c.expect(false, tag(Family::D, n) + ": translation outside (n+1)-bar + Omega_o");
      image.emplace(d.translation.bits(), d.perm);
    });
    c.expect(image.size() == set.size(), tag(Family::D, n) + ": delta not injective");
    c.expect(image.size() == shifted.size() * oracle::factorial(n), tag(Family::D, n) + ": delta image incomplete");
    const std::uint64_t whole = (std::uint64_t{1} << (n - 1)) * oracle::factorial(n);
    const std::uint64_t index = whole / image.size();
    c.expect(whole % image.size() == 0 && index == (n % 2 == 0 ? 2u : 1u),
             tag(Family::D, n) + ": index " + std::to_string(index));
    std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 7);
    for (int k = 0; k < 500; ++k) {
      auto x = set.element(rng() % set.size()), y = set.element(rng() % set.size());
      if (delta_image(basis, x * y) != semidirect_multiply(basis, delta_image(basis, x), delta_image(basis, y))) {
        c.expect(false, tag(Family::D, n) + ": delta not multiplicative");
        break;
      }
    }
  }
  for (int n = 6; n <= 8; ++n) {
    auto basis = SimpleBasis::build(Family::E, n);
    auto gens = gens_of(Family::E, n);
    StabilizerChain w(n, gens);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n) + 1000);
    int bad = 0;
    for (int k = 0; k < 500; ++k) {
      std::vector<int> images(static_cast<std::size_t>(n));
      std::iota(images.begin(), images.end(), 1);
      std::shuffle(images.begin(), images.end(), rng);
      const Permutation sigma(images);
      const auto lift = perm_lift(basis, sigma);
      if (!w.contains(lift) || epsilon_image(basis, lift) != sigma) ++bad;
    }
    c.expect(bad == 0, tag(Family::E, n) + ": " + std::to_string(bad) + " round-trip failures");
  }
}

void solver(Criterion& c) {
  std::mt19937_64 rng(31337);
  for (Family f : {Family::A, Family::D, Family::E}) {
    const int lo = family_minimum(f);
    int reachable = 0;
    for (int k = 0; k < 1000; ++k) {
      const int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(10 - lo + 1));
      const auto g = CoxeterGraph::build_family(f, n);
      const auto basis = SimpleBasis::build(f, n);
      const Gf2Vector a(n, rng() & low_mask(n));
      const Gf2Vector b = k % 2 == 0 ? Gf2Vector(n, rng() & low_mask(n))
                                     : scramble(g, a, static_cast<int>(rng() % 40), rng());
      const bool same = classify(basis, a) == classify(basis, b);
      const auto r = solve(g, a, b);
      if (r.reachable != same) {
        c.expect(false, tag(f, n) + ": " + a.to_string() + " -> " + b.to_string() + " reachability");
        continue;
      }
      if (r.reachable) {
        ++reachable;
        bool legal = true;
        Gf2Vector cur = a;
        for (Vertex s : r.moves) {
          legal &= cur.get(s);
          cur = apply_move(g, cur, s);
        }
        c.expect(legal && cur == b, tag(f, n) + ": sequence for " + a.to_string() + " -> " +
                                        b.to_string() + " does not replay");
      }
      const auto s = scramble(g, a, 25, rng());
      c.expect(classify(basis, s) == classify(basis, a), tag(f, n) + ": scramble left the orbit");
    }
    c.note(std::string(family_name(f)) + ":" + std::to_string(reachable) + "/1000 reachable");
  }
}

} // namespace

int main() {
  const auto t0 = Clock::now();
  run("relations suite", relations);
  run("group orders", group_orders);
  run("orbit table: BFS = classifier fibers", table2);
  run("|O1| closed form", o1_formula);
  run("kernel orders and irreducibility", table1);
  run("center and Z-stability", center_and_z);
  run("E8 w0 and divisibility", e8_w0, 90.0);
  run("structure maps", structure_maps);
  run("solver and scramble", solver);
  std::cout << (failed == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failed)) << "  total "
            << seconds_since(t0) << " s\n";
  return failed;
}
