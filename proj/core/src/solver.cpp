#include "coxflip/solver.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "coxflip/error.hpp"
#include "coxflip/flipping.hpp"
#include "coxflip/orbits.hpp"

namespace coxflip {

namespace {

void check_lengths(const CoxeterGraph& g, const Gf2Vector& a, const Gf2Vector& b) {
  if (a.size() != g.size() || b.size() != g.size())
    throw DimensionError("configuration lengths must equal the vertex count " +
                         std::to_string(g.size()));
}

// BFS over legal moves from `a`; returns the parent map once `b` is reached
// or the orbit is exhausted.
struct Search {
  struct Step {
    std::uint64_t parent;
    Vertex move;
  };
  std::unordered_map<std::uint64_t, Step> parent;
  bool found = false;
};

Search legal_move_bfs(const CoxeterGraph& g, std::uint64_t a, std::uint64_t b) {
  const GeneratorSet gens(g);
  const std::uint64_t cap = state_cap();
  Search search;
  search.parent.emplace(a, Search::Step{a, 0});
  if (a == b) {
    search.found = true;
    return search;
  }
  std::vector<std::uint64_t> queue{a};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t cur = queue[head];
    for (Vertex s = 1; s <= g.size(); ++s) {
      if (!((cur >> (s - 1)) & 1u)) continue;  // feigning moves reach nothing new
      const std::uint64_t next = mat_vec_bits(gens[s].columns(), cur);
      if (!search.parent.emplace(next, Search::Step{cur, s}).second) continue;
      if (next == b) {
        search.found = true;
        return search;
      }
      if (search.parent.size() > cap) throw CapacityError("search exceeded the state cap");
      queue.push_back(next);
    }
  }
  return search;
}

} // namespace

bool equivalent_bfs(const CoxeterGraph& g, const Gf2Vector& a, const Gf2Vector& b) {
  check_lengths(g, a, b);
  return legal_move_bfs(g, a.bits(), b.bits()).found;
}

bool equivalent(const CoxeterGraph& g, const Gf2Vector& a, const Gf2Vector& b) {
  check_lengths(g, a, b);
  if (g.is_named_family()) {
    const auto basis = SimpleBasis::build(g.family(), g.size());
    return classify(basis, a) == classify(basis, b);
  }
  return equivalent_bfs(g, a, b);
}

Gf2Vector replay(const CoxeterGraph& g, const Gf2Vector& start, const std::vector<Vertex>& moves) {
  Gf2Vector cur = start;
  for (Vertex s : moves) {
    if (s < 1 || s > g.size()) throw RangeError("move " + std::to_string(s) + " is not a vertex");
    if (!cur.get(s))
      throw ValidationError("move s" + std::to_string(s) + " selects a white vertex in " +
                            cur.to_string());
    cur = apply_move(g, cur, s);
  }
  return cur;
}

SolveResult solve(const CoxeterGraph& g, const Gf2Vector& a, const Gf2Vector& b) {
  check_lengths(g, a, b);
  SolveResult result;
  if (g.is_named_family()) {
    const auto basis = SimpleBasis::build(g.family(), g.size());
    result.from_label = classify(basis, a).to_string();
    result.to_label = classify(basis, b).to_string();
  }
  const auto search = legal_move_bfs(g, a.bits(), b.bits());
  if (!search.found) return result;
  result.reachable = true;
  for (std::uint64_t cur = b.bits(); cur != a.bits();) {
    const auto& step = search.parent.at(cur);
    result.moves.push_back(step.move);
    cur = step.parent;
  }
  std::reverse(result.moves.begin(), result.moves.end());
  if (replay(g, a, result.moves) != b)
    throw std::logic_error("solver produced a sequence that does not reach the target");
  return result;
}

Gf2Vector scramble(const CoxeterGraph& g, const Gf2Vector& a, int k, std::uint64_t seed) {
  if (a.size() != g.size()) throw DimensionError("configuration length does not match graph");
  if (k < 0) throw RangeError("scramble needs k >= 0");
  std::mt19937_64 rng(seed);
  Gf2Vector cur = a;
  for (int step = 0; step < k; ++step) {
    const auto moves = legal_moves(g, cur);
    if (moves.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    cur = apply_move(g, cur, moves[pick(rng)]);
  }
  return cur;
}

} // namespace coxflip
