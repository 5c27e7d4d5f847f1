#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxflip/coxeter_graph.hpp"
#include "coxflip/gf2.hpp"

namespace coxflip {

struct SolveResult {
  bool reachable = false;
  std::vector<Vertex> moves;              // legal moves, source to target
  std::optional<std::string> from_label;  // orbit labels, named families only
  std::optional<std::string> to_label;
};

/// Same orbit? Uses the closed-form classifier for named families and a
/// legal-move BFS otherwise.
bool equivalent(const CoxeterGraph& g, const Gf2Vector& a, const Gf2Vector& b);
bool equivalent_bfs(const CoxeterGraph& g, const Gf2Vector& a, const Gf2Vector& b);

/// Move sequence from a to b found by single-source BFS over legal moves.
/// Sequences are replay-checked before they are returned.
SolveResult solve(const CoxeterGraph& g, const Gf2Vector& a, const Gf2Vector& b);

/// Applies the moves in order; throws ValidationError on an illegal
/// (white-vertex) move.
Gf2Vector replay(const CoxeterGraph& g, const Gf2Vector& start, const std::vector<Vertex>& moves);

/// k seeded uniformly random legal moves; turns without a legal move are
/// skipped.
Gf2Vector scramble(const CoxeterGraph& g, const Gf2Vector& a, int k, std::uint64_t seed);

} // namespace coxflip
