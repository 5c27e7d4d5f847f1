#pragma once

#include <string>
#include <vector>

#include "coxflip/coxeter_graph.hpp"
#include "coxflip/gf2.hpp"

namespace coxflip {

/// The move matrix of s: identity plus ones at (u, s) for every neighbor u.
Gf2Matrix generator_matrix(const CoxeterGraph& g, Vertex s);

/// Column s holds the sum of the neighbor characteristic vectors; every
/// other column is zero. generator_matrix(g, s) == I ^ e_matrix(g, s).
Gf2Matrix e_matrix(const CoxeterGraph& g, Vertex s);

/// Generator matrices of a graph, gens()[i] belongs to s_{i+1}.
class GeneratorSet {
public:
  explicit GeneratorSet(CoxeterGraph graph);

  const CoxeterGraph& graph() const { return graph_; }
  int size() const { return graph_.size(); }
  const std::vector<Gf2Matrix>& gens() const { return gens_; }
  const Gf2Matrix& operator[](Vertex s) const { return gens_.at(static_cast<std::size_t>(s - 1)); }

  /// Generators of the vertices in `subset`, still as n x n matrices.
  std::vector<Gf2Matrix> subset(const std::vector<Vertex>& subset) const;

private:
  CoxeterGraph graph_;
  std::vector<Gf2Matrix> gens_;
};

/// Selecting s: the full product generator_matrix(g, s) * config. When s is
/// white this is the feigning move and the configuration is unchanged.
Gf2Vector apply_move(const CoxeterGraph& g, const Gf2Vector& config, Vertex s);

/// Vertices whose state is black, ascending.
std::vector<Vertex> legal_moves(const CoxeterGraph& g, const Gf2Vector& config);

struct RelationReport {
  int checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the involution, commutation and braid relations for every pair
/// of generators, E_{s'} E_s = 0 for non-adjacent pairs, and the walk
/// identities E_{s_t}...E_{s_0} in {E_{s_0}, E_{s_t} E_{s_0}} on every walk
/// of length 1..3.
RelationReport verify_coxeter_relations(const CoxeterGraph& g);

/// Smallest k >= 1 with m^k = I, or 0 if none is found within `limit`.
int matrix_order(const Gf2Matrix& m, int limit = 64);

} // namespace coxflip
