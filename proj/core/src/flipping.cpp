#include "coxflip/flipping.hpp"

#include <functional>

#include "coxflip/error.hpp"

namespace coxflip {

Gf2Matrix e_matrix(const CoxeterGraph& g, Vertex s) {
  Gf2Matrix m(g.size());
  for (Vertex u : g.neighbors(s)) m.set(u, s, true);
  return m;
}

Gf2Matrix generator_matrix(const CoxeterGraph& g, Vertex s) {
  return Gf2Matrix::identity(g.size()) ^ e_matrix(g, s);
}

GeneratorSet::GeneratorSet(CoxeterGraph graph) : graph_(std::move(graph)) {
  gens_.reserve(static_cast<std::size_t>(graph_.size()));
  for (Vertex s = 1; s <= graph_.size(); ++s) gens_.push_back(generator_matrix(graph_, s));
}

std::vector<Gf2Matrix> GeneratorSet::subset(const std::vector<Vertex>& subset) const {
  std::vector<Gf2Matrix> out;
  for (Vertex s : subset) {
    if (s < 1 || s > size())
      throw RangeError("vertex " + std::to_string(s) + " outside 1.." + std::to_string(size()));
    out.push_back(gens_[static_cast<std::size_t>(s - 1)]);
  }
  return out;
}

Gf2Vector apply_move(const CoxeterGraph& g, const Gf2Vector& config, Vertex s) {
  if (config.size() != g.size())
    throw DimensionError("configuration length " + std::to_string(config.size()) +
                         " does not match graph size " + std::to_string(g.size()));
  return mat_vec(generator_matrix(g, s), config);
}

std::vector<Vertex> legal_moves(const CoxeterGraph& g, const Gf2Vector& config) {
  if (config.size() != g.size())
    throw DimensionError("configuration length does not match graph size");
  std::vector<Vertex> moves;
  for (Vertex s = 1; s <= g.size(); ++s)
    if (config.get(s)) moves.push_back(s);
  return moves;
}

int matrix_order(const Gf2Matrix& m, int limit) {
  Gf2Matrix p = m;
  for (int k = 1; k <= limit; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return 0;
}

namespace {

std::string pair_name(const char* what, Vertex a, Vertex b) {
  return std::string(what) + "(s" + std::to_string(a) + ",s" + std::to_string(b) + ")";
}

} // namespace

RelationReport verify_coxeter_relations(const CoxeterGraph& g) {
  RelationReport report;
  const int n = g.size();
  const auto identity = Gf2Matrix::identity(n);
  std::vector<Gf2Matrix> gens, es;
  for (Vertex s = 1; s <= n; ++s) {
    gens.push_back(generator_matrix(g, s));
    es.push_back(e_matrix(g, s));
  }
  auto fail = [&](std::string what) { report.violations.push_back(std::move(what)); };

  for (Vertex s = 1; s <= n; ++s) {
    const auto& gs = gens[s - 1];
    ++report.checks;
    if (!(gs * gs).is_identity()) fail("involution s" + std::to_string(s));
    ++report.checks;
    if ((identity ^ es[s - 1]) != gs) fail("s = I + E_s at s" + std::to_string(s));
  }

  for (Vertex s = 1; s <= n; ++s) {
    for (Vertex t = 1; t <= n; ++t) {
      if (s == t) continue;
      const bool edge = g.adjacent(s, t);
      if (s < t) {
        const auto st = gens[s - 1] * gens[t - 1];
        auto power = st * st;
        if (edge) power = power * st;
        ++report.checks;
        if (!power.is_identity()) fail(pair_name(edge ? "braid" : "commute", s, t));
      }
      if (!edge) {
        ++report.checks;
        if (!(es[t - 1] * es[s - 1]).is_zero()) fail(pair_name("E_t E_s = 0 ", t, s));
      }
    }
  }

  // Walks s_0 ~ s_1 ~ ... ~ s_t with t in 1..3.
  std::vector<Vertex> walk;
  std::function<void(const Gf2Matrix&)> extend = [&](const Gf2Matrix& product) {
    const Vertex start = walk.front(), last = walk.back();
    const int length = static_cast<int>(walk.size()) - 1;
    if (length >= 1) {
      if (last == start) {
        ++report.checks;
        if (product != es[start - 1]) fail("walk identity (closed) from s" + std::to_string(start));
      } else if (g.adjacent(last, start)) {
        ++report.checks;
        if (product != es[last - 1] * es[start - 1])
          fail("walk identity (adjacent ends) from s" + std::to_string(start));
      }
    }
    if (length == 3) return;
    for (Vertex next : g.neighbors(last)) {
      walk.push_back(next);
      extend(es[next - 1] * product);
      walk.pop_back();
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    walk.assign(1, s);
    extend(es[s - 1]);
  }
  return report;
}

} // namespace coxflip
