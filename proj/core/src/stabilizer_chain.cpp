#include <algorithm>
#include <random>

#include "coxflip/error.hpp"
#include "coxflip/group.hpp"

namespace coxflip {

std::optional<std::size_t> StabilizerChain::Level::find(std::uint64_t p) const {
  auto it = lookup.find(p);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

StabilizerChain::StabilizerChain(int n, std::span<const Gf2Matrix> gens, std::uint64_t seed)
    : n_(n) {
  if (n < 1 || n > kMaxDimension) throw DimensionError("stabilizer chain: bad dimension");
  for (const auto& g : gens) {
    if (g.size() != n) throw DimensionError("stabilizer chain: generator dimension mismatch");
    if (!g.is_identity()) input_.push_back(g);
  }
  for (const auto& g : input_) add_strong_generator(g, fixed_prefix(g));
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_level(l);
  if (!input_.empty()) {
    random_phase(seed);
    deterministic_phase();
  }
}

// Number of leading base points fixed by g.
std::size_t StabilizerChain::fixed_prefix(const Gf2Matrix& g) const {
  for (std::size_t l = 0; l < levels_.size(); ++l)
    if (mat_vec_bits(g.columns(), levels_[l].point) != levels_[l].point) return l;
  return levels_.size();
}

// g fixes the first `depth` base points. When depth equals the base length a
// new base point is appended: the first standard basis vector g moves.
void StabilizerChain::add_strong_generator(const Gf2Matrix& g, std::size_t depth) {
  const std::size_t index = strong_.size();
  strong_.push_back(g);
  strong_inverses_.push_back(mat_inverse(g));
  if (depth == levels_.size()) {
    Level level;
    for (int i = 0; i < n_; ++i) {
      const std::uint64_t e = std::uint64_t{1} << i;
      if (mat_vec_bits(g.columns(), e) != e) {
        level.point = e;
        break;
      }
    }
    levels_.push_back(std::move(level));
  }
  for (std::size_t l = 0; l <= depth; ++l) levels_[l].gens.push_back(index);
}

void StabilizerChain::rebuild_level(std::size_t l) {
  Level& level = levels_[l];
  level.orbit.assign(1, level.point);
  level.reps.assign(1, Gf2Matrix::identity(n_));
  level.rep_inverses.assign(1, Gf2Matrix::identity(n_));
  level.lookup.clear();
  level.lookup.emplace(level.point, 0);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (std::size_t gi : level.gens) {
      const std::uint64_t q = mat_vec_bits(strong_[gi].columns(), level.orbit[k]);
      if (!level.lookup.emplace(q, level.orbit.size()).second) continue;
      level.orbit.push_back(q);
      level.reps.push_back(strong_[gi] * level.reps[k]);
      level.rep_inverses.push_back(level.rep_inverses[k] * strong_inverses_[gi]);
    }
  }
}

StabilizerChain::SiftResult StabilizerChain::sift_from(Gf2Matrix h, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const std::uint64_t image = mat_vec_bits(h.columns(), levels_[l].point);
    const auto k = levels_[l].find(image);
    if (!k) return {std::move(h), l};
    h = levels_[l].rep_inverses[*k] * h;
  }
  return {std::move(h), levels_.size()};
}

void StabilizerChain::random_phase(std::uint64_t seed) {
  // Product replacement; stop after a run of random elements that all sift.
  std::mt19937_64 rng(seed);
  std::vector<Gf2Matrix> pool = input_;
  while (pool.size() < 10) pool.push_back(input_[pool.size() % input_.size()]);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  Gf2Matrix accumulator = Gf2Matrix::identity(n_);
  auto step = [&] {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) return false;
    pool[a] = pool[a] * pool[b];
    accumulator = accumulator * pool[a];
    return true;
  };
  for (int warm = 0; warm < 50; ++warm) step();
  for (int quiet = 0; quiet < 30;) {
    if (!step()) continue;
    auto [residue, depth] = sift_from(accumulator, 0);
    if (residue.is_identity()) {
      ++quiet;
      continue;
    }
    quiet = 0;
    add_strong_generator(residue, depth);
    for (std::size_t l = 0; l <= depth; ++l) rebuild_level(l);
  }
}

// Exactness: every Schreier generator of every level must sift to the
// identity through the levels below it. Residues become new strong
// generators and the scan resumes at the deepest level they touched.
void StabilizerChain::deterministic_phase() {
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool extended = false;
    for (std::size_t k = 0; k < levels_[i].orbit.size() && !extended; ++k) {
      for (std::size_t pos = 0; pos < levels_[i].gens.size() && !extended; ++pos) {
        const Level& level = levels_[i];
        const std::size_t gi = level.gens[pos];
        const std::uint64_t q = mat_vec_bits(strong_[gi].columns(), level.orbit[k]);
        Gf2Matrix schreier = level.rep_inverses[*level.find(q)] * strong_[gi] * level.reps[k];
        if (schreier.is_identity()) continue;
        auto [residue, depth] = sift_from(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        add_strong_generator(residue, depth);
        for (std::size_t l = i + 1; l <= depth; ++l) rebuild_level(l);
        i = depth + 1;
        extended = true;
      }
    }
  }
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

Gf2Matrix StabilizerChain::sift(const Gf2Matrix& m) const {
  if (m.size() != n_) throw DimensionError("sift: dimension mismatch");
  return sift_from(m, 0).residue;
}

bool StabilizerChain::contains(const Gf2Matrix& m) const { return sift(m).is_identity(); }

std::vector<Gf2Vector> StabilizerChain::base() const {
  std::vector<Gf2Vector> out;
  for (const auto& level : levels_) out.emplace_back(n_, level.point);
  return out;
}

std::vector<std::size_t> StabilizerChain::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

} // namespace coxflip
