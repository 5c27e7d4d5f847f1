#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxflip/coxeter_graph.hpp"
#include "coxflip/gf2.hpp"

namespace coxflip {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultElementCap = std::size_t{1} << 25;

/// Every element of a matrix group, sorted by packed bit image.
class ExplicitSet {
public:
  int dimension() const { return n_; }
  std::size_t size() const { return words_ == 0 ? 0 : images_.size() / words_; }
  Gf2Matrix element(std::size_t i) const;
  bool contains(const Gf2Matrix& m) const;
  /// Position of m in the sorted order, if present.
  std::optional<std::size_t> index_of(const Gf2Matrix& m) const;

  template <class F> void for_each(F&& f) const {
    for (std::size_t i = 0; i < size(); ++i) f(element(i));
  }

private:
  friend ExplicitSet enumerate(int, std::span<const Gf2Matrix>, std::size_t);
  int n_ = 0;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> images_;  // size() * words_ packed images
};

/// Breadth-first closure of the generators. Throws CapacityError once the
/// element count would exceed `cap`.
ExplicitSet enumerate(int n, std::span<const Gf2Matrix> gens,
                      std::size_t cap = kDefaultElementCap);

/// Base, transversals and strong generators for the action of a matrix
/// group on the points of F_2^n. Base points are standard basis vectors.
class StabilizerChain {
public:
  StabilizerChain(int n, std::span<const Gf2Matrix> gens, std::uint64_t seed = 0x5eed);

  int dimension() const { return n_; }
  BigInt order() const;
  bool contains(const Gf2Matrix& m) const;

  std::vector<Gf2Vector> base() const;
  std::vector<std::size_t> transversal_sizes() const;
  const std::vector<Gf2Matrix>& strong_generators() const { return strong_; }

  /// Residue after sifting; identity iff m is in the group.
  Gf2Matrix sift(const Gf2Matrix& m) const;

private:
  struct Level {
    std::uint64_t point = 0;
    std::vector<std::size_t> gens;       // indices into strong_
    std::vector<std::uint64_t> orbit;    // discovery order
    std::vector<Gf2Matrix> reps;         // reps[k] maps point to orbit[k]
    std::vector<Gf2Matrix> rep_inverses;
    std::unordered_map<std::uint64_t, std::size_t> lookup;  // point -> k
    std::optional<std::size_t> find(std::uint64_t p) const;
  };

  struct SiftResult {
    Gf2Matrix residue;
    std::size_t level;  // first level where sifting stopped, levels_.size() if none
  };

  SiftResult sift_from(Gf2Matrix h, std::size_t start) const;
  void add_strong_generator(const Gf2Matrix& g, std::size_t depth);
  void rebuild_level(std::size_t level);
  std::size_t fixed_prefix(const Gf2Matrix& g) const;
  void random_phase(std::uint64_t seed);
  void deterministic_phase();

  int n_ = 0;
  std::vector<Gf2Matrix> input_;
  std::vector<Gf2Matrix> strong_;
  std::vector<Gf2Matrix> strong_inverses_;
  std::vector<Level> levels_;
};

enum class Backend { Auto, Explicit, Chain };

/// Facade over the two backends. Auto builds the chain first and also
/// enumerates when the order is at most the element cap.
class MatrixGroup {
public:
  MatrixGroup(int n, std::vector<Gf2Matrix> generators, Backend backend = Backend::Auto,
              std::size_t element_cap = kDefaultElementCap);

  int dimension() const { return n_; }
  const std::vector<Gf2Matrix>& generators() const { return gens_; }
  BigInt order() const;
  bool contains(const Gf2Matrix& m) const;

  bool has_elements() const { return elements_ != nullptr; }
  bool has_chain() const { return chain_ != nullptr; }
  /// Throws BackendError when the group was not enumerated.
  const ExplicitSet& elements() const;
  const StabilizerChain& chain() const;

private:
  int n_;
  std::vector<Gf2Matrix> gens_;
  std::shared_ptr<const ExplicitSet> elements_;
  std::shared_ptr<const StabilizerChain> chain_;
};

BigInt order_schreier_sims(std::span<const Gf2Matrix> gens, int n);

/// Elements of the group commuting with every generator.
std::vector<Gf2Matrix> center(const MatrixGroup& group);

bool membership(const MatrixGroup& group, const Gf2Matrix& m);

/// The subgroup generated by {s : s in J} as n x n matrices, together with
/// the flipping group of the subgraph induced on J.
struct RestrictionPair {
  std::vector<Vertex> subset;                    // sorted J
  std::vector<Gf2Matrix> sub_generators;         // n x n
  std::vector<Gf2Matrix> restricted_generators;  // |J| x |J|
  CoxeterGraph induced;
};

RestrictionPair restriction(const CoxeterGraph& g, const std::vector<Vertex>& subset);

/// G restricted to rows and columns in J.
Gf2Matrix restrict_block(const Gf2Matrix& m, std::span<const Vertex> subset);

/// True when no entry (u, v) with u in J and v outside J is set.
bool is_block_lower_triangular(const Gf2Matrix& m, std::span<const Vertex> subset);

} // namespace coxflip
