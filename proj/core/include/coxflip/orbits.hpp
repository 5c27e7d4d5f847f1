#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxflip/coxeter_graph.hpp"
#include "coxflip/gf2.hpp"
#include "coxflip/group.hpp"

namespace coxflip {

/// Maximum number of configurations a BFS over F_2^n may touch. Defaults to
/// 2^24; the COXFLIP_STATE_CAP environment variable overrides it.
std::uint64_t state_cap();

/// The family-specific basis 1-bar, 2-bar, ... of F_2^n in which orbit
/// membership becomes a weight condition.
///
///   A_n: columns 1-bar..n-bar, extra vector (n+1)-bar = s_n.
///   D_n: columns 1-bar..(n-1)-bar and (n+1)-bar = s_n (stored as column n);
///        extra vector n-bar = s_{n-1} + s_n.
///   E_n: columns 1-bar..n-bar, extra vector (n+1)-bar = s_n.
///
/// The bar vectors are generated by 1-bar = s_1, (i+1)-bar = s_i (i-bar).
class SimpleBasis {
public:
  static SimpleBasis build(Family family, int n);

  Family family() const { return family_; }
  int size() const { return n_; }
  const Gf2Matrix& matrix() const { return basis_; }
  const Gf2Matrix& inverse() const { return inverse_; }
  Gf2Vector extra() const;

  /// j-bar for 1 <= j <= n+1.
  Gf2Vector bar(int j) const;
  /// Coordinates of a in the basis: bit k-1 refers to column k.
  Gf2Vector coordinates(const Gf2Vector& a) const { return mat_vec(inverse_, a); }
  /// Column index (1..n) of j-bar when j-bar is a basis column, else 0.
  int column_of_bar(int j) const;

private:
  Family family_ = Family::A;
  int n_ = 0;
  Gf2Matrix basis_;
  Gf2Matrix inverse_;
  std::vector<Gf2Vector> bars_;  // bars_[j-1] = j-bar, j = 1..n+1
};

/// Number of basis vectors in the expansion of a.
int weight(const SimpleBasis& basis, const Gf2Vector& a);

/// D_n only: a lies in Z = span(1-bar..(n-1)-bar) iff its (n+1)-bar
/// coordinate is zero.
bool in_subspace_Z(const SimpleBasis& basis, const Gf2Vector& a);

struct OrbitLabel {
  enum class Kind { O, OmegaOdd, OmegaEven };
  Kind kind = Kind::O;
  int index = 0;  // meaningful for Kind::O

  std::string to_string() const;  // "O2", "Omega_o", "Omega_e"
  static OrbitLabel parse(const std::string& text);
  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

/// Closed-form orbit label. Coinciding labels are canonicalized to the
/// smallest one. Throws UnsupportedFamily for custom graphs.
OrbitLabel classify(const SimpleBasis& basis, const Gf2Vector& a);
OrbitLabel classify(Family family, int n, const Gf2Vector& a);

/// Every family label whose defining set contains a. More than one name
/// comes back when labels coincide (E_8: O3 and O4 are one orbit);
/// classify returns the first.
std::vector<OrbitLabel> orbit_names(const SimpleBasis& basis, const Gf2Vector& a);

/// The distinct canonical labels of a family, ascending.
std::vector<OrbitLabel> family_labels(Family family, int n);

/// Closure of {a} under the generators.
std::vector<Gf2Vector> orbit_of(std::span<const Gf2Matrix> gens, const Gf2Vector& a);

struct OrbitClass {
  std::string label;
  Gf2Vector representative;  // minimal member (as an integer)
  std::uint64_t size = 0;
};

/// Partition of F_2^n into orbits. Classes are ordered by minimal
/// representative; `class_of[v]` indexes classes for every configuration v.
struct OrbitPartition {
  int n = 0;
  std::vector<OrbitClass> classes;
  std::vector<std::uint32_t> class_of;

  std::vector<Gf2Vector> members(std::size_t cls) const;
};

/// BFS partition with generic labels "orbit0", "orbit1", ...
OrbitPartition orbit_partition(std::span<const Gf2Matrix> gens, int n);

/// Partition given by the fibers of the closed-form classifier.
OrbitPartition classifier_partition(const SimpleBasis& basis);

/// Relabels BFS classes with the classifier label of their representatives.
void apply_family_labels(OrbitPartition& partition, const SimpleBasis& basis);

/// True when both partitions group configurations identically.
bool same_partition(const OrbitPartition& a, const OrbitPartition& b);

/// The closed form for the size of O_1 in type E_n. RangeError for n < 6.
BigInt o1_size(int n);

/// Smallest generator-stable subspace containing v, as a reduced basis.
std::vector<Gf2Vector> stable_span(std::span<const Gf2Matrix> gens, const Gf2Vector& v);

/// A nonzero proper generator-stable subspace if one exists.
std::optional<std::vector<Gf2Vector>> invariant_subspace(std::span<const Gf2Matrix> gens, int n);

bool is_irreducible(std::span<const Gf2Matrix> gens, int n);

} // namespace coxflip
