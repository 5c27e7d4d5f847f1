#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coxflip {

enum class Family { A, D, E, Custom };

std::string_view family_name(Family f);          // "A", "D", "E", "custom"
Family parse_family(std::string_view text);      // accepts a/A, d/D, e/E, custom

using Vertex = int;  // 1-based, vertex i stands for generator s_i
using Edge = std::pair<Vertex, Vertex>;

/// Simple graph on generators s_1..s_n; an edge means m(s, s') = 3, a
/// non-edge m(s, s') = 2. Immutable once built.
class CoxeterGraph {
public:
  /// Family members with the standard labeling: A_n is the path 1-2-...-n,
  /// D_n the path 1..n-1 with s_n attached to s_{n-2}, E_n the path 1..n-1
  /// with s_n attached to s_{n-3}.
  static CoxeterGraph build_family(Family family, int n);
  static CoxeterGraph build_custom(int n, const std::vector<Edge>& edges);

  int size() const { return n_; }
  Family family() const { return family_; }
  bool is_named_family() const { return family_ != Family::Custom; }

  /// Edges normalized to (min, max), sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Sorted neighbor list of s. Throws RangeError for s outside 1..n.
  const std::vector<Vertex>& neighbors(Vertex s) const;

  /// Bit i-1 set for each neighbor s_i of s.
  std::uint64_t neighbor_mask(Vertex s) const;

  bool adjacent(Vertex u, Vertex v) const;
  bool is_connected() const;

  /// Subgraph induced on the (1-based) vertices in `subset`, relabeled
  /// 1..|subset| in increasing order of the original labels.
  CoxeterGraph induced(const std::vector<Vertex>& subset) const;

  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  CoxeterGraph(int n, std::vector<Edge> edges, Family family);

  int n_ = 0;
  Family family_ = Family::Custom;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> masks_;
};

/// Largest supported vertex count; a column of a matrix fits one 64-bit word.
inline constexpr int kMaxDimension = 64;

/// Smallest n accepted by build_family for each family.
int family_minimum(Family family);

} // namespace coxflip
