#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxflip/coxeter_graph.hpp"
#include "coxflip/gf2.hpp"
#include "coxflip/group.hpp"
#include "coxflip/orbits.hpp"

namespace coxflip {

/// Permutation of the points 1..degree (points stand for bar indices).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int degree);                  // identity
  explicit Permutation(std::vector<int> images);     // images[j-1] = sigma(j); must be bijective

  /// Cycle notation such as "(2 8 3 7 4 6 5)" or "(5,8)(4,7)"; points not
  /// mentioned are fixed.
  static Permutation parse_cycles(int degree, std::string_view text);
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;
  std::string to_cycle_string() const;

  /// Composition: (a * b)(j) = a(b(j)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// Permutation of 1-bar..(n+1)-bar induced by G in type A_n.
/// NotPermutationError when some G(j-bar) is not a bar vector.
Permutation alpha_image(const SimpleBasis& basis, const Gf2Matrix& g);

/// Permutation of 1-bar..n-bar induced by G in type D_n.
Permutation beta_image(const SimpleBasis& basis, const Gf2Matrix& g);

/// Element of Z x| S_n; translation has zero (n+1)-bar coordinate.
struct SemidirectElement {
  Gf2Vector translation;
  Permutation perm;
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

/// ((n+1)-bar + G (n+1)-bar, beta(G)) in type D_n.
SemidirectElement delta_image(const SimpleBasis& basis, const Gf2Matrix& g);

/// The matrix sending every basis bar vector j-bar to sigma(j)-bar (bar
/// vectors beyond sigma's degree are fixed). For E_n this realizes the
/// inverse of epsilon; for D_n it realizes theta(sigma) on Z.
Gf2Matrix perm_lift(const SimpleBasis& basis, const Permutation& sigma);

/// Induced permutation of 1-bar..n-bar for G in the subgroup generated by
/// s_1..s_{n-1} of type E_n.
Permutation epsilon_image(const SimpleBasis& basis, const Gf2Matrix& g);

/// (u, sigma)(v, tau) = (u + theta(sigma) v, sigma tau) in type D_n.
SemidirectElement semidirect_multiply(const SimpleBasis& basis, const SemidirectElement& x,
                                      const SemidirectElement& y);

/// The five cycle-notation factors interleaved with s_8 that give the
/// image of w_0 of the E_7 parabolic inside E_8.
const std::vector<std::string>& e8_w0_factors();
Gf2Matrix build_e8_w0();

/// |W| for the finite Coxeter groups handled here: A_n, D_n, E_6, E_7, E_8.
BigInt weyl_group_order(Family family, int n);

/// |W| / |flipping group|, computed through the stabilizer chain.
BigInt kernel_order(Family family, int n);

struct DivisibilityReport {
  int n = 0;
  BigInt subgroup_order;  // subgroup generated by s_2..s_n (n x n matrices)
  BigInt o1;              // closed-form |O_1|
  BigInt product;
  BigInt group_order;     // |flipping group of E_n|
  bool divides = false;
  bool equal = false;
};

/// E_n for n in {6, 7, 8}: checks that |W_J| * |O_1| divides |W| for
/// J = {s_2, ..., s_n}.
DivisibilityReport verify_divisibility_e(int n);

} // namespace coxflip
