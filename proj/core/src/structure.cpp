#include "coxflip/structure.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "coxflip/error.hpp"
#include "coxflip/flipping.hpp"

namespace coxflip {

Permutation::Permutation(int degree) : images_(static_cast<std::size_t>(degree)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || hit[static_cast<std::size_t>(v)])
      throw NotPermutationError("images do not form a permutation of 1.." + std::to_string(degree()));
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p(degree);
  std::swap(p.images_.at(static_cast<std::size_t>(a - 1)), p.images_.at(static_cast<std::size_t>(b - 1)));
  return p;
}

Permutation Permutation::parse_cycles(int degree, std::string_view text) {
  Permutation result(degree);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw ValidationError("cycle notation: expected '(' in " + std::string(text));
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ValidationError("cycle notation: expected a point in " + std::string(text));
      const int point = std::stoi(std::string(text.substr(start, i - start)));
      if (point < 1 || point > degree)
        throw ValidationError("cycle notation: point " + std::to_string(point) + " outside 1.." +
                              std::to_string(degree));
      if (std::find(cycle.begin(), cycle.end(), point) != cycle.end())
        throw ValidationError("cycle notation: repeated point " + std::to_string(point));
      cycle.push_back(point);
    }
    // Cycles compose right to left, as products of permutations do.
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    result = result * Permutation(std::move(images));
    skip_space();
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (images_[j] != static_cast<int>(j) + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j)
    inv[static_cast<std::size_t>(images_[j] - 1)] = static_cast<int>(j) + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (done[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
    out += '(';
    for (int j = start; !done[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) {
      done[static_cast<std::size_t>(j - 1)] = true;
      if (j != start) out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DimensionError("permutation degrees differ");
  std::vector<int> images(b.images_.size());
  for (std::size_t j = 0; j < images.size(); ++j) images[j] = a(b.images_[j]);
  return Permutation(std::move(images));
}

namespace {

void require_family(const SimpleBasis& basis, Family f, const char* what) {
  if (basis.family() != f)
    throw UnsupportedFamily(std::string(what) + " needs a type " + std::string(family_name(f)) + " basis");
}

// Permutation of bars 1..degree induced by g.
Permutation induced_permutation(const SimpleBasis& basis, const Gf2Matrix& g, int degree,
                                const char* what) {
  if (g.size() != basis.size()) throw DimensionError(std::string(what) + ": dimension mismatch");
  std::unordered_map<std::uint64_t, int> index;
  for (int j = 1; j <= degree; ++j) index.emplace(basis.bar(j).bits(), j);
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::vector<bool> hit(static_cast<std::size_t>(degree) + 1, false);
  for (int j = 1; j <= degree; ++j) {
    const auto image = g * basis.bar(j);
    auto it = index.find(image.bits());
    if (it == index.end() || hit[static_cast<std::size_t>(it->second)])
      throw NotPermutationError(std::string(what) + ": image of bar " + std::to_string(j) +
                                " is " + image.to_string() + ", not a permuted bar vector");
    hit[static_cast<std::size_t>(it->second)] = true;
    images[static_cast<std::size_t>(j - 1)] = it->second;
  }
  return Permutation(std::move(images));
}

} // namespace

Permutation alpha_image(const SimpleBasis& basis, const Gf2Matrix& g) {
  require_family(basis, Family::A, "alpha");
  return induced_permutation(basis, g, basis.size() + 1, "alpha");
}

Permutation beta_image(const SimpleBasis& basis, const Gf2Matrix& g) {
  require_family(basis, Family::D, "beta");
  return induced_permutation(basis, g, basis.size(), "beta");
}

Permutation epsilon_image(const SimpleBasis& basis, const Gf2Matrix& g) {
  require_family(basis, Family::E, "epsilon");
  return induced_permutation(basis, g, basis.size(), "epsilon");
}

SemidirectElement delta_image(const SimpleBasis& basis, const Gf2Matrix& g) {
  const auto perm = beta_image(basis, g);
  const auto top = basis.bar(basis.size() + 1);
  const auto translation = top ^ (g * top);
  if (!in_subspace_Z(basis, translation))
    throw NotPermutationError("delta: translation " + translation.to_string() + " is outside Z");
  return {translation, perm};
}

Gf2Matrix perm_lift(const SimpleBasis& basis, const Permutation& sigma) {
  const int n = basis.size();
  std::vector<Gf2Vector> images;
  for (int c = 1; c <= n; ++c) {
    // Column c of the basis is bar j.
    const int j = basis.family() == Family::D && c == n ? n + 1 : c;
    images.push_back(j <= sigma.degree() ? basis.bar(sigma(j)) : basis.bar(j));
  }
  return Gf2Matrix::from_columns(images) * basis.inverse();
}

SemidirectElement semidirect_multiply(const SimpleBasis& basis, const SemidirectElement& x,
                                      const SemidirectElement& y) {
  require_family(basis, Family::D, "semidirect product");
  return {x.translation ^ (perm_lift(basis, x.perm) * y.translation), x.perm * y.perm};
}

const std::vector<std::string>& e8_w0_factors() {
  static const std::vector<std::string> factors = {
      "(2 8 3 7 4 6 5)", "(5 8)(4 7)(3 6)", "(4 8)(3 7)(2 6)", "(5 8)(4 7)", "(3 7)(2 6)",
  };
  return factors;
}

Gf2Matrix build_e8_w0() {
  const auto basis = SimpleBasis::build(Family::E, 8);
  const auto s8 = generator_matrix(CoxeterGraph::build_family(Family::E, 8), 8);
  Gf2Matrix product = Gf2Matrix::identity(8);
  for (const auto& cycles : e8_w0_factors())
    product = product * perm_lift(basis, Permutation::parse_cycles(8, cycles)) * s8;
  return product;
}

BigInt weyl_group_order(Family family, int n) {
  auto factorial = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (family) {
    case Family::A:
      if (n < 1) break;
      return factorial(n + 1);
    case Family::D:
      if (n < 4) break;
      return (BigInt(1) << (n - 1)) * factorial(n);
    case Family::E:
      if (n == 6) return BigInt(51840);
      if (n == 7) return BigInt(2903040);
      if (n == 8) return BigInt(696729600);
      throw RangeError("W(E_" + std::to_string(n) + ") is infinite for n >= 9");
    case Family::Custom:
      throw UnsupportedFamily("no classical order for custom graphs");
  }
  throw RangeError(std::string(family_name(family)) + "_" + std::to_string(n) + " is not defined");
}

BigInt kernel_order(Family family, int n) {
  const BigInt w = weyl_group_order(family, n);
  const GeneratorSet gens(CoxeterGraph::build_family(family, n));
  const BigInt flipping = order_schreier_sims(gens.gens(), n);
  if (w % flipping != 0)
    throw std::logic_error("|W| = " + w.str() + " is not divisible by |flipping group| = " +
                           flipping.str());
  return w / flipping;
}

DivisibilityReport verify_divisibility_e(int n) {
  if (n < 6 || n > 8) throw RangeError("divisibility check is defined for E_6, E_7, E_8");
  const GeneratorSet gens(CoxeterGraph::build_family(Family::E, n));
  std::vector<Vertex> j_set;
  for (int s = 2; s <= n; ++s) j_set.push_back(s);
  DivisibilityReport r;
  r.n = n;
  r.subgroup_order = order_schreier_sims(gens.subset(j_set), n);
  r.o1 = o1_size(n);
  r.product = r.subgroup_order * r.o1;
  r.group_order = order_schreier_sims(gens.gens(), n);
  r.divides = r.group_order % r.product == 0;
  r.equal = r.group_order == r.product;
  return r;
}

} // namespace coxflip
