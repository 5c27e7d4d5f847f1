#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "coxflip/error.hpp"
#include "coxflip/gf2.hpp"
#include "oracles.hpp"

using namespace coxflip;

namespace {

Gf2Matrix random_matrix(std::mt19937_64& rng, int n) {
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(n));
  for (auto& c : cols) c = rng() & low_mask(n);
  return Gf2Matrix(n, cols);
}

Gf2Matrix random_invertible(std::mt19937_64& rng, int n) {
  for (;;) {
    auto m = random_matrix(rng, n);
    if (rank(m) == n) return m;
  }
}

oracle::Dense to_dense(const Gf2Matrix& m) {
  oracle::Dense d(static_cast<std::size_t>(m.size()),
                  std::vector<int>(static_cast<std::size_t>(m.size()), 0));
  for (int r = 1; r <= m.size(); ++r)
    for (int c = 1; c <= m.size(); ++c) d[r - 1][c - 1] = m.get(r, c) ? 1 : 0;
  return d;
}

} // namespace

TEST_CASE("vector text form puts s1 leftmost") {
  auto v = Gf2Vector::parse("100");
  CHECK(v.get(1));
  CHECK_FALSE(v.get(2));
  CHECK(v.bits() == 1u);
  CHECK(v.to_string() == "100");
  CHECK(Gf2Vector::unit(4, 3).to_string() == "0010");
  CHECK(Gf2Vector::parse("1011").popcount() == 3);
  CHECK_THROWS_AS(Gf2Vector::parse("10a"), ValidationError);
  CHECK_THROWS_AS(Gf2Vector::parse(""), ValidationError);
  CHECK_THROWS_AS(Gf2Vector::unit(3, 4), RangeError);
  CHECK_THROWS_AS(Gf2Vector::parse("10") ^ Gf2Vector::parse("100"), DimensionError);
}

TEST_CASE("mat_vec on identity and a two-column sum") {
  auto id = Gf2Matrix::identity(3);
  for (std::uint64_t b = 0; b < 8; ++b) CHECK(mat_vec(id, Gf2Vector(3, b)) == Gf2Vector(3, b));
  std::vector<std::string> cols{"10", "11"};
  auto m = Gf2Matrix::parse_columns(cols);
  CHECK(mat_vec(m, Gf2Vector::parse("11")) == (m.column(1) ^ m.column(2)));
  CHECK_THROWS_AS(mat_vec(m, Gf2Vector::parse("111")), DimensionError);
}

TEST_CASE("mat_mul identity and dimension mismatch") {
  std::mt19937_64 rng(7);
  auto m = random_matrix(rng, 5);
  CHECK(mat_mul(m, Gf2Matrix::identity(5)) == m);
  CHECK(mat_mul(Gf2Matrix::identity(5), m) == m);
  CHECK_THROWS_AS(mat_mul(m, Gf2Matrix::identity(4)), DimensionError);
}

TEST_CASE("mat_mul agrees with dense oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    auto a = random_matrix(rng, n), b = random_matrix(rng, n);
    CHECK(to_dense(a * b) == oracle::multiply(to_dense(a), to_dense(b)));
  }
}

TEST_CASE("inverse examples") {
  CHECK(mat_inverse(Gf2Matrix::identity(4)).is_identity());
  std::vector<std::string> cols{"10", "11"};
  auto b = Gf2Matrix::parse_columns(cols);
  CHECK(mat_inverse(b) == b);
  CHECK((b * b).is_identity());
  CHECK_THROWS_AS(mat_inverse(Gf2Matrix::zero(2)), SingularError);
}

TEST_CASE("rank examples") {
  CHECK(rank(Gf2Matrix::identity(6)) == 6);
  CHECK(rank(Gf2Matrix::zero(6)) == 0);
  std::vector<std::string> cols{"11", "11"};
  CHECK(rank(Gf2Matrix::parse_columns(cols)) == 1);
}

TEST_CASE("random properties: associativity, composition, inverse") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    auto a = random_matrix(rng, n), b = random_matrix(rng, n), c = random_matrix(rng, n);
    CHECK(((a * b) * c) == (a * (b * c)));
    Gf2Vector v(n, rng() & low_mask(n));
    CHECK(mat_vec(a * b, v) == mat_vec(a, mat_vec(b, v)));
    CHECK(mat_vec(a ^ b, v) == (mat_vec(a, v) ^ mat_vec(b, v)));
    CHECK(a.transpose().transpose() == a);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    auto g = random_invertible(rng, n);
    auto gi = mat_inverse(g);
    CHECK((g * gi).is_identity());
    CHECK((gi * g).is_identity());
  }
}

TEST_CASE("packed image round-trip and ordering") {
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 7, 8, 9, 16, 31, 64}) {
    auto m = random_matrix(rng, n);
    auto words = m.packed_image();
    CHECK(static_cast<int>(words.size()) == Gf2Matrix::packed_words(n));
    CHECK(Gf2Matrix::from_packed_image(n, words) == m);
  }
  auto a = random_matrix(rng, 9), b = random_matrix(rng, 9);
  CHECK((a < b) != (b < a || a == b));
  std::vector<std::uint64_t> bad(5, 0);
  CHECK_THROWS_AS(Gf2Matrix::from_packed_image(3, bad), DimensionError);
}

TEST_CASE("block extraction") {
  auto m = Gf2Matrix::identity(4);
  m.set(1, 3, true);
  m.set(4, 2, true);
  std::vector<int> keep{1, 3};
  auto b = m.block(keep);
  CHECK(b.size() == 2);
  CHECK(b.get(1, 2));
  CHECK(b.get(1, 1));
  CHECK_FALSE(b.get(2, 1));
}

TEST_CASE("matrix construction errors") {
  CHECK_THROWS_AS(Gf2Matrix(2, std::vector<std::uint64_t>{1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(Gf2Matrix(2, std::vector<std::uint64_t>{4, 0}), DimensionError);
}
