#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxflip {

/// Column vector over F_2 of length n <= 64. Bit i-1 holds the coefficient
/// of the characteristic vector of s_i; bits at or above n are always zero.
class Gf2Vector {
public:
  Gf2Vector() = default;
  Gf2Vector(int n, std::uint64_t bits);

  static Gf2Vector zero(int n) { return Gf2Vector(n, 0); }
  /// Characteristic vector of s_i (1-based).
  static Gf2Vector unit(int n, int i);
  /// Text form: leftmost character is s_1, e.g. "101".
  static Gf2Vector parse(std::string_view text);

  int size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool get(int i) const { return (bits_ >> (i - 1)) & 1u; }  // 1-based
  bool is_zero() const { return bits_ == 0; }
  int popcount() const;

  std::string to_string() const;

  Gf2Vector operator^(const Gf2Vector& o) const;
  Gf2Vector& operator^=(const Gf2Vector& o);
  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Mask with the low n bits set.
constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Square n x n matrix over F_2 stored column-major, one word per column.
/// Entry (row u, column v) is bit u-1 of column v.
class Gf2Matrix {
public:
  Gf2Matrix() = default;
  explicit Gf2Matrix(int n);  // zero matrix
  Gf2Matrix(int n, std::vector<std::uint64_t> columns);

  static Gf2Matrix identity(int n);
  static Gf2Matrix zero(int n) { return Gf2Matrix(n); }
  static Gf2Matrix from_columns(std::span<const Gf2Vector> columns);
  /// JSON-friendly form: list of column bitstrings.
  static Gf2Matrix parse_columns(std::span<const std::string> columns);

  int size() const { return n_; }
  bool get(int row, int col) const { return (cols_[col - 1] >> (row - 1)) & 1u; }
  void set(int row, int col, bool value);
  Gf2Vector column(int col) const { return Gf2Vector(n_, cols_[col - 1]); }
  std::uint64_t column_bits(int col) const { return cols_[col - 1]; }
  std::span<const std::uint64_t> columns() const { return cols_; }

  bool is_identity() const;
  bool is_zero() const;

  Gf2Matrix transpose() const;
  /// Rows/columns restricted to the sorted 1-based index set `keep`.
  Gf2Matrix block(std::span<const int> keep) const;

  std::vector<std::string> column_strings() const;

  /// Canonical bit image: column j occupies bits [(j-1)n, jn) of the
  /// concatenated little-endian word sequence.
  std::vector<std::uint64_t> packed_image() const;
  static Gf2Matrix from_packed_image(int n, std::span<const std::uint64_t> words);
  static int packed_words(int n) { return (n * n + 63) / 64; }

  Gf2Matrix operator^(const Gf2Matrix& o) const;
  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;
  /// Lexicographic on the packed image.
  friend bool operator<(const Gf2Matrix& a, const Gf2Matrix& b);

private:
  int n_ = 0;
  std::vector<std::uint64_t> cols_;
};

/// XOR of the columns of m selected by the set bits of v.
std::uint64_t mat_vec_bits(std::span<const std::uint64_t> columns, std::uint64_t v);

Gf2Vector mat_vec(const Gf2Matrix& m, const Gf2Vector& v);
Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix mat_inverse(const Gf2Matrix& m);
int rank(const Gf2Matrix& m);
/// Rank of an arbitrary list of n-bit column words.
int rank_of(std::span<const std::uint64_t> vectors);

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Vector operator*(const Gf2Matrix& m, const Gf2Vector& v);

struct Gf2MatrixHash {
  std::size_t operator()(const Gf2Matrix& m) const noexcept;
};

} // namespace coxflip
