#include "coxflip/gf2.hpp"

#include <algorithm>
#include <bit>

#include "coxflip/coxeter_graph.hpp"
#include "coxflip/error.hpp"

namespace coxflip {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxDimension)
    throw DimensionError("dimension " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxDimension));
}

} // namespace

Gf2Vector::Gf2Vector(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  check_size(n);
  if (bits & ~low_mask(n))
    throw DimensionError("vector bits set beyond length " + std::to_string(n));
}

Gf2Vector Gf2Vector::unit(int n, int i) {
  if (i < 1 || i > n)
    throw RangeError("unit index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  return Gf2Vector(n, std::uint64_t{1} << (i - 1));
}

Gf2Vector Gf2Vector::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxDimension))
    throw ValidationError("bitstring length must be in 1.." + std::to_string(kMaxDimension));
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      bits |= std::uint64_t{1} << i;
    else if (text[i] != '0')
      throw ValidationError("bitstring may contain only '0' and '1': " + std::string(text));
  }
  return Gf2Vector(static_cast<int>(text.size()), bits);
}

int Gf2Vector::popcount() const { return std::popcount(bits_); }

std::string Gf2Vector::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i)
    if ((bits_ >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

Gf2Vector Gf2Vector::operator^(const Gf2Vector& o) const {
  Gf2Vector r = *this;
  r ^= o;
  return r;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& o) {
  if (n_ != o.n_)
    throw DimensionError("vector lengths differ: " + std::to_string(n_) + " vs " +
                         std::to_string(o.n_));
  bits_ ^= o.bits_;
  return *this;
}

Gf2Matrix::Gf2Matrix(int n) : n_(n), cols_(static_cast<std::size_t>(n), 0) { check_size(n); }

Gf2Matrix::Gf2Matrix(int n, std::vector<std::uint64_t> columns) : n_(n), cols_(std::move(columns)) {
  check_size(n);
  if (cols_.size() != static_cast<std::size_t>(n))
    throw DimensionError("matrix of size " + std::to_string(n) + " given " +
                         std::to_string(cols_.size()) + " columns");
  for (auto c : cols_)
    if (c & ~low_mask(n)) throw DimensionError("column bits set beyond dimension");
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n);
  for (int j = 0; j < n; ++j) m.cols_[j] = std::uint64_t{1} << j;
  return m;
}

Gf2Matrix Gf2Matrix::from_columns(std::span<const Gf2Vector> columns) {
  const int n = static_cast<int>(columns.size());
  std::vector<std::uint64_t> cols;
  cols.reserve(columns.size());
  for (const auto& c : columns) {
    if (c.size() != n) throw DimensionError("column length does not match column count");
    cols.push_back(c.bits());
  }
  return Gf2Matrix(n, std::move(cols));
}

Gf2Matrix Gf2Matrix::parse_columns(std::span<const std::string> columns) {
  std::vector<Gf2Vector> cols;
  for (const auto& c : columns) cols.push_back(Gf2Vector::parse(c));
  return from_columns(cols);
}

void Gf2Matrix::set(int row, int col, bool value) {
  const auto bit = std::uint64_t{1} << (row - 1);
  if (value)
    cols_[col - 1] |= bit;
  else
    cols_[col - 1] &= ~bit;
}

bool Gf2Matrix::is_identity() const {
  for (int j = 0; j < n_; ++j)
    if (cols_[j] != (std::uint64_t{1} << j)) return false;
  return true;
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](auto c) { return c == 0; });
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(n_);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i)
      if ((cols_[j] >> i) & 1u) t.cols_[i] |= std::uint64_t{1} << j;
  return t;
}

Gf2Matrix Gf2Matrix::block(std::span<const int> keep) const {
  const int k = static_cast<int>(keep.size());
  Gf2Matrix b(k);
  for (int c = 0; c < k; ++c) {
    const auto col = cols_[keep[c] - 1];
    for (int r = 0; r < k; ++r)
      if ((col >> (keep[r] - 1)) & 1u) b.cols_[c] |= std::uint64_t{1} << r;
  }
  return b;
}

std::vector<std::string> Gf2Matrix::column_strings() const {
  std::vector<std::string> out;
  for (int j = 1; j <= n_; ++j) out.push_back(column(j).to_string());
  return out;
}

std::vector<std::uint64_t> Gf2Matrix::packed_image() const {
  std::vector<std::uint64_t> words(static_cast<std::size_t>(packed_words(n_)), 0);
  std::size_t pos = 0;
  for (int j = 0; j < n_; ++j, pos += static_cast<std::size_t>(n_)) {
    const auto c = cols_[j];
    const auto w = pos / 64, off = pos % 64;
    words[w] |= c << off;
    if (off != 0 && off + static_cast<std::size_t>(n_) > 64) words[w + 1] |= c >> (64 - off);
  }
  return words;
}

Gf2Matrix Gf2Matrix::from_packed_image(int n, std::span<const std::uint64_t> words) {
  if (words.size() != static_cast<std::size_t>(packed_words(n)))
    throw DimensionError("packed image has the wrong word count");
  Gf2Matrix m(n);
  const auto mask = low_mask(n);
  std::size_t pos = 0;
  for (int j = 0; j < n; ++j, pos += static_cast<std::size_t>(n)) {
    const auto w = pos / 64, off = pos % 64;
    std::uint64_t c = words[w] >> off;
    if (off != 0 && off + static_cast<std::size_t>(n) > 64) c |= words[w + 1] << (64 - off);
    m.cols_[j] = c & mask;
  }
  return m;
}

Gf2Matrix Gf2Matrix::operator^(const Gf2Matrix& o) const {
  if (n_ != o.n_) throw DimensionError("matrix sizes differ");
  Gf2Matrix r(*this);
  for (int j = 0; j < n_; ++j) r.cols_[j] ^= o.cols_[j];
  return r;
}

bool operator<(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  const auto pa = a.packed_image(), pb = b.packed_image();
  return std::lexicographical_compare(pa.rbegin(), pa.rend(), pb.rbegin(), pb.rend());
}

std::uint64_t mat_vec_bits(std::span<const std::uint64_t> columns, std::uint64_t v) {
  std::uint64_t acc = 0;
  while (v) {
    acc ^= columns[static_cast<std::size_t>(std::countr_zero(v))];
    v &= v - 1;
  }
  return acc;
}

Gf2Vector mat_vec(const Gf2Matrix& m, const Gf2Vector& v) {
  if (m.size() != v.size())
    throw DimensionError("mat_vec: matrix " + std::to_string(m.size()) + " vs vector " +
                         std::to_string(v.size()));
  return Gf2Vector(m.size(), mat_vec_bits(m.columns(), v.bits()));
}

Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.size() != b.size())
    throw DimensionError("mat_mul: sizes " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(a.size()));
  const auto bc = b.columns();
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = mat_vec_bits(a.columns(), bc[j]);
  return Gf2Matrix(a.size(), std::move(cols));
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) { return mat_mul(a, b); }
Gf2Vector operator*(const Gf2Matrix& m, const Gf2Vector& v) { return mat_vec(m, v); }

int rank_of(std::span<const std::uint64_t> vectors) {
  // Basis indexed by leading (highest) bit.
  std::uint64_t basis[64] = {};
  int r = 0;
  for (auto v : vectors) {
    while (v) {
      const int hb = 63 - std::countl_zero(v);
      if (!basis[hb]) {
        basis[hb] = v;
        ++r;
        break;
      }
      v ^= basis[hb];
    }
  }
  return r;
}

int rank(const Gf2Matrix& m) { return rank_of(m.columns()); }

Gf2Matrix mat_inverse(const Gf2Matrix& m) {
  // Gauss-Jordan on rows: work with the transpose so rows become words.
  const int n = m.size();
  const Gf2Matrix t = m.transpose();
  std::vector<std::uint64_t> rows(t.columns().begin(), t.columns().end());
  std::vector<std::uint64_t> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[i] = std::uint64_t{1} << i;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if ((rows[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularError("matrix is singular (rank < " + std::to_string(n) + ")");
    std::swap(rows[col], rows[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int r = 0; r < n; ++r)
      if (r != col && ((rows[r] >> col) & 1u)) {
        rows[r] ^= rows[col];
        inv[r] ^= inv[col];
      }
  }
  // inv now holds the rows of M^{-1}.
  return Gf2Matrix(n, std::move(inv)).transpose();
}

std::size_t Gf2MatrixHash::operator()(const Gf2Matrix& m) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(m.size());
  for (auto w : m.packed_image()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

} // namespace coxflip
