#include "coxflip/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "coxflip/error.hpp"
#include "coxflip/flipping.hpp"

namespace coxflip {

namespace {

using Columns = std::array<std::uint64_t, kMaxDimension>;
using Packed = std::array<std::uint64_t, kMaxDimension>;  // n*n bits <= 4096 = 64 words

void pack(const Columns& cols, int n, std::uint64_t* out, std::size_t words) {
  std::fill(out, out + words, 0);
  std::size_t pos = 0;
  for (int j = 0; j < n; ++j, pos += static_cast<std::size_t>(n)) {
    const auto w = pos / 64, off = pos % 64;
    out[w] |= cols[j] << off;
    if (off != 0 && off + static_cast<std::size_t>(n) > 64) out[w + 1] |= cols[j] >> (64 - off);
  }
}

void unpack(const std::uint64_t* in, int n, Columns& cols) {
  const auto mask = low_mask(n);
  std::size_t pos = 0;
  for (int j = 0; j < n; ++j, pos += static_cast<std::size_t>(n)) {
    const auto w = pos / 64, off = pos % 64;
    std::uint64_t c = in[w] >> off;
    if (off != 0 && off + static_cast<std::size_t>(n) > 64) c |= in[w + 1] << (64 - off);
    cols[j] = c & mask;
  }
}

std::uint64_t hash_words(const std::uint64_t* p, std::size_t words) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < words; ++i) {
    std::uint64_t x = p[i] + 0x9e3779b97f4a7c15ull * (i + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    h = (h ^ x) * 0x100000001b3ull;
  }
  return h ^ (h >> 29);
}

// Open-addressing set of indices into a flat array of packed images.
class ImageTable {
public:
  ImageTable(const std::vector<std::uint64_t>& images, std::size_t words)
      : images_(images), words_(words), slots_(1024, kEmpty) {}

  // Returns true if the image at `index` was newly inserted.
  bool insert(std::uint32_t index) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    if (place(index)) {
      ++count_;
      return true;
    }
    return false;
  }

  // True if `probe` (words_ words) is already present.
  bool contains(const std::uint64_t* probe) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash_words(probe, words_) & mask;; s = (s + 1) & mask) {
      if (slots_[s] == kEmpty) return false;
      if (std::equal(probe, probe + words_, images_.data() + slots_[s] * words_)) return true;
    }
  }

private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  bool place(std::uint32_t index) {
    const std::uint64_t* key = images_.data() + static_cast<std::size_t>(index) * words_;
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash_words(key, words_) & mask;; s = (s + 1) & mask) {
      if (slots_[s] == kEmpty) {
        slots_[s] = index;
        return true;
      }
      if (std::equal(key, key + words_, images_.data() + static_cast<std::size_t>(slots_[s]) * words_))
        return false;
    }
  }

  void grow() {
    std::vector<std::uint32_t> old(slots_.size() * 2, kEmpty);
    old.swap(slots_);
    for (auto idx : old)
      if (idx != kEmpty) place(idx);
  }

  const std::vector<std::uint64_t>& images_;
  std::size_t words_;
  std::vector<std::uint32_t> slots_;
  std::size_t count_ = 0;
};

} // namespace

Gf2Matrix ExplicitSet::element(std::size_t i) const {
  return Gf2Matrix::from_packed_image(
      n_, std::span<const std::uint64_t>(images_.data() + i * words_, words_));
}

std::optional<std::size_t> ExplicitSet::index_of(const Gf2Matrix& m) const {
  if (m.size() != n_) return std::nullopt;
  const auto key = m.packed_image();
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const std::uint64_t* p = images_.data() + mid * words_;
    // Compare as big integers, most significant word last in storage.
    int cmp = 0;
    for (std::size_t w = words_; w-- > 0;) {
      if (p[w] != key[w]) {
        cmp = p[w] < key[w] ? -1 : 1;
        break;
      }
    }
    if (cmp == 0) return mid;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

bool ExplicitSet::contains(const Gf2Matrix& m) const { return index_of(m).has_value(); }

ExplicitSet enumerate(int n, std::span<const Gf2Matrix> gens, std::size_t cap) {
  if (n < 1 || n > kMaxDimension) throw DimensionError("enumerate: bad dimension");
  for (const auto& g : gens)
    if (g.size() != n) throw DimensionError("enumerate: generator dimension mismatch");
  if (cap == 0) throw CapacityError("element cap is zero");
  if (cap > 0xfffffffeu) cap = 0xfffffffeu;

  std::vector<Gf2Matrix> sorted_gens(gens.begin(), gens.end());
  std::sort(sorted_gens.begin(), sorted_gens.end());
  sorted_gens.erase(std::unique(sorted_gens.begin(), sorted_gens.end()), sorted_gens.end());
  std::vector<Columns> gen_cols(sorted_gens.size());
  for (std::size_t k = 0; k < sorted_gens.size(); ++k)
    std::copy(sorted_gens[k].columns().begin(), sorted_gens[k].columns().end(), gen_cols[k].begin());

  ExplicitSet set;
  set.n_ = n;
  set.words_ = static_cast<std::size_t>(Gf2Matrix::packed_words(n));
  const std::size_t words = set.words_;
  auto& images = set.images_;
  ImageTable table(images, words);

  Columns cols{}, prod{};
  for (int j = 0; j < n; ++j) cols[j] = std::uint64_t{1} << j;
  images.resize(words);
  pack(cols, n, images.data(), words);
  table.insert(0);

  Packed scratch{};
  for (std::size_t head = 0; head * words < images.size(); ++head) {
    unpack(images.data() + head * words, n, cols);
    for (const auto& g : gen_cols) {
      for (int j = 0; j < n; ++j)
        prod[j] = mat_vec_bits(std::span<const std::uint64_t>(cols.data(), static_cast<std::size_t>(n)), g[j]);
      pack(prod, n, scratch.data(), words);
      if (table.contains(scratch.data())) continue;
      const std::size_t count = images.size() / words;
      if (count >= cap)
        throw CapacityError("group has more than " + std::to_string(cap) + " elements");
      images.insert(images.end(), scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(words));
      table.insert(static_cast<std::uint32_t>(count));
    }
  }

  // Canonical order: packed image read as a big integer.
  const std::size_t count = images.size() / words;
  if (words == 1) {
    std::sort(images.begin(), images.end());
  } else {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const std::uint64_t* pa = images.data() + a * words;
      const std::uint64_t* pb = images.data() + b * words;
      for (std::size_t w = words; w-- > 0;)
        if (pa[w] != pb[w]) return pa[w] < pb[w];
      return false;
    });
    std::vector<std::uint64_t> sorted(images.size());
    for (std::size_t i = 0; i < count; ++i)
      std::copy_n(images.data() + order[i] * words, words, sorted.data() + i * words);
    images.swap(sorted);
  }
  return set;
}

MatrixGroup::MatrixGroup(int n, std::vector<Gf2Matrix> generators, Backend backend,
                         std::size_t element_cap)
    : n_(n), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.size() != n) throw DimensionError("generator dimension mismatch");
  switch (backend) {
    case Backend::Explicit:
      elements_ = std::make_shared<ExplicitSet>(enumerate(n, gens_, element_cap));
      break;
    case Backend::Chain:
      chain_ = std::make_shared<StabilizerChain>(n, gens_);
      break;
    case Backend::Auto:
      chain_ = std::make_shared<StabilizerChain>(n, gens_);
      if (chain_->order() <= element_cap)
        elements_ = std::make_shared<ExplicitSet>(enumerate(n, gens_, element_cap));
      break;
  }
}

BigInt MatrixGroup::order() const {
  if (elements_) return BigInt(elements_->size());
  return chain_->order();
}

bool MatrixGroup::contains(const Gf2Matrix& m) const {
  if (m.size() != n_) throw DimensionError("membership: dimension mismatch");
  if (elements_) return elements_->contains(m);
  return chain_->contains(m);
}

const ExplicitSet& MatrixGroup::elements() const {
  if (!elements_) throw BackendError("group was not enumerated (order exceeds the element cap)");
  return *elements_;
}

const StabilizerChain& MatrixGroup::chain() const {
  if (!chain_) throw BackendError("group has no stabilizer chain");
  return *chain_;
}

BigInt order_schreier_sims(std::span<const Gf2Matrix> gens, int n) {
  return StabilizerChain(n, gens).order();
}

std::vector<Gf2Matrix> center(const MatrixGroup& group) {
  const auto& set = group.elements();
  std::vector<Gf2Matrix> out;
  set.for_each([&](const Gf2Matrix& z) {
    for (const auto& g : group.generators())
      if (z * g != g * z) return;
    out.push_back(z);
  });
  return out;
}

bool membership(const MatrixGroup& group, const Gf2Matrix& m) { return group.contains(m); }

Gf2Matrix restrict_block(const Gf2Matrix& m, std::span<const Vertex> subset) {
  return m.block(subset);
}

bool is_block_lower_triangular(const Gf2Matrix& m, std::span<const Vertex> subset) {
  std::uint64_t in_j = 0;
  for (Vertex v : subset) in_j |= std::uint64_t{1} << (v - 1);
  for (int v = 1; v <= m.size(); ++v) {
    if ((in_j >> (v - 1)) & 1u) continue;
    if (m.column_bits(v) & in_j) return false;
  }
  return true;
}

RestrictionPair restriction(const CoxeterGraph& g, const std::vector<Vertex>& subset) {
  if (subset.empty()) throw RangeError("restriction needs a nonempty vertex set");
  RestrictionPair r{{}, {}, {}, g.induced(subset)};
  r.subset = subset;
  std::sort(r.subset.begin(), r.subset.end());
  for (Vertex s : r.subset) {
    const auto full = generator_matrix(g, s);
    r.sub_generators.push_back(full);
    r.restricted_generators.push_back(full.block(r.subset));
  }
  return r;
}

} // namespace coxflip
