#include "coxflip/orbits.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <unordered_set>

#include "coxflip/error.hpp"
#include "coxflip/flipping.hpp"

namespace coxflip {

std::uint64_t state_cap() {
  if (const char* env = std::getenv("COXFLIP_STATE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 24;
}

namespace {

void require_states(int n) {
  if (n >= 63 || (std::uint64_t{1} << n) > state_cap())
    throw CapacityError("2^" + std::to_string(n) + " configurations exceed the state cap of " +
                        std::to_string(state_cap()));
}

} // namespace

SimpleBasis SimpleBasis::build(Family family, int n) {
  if (family == Family::Custom) throw UnsupportedFamily("simple bases exist only for A, D, E");
  const auto graph = CoxeterGraph::build_family(family, n);
  const GeneratorSet gens(graph);

  SimpleBasis b;
  b.family_ = family;
  b.n_ = n;
  // 1-bar = s_1 and (i+1)-bar = s_i (i-bar); A runs to (n+1)-bar, D and E to n-bar.
  b.bars_.push_back(Gf2Vector::unit(n, 1));
  const int last = family == Family::A ? n : n - 1;
  for (int i = 1; i <= last; ++i) b.bars_.push_back(gens[i] * b.bars_.back());
  if (family != Family::A) b.bars_.push_back(Gf2Vector::unit(n, n));  // (n+1)-bar = s_n

  std::vector<Gf2Vector> cols;
  for (int j = 1; j <= n; ++j) cols.push_back(b.bar(b.family_ == Family::D && j == n ? n + 1 : j));
  b.basis_ = Gf2Matrix::from_columns(cols);
  b.inverse_ = mat_inverse(b.basis_);
  return b;
}

Gf2Vector SimpleBasis::bar(int j) const {
  if (j < 1 || j > n_ + 1)
    throw RangeError("bar index " + std::to_string(j) + " outside 1.." + std::to_string(n_ + 1));
  return bars_[static_cast<std::size_t>(j - 1)];
}

Gf2Vector SimpleBasis::extra() const { return bar(family_ == Family::D ? n_ : n_ + 1); }

int SimpleBasis::column_of_bar(int j) const {
  if (family_ == Family::D) {
    if (j <= n_ - 1) return j;
    return j == n_ + 1 ? n_ : 0;
  }
  return j <= n_ ? j : 0;
}

int weight(const SimpleBasis& basis, const Gf2Vector& a) { return basis.coordinates(a).popcount(); }

bool in_subspace_Z(const SimpleBasis& basis, const Gf2Vector& a) {
  if (basis.family() != Family::D) throw UnsupportedFamily("the subspace Z is defined for D_n only");
  return !basis.coordinates(a).get(basis.size());
}

std::string OrbitLabel::to_string() const {
  switch (kind) {
    case Kind::O: return "O" + std::to_string(index);
    case Kind::OmegaOdd: return "Omega_o";
    case Kind::OmegaEven: return "Omega_e";
  }
  return "?";
}

OrbitLabel OrbitLabel::parse(const std::string& text) {
  if (text == "Omega_o") return {Kind::OmegaOdd, 0};
  if (text == "Omega_e") return {Kind::OmegaEven, 0};
  if (text.size() >= 2 && text[0] == 'O' &&
      std::all_of(text.begin() + 1, text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return {Kind::O, std::stoi(text.substr(1))};
  throw ValidationError("not an orbit label: " + text);
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

OrbitLabel classify_by_weight(Family family, int n, int w, bool in_z) {
  using K = OrbitLabel::Kind;
  switch (family) {
    case Family::A:
      // O_i = {wt = i or n+1-i}
      return {K::O, std::min(w, n + 1 - w)};
    case Family::D:
      if (in_z) return {K::O, std::min(w, n - w)};
      // Omega_o: wt = 1 or n-1 (mod 2); Omega_e: wt = 0 or n (mod 2).
      if (mod(w, 2) == 1 || mod(w - (n - 1), 2) == 0) return {K::OmegaOdd, 0};
      return {K::OmegaEven, 0};
    case Family::E: {
      if (w == 0) return {K::O, 0};
      // O_k: wt = k or n-1-k (mod 4), k = 1..4
      for (int k = 1; k <= 4; ++k)
        if (mod(w - k, 4) == 0 || mod(w - (n - 1 - k), 4) == 0) return {K::O, k};
      break;
    }
    case Family::Custom: break;
  }
  throw UnsupportedFamily("closed-form classification needs family A, D or E");
}

} // namespace

OrbitLabel classify(const SimpleBasis& basis, const Gf2Vector& a) {
  if (a.size() != basis.size()) throw DimensionError("classify: length mismatch");
  const auto coords = basis.coordinates(a);
  const bool in_z = basis.family() == Family::D ? !coords.get(basis.size()) : true;
  return classify_by_weight(basis.family(), basis.size(), coords.popcount(), in_z);
}

std::vector<OrbitLabel> orbit_names(const SimpleBasis& basis, const Gf2Vector& a) {
  using K = OrbitLabel::Kind;
  const auto label = classify(basis, a);
  const int n = basis.size();
  const int w = weight(basis, a);
  std::vector<OrbitLabel> names{label};
  if (basis.family() == Family::E && w != 0) {
    names.clear();
    for (int k = 1; k <= 4; ++k)
      if (mod(w - k, 4) == 0 || mod(w - (n - 1 - k), 4) == 0) names.push_back({K::O, k});
  } else if (basis.family() == Family::D && label.kind != K::O && n % 2 == 1) {
    names = {{K::OmegaOdd, 0}, {K::OmegaEven, 0}};
  }
  return names;
}

OrbitLabel classify(Family family, int n, const Gf2Vector& a) {
  if (family == Family::Custom) throw UnsupportedFamily("custom graphs have no closed-form classifier");
  return classify(SimpleBasis::build(family, n), a);
}

std::vector<OrbitLabel> family_labels(Family family, int n) {
  if (family == Family::Custom) throw UnsupportedFamily("custom graphs have no closed-form classifier");
  std::vector<OrbitLabel> labels;
  auto add = [&](OrbitLabel l) {
    if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
  };
  if (family == Family::D) {
    for (int w = 0; w <= n - 1; ++w) add(classify_by_weight(family, n, w, true));
    for (int w = 1; w <= n; ++w) add(classify_by_weight(family, n, w, false));
  } else {
    for (int w = 0; w <= n; ++w) add(classify_by_weight(family, n, w, true));
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<Gf2Vector> orbit_of(std::span<const Gf2Matrix> gens, const Gf2Vector& a) {
  for (const auto& g : gens)
    if (g.size() != a.size()) throw DimensionError("orbit_of: dimension mismatch");
  const std::uint64_t cap = state_cap();
  std::unordered_set<std::uint64_t> seen{a.bits()};
  std::vector<std::uint64_t> order{a.bits()};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : gens) {
      const std::uint64_t next = mat_vec_bits(g.columns(), order[head]);
      if (seen.insert(next).second) {
        if (order.size() >= cap) throw CapacityError("orbit exceeds the state cap");
        order.push_back(next);
      }
    }
  }
  std::sort(order.begin(), order.end());
  std::vector<Gf2Vector> out;
  out.reserve(order.size());
  for (auto v : order) out.emplace_back(a.size(), v);
  return out;
}

std::vector<Gf2Vector> OrbitPartition::members(std::size_t cls) const {
  std::vector<Gf2Vector> out;
  for (std::uint64_t v = 0; v < class_of.size(); ++v)
    if (class_of[v] == cls) out.emplace_back(n, v);
  return out;
}

OrbitPartition orbit_partition(std::span<const Gf2Matrix> gens, int n) {
  if (n < 1 || n > kMaxDimension) throw DimensionError("orbit_partition: bad dimension");
  require_states(n);
  for (const auto& g : gens)
    if (g.size() != n) throw DimensionError("orbit_partition: dimension mismatch");

  constexpr std::uint32_t kUnseen = 0xffffffffu;
  const std::uint64_t total = std::uint64_t{1} << n;
  OrbitPartition p;
  p.n = n;
  p.class_of.assign(total, kUnseen);
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (p.class_of[start] != kUnseen) continue;
    const auto cls = static_cast<std::uint32_t>(p.classes.size());
    queue.assign(1, start);
    p.class_of[start] = cls;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& g : gens) {
        const std::uint64_t next = mat_vec_bits(g.columns(), queue[head]);
        if (p.class_of[next] == kUnseen) {
          p.class_of[next] = cls;
          queue.push_back(next);
        }
      }
    }
    p.classes.push_back({"orbit" + std::to_string(cls), Gf2Vector(n, start), queue.size()});
  }
  return p;
}

OrbitPartition classifier_partition(const SimpleBasis& basis) {
  const int n = basis.size();
  require_states(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  OrbitPartition p;
  p.n = n;
  p.class_of.resize(total);
  std::vector<std::pair<OrbitLabel, std::uint32_t>> seen;
  for (std::uint64_t v = 0; v < total; ++v) {
    const auto label = classify(basis, Gf2Vector(n, v));
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& e) { return e.first == label; });
    std::uint32_t cls;
    if (it == seen.end()) {
      cls = static_cast<std::uint32_t>(p.classes.size());
      seen.emplace_back(label, cls);
      p.classes.push_back({label.to_string(), Gf2Vector(n, v), 0});
    } else {
      cls = it->second;
    }
    p.class_of[v] = cls;
    ++p.classes[cls].size;
  }
  return p;
}

void apply_family_labels(OrbitPartition& partition, const SimpleBasis& basis) {
  for (auto& c : partition.classes) c.label = classify(basis, c.representative).to_string();
}

bool same_partition(const OrbitPartition& a, const OrbitPartition& b) {
  if (a.n != b.n || a.classes.size() != b.classes.size() || a.class_of.size() != b.class_of.size())
    return false;
  // Both number classes by first appearance in increasing vector order, so
  // equal partitions have identical class_of arrays.
  std::vector<std::uint32_t> map_ab(a.classes.size(), 0xffffffffu);
  for (std::size_t v = 0; v < a.class_of.size(); ++v) {
    auto& m = map_ab[a.class_of[v]];
    if (m == 0xffffffffu) m = b.class_of[v];
    else if (m != b.class_of[v]) return false;
  }
  std::vector<std::uint32_t> sorted(map_ab);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

BigInt o1_size(int n) {
  if (n < 6) throw RangeError("o1_size needs n >= 6, got " + std::to_string(n));
  auto pow2 = [](int e) { return BigInt(1) << e; };
  auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
  switch (n % 4) {
    case 0: return pow2(n - 1) - sign(n / 4) * pow2((n - 2) / 2);
    case 1: return pow2(n - 1);
    case 2: return pow2(n - 1) + sign((n - 2) / 4) * pow2((n - 2) / 2) - 1;
    default: return pow2(n - 2) + sign((n - 3) / 4) * pow2((n - 3) / 2);
  }
}

namespace {

// Echelon basis keyed by leading bit; returns true if v was independent.
struct Echelon {
  std::uint64_t rows[64] = {};
  std::vector<std::uint64_t> added;

  bool insert(std::uint64_t v) {
    const std::uint64_t original = v;
    while (v) {
      const int hb = 63 - std::countl_zero(v);
      if (!rows[hb]) {
        rows[hb] = v;
        added.push_back(original);
        return true;
      }
      v ^= rows[hb];
    }
    return false;
  }
};

} // namespace

std::vector<Gf2Vector> stable_span(std::span<const Gf2Matrix> gens, const Gf2Vector& v) {
  Echelon basis;
  if (!v.is_zero()) basis.insert(v.bits());
  for (std::size_t head = 0; head < basis.added.size(); ++head) {
    const std::uint64_t b = basis.added[head];
    for (const auto& g : gens) basis.insert(mat_vec_bits(g.columns(), b));
  }
  std::vector<Gf2Vector> out;
  for (auto b : basis.added) out.emplace_back(v.size(), b);
  return out;
}

std::optional<std::vector<Gf2Vector>> invariant_subspace(std::span<const Gf2Matrix> gens, int n) {
  // The stable span of v and of Gv coincide up to G, so orbit
  // representatives suffice.
  const auto partition = orbit_partition(gens, n);
  for (const auto& c : partition.classes) {
    if (c.representative.is_zero()) continue;
    auto span = stable_span(gens, c.representative);
    if (static_cast<int>(span.size()) < n) return span;
  }
  return std::nullopt;
}

bool is_irreducible(std::span<const Gf2Matrix> gens, int n) { return !invariant_subspace(gens, n); }

} // namespace coxflip
