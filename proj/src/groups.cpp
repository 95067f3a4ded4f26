#include "mixbeau/groups.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <sstream>

#include "mixbeau/kernels.hpp"

namespace mixbeau {

namespace {

constexpr std::array<DiagTriple, 5> kX0 = {DiagTriple::of(11, 11, 11), DiagTriple::of(17, 17, 17),
                                           DiagTriple::of(26, 26, 26), DiagTriple::of(11, 11, 0),
                                           DiagTriple::of(17, 0, 0)};
constexpr std::array<DiagTriple, 5> kX1 = {DiagTriple::of(23, 224, 138), DiagTriple::of(59, 136, 495),
                                           DiagTriple::of(26, 488, 227), DiagTriple::of(23, 224, 0),
                                           DiagTriple::of(59, 0, 0)};
constexpr std::array<DiagTriple, 5> kX2 = {DiagTriple::of(46, 68, 217), DiagTriple::of(12, 194, 363),
                                           DiagTriple::of(26, 326, 77), DiagTriple::of(46, 68, 0),
                                           DiagTriple::of(12, 0, 0)};

std::vector<GroupElement> with_inverses(const std::vector<LabeledElement>& gens) {
  std::vector<GroupElement> out;
  for (const auto& g : gens) out.push_back(g.value);
  for (const auto& g : gens) out.push_back(elem_inv(g.value));
  return out;
}

}  // namespace

std::span<const DiagTriple> generator_constants(int i) {
  switch (i) {
    case 0: return kX0;
    case 1: return kX1;
    case 2: return kX2;
    default: throw std::out_of_range("generator_constants: only x_0, x_1, x_2 are constants");
  }
}

GeneratorSet make_generators(int k) {
  GeneratorSet s;
  s.k = k;
  for (int i = 0; i < 3; ++i) s.x[std::size_t(i)] = GroupElement::from_diagonals(k, generator_constants(i));
  for (std::size_t i = 0; i < 4; ++i) s.x[i + 3] = elem_inv(elem_mul(s.x[i], s.x[i + 1]));
  for (std::size_t i = 0; i < 7; ++i) {
    const auto r = elem_mul(elem_mul(s.x[i], s.x[(i + 1) % 7]), s.x[(i + 3) % 7]);
    if (!r.is_identity())
      throw std::logic_error("relation x_" + std::to_string(i) + " x_" + std::to_string((i + 1) % 7) +
                             " x_" + std::to_string((i + 3) % 7) + " = 1 fails at level " +
                             std::to_string(k));
  }
  return s;
}

EnumeratedGroup::EnumeratedGroup(std::vector<LabeledElement> gens, ElementStore elements)
    : gens_(std::move(gens)), store_(std::move(elements)) {}

std::uint64_t generator_fingerprint(int k, std::span<const LabeledElement> gens) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ std::uint64_t(k);
  for (const auto& g : gens) {
    h ^= canonical_hash(g.value);
    h *= 0x100000001b3ull;
    h = (h << 13) | (h >> 51);
  }
  return h;
}

std::uint64_t EnumeratedGroup::fingerprint() const { return generator_fingerprint(level(), gens_); }

GroupPtr closure(std::vector<LabeledElement> gens, int k, std::size_t budget, Backend backend) {
  for (const auto& g : gens)
    if (g.value.level() != k) throw std::invalid_argument("closure: generator " + g.label + " has wrong level");
  const auto mult = with_inverses(gens);
  ElementStore store(k, std::min<std::size_t>(budget, std::size_t{1} << 16));
  const bool ok = backend == Backend::serial ? kernels::closure_serial(store, mult, budget)
                                             : kernels::closure_omp(store, mult, budget);
  if (!ok) throw BudgetExceeded(budget, k);
  return std::make_shared<const EnumeratedGroup>(std::move(gens), std::move(store));
}

namespace {
std::vector<LabeledElement> labeled(const GeneratorSet& s, int n) {
  std::vector<LabeledElement> out;
  for (int i = 0; i < n; ++i) out.push_back({"x" + std::to_string(i), s.x[std::size_t(i)]});
  return out;
}
}  // namespace

GroupPtr enumerate_g(int k, std::size_t budget, Backend backend) {
  return closure(labeled(make_generators(k), 3), k, budget, backend);
}

GroupPtr enumerate_h(int k, std::size_t budget, Backend backend) {
  return closure(labeled(make_generators(k), 2), k, budget, backend);
}

std::vector<LadderRow> group_order_ladder(int k_min, int k_max, std::size_t budget) {
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("group_order_ladder: bad k range");
  std::vector<std::size_t> orders;
  for (int k = k_min; k <= k_max + 1; ++k) orders.push_back(enumerate_g(k, budget)->order());
  std::vector<LadderRow> rows;
  for (int k = k_min; k <= k_max; ++k) {
    const std::size_t i = std::size_t(k - k_min);
    rows.push_back({k, orders[i], orders[i + 1] / orders[i]});
  }
  return rows;
}

std::uint64_t element_order(const GroupElement& g) {
  std::uint64_t n = 1;
  GroupElement p = g;
  while (!p.is_identity()) {
    p = elem_mul(p, g);
    ++n;
  }
  return n;
}

GroupElement HomVerdict::apply(const EnumeratedGroup& g, const GroupElement& x) const {
  if (!homomorphism) throw std::logic_error("HomVerdict::apply: not a homomorphism");
  const auto idx = g.index_of(x);
  if (!idx) throw std::invalid_argument("HomVerdict::apply: element not in group");
  return g.element(image[*idx]);
}

HomVerdict check_hom_extends(const EnumeratedGroup& g, std::span<const GroupElement> images) {
  const auto& gens = g.generators();
  if (images.size() != gens.size())
    throw std::invalid_argument("check_hom_extends: need one image per generator");
  for (std::size_t i = 0; i < images.size(); ++i)
    if (!g.contains(images[i]))
      throw std::invalid_argument("check_hom_extends: image of " + gens[i].label + " is not in the group");

  constexpr std::uint32_t kUnset = 0xffffffffu;
  HomVerdict v;
  std::vector<std::uint32_t> phi(g.order(), kUnset);
  const std::uint32_t id = *g.index_of(GroupElement::identity(g.level()));
  phi[id] = id;
  std::deque<std::uint32_t> queue{id};
  while (!queue.empty()) {
    const std::uint32_t e = queue.front();
    queue.pop_front();
    const GroupElement ge = g.element(e);
    const GroupElement pe = g.element(phi[e]);
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const std::uint32_t t = *g.index_of(elem_mul(gens[s].value, ge));
      const std::uint32_t img = *g.index_of(elem_mul(images[s], pe));
      if (phi[t] == kUnset) {
        phi[t] = img;
        queue.push_back(t);
      } else if (phi[t] != img) {
        v.conflict = "edge " + gens[s].label + " * " + format_element(ge) + " maps inconsistently";
        return v;
      }
    }
  }
  v.homomorphism = true;
  std::vector<std::uint32_t> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  v.bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  v.image = std::move(phi);
  return v;
}

std::vector<Relator> g_relators() {
  // x2 x1 x2 x0 x1 x0;  x2 x0^-1 x2 x1^-1 x0^-1 x1;  x2^2 x1^-1 x0^-1 x1^-1 x0
  return {{"r1", {3, 2, 3, 1, 2, 1}},
          {"r2", {3, -1, 3, -2, -1, 2}},
          {"r3", {3, 3, -2, -1, -2, 1}}};
}

std::vector<Relator> h_relators() {
  return {{"r3", {2, 1, 2, 1, 2, 1, -2, -2, -2, -1, -1, -1}},
          {"r4", {2, -1, -2, -1, -1, -1, 2, 2, -1, 2, 1, 2}},
          {"r5", {2, 2, 2, -1, 2, 1, 2, 1, 1, 2, 2, 1, 2, 1}}};
}

GroupElement evaluate_word(std::span<const int> letters, std::span<const GroupElement> gens) {
  if (gens.empty()) throw std::invalid_argument("evaluate_word: no generators");
  GroupElement acc = GroupElement::identity(gens[0].level());
  for (int l : letters) {
    const std::size_t i = std::size_t(std::abs(l) - 1);
    if (l == 0 || i >= gens.size()) throw std::invalid_argument("evaluate_word: bad letter");
    acc = elem_mul(acc, l > 0 ? gens[i] : elem_inv(gens[i]));
  }
  return acc;
}

namespace {

constexpr char kMagic[8] = {'M', 'X', 'B', 'G', 'R', 'P', '0', '1'};

template <typename T>
void put(std::ostream& os, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) os.put(char((std::uint64_t(v) >> (8 * i)) & 0xff));
}

template <typename T>
T get(std::istream& is) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    const int c = is.get();
    if (c == EOF) throw std::runtime_error("load_group: truncated file");
    v |= std::uint64_t(std::uint8_t(c)) << (8 * i);
  }
  return T(v);
}

}  // namespace

void save_group(const EnumeratedGroup& g, const std::filesystem::path& path) {
  const int k = g.level();
  std::vector<std::uint32_t> order(g.order());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  const auto& st = g.store();
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto ka = st.key(a), kb = st.key(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
  });

  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("save_group: cannot open " + tmp);
    os.write(kMagic, sizeof kMagic);
    put<std::uint32_t>(os, std::uint32_t(k));
    put<std::uint64_t>(os, g.order());
    put<std::uint64_t>(os, g.fingerprint());
    put<std::uint32_t>(os, std::uint32_t(g.generators().size()));
    for (const auto& gen : g.generators()) {
      put<std::uint16_t>(os, std::uint16_t(gen.label.size()));
      os.write(gen.label.data(), std::streamsize(gen.label.size()));
      const auto bytes = serialize(gen.value);
      os.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    }
    std::uint16_t raw[3 * kMaxLevel];
    for (auto i : order) {
      unpack_raw(k, st.key(i).data(), raw);
      for (int q = 0; q < 3 * k; ++q) put<std::uint16_t>(os, raw[q]);
    }
    if (!os) throw std::runtime_error("save_group: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

GroupPtr load_group(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("load_group: cannot open " + path.string());
  char magic[8];
  is.read(magic, sizeof magic);
  if (!is || !std::equal(magic, magic + 8, kMagic)) throw std::runtime_error("load_group: bad magic");
  const int k = int(get<std::uint32_t>(is));
  const auto order = get<std::uint64_t>(is);
  const auto fp = get<std::uint64_t>(is);
  const auto ngen = get<std::uint32_t>(is);
  std::vector<LabeledElement> gens;
  for (std::uint32_t i = 0; i < ngen; ++i) {
    std::string label(get<std::uint16_t>(is), '\0');
    is.read(label.data(), std::streamsize(label.size()));
    std::vector<std::uint8_t> bytes(2 + 6 * std::size_t(k));
    is.read(reinterpret_cast<char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!is) throw std::runtime_error("load_group: truncated generator");
    gens.push_back({label, deserialize(bytes)});
  }
  if (generator_fingerprint(k, gens) != fp) throw std::runtime_error("load_group: fingerprint mismatch");
  ElementStore store(k, order);
  GroupElement e = GroupElement::identity(k);
  for (std::uint64_t n = 0; n < order; ++n) {
    auto raw = e.raw_mut();
    for (auto& b : raw) {
      b = get<std::uint16_t>(is);
      if (b > F2Mat3::kMask) throw std::runtime_error("load_group: block value above 511");
    }
    store.insert(e);
  }
  if (store.size() != order) throw std::runtime_error("load_group: duplicate elements");
  return std::make_shared<const EnumeratedGroup>(std::move(gens), std::move(store));
}

GroupPtr cached_closure(std::vector<LabeledElement> gens, int k, std::size_t budget,
                        const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return closure(std::move(gens), k, budget);
  char name[64];
  std::snprintf(name, sizeof name, "group_k%d_%016llx.bin", k,
                static_cast<unsigned long long>(generator_fingerprint(k, gens)));
  const auto path = *cache_dir / name;
  if (std::filesystem::exists(path)) {
    auto g = load_group(path);
    if (g->order() > budget) throw BudgetExceeded(budget, k);
    return g;
  }
  auto g = closure(std::move(gens), k, budget);
  std::filesystem::create_directories(*cache_dir);
  save_group(*g, path);
  return g;
}

}  // namespace mixbeau
