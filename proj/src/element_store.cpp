#include "mixbeau/element_store.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mixbeau {

void pack_raw(int k, const std::uint16_t* raw, std::uint64_t* out) {
  const int n = 3 * k;
  const int w = words_for_level(k);
  std::fill_n(out, w, 0);
  for (int q = 0; q < n; ++q) out[q / 7] |= std::uint64_t(raw[q]) << (9 * (6 - q % 7));
}

void unpack_raw(int k, const std::uint64_t* key, std::uint16_t* out) {
  const int n = 3 * k;
  for (int q = 0; q < n; ++q) out[q] = std::uint16_t((key[q / 7] >> (9 * (6 - q % 7))) & 0x1ff);
}

GroupElement unpack(int k, const std::uint64_t* key) {
  GroupElement g = GroupElement::identity(k);
  unpack_raw(k, key, g.raw_mut().data());
  return g;
}

ElementStore::ElementStore(int level, std::size_t expected)
    : level_(level), words_(words_for_level(level)) {
  if (level < 1 || level > kMaxLevel) throw std::invalid_argument("ElementStore: bad level");
  rehash(std::max<std::size_t>(16, std::bit_ceil(2 * std::max<std::size_t>(expected, 8))));
  keys_.reserve(expected * std::size_t(words_));
}

void ElementStore::reserve(std::size_t n) {
  keys_.reserve(n * std::size_t(words_));
  if (2 * n > slots_.size()) rehash(std::bit_ceil(2 * n));
}

std::uint64_t ElementStore::hash(const std::uint64_t* key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < words_; ++i) {
    std::uint64_t z = key[i] + h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h = z ^ (z >> 31);
  }
  return h;
}

bool ElementStore::equal_at(std::uint32_t idx, const std::uint64_t* key) const {
  const std::uint64_t* k = keys_.data() + std::size_t(idx) * std::size_t(words_);
  return std::equal(k, k + words_, key);
}

void ElementStore::rehash(std::size_t slots) {
  slots_.assign(slots, 0);
  const std::size_t mask = slots - 1;
  for (std::uint32_t i = 0; i < count_; ++i) {
    std::size_t s = hash(keys_.data() + std::size_t(i) * std::size_t(words_)) & mask;
    while (slots_[s]) s = (s + 1) & mask;
    slots_[s] = i + 1;
  }
}

std::pair<std::uint32_t, bool> ElementStore::insert_packed(const std::uint64_t* key) {
  if (2 * (count_ + 1) > slots_.size()) rehash(slots_.size() * 2);
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(key) & mask;
  while (slots_[s]) {
    if (equal_at(slots_[s] - 1, key)) return {slots_[s] - 1, false};
    s = (s + 1) & mask;
  }
  if (count_ >= 0xffffffffu) throw std::length_error("ElementStore: index space exhausted");
  const auto idx = static_cast<std::uint32_t>(count_++);
  slots_[s] = idx + 1;
  keys_.insert(keys_.end(), key, key + words_);
  return {idx, true};
}

std::optional<std::uint32_t> ElementStore::find_packed(const std::uint64_t* key) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(key) & mask;
  while (slots_[s]) {
    if (equal_at(slots_[s] - 1, key)) return slots_[s] - 1;
    s = (s + 1) & mask;
  }
  return std::nullopt;
}

std::pair<std::uint32_t, bool> ElementStore::insert(const GroupElement& g) {
  if (g.level() != level_) throw std::invalid_argument("ElementStore: level mismatch");
  std::uint64_t key[words_for_level(kMaxLevel)];
  pack_raw(level_, g.raw().data(), key);
  return insert_packed(key);
}

std::optional<std::uint32_t> ElementStore::find(const GroupElement& g) const {
  if (g.level() != level_) throw std::invalid_argument("ElementStore: level mismatch");
  std::uint64_t key[words_for_level(kMaxLevel)];
  pack_raw(level_, g.raw().data(), key);
  return find_packed(key);
}

GroupElement ElementStore::element(std::uint32_t i) const {
  if (i >= count_) throw std::out_of_range("ElementStore: index out of range");
  return unpack(level_, keys_.data() + std::size_t(i) * std::size_t(words_));
}

}  // namespace mixbeau
