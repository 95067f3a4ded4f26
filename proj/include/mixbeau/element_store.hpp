#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mixbeau/band.hpp"

namespace mixbeau {

/// Packed keys: seven 9-bit blocks per 64-bit word, first block in the high
/// bits, so comparing key words in order is the canonical element order.
constexpr int words_for_level(int k) { return (3 * k + 6) / 7; }

void pack_raw(int k, const std::uint16_t* raw, std::uint64_t* out);
void unpack_raw(int k, const std::uint64_t* key, std::uint16_t* out);
GroupElement unpack(int k, const std::uint64_t* key);

/// Insertion-ordered set of elements of one level, stored as packed keys in
/// a flat array with an open-addressing index. Indices are stable.
class ElementStore {
 public:
  explicit ElementStore(int level, std::size_t expected = 0);

  int level() const { return level_; }
  int words() const { return words_; }
  std::size_t size() const { return count_; }

  void reserve(std::size_t n);

  /// Returns (index, inserted).
  std::pair<std::uint32_t, bool> insert(const GroupElement& g);
  std::pair<std::uint32_t, bool> insert_packed(const std::uint64_t* key);

  std::optional<std::uint32_t> find(const GroupElement& g) const;
  std::optional<std::uint32_t> find_packed(const std::uint64_t* key) const;
  bool contains(const GroupElement& g) const { return find(g).has_value(); }

  GroupElement element(std::uint32_t i) const;
  std::span<const std::uint64_t> key(std::uint32_t i) const {
    return {keys_.data() + std::size_t(i) * std::size_t(words_), std::size_t(words_)};
  }

 private:
  std::uint64_t hash(const std::uint64_t* key) const;
  bool equal_at(std::uint32_t idx, const std::uint64_t* key) const;
  void rehash(std::size_t slots);

  int level_;
  int words_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> slots_;  // index + 1; 0 marks an empty slot
};

}  // namespace mixbeau
