#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "armine/error.hpp"
#include "armine/types.hpp"

namespace armine {

// A canonical itemset: item ids strictly increasing, never empty.
struct Itemset {
  std::vector<ItemId> items;

  Itemset() = default;
  explicit Itemset(std::vector<ItemId> ids) : items(std::move(ids)) {}

  std::size_t size() const { return items.size(); }
  bool empty() const { return items.empty(); }

  bool operator==(const Itemset& other) const { return items == other.items; }
  bool operator!=(const Itemset& other) const { return items != other.items; }
  bool operator<(const Itemset& other) const { return items < other.items; }
};

struct ItemsetRecord {
  Itemset itemset;
  Count support = 0;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (ItemId id : s.items) {
      h ^= id;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline bool is_canonical(const std::vector<ItemId>& ids) {
  if (ids.empty()) return false;
  for (std::size_t i = 1; i < ids.size(); ++i)
    if (ids[i - 1] >= ids[i]) return false;
  return true;
}

// Sorts, deduplicates and validates; the entry point for untrusted id lists.
inline Itemset canonical_itemset(std::vector<ItemId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) throw Error("itemset must be non-empty");
  return Itemset(std::move(ids));
}

// Sorted-merge subset test: true iff every id of `wanted` occurs in `within`.
inline bool contains_all(std::span<const ItemId> within, std::span<const ItemId> wanted) {
  return std::includes(within.begin(), within.end(), wanted.begin(), wanted.end());
}

inline bool is_subset(const Itemset& sub, const Itemset& super) {
  return contains_all(super.items, sub.items);
}

inline bool is_proper_subset(const Itemset& sub, const Itemset& super) {
  return sub.size() < super.size() && is_subset(sub, super);
}

inline Itemset itemset_union(const Itemset& a, const Itemset& b) {
  Itemset out;
  out.items.reserve(a.size() + b.size());
  std::set_union(a.items.begin(), a.items.end(), b.items.begin(), b.items.end(),
                 std::back_inserter(out.items));
  return out;
}

inline Itemset itemset_minus(const Itemset& a, const Itemset& b) {
  Itemset out;
  std::set_difference(a.items.begin(), a.items.end(), b.items.begin(), b.items.end(),
                      std::back_inserter(out.items));
  return out;
}

inline bool disjoint(const Itemset& a, const Itemset& b) {
  auto ia = a.items.begin();
  auto ib = b.items.begin();
  while (ia != a.items.end() && ib != b.items.end()) {
    if (*ia == *ib) return false;
    if (*ia < *ib) ++ia; else ++ib;
  }
  return true;
}

}  // namespace armine
