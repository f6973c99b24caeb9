#pragma once

#include <cstdint>
#include <unordered_map>

#include "dwidth/menger.hpp"

namespace dwidth::detail {

// Memoised count_disjoint_paths for one digraph; the lean checks ask the same
// (from, to) question for many bag pairs.
class PathCounter {
 public:
  explicit PathCounter(const Digraph& g) : g_(g) {}

  int count(VertexSet from, VertexSet to) {
    const Key key{from.bits(), to.bits()};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const int value = count_disjoint_paths(g_, from, to);
    cache_.emplace(key, value);
    return value;
  }

 private:
  struct Key {
    std::uint64_t from;
    std::uint64_t to;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()(k.from * 0x9e3779b97f4a7c15ULL ^ k.to);
    }
  };

  const Digraph& g_;
  std::unordered_map<Key, int, KeyHash> cache_;
};

}  // namespace dwidth::detail
