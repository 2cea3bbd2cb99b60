#pragma once

// Exhaustive bijection search used by the canonical-form and automorphism
// routines. Objects here never exceed a handful of vertices.

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

namespace morsecat::detail {

/// Groups element indices by an invariant key; cells come out in key order.
template <class Key>
std::vector<std::vector<int>> cells_by_key(const std::vector<Key>& keys) {
  std::map<Key, std::vector<int>> grouped;
  for (int i = 0; i < static_cast<int>(keys.size()); ++i) grouped[keys[i]].push_back(i);
  std::vector<std::vector<int>> cells;
  cells.reserve(grouped.size());
  for (auto& [k, members] : grouped) cells.push_back(std::move(members));
  return cells;
}

/// Calls fn(map) for every bijection sending cell src[i] onto cell dst[i]
/// (same sizes). map[old] = new. Returning false from fn stops the search.
template <class Fn>
bool for_each_cell_bijection(const std::vector<std::vector<int>>& src,
                             const std::vector<std::vector<int>>& dst,
                             std::size_t element_count, Fn&& fn) {
  std::vector<int> map(element_count, -1);
  std::vector<std::vector<int>> order = dst;
  for (auto& cell : order) std::sort(cell.begin(), cell.end());

  auto recurse = [&](auto&& self, std::size_t cell) -> bool {
    if (cell == src.size()) return fn(static_cast<const std::vector<int>&>(map));
    auto& targets = order[cell];
    do {
      for (std::size_t k = 0; k < targets.size(); ++k) map[src[cell][k]] = targets[k];
      if (!self(self, cell + 1)) return false;
    } while (std::next_permutation(targets.begin(), targets.end()));
    return true;
  };
  return recurse(recurse, 0);
}

/// Bijections that hand out new labels 0, 1, 2, ... cell by cell.
template <class Fn>
bool for_each_ordered_labeling(const std::vector<std::vector<int>>& cells,
                               std::size_t element_count, Fn&& fn) {
  std::vector<std::vector<int>> slots;
  int next = 0;
  for (const auto& cell : cells) {
    std::vector<int> s;
    for (std::size_t k = 0; k < cell.size(); ++k) s.push_back(next++);
    slots.push_back(std::move(s));
  }
  return for_each_cell_bijection(cells, slots, element_count, std::forward<Fn>(fn));
}

}  // namespace morsecat::detail
