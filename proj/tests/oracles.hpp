#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hda/hda.hpp"
#include "hda/precubical.hpp"

// Small independent oracles used to cross-check library results.
// They deliberately avoid the library's path machinery.
namespace oracles {

// Number of edge paths from one vertex to another with length
// exactly in [0, max_len], by dynamic programming over the
// adjacency structure.
inline std::uint64_t count_paths(const hda::PrecubicalSet& p, hda::Cube from,
                                 hda::Cube to, int max_len) {
  std::map<hda::Cube, std::vector<hda::Cube>> out;  // source -> targets
  for (hda::Cube e : p.cubes(1))
    out[p.face(e, 1, 0)].push_back(p.face(e, 1, 1));
  std::map<hda::Cube, std::uint64_t> reach;
  reach[from] = 1;
  std::uint64_t total = reach.count(to) ? reach[to] : 0;
  for (int len = 1; len <= max_len; ++len) {
    std::map<hda::Cube, std::uint64_t> next;
    for (const auto& [v, n] : reach)
      if (auto it = out.find(v); it != out.end())
        for (hda::Cube w : it->second) next[w] += n;
    reach = std::move(next);
    if (auto it = reach.find(to); it != reach.end()) total += it->second;
  }
  return total;
}

// Multinomial coefficient (k1 + ... + kn)! / (k1! ... kn!): the
// number of interleavings of n streams, hence the language size of a
// subdivided cube.
inline std::uint64_t interleavings(const std::vector<int>& ks) {
  std::uint64_t result = 1;
  int placed = 0;
  for (int k : ks)
    for (int i = 1; i <= k; ++i) {
      ++placed;
      // multiply by placed, divide by i: binomial build-up stays exact
      result = result * placed / i;
    }
  return result;
}

}  // namespace oracles
