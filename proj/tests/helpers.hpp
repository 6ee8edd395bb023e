#pragma once

// Test-only brute-force oracles. These intentionally avoid the engine's fast
// paths (kernels, conjugate_all, subgroup machinery) so that agreement with
// them actually means something.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "gt/group.hpp"
#include "gt/perm.hpp"

namespace gtt {

using gt::u32;

// Conjugacy classes straight from the definition, one scalar op at a time.
inline std::vector<std::vector<u32>> naive_classes(const gt::Group& g,
                                                   bool keep_singletons = false) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<u32>> out;
  for (u32 s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::set<u32> cls;
    for (u32 a = 0; a < n; ++a) {
      u32 as = g.op(a, s);
      cls.insert(g.op(as, g.inverse(a)));
    }
    for (u32 x : cls) seen[x] = 1;
    if (keep_singletons || cls.size() > 1)
      out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

// Closure of a generating set under the group operation.
inline std::vector<u32> generated_set(const gt::Group& g, std::vector<u32> gens) {
  std::set<u32> closed{0};
  closed.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<u32> snapshot(closed.begin(), closed.end());
    for (u32 a : snapshot)
      for (u32 b : snapshot)
        if (closed.insert(g.op(a, b)).second) grew = true;
  }
  return {closed.begin(), closed.end()};
}

// Every subgroup's element set, by breadth-first generator extension from the
// trivial subgroup. Exponential in principle; fine for the orders tested.
inline std::vector<std::vector<u32>> all_subgroup_element_sets(const gt::Group& g) {
  std::set<std::vector<u32>> known;
  std::vector<std::vector<u32>> frontier{{0}};
  known.insert({0});
  while (!frontier.empty()) {
    std::vector<std::vector<u32>> next;
    for (const std::vector<u32>& h : frontier)
      for (u32 x = 0; x < g.order(); ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::vector<u32> gens = h;
        gens.push_back(x);
        std::vector<u32> k = generated_set(g, std::move(gens));
        if (known.insert(k).second) next.push_back(std::move(k));
      }
    frontier = std::move(next);
  }
  return {known.begin(), known.end()};
}

// element order -> how many elements have it
inline std::map<u32, std::size_t> order_census(const gt::Group& g) {
  std::map<u32, std::size_t> out;
  for (u32 x = 0; x < g.order(); ++x) ++out[g.element_order(x)];
  return out;
}

// Parity through cycle structure, independent of inversion counting.
inline int cycle_parity(const gt::Perm& p) {
  const std::size_t n = p.size();
  std::vector<char> seen(n, 0);
  std::size_t cycles = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (seen[k]) continue;
    ++cycles;
    std::size_t t = k;
    while (!seen[t]) {
      seen[t] = 1;
      t = p[t];
    }
  }
  return static_cast<int>((n - cycles) % 2);
}

}  // namespace gtt
