#pragma once

#include "grouprings/structure.hpp"

#include <map>

namespace gring {

namespace detail {

inline std::vector<int> small_generating_set(const CayleyGroup& g) {
  // greedy: repeatedly add the element extending the closure the most
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup(g);
  while (cur.order() < g.order) {
    int best = -1, bestsz = cur.order();
    for (int x = 1; x < g.order; ++x) {
      if (cur.contains(x)) continue;
      auto gens2 = gens;
      gens2.push_back(x);
      int sz = subgroup_closure(g, gens2).order();
      if (sz > bestsz) { bestsz = sz; best = x; }
      if (sz == g.order) break;
    }
    gens.push_back(best);
    cur = subgroup_closure(g, gens);
  }
  return gens;
}

struct IsoSearch {
  const CayleyGroup &a, &b;
  std::vector<int> gens;               // generators of a
  std::vector<std::vector<int>> words; // for each element of a: word in gens (indices)
  std::vector<int> ordA;

  IsoSearch(const CayleyGroup& a_, const CayleyGroup& b_) : a(a_), b(b_) {
    gens = small_generating_set(a);
    // breadth-first words
    words.assign(a.order, {});
    std::vector<char> seen(a.order, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t h = 0; h < queue.size(); ++h)
      for (size_t k = 0; k < gens.size(); ++k) {
        int y = a.mul(queue[h], gens[k]);
        if (!seen[y]) {
          seen[y] = 1;
          words[y] = words[queue[h]];
          words[y].push_back((int)k);
          queue.push_back(y);
        }
      }
  }

  int eval(const std::vector<int>& images, int elem) const {
    int v = 0;
    for (int k : words[elem]) v = b.mul(v, images[k]);
    return v;
  }

  bool extend(std::vector<int>& images, size_t k) const {
    if (k == gens.size()) {
      // full check: the induced map must be a bijective homomorphism
      std::vector<int> phi(a.order);
      std::vector<char> hit(b.order, 0);
      for (int x = 0; x < a.order; ++x) {
        phi[x] = eval(images, x);
        if (hit[phi[x]]) return false;
        hit[phi[x]] = 1;
      }
      for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < a.order; ++y)
          if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
      return true;
    }
    const int target_ord = a.element_order(gens[k]);
    for (int c = 0; c < b.order; ++c) {
      if (b.element_order(c) != target_ord) continue;
      images.push_back(c);
      // partial consistency: injectivity on the closure so far
      bool ok = true;
      {
        std::map<int, int> part;
        for (int x = 0; x < a.order && ok; ++x) {
          bool known = true;
          for (int w : words[x])
            if (w > (int)k) { known = false; break; }
          if (!known) continue;
          int v = eval(images, x);
          auto it = part.find(v);
          if (it != part.end() && it->second != x) ok = false;
          part[v] = x;
        }
      }
      if (ok && extend(images, k + 1)) return true;
      images.pop_back();
    }
    return false;
  }
};

} // namespace detail

/// Backtracking isomorphism test over generator images, pre-filtered by
/// element-order multisets. Complexity-guarded at order 128.
inline bool is_isomorphic(const CayleyGroup& a, const CayleyGroup& b, bool force = false) {
  if (a.order != b.order) return false;
  if (a.order > 128 && !force) throw group_error("is_isomorphic: order > 128 (use force)");
  // order fingerprint
  std::map<int, int> fa, fb;
  for (int x = 0; x < a.order; ++x) ++fa[a.element_order(x)];
  for (int x = 0; x < b.order; ++x) ++fb[b.element_order(x)];
  if (fa != fb) return false;
  if (a.is_abelian() != b.is_abelian()) return false;
  if (center(a).order() != center(b).order()) return false;
  if (derived_subgroup(a).order() != derived_subgroup(b).order()) return false;
  detail::IsoSearch s(a, b);
  std::vector<int> images;
  return s.extend(images, 0);
}

} // namespace gring
