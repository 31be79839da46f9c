#pragma once

#include "grouprings/cayley.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace gring {

/// Polycyclic presentation with generators g1 < g2 < ... < gn.
/// Relation words are normal words over the *later* generators, stored as
/// exponent vectors (entry k = exponent of g_{k+1}, 0 <= e_k < r_k).
struct PcPresentation {
  std::vector<std::string> names;       // generator names, size ngens
  std::vector<int> relative_orders;     // r_i >= 2
  // power[i]: word equal to g_i^{r_i}, supported on generators > i
  std::vector<std::vector<int>> power;
  // conj[i][j] (i < j): word equal to g_j^{g_i}, supported on generators >= j... > i
  std::vector<std::vector<std::vector<int>>> conj;

  int ngens() const { return (int)relative_orders.size(); }

  void check_shape() const {
    const int n = ngens();
    if ((int)names.size() != n || (int)power.size() != n || (int)conj.size() != n)
      throw group_error("pc presentation: inconsistent sizes");
    for (int i = 0; i < n; ++i) {
      if (relative_orders[i] < 2) throw group_error("pc presentation: relative order < 2");
      if ((int)power[i].size() != n) throw group_error("pc presentation: bad power word");
      for (int k = 0; k <= i; ++k)
        if (power[i][k] != 0) throw group_error("pc presentation: power word not normal");
      for (int j = 0; j < n; ++j) {
        if (i < j) {
          if ((int)conj[i][j].size() != n) throw group_error("pc presentation: bad conj word");
          for (int k = 0; k <= i; ++k)
            if (conj[i][j][k] != 0) throw group_error("pc presentation: conj word not normal");
        }
      }
      for (int k = 0; k < n; ++k) {
        if (power[i][k] < 0 || power[i][k] >= relative_orders[k])
          throw group_error("pc presentation: exponent out of range");
      }
    }
  }
};

namespace detail {

// one letter of a working word
struct Letter {
  int gen;
  int exp; // >= 1
};

inline void push_word(std::deque<Letter>& out, const std::vector<int>& word, int repeat = 1) {
  for (int t = 0; t < repeat; ++t)
    for (int k = 0; k < (int)word.size(); ++k)
      if (word[k] > 0) out.push_back({k, word[k]});
}

} // namespace detail

/// Collection from the left. `word` is a sequence of (generator, exponent)
/// pairs with nonnegative exponents; the result is the exponent vector of the
/// unique normal word for the same element. A step budget guards against
/// inconsistent presentations.
inline std::vector<int> collect(const PcPresentation& p,
                                const std::vector<std::pair<int, int>>& word,
                                long long budget = 1000000) {
  const int n = p.ngens();
  std::deque<detail::Letter> w;
  for (auto& [g, e] : word) {
    if (g < 0 || g >= n) throw group_error("collect: generator out of range");
    if (e > 0) w.push_back({g, e});
  }
  long long steps = 0;
  // scan for the leftmost violation; restart the scan a little before the
  // rewrite site after each step
  size_t pos = 0;
  while (true) {
    if (++steps > budget)
      throw group_error("collection step budget exceeded: inconsistent presentation?");
    // merge / drop
    bool changed = false;
    if (pos > 0) --pos;
    for (size_t i = pos; i < w.size();) {
      if (w[i].exp == 0) { w.erase(w.begin() + i); changed = true; continue; }
      if (i + 1 < w.size() && w[i].gen == w[i + 1].gen) {
        w[i].exp += w[i + 1].exp;
        w.erase(w.begin() + i + 1);
        changed = true;
        continue;
      }
      ++i;
    }
    (void)changed;
    // find the leftmost violation
    size_t k = 0;
    int kind = 0; // 1 = overflow, 2 = inversion
    for (; k < w.size(); ++k) {
      if (w[k].exp >= p.relative_orders[w[k].gen]) { kind = 1; break; }
      if (k + 1 < w.size() && w[k].gen > w[k + 1].gen) { kind = 2; break; }
    }
    if (kind == 0) break;
    pos = k;
    if (kind == 1) {
      // g^e = g^{e mod r} (g^r)^{e div r}; powers of one generator commute
      const int g = w[k].gen, r = p.relative_orders[g];
      const int q = w[k].exp / r, s = w[k].exp % r;
      std::deque<detail::Letter> repl;
      if (s > 0) repl.push_back({g, s});
      detail::push_word(repl, p.power[g], q);
      w.erase(w.begin() + k);
      w.insert(w.begin() + k, repl.begin(), repl.end());
    } else {
      // (g_j^e)(g_i) -> g_i (g_j^{g_i})^e, moving one low letter left
      const int j = w[k].gen, e = w[k].exp, i = w[k + 1].gen;
      const int ei = w[k + 1].exp;
      std::deque<detail::Letter> repl;
      repl.push_back({i, 1});
      detail::push_word(repl, p.conj[i][j], e);
      if (ei > 1) repl.push_back({i, ei - 1});
      w.erase(w.begin() + k, w.begin() + k + 2);
      w.insert(w.begin() + k, repl.begin(), repl.end());
    }
  }
  std::vector<int> out(n, 0);
  for (auto& l : w) out[l.gen] += l.exp; // already normal: ascending, in range
  return out;
}

/// Build the full Cayley table over all prod(r_i) normal words, then verify
/// every group axiom exhaustively. Elements are indexed by the mixed-radix
/// value of their exponent vector, so the identity is index 0 and the order
/// is lexicographic in normal words.
inline GroupPtr group_from_pc(const PcPresentation& p, FamilyTag tag = {}) {
  p.check_shape();
  const int n = p.ngens();
  long long ord = 1;
  for (int r : p.relative_orders) {
    ord *= r;
    if (ord > 1 << 20) throw group_error("pc group too large");
  }
  const int N = (int)ord;
  // mixed radix, first generator most significant
  std::vector<long long> weight(n, 1);
  for (int i = n - 2; i >= 0; --i) weight[i] = weight[i + 1] * p.relative_orders[i + 1];
  auto index_of = [&](const std::vector<int>& e) {
    long long v = 0;
    for (int i = 0; i < n; ++i) v += e[i] * weight[i];
    return (int)v;
  };
  std::vector<std::vector<int>> words(N, std::vector<int>(n, 0));
  for (int x = 0; x < N; ++x) {
    long long v = x;
    for (int i = 0; i < n; ++i) { words[x][i] = int(v / weight[i]); v %= weight[i]; }
  }
  auto g = std::make_shared<CayleyGroup>();
  g->order = N;
  g->table.assign(size_t(N) * N, 0);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      std::vector<std::pair<int, int>> w;
      for (int i = 0; i < n; ++i)
        if (words[x][i]) w.push_back({i, words[x][i]});
      for (int i = 0; i < n; ++i)
        if (words[y][i]) w.push_back({i, words[y][i]});
      g->table[size_t(x) * N + y] = index_of(collect(p, w));
    }
  g->inverse.assign(N, -1);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y)
      if (g->table[size_t(x) * N + y] == 0) { g->inverse[x] = y; break; }
  // names: normal words over generator names
  g->element_names.resize(N);
  for (int x = 0; x < N; ++x) {
    std::string s;
    for (int i = 0; i < n; ++i) {
      if (!words[x][i]) continue;
      if (!s.empty()) s += "*";
      s += p.names[i];
      if (words[x][i] > 1) s += "^" + std::to_string(words[x][i]);
    }
    g->element_names[x] = s.empty() ? "1" : s;
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    g->generators.push_back({p.names[i], index_of(e)});
  }
  g->tag = std::move(tag);
  g->validate(); // consistency == the table is a group of the full order
  return g;
}

} // namespace gring
