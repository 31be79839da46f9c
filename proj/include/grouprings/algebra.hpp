#pragma once

#include "grouprings/structure.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace gring {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Element of the rational group algebra QG: a dense vector of exact
/// rationals indexed by group elements.
struct AlgElement {
  const CayleyGroup* g = nullptr;
  std::vector<Rat> c;

  AlgElement() = default;
  explicit AlgElement(const CayleyGroup& gg) : g(&gg), c(gg.order) {}

  bool is_zero() const {
    for (auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  bool operator==(const AlgElement& o) const { return g == o.g && c == o.c; }
  bool operator!=(const AlgElement& o) const { return !(*this == o); }
};

inline AlgElement alg_zero(const CayleyGroup& g) { return AlgElement(g); }

inline AlgElement alg_unit(const CayleyGroup& g, int x, Rat coeff = 1) {
  AlgElement a(g);
  a.c[x] = std::move(coeff);
  return a;
}

inline AlgElement alg_one(const CayleyGroup& g) { return alg_unit(g, 0); }

inline void check_same(const AlgElement& x, const AlgElement& y) {
  if (x.g != y.g) throw group_error("algebra elements over different groups");
}

inline AlgElement add(const AlgElement& x, const AlgElement& y) {
  check_same(x, y);
  AlgElement r(*x.g);
  for (int i = 0; i < x.g->order; ++i) r.c[i] = x.c[i] + y.c[i];
  return r;
}

inline AlgElement sub(const AlgElement& x, const AlgElement& y) {
  check_same(x, y);
  AlgElement r(*x.g);
  for (int i = 0; i < x.g->order; ++i) r.c[i] = x.c[i] - y.c[i];
  return r;
}

inline AlgElement scale(const AlgElement& x, const Rat& s) {
  AlgElement r(*x.g);
  if (s.is_zero()) return r;
  for (int i = 0; i < x.g->order; ++i) r.c[i] = x.c[i] * s;
  return r;
}

inline AlgElement neg(const AlgElement& x) { return scale(x, -1); }

/// Convolution product through the Cayley table, sparse-aware on the left
/// factor.
inline AlgElement mul(const AlgElement& x, const AlgElement& y) {
  check_same(x, y);
  const auto& G = *x.g;
  AlgElement r(G);
  std::vector<int> ys;
  ys.reserve(G.order);
  for (int j = 0; j < G.order; ++j)
    if (!y.c[j].is_zero()) ys.push_back(j);
  for (int i = 0; i < G.order; ++i) {
    if (x.c[i].is_zero()) continue;
    const int* row = &G.table[size_t(i) * G.order];
    for (int j : ys) r.c[row[j]] += x.c[i] * y.c[j];
  }
  return r;
}

inline AlgElement operator+(const AlgElement& a, const AlgElement& b) { return add(a, b); }
inline AlgElement operator-(const AlgElement& a, const AlgElement& b) { return sub(a, b); }
inline AlgElement operator*(const AlgElement& a, const AlgElement& b) { return mul(a, b); }

/// tilde(S) = sum over the subset; hat(H) = average over the subgroup.
inline AlgElement tilde(const CayleyGroup& g, const std::vector<int>& set) {
  AlgElement r(g);
  for (int x : set) r.c[x] += 1;
  return r;
}
inline AlgElement tilde(const Subgroup& h) { return tilde(*h.parent, h.elems); }
inline AlgElement hat(const Subgroup& h) {
  AlgElement r(*h.parent);
  Rat v(1, (long)h.order());
  for (int x : h.elems) r.c[x] = v;
  return r;
}

inline std::vector<int> support(const AlgElement& x) {
  std::vector<int> s;
  for (int i = 0; i < x.g->order; ++i)
    if (!x.c[i].is_zero()) s.push_back(i);
  return s;
}

inline bool is_integral(const AlgElement& x) {
  for (auto& v : x.c)
    if (rat_den(v) != 1) return false;
  return true;
}

inline bool is_idempotent(const AlgElement& x) { return mul(x, x) == x; }

/// Centrality is checked against the group generators (conjugation by
/// generators determines conjugation by everything). Falls back to all
/// elements if the group carries no generator list.
inline bool is_central(const AlgElement& x) {
  const auto& G = *x.g;
  std::vector<int> gens;
  for (auto& [nm, i] : G.generators) gens.push_back(i);
  if (gens.empty())
    for (int i = 1; i < G.order; ++i) gens.push_back(i);
  for (int t : gens) {
    AlgElement u = alg_unit(G, t);
    if (mul(u, x) != mul(x, u)) return false;
  }
  return true;
}

/// x^g = g^{-1} x g; coefficient permutation.
inline AlgElement conjugate(const AlgElement& x, int g) {
  const auto& G = *x.g;
  AlgElement r(G);
  for (int i = 0; i < G.order; ++i)
    if (!x.c[i].is_zero()) r.c[G.conj(i, g)] = x.c[i];
  return r;
}

/// Nilpotency by repeated squaring up to exponent >= |G| (QG embeds in
/// M_{|G|}(Q), so nilpotency index is at most |G|).
inline bool is_nilpotent(const AlgElement& x) {
  const auto& G = *x.g;
  AlgElement y = x;
  long long e = 1;
  while (e < 2LL * G.order) {
    if (y.is_zero()) return true;
    y = mul(y, y);
    e *= 2;
  }
  return y.is_zero();
}

inline std::string rat_string(const Rat& v) {
  std::string s = rat_num(v).str();
  if (rat_den(v) != 1) s += "/" + rat_den(v).str();
  return s;
}

} // namespace gring
