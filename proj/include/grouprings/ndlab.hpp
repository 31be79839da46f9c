#pragma once

#include "grouprings/families.hpp"
#include "grouprings/gpmn_solver.hpp"
#include "grouprings/iso.hpp"
#include "grouprings/shoda.hpp"

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>

namespace gring {

// ---------------------------------------------------------------- bicyclics

struct BicyclicNilpotent {
  int subgroup_index = -1; // into the lattice used for enumeration
  Subgroup H;
  int h = 0;
  int g = 0;
  bool left = true; // (1-h) g H~ if left, H~ g (1-h) if right
};

inline AlgElement bicyclic_value(const CayleyGroup& G, const BicyclicNilpotent& b) {
  AlgElement t = tilde(b.H);
  AlgElement oneminus = sub(alg_one(G), alg_unit(G, b.h));
  AlgElement mid = alg_unit(G, b.g);
  return b.left ? mul(mul(oneminus, mid), t) : mul(mul(t, mid), oneminus);
}

/// All nonzero bicyclic nilpotents, both sides, pruned by the conjugation
/// criterion, in a fixed total order on (H, h, g).
inline std::vector<BicyclicNilpotent> bicyclic_nilpotents(const CayleyGroup& G,
                                                          const std::vector<Subgroup>& lattice) {
  std::vector<BicyclicNilpotent> out;
  for (size_t si = 0; si < lattice.size(); ++si) {
    const Subgroup& H = lattice[si];
    if (H.order() == G.order) continue; // tilde(G) absorbs everything
    for (int h : H.elems) {
      if (h == 0) continue;
      // left: coset reps gH with g^{-1} h g not in H
      std::vector<char> seen(G.order, 0);
      for (int g = 0; g < G.order; ++g) {
        if (seen[g]) continue;
        for (int u : H.elems) seen[G.mul(g, u)] = 1;
        if (!H.contains(G.conj(h, g))) out.push_back({(int)si, H, h, g, true});
      }
      // right: coset reps Hg with g h g^{-1} not in H
      std::fill(seen.begin(), seen.end(), 0);
      for (int g = 0; g < G.order; ++g) {
        if (seen[g]) continue;
        for (int u : H.elems) seen[G.mul(u, g)] = 1;
        if (!H.contains(G.conj(h, G.inv(g)))) out.push_back({(int)si, H, h, g, false});
      }
    }
  }
  return out;
}

// ------------------------------------------------------------- ND verdicts

enum class NdStatus { Holds, Fails, Undetermined };

inline const char* nd_status_name(NdStatus s) {
  switch (s) {
    case NdStatus::Holds: return "Holds";
    case NdStatus::Fails: return "Fails";
    default: return "Undetermined";
  }
}

struct NdWitness {
  AlgElement n;         // nilpotent, integral
  AlgElement e;         // central idempotent with n*e not integral
  int offending_index = -1;
  Rat offending_coeff;
  std::string note;
};

struct NdVerdict {
  NdStatus status = NdStatus::Undetermined;
  std::optional<NdWitness> witness;
  std::string basis;
};

/// Re-checkable by construction: witness.n nilpotent and integral,
/// witness.n * witness.e not integral.
inline bool reverify_witness(const NdWitness& w) {
  if (!is_integral(w.n) || !is_nilpotent(w.n)) return false;
  if (!is_idempotent(w.e) || !is_central(w.e)) return false;
  return !is_integral(mul(w.n, w.e));
}

inline NdVerdict nd_with_respect_to(const AlgElement& n, const std::vector<AlgElement>& family) {
  if (!is_integral(n)) throw group_error("nd_with_respect_to: element not integral");
  if (!is_nilpotent(n)) throw group_error("nd_with_respect_to: element not nilpotent");
  for (const auto& e : family) {
    AlgElement ne = mul(n, e);
    for (int i = 0; i < n.g->order; ++i)
      if (rat_den(ne.c[i]) != 1) {
        NdVerdict v;
        v.status = NdStatus::Fails;
        v.witness = NdWitness{n, e, i, ne.c[i], "coefficient at " + n.g->element_names[i]};
        v.basis = "witness-found";
        return v;
      }
  }
  return {NdStatus::Holds, std::nullopt, "family-exhausted"};
}

// --------------------------------------------------- fast integral sweeps
//
// The hot loops test n * (E/d) for integrality with n a small-coefficient
// integral element and E an integer-scaled central idempotent. Everything
// stays in int64: coefficients are bounded by |supp(n)| * max|E| which is
// far below 2^63 for the group sizes here.

namespace detail {

struct ScaledIdem {
  std::vector<long long> e; // d * idempotent, integer entries
  long long d = 1;
  const AlgElement* source = nullptr;
};

inline ScaledIdem scale_idempotent(const AlgElement& e) {
  ScaledIdem s;
  Int d = 1;
  for (auto& c : e.c) {
    Int den = rat_den(c);
    d = boost::multiprecision::lcm(d, den);
  }
  if (d > Int(1) << 40) throw group_error("idempotent denominator too large for fast sweep");
  s.d = (long long)d;
  s.e.resize(e.c.size());
  for (size_t i = 0; i < e.c.size(); ++i)
    s.e[i] = (long long)Int(rat_num(e.c[i]) * (d / rat_den(e.c[i])));
  s.source = &e;
  return s;
}

/// true iff value(b) * (E/d) is integral; exact (int64 magnitudes checked).
inline bool sweep_integral(const CayleyGroup& G, const BicyclicNilpotent& b,
                           const ScaledIdem& s, std::vector<long long>& scratch) {
  scratch.assign(G.order, 0);
  // supports: left: +gH, -hgH ; right: +Hg, -Hgh
  if (b.left) {
    int hg = G.mul(b.h, b.g);
    for (int u : b.H.elems) {
      int p1 = G.mul(b.g, u), p2 = G.mul(hg, u);
      const int* r1 = &G.table[size_t(p1) * G.order];
      const int* r2 = &G.table[size_t(p2) * G.order];
      for (int j = 0; j < G.order; ++j) {
        long long v = s.e[j];
        if (!v) continue;
        scratch[r1[j]] += v;
        scratch[r2[j]] -= v;
      }
    }
  } else {
    int gh = G.mul(b.g, b.h);
    for (int u : b.H.elems) {
      int p1 = G.mul(u, b.g), p2 = G.mul(u, gh);
      const int* r1 = &G.table[size_t(p1) * G.order];
      const int* r2 = &G.table[size_t(p2) * G.order];
      for (int j = 0; j < G.order; ++j) {
        long long v = s.e[j];
        if (!v) continue;
        scratch[r1[j]] += v;
        scratch[r2[j]] -= v;
      }
    }
  }
  for (long long v : scratch)
    if (v % s.d) return false;
  return true;
}

} // namespace detail

// --------------------------------------------------------------- SN / SSN

struct SnResult {
  bool direct = false;
  bool via_hats = false;
};

/// direct: for every normal N and subgroup Y, N <= Y or NY normal.
/// via_hats: every bicyclic nilpotent has ND with respect to { hat(N) }.
/// The two must agree (tested as an invariant, not assumed).
inline SnResult sn_check(const CayleyGroup& G, const std::vector<Subgroup>& lattice) {
  SnResult r;
  auto normals = normal_subgroups(G, lattice);
  // direct
  r.direct = true;
  for (auto& n : normals) {
    if (!r.direct) break;
    for (auto& y : lattice) {
      if (n.subset_of(y)) continue;
      // NY as a set (N normal => subgroup)
      std::vector<char> in(G.order, 0);
      for (int a : n.elems)
        for (int b : y.elems) in[G.mul(a, b)] = 1;
      std::vector<int> ny;
      for (int i = 0; i < G.order; ++i)
        if (in[i]) ny.push_back(i);
      Subgroup NY{&G, ny};
      if (!is_normal(G, NY)) { r.direct = false; break; }
    }
  }
  // via hats
  r.via_hats = true;
  std::vector<detail::ScaledIdem> hats;
  std::vector<AlgElement> hat_elems;
  hat_elems.reserve(normals.size());
  for (auto& n : normals) hat_elems.push_back(hat(n));
  for (auto& h : hat_elems) hats.push_back(detail::scale_idempotent(h));
  auto bics = bicyclic_nilpotents(G, lattice);
  std::vector<long long> scratch;
  for (auto& b : bics) {
    for (auto& s : hats)
      if (!detail::sweep_integral(G, b, s, scratch)) { r.via_hats = false; break; }
    if (!r.via_hats) break;
  }
  return r;
}

inline bool ssn_check(const CayleyGroup& G, const std::vector<Subgroup>& lattice) {
  for (auto& h : lattice) {
    if (h.order() == 1) continue;
    auto [hg, emb] = as_group(h);
    auto sub = all_subgroups(*hg, true);
    auto sn = sn_check(*hg, sub);
    if (!sn.direct) return false;
  }
  return true;
}

// --------------------------------------------------------------------- DK

struct DkResult {
  bool verdict = false;
  int nonzero_epsilon_count = 0;
  int cyclic_class_count = 0;
};

inline DkResult dk_check(const CayleyGroup& G, const std::vector<Subgroup>& lattice) {
  auto d = dk_counts(G, lattice);
  return {d.verdict, d.nonzero_epsilon_count, d.cyclic_class_count};
}

// --------------------------------------------------------- bicyclic resistance

/// Tests every bicyclic nilpotent against the full PCI family when coverage
/// holds (equivalent to all central idempotents); otherwise against
/// { epsilon(G,N) } u { hat(N) }, degrading to Undetermined without a witness.
inline NdVerdict bicyclic_resistant(const CayleyGroup& G, const std::vector<Subgroup>& lattice,
                                    const WedderburnReport* precomputed = nullptr) {
  WedderburnReport local;
  const WedderburnReport* rep = precomputed;
  if (!rep) {
    local = pci_set(G, lattice);
    rep = &local;
  }
  std::vector<AlgElement> family;
  if (rep->covered) {
    for (auto& c : rep->components) family.push_back(c.idempotent);
  } else {
    Subgroup full = full_subgroup(G);
    for (auto& n : normal_subgroups(G, lattice)) {
      AlgElement eps = epsilon(G, full, n);
      if (!eps.is_zero()) family.push_back(eps);
      family.push_back(hat(n));
    }
  }
  std::vector<detail::ScaledIdem> scaled;
  for (auto& e : family) scaled.push_back(detail::scale_idempotent(e));
  auto bics = bicyclic_nilpotents(G, lattice);
  std::vector<long long> scratch;
  for (auto& b : bics)
    for (size_t k = 0; k < scaled.size(); ++k)
      if (!detail::sweep_integral(G, b, scaled[k], scratch)) {
        NdVerdict v;
        v.status = NdStatus::Fails;
        AlgElement n = bicyclic_value(G, b);
        AlgElement ne = mul(n, family[k]);
        int idx = -1;
        for (int i = 0; i < G.order; ++i)
          if (rat_den(ne.c[i]) != 1) { idx = i; break; }
        v.witness = NdWitness{n, family[k], idx, idx >= 0 ? ne.c[idx] : Rat(0),
                              "bicyclic (1-h)gH~ / H~g(1-h)"};
        v.basis = "witness-found";
        return v;
      }
  if (rep->covered) return {NdStatus::Holds, std::nullopt, "family-exhausted"};
  return {NdStatus::Undetermined, std::nullopt, "family-exhausted"};
}

// ------------------------------------------------------------ witness triples

struct WitnessTriple {
  GroupPtr group;
  AlgElement r, s, y, e;
  long long p = 2;
};

struct ThersyDiagnostics {
  bool rs_zero = false, sr_zero = false, r_nilpotent = false, s_nilpotent = false;
  bool r_square_zero = false, s_square_zero = false;
  bool rs_integral = false;
  bool e_central_idempotent = false, er_r = false, es_zero = false;
  bool y_commutes = false, y_integral = false;
  bool cond3 = false, cond4 = false;
  bool n_nilpotent = false, n_nonzero = false, ne_matches = false;
  bool ok() const {
    return rs_zero && sr_zero && r_nilpotent && s_nilpotent && rs_integral &&
           e_central_idempotent && er_r && es_zero && y_commutes && y_integral && cond3 &&
           cond4 && n_nilpotent && n_nonzero && ne_matches;
  }
};

/// Checks the four construction-lemma conditions exactly and confirms that
/// n = y(r+s)/p is a nilpotent integral element with non-integral n*e.
inline ThersyDiagnostics thersy_verify_diag(const WitnessTriple& w) {
  const CayleyGroup& G = *w.group;
  ThersyDiagnostics d;
  AlgElement rs = mul(w.r, w.s), sr = mul(w.s, w.r);
  d.rs_zero = rs.is_zero();
  d.sr_zero = sr.is_zero();
  d.r_nilpotent = is_nilpotent(w.r);
  d.s_nilpotent = w.s.is_zero() || is_nilpotent(w.s);
  d.r_square_zero = mul(w.r, w.r).is_zero();
  d.s_square_zero = mul(w.s, w.s).is_zero();
  d.rs_integral = is_integral(w.r) && is_integral(w.s);
  d.e_central_idempotent = is_idempotent(w.e) && is_central(w.e);
  d.er_r = (mul(w.e, w.r) == w.r);
  d.es_zero = mul(w.e, w.s).is_zero();
  AlgElement rps = add(w.r, w.s);
  d.y_commutes = (mul(w.y, rps) == mul(rps, w.y));
  d.y_integral = is_integral(w.y);
  AlgElement yrps = mul(w.y, rps);
  AlgElement n = scale(yrps, Rat(1, (long)w.p));
  d.cond3 = is_integral(n);
  AlgElement yr = scale(mul(w.y, w.r), Rat(1, (long)w.p));
  d.cond4 = !is_integral(yr);
  d.n_nonzero = !n.is_zero();
  d.n_nilpotent = is_nilpotent(n);
  d.ne_matches = (mul(n, w.e) == yr);
  return d;
}

inline bool thersy_verify(const WitnessTriple& w) { return thersy_verify_diag(w).ok(); }

namespace detail {

inline AlgElement cyc_tilde(const CayleyGroup& G, int g) {
  return tilde(cyclic_subgroup(G, g));
}
inline AlgElement cyc_hat(const CayleyGroup& G, int g) { return hat(cyclic_subgroup(G, g)); }

// mod-p kernel of an integer matrix given by columns; returns basis vectors
inline std::vector<std::vector<long long>> kernel_mod_p(
    const std::vector<std::vector<long long>>& cols, int rows, long long p) {
  const int nc = (int)cols.size();
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(nc));
  for (int j = 0; j < nc; ++j)
    for (int i = 0; i < rows; ++i) m[i][j] = ((cols[j][i] % p) + p) % p;
  auto inv_mod = [&](long long a) {
    long long r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<int> piv;
  int rr = 0;
  for (int c = 0; c < nc && rr < rows; ++c) {
    int pr = -1;
    for (int i = rr; i < rows; ++i)
      if (m[i][c] % p) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(m[pr], m[rr]);
    long long iv = inv_mod(m[rr][c]);
    for (int j = 0; j < nc; ++j) m[rr][j] = m[rr][j] * iv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == rr || m[i][c] % p == 0) continue;
      long long f = m[i][c];
      for (int j = 0; j < nc; ++j) m[i][j] = ((m[i][j] - f * m[rr][j]) % p + p) % p;
    }
    piv.push_back(c);
    ++rr;
  }
  std::vector<std::vector<long long>> basis;
  std::vector<char> is_piv(nc, 0);
  for (int c : piv) is_piv[c] = 1;
  for (int fc = 0; fc < nc; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<long long> v(nc, 0);
    v[fc] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - m[i][fc]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace detail

/// The paper's witness triples for the series C_{p^m} x| C_{p^n}. The cases
/// with m >= 3, and the odd cases with m = 2 < n, verify as printed. For the
/// remaining parameters (p odd with m = n = 2, and p = 2 with m = 2, n >= 4)
/// the printed triples do not verify (the collected s fails nilpotency,
/// respectively y fails centrality), and a deterministic mod-p search over
/// central multiples of the constructed component nilpotents is run instead;
/// if it finds nothing, construction fails with a diagnostic.
inline WitnessTriple witness_gpmn_uncached(int p, int m, int n) {
  const bool even_ok = (p == 2 && n >= 2 && !(m == 2 && n == 2) && !(m == 2 && n == 3));
  const bool odd_ok = (p != 2 && m >= 2 && n >= 2);
  if (!even_ok && !odd_ok)
    throw group_error("witness_gpmn: parameters outside the construction's range");
  GroupPtr Gp = gpmn(p, m, n);
  const CayleyGroup& G = *Gp;
  const int a = G.generator("a"), b = G.generator("b");
  long long pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  auto one = alg_one(G);
  auto unit = [&](int g) { return alg_unit(G, g); };
  WitnessTriple w;
  w.group = Gp;
  w.p = p;
  if (p == 2) {
    const int am1 = G.pow(a, pm / 2);      // a^{2^{m-1}}
    const int am2 = G.pow(a, pm / 4);      // a^{2^{m-2}}
    const int bp = G.pow(b, 2), bp2 = G.pow(b, 4);
    AlgElement tb = detail::cyc_tilde(G, bp2);
    w.r = mul(mul(mul(mul(unit(a), add(unit(am1), unit(b))), sub(one, unit(am1))),
                  add(one, unit(bp))),
              tb);
    w.e = mul(detail::cyc_hat(G, bp), sub(one, detail::cyc_hat(G, am1)));
    if (m >= 3) {
      w.s = mul(mul(mul(mul(unit(a), add(unit(am2), unit(b))), sub(one, unit(am1))),
                    sub(one, unit(bp))),
                tb);
      w.y = add(one, unit(am2));
      return w;
    }
  } else if (m >= 3) {
    // odd case 1
    const int am1 = G.pow(a, pm / p), am2 = G.pow(a, pm / (p * p));
    const int bp = G.pow(b, p), bp2 = G.pow(b, (long long)p * p);
    AlgElement tb = detail::cyc_tilde(G, bp2);
    w.r = mul(mul(mul(sub(unit(b), unit(am2)), unit(a)), sub(one, unit(am1))), tb);
    for (int i = 0; i <= p - 2; ++i)
      w.r = mul(w.r, sub(one, unit(G.mul(bp, G.pow(a, (long long)i * (pm / p))))));
    w.s = mul(mul(mul(sub(unit(b), unit(G.inv(am2))), unit(a)), sub(one, unit(G.inv(am1)))), tb);
    for (int i = 2; i <= p; ++i)
      w.s = mul(w.s, sub(one, unit(G.mul(bp, G.pow(a, (long long)i * (pm / p))))));
    w.y = one;
    AlgElement f = sub(one, unit(am2));
    for (int i = 0; i < p * (p - 1) - 1; ++i) w.y = mul(w.y, f);
    w.e = mul(detail::cyc_hat(G, G.mul(G.inv(am1), bp)), sub(one, detail::cyc_hat(G, am1)));
    return w;
  } else if (n > 2) {
    // odd case 2: m = 2, n > 2
    long long pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    const int bn1 = G.pow(b, pn / p), bn2 = G.pow(b, pn / (p * p));
    const int ap = G.pow(a, p);
    w.r = mul(mul(sub(unit(a), unit(bn2)), unit(b)), sub(one, unit(bn1)));
    for (int i = 0; i <= p - 2; ++i)
      w.r = mul(w.r, sub(one, unit(G.mul(ap, G.pow(b, (long long)i * (pn / p))))));
    w.s = mul(mul(sub(unit(a), unit(G.inv(bn2))), unit(b)), sub(one, unit(G.inv(bn1))));
    for (int i = 2; i <= p; ++i)
      w.s = mul(w.s, sub(one, unit(G.mul(ap, G.pow(b, (long long)i * (pn / p))))));
    w.y = one;
    AlgElement f = sub(one, unit(bn2));
    for (int i = 0; i < p * (p - 1) - 1; ++i) w.y = mul(w.y, f);
    w.e = mul(detail::cyc_hat(G, G.mul(G.inv(ap), bn1)), sub(one, detail::cyc_hat(G, bn1)));
    return w;
  } else {
    // odd case 3: m = n = 2 -- the printed r (valid) with a solved witness
    const int ap = G.pow(a, p), bp = G.pow(b, p);
    w.r = mul(sub(unit(b), unit(a)), sub(one, unit(ap)));
    for (int i = 0; i <= p - 2; ++i)
      w.r = mul(w.r, sub(one, unit(G.mul(G.pow(a, (long long)i * p), bp))));
    w.e = mul(detail::cyc_hat(G, G.mul(G.inv(ap), bp)), sub(one, detail::cyc_hat(G, ap)));
  }
  // Remaining parameters: (p odd, m = n = 2) and (p = 2, m = 2, n >= 4).
  // Solve for an integral nilpotent q with q*e_block non-integral, then
  // package r' = p q e, s' = p q (1-e), y' = 1.
  AlgElement q(G), e_out(G);
  if (!gpmn_solve_witness(G, p, m, n, w.e, w.r, q, e_out))
    throw group_error("witness_gpmn: no verified witness found for these parameters "
                      "(the printed construction does not verify; see docs)");
  AlgElement qe = mul(q, e_out);
  Int D = 1;
  for (auto& c : qe.c) D = boost::multiprecision::lcm(D, rat_den(c));
  // D is a power of p > 1; scale so that q*e has denominator exactly p
  w.r = scale(qe, Rat(D));
  w.s = scale(sub(q, qe), Rat(D));
  w.y = alg_one(G);
  w.e = e_out;
  return w;
}

/// Memoized front end: the bounded search for the broken parameter points is
/// expensive, and analyze/batch paths may retry the same parameters.
inline WitnessTriple witness_gpmn(int p, int m, int n) {
  static std::mutex mu;
  static std::map<std::array<int, 3>, std::pair<bool, WitnessTriple>> cache;
  std::array<int, 3> key{p, m, n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      if (!it->second.first)
        throw group_error("witness_gpmn: no verified witness found for these parameters "
                          "(the printed construction does not verify; see docs)");
      return it->second.second;
    }
  }
  try {
    WitnessTriple w = witness_gpmn_uncached(p, m, n);
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = {true, w};
    return w;
  } catch (const group_error& e) {
    if (std::string(e.what()).find("no verified witness") != std::string::npos) {
      std::lock_guard<std::mutex> lock(mu);
      cache[key] = {false, WitnessTriple{}};
    }
    throw;
  }
}

// ----------------------------------------------------- nonsolvable witness

struct NonsolvableWitness {
  int x = 0, y = 0;
  AlgElement n;
};

/// n = (1-y) x (1+y) for an involution y and x with y^x outside <y>;
/// square-zero because (1+y)(1-y) = 0.
inline std::optional<NonsolvableWitness> witness_nonsolvable(const CayleyGroup& G) {
  for (int y = 1; y < G.order; ++y) {
    if (G.mul(y, y) != 0) continue;
    for (int x = 1; x < G.order; ++x) {
      int yx = G.conj(y, x);
      if (yx == y || yx == 0) continue;
      AlgElement n = mul(mul(sub(alg_one(G), alg_unit(G, y)), alg_unit(G, x)),
                         add(alg_one(G), alg_unit(G, y)));
      if (n.is_zero()) continue;
      return NonsolvableWitness{x, y, std::move(n)};
    }
  }
  return std::nullopt;
}

/// Coefficient of n*e at x; the trace-identity cross-check target
/// (k/|G|) chi(1 - [x,y]).
inline Rat x_coefficient(const AlgElement& n, const AlgElement& e, int x) {
  return mul(n, e).c[x];
}

// ------------------------------------------------- G(2,2,3) congruence lab

struct G223Report {
  bool sign_identity = false;       // alpha(g) = -alpha(g a^2)
  bool b4_identity = false;         // alpha(g)+alpha(g b^4) = alpha(g b^2)+alpha(g b^6)
  bool central_zero = false;        // alpha(1)=alpha(b^2)=alpha(b^4)=alpha(b^6)=0
  bool parity = false;              // alpha(g)+alpha(g b^4) even
  bool m2q_integral = false;        // n * e(M2(Q)) integral
  bool m2qi_integral = false;       // n * e(M2(Q(i))) integral
  bool m2q_closed_form = false;     // coefficient = (alpha(g)+alpha(g b^4))/2
  bool all() const {
    return sign_identity && b4_identity && central_zero && parity && m2q_integral &&
           m2qi_integral && m2q_closed_form;
  }
};

inline AlgElement g223_e_m2q(const CayleyGroup& G) {
  const int a = G.generator("a"), b = G.generator("b");
  return mul(detail::cyc_hat(G, G.pow(b, 2)),
             sub(alg_one(G), detail::cyc_hat(G, G.pow(a, 2))));
}

inline AlgElement g223_e_m2qi(const CayleyGroup& G) {
  const int a = G.generator("a"), b = G.generator("b");
  int a2b4 = G.mul(G.pow(a, 2), G.pow(b, 4));
  return mul(detail::cyc_hat(G, a2b4), sub(alg_one(G), detail::cyc_hat(G, G.pow(b, 4))));
}

/// Verifies, for a nilpotent integral element of ZG(2,2,3), the coefficient
/// identities and congruences that force its projections to the two matrix
/// components to stay integral.
inline G223Report g223_congruence_check(const AlgElement& n) {
  const CayleyGroup& G = *n.g;
  if (!(G.tag.name == "G" && G.tag.params == std::vector<long long>{2, 2, 3}))
    throw group_error("g223_congruence_check: element is not over G(2,2,3)");
  if (!is_integral(n)) throw group_error("g223_congruence_check: element not integral");
  if (!is_nilpotent(n)) throw group_error("g223_congruence_check: element not nilpotent");
  const int a = G.generator("a"), b = G.generator("b");
  const int a2 = G.pow(a, 2), b2 = G.pow(b, 2), b4 = G.pow(b, 4), b6 = G.pow(b, 6);
  G223Report r;
  r.sign_identity = r.b4_identity = r.parity = true;
  for (int g = 0; g < G.order; ++g) {
    if (n.c[g] != -n.c[G.mul(g, a2)]) r.sign_identity = false;
    if (n.c[g] + n.c[G.mul(g, b4)] != n.c[G.mul(g, b2)] + n.c[G.mul(g, b6)])
      r.b4_identity = false;
    Int v = rat_num(n.c[g] + n.c[G.mul(g, b4)]);
    if (v % 2 != 0) r.parity = false;
  }
  r.central_zero = n.c[0].is_zero() && n.c[b2].is_zero() && n.c[b4].is_zero() && n.c[b6].is_zero();
  AlgElement e1 = g223_e_m2q(G), e2 = g223_e_m2qi(G);
  AlgElement ne1 = mul(n, e1), ne2 = mul(n, e2);
  r.m2q_integral = is_integral(ne1);
  r.m2qi_integral = is_integral(ne2);
  r.m2q_closed_form = true;
  for (int g = 0; g < G.order; ++g) {
    Rat expect = (n.c[g] + n.c[G.mul(g, b4)]) / 2;
    if (ne1.c[g] != expect) { r.m2q_closed_form = false; break; }
  }
  return r;
}

/// Reproducible nilpotent sampler for the G(2,2,3) congruence suite:
/// bicyclics, their conjugates, and products with central integral elements.
inline std::vector<AlgElement> g223_samples(const CayleyGroup& G,
                                            const std::vector<Subgroup>& lattice, int count,
                                            uint64_t seed) {
  auto bics = bicyclic_nilpotents(G, lattice);
  std::vector<AlgElement> out;
  std::mt19937_64 rng(seed);
  Subgroup z = center(G);
  if (bics.empty()) return out;
  while ((int)out.size() < count) {
    const auto& b = bics[rng() % bics.size()];
    AlgElement v = bicyclic_value(G, b);
    switch (rng() % 3) {
      case 0: break;
      case 1: v = conjugate(v, (int)(rng() % G.order)); break;
      default: {
        // product with a small central integral element 1 + c*z
        int zi = z.elems[rng() % z.elems.size()];
        long c = (long)(rng() % 3) - 1;
        AlgElement central = add(alg_one(G), alg_unit(G, zi, Rat(c)));
        v = mul(central, v);
        break;
      }
    }
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

// -------------------------------------------------------------- nd_report

struct NdReport {
  NdVerdict verdict;
  std::optional<WitnessTriple> triple;
  std::string detail;
};

/// Decision combination: one matrix component => Holds; the G(2,2,3)
/// exception => Holds with a flagged basis; an explicit constructor witness
/// => Fails; otherwise Undetermined. The basis is always recorded. The
/// lattice is only computed when a verdict actually needs it.
inline NdReport nd_report(const CayleyGroup& G,
                          const std::vector<Subgroup>* lattice_opt = nullptr) {
  NdReport rep;
  // family-tagged fast paths
  if (G.tag.name == "G" && G.tag.params.size() == 3) {
    long long p = G.tag.params[0], m = G.tag.params[1], n = G.tag.params[2];
    if (p == 2 && m == 2 && n == 3) {
      rep.verdict = {NdStatus::Holds, std::nullopt, "paper-override"};
      rep.detail = "C4 x| C8: decomposition has two matrix components but every nilpotent "
                   "projects integrally (coefficient congruences); see the congruence suite";
      return rep;
    }
    if (!(n == 1 || (p == 2 && m == 2 && n == 2))) {
      try {
        WitnessTriple w = witness_gpmn((int)p, (int)m, (int)n);
        if (thersy_verify(w)) {
          AlgElement nelt = scale(mul(w.y, add(w.r, w.s)), Rat(1, (long)w.p));
          NdWitness nw{nelt, w.e, -1, Rat(0), "thersy triple"};
          AlgElement ne = mul(nelt, w.e);
          for (int i = 0; i < G.order; ++i)
            if (rat_den(ne.c[i]) != 1) { nw.offending_index = i; nw.offending_coeff = ne.c[i]; break; }
          rep.verdict = {NdStatus::Fails, std::move(nw), "witness-found"};
          rep.triple = std::move(w);
          return rep;
        }
      } catch (const group_error&) {
        // fall through to the generic analysis
      }
    }
  }
  std::vector<Subgroup> local_lattice;
  if (!lattice_opt) {
    local_lattice = all_subgroups(G, true);
    lattice_opt = &local_lattice;
  }
  const std::vector<Subgroup>& lattice = *lattice_opt;
  WedderburnReport wed = pci_set(G, lattice);
  if (wed.matrix_count_max <= 1) {
    rep.verdict = {NdStatus::Holds, std::nullopt, "one-matrix-component"};
    return rep;
  }
  // bicyclic sweep
  NdVerdict sweep = bicyclic_resistant(G, lattice, &wed);
  if (sweep.status == NdStatus::Fails) {
    rep.verdict = std::move(sweep);
    return rep;
  }
  // nonsolvable-style witness against the available central idempotents
  if (auto nw = witness_nonsolvable(G)) {
    std::vector<AlgElement> family;
    if (wed.covered)
      for (auto& c : wed.components) family.push_back(c.idempotent);
    else {
      Subgroup full = full_subgroup(G);
      for (auto& n : normal_subgroups(G, lattice)) {
        AlgElement eps = epsilon(G, full, n);
        if (!eps.is_zero()) family.push_back(eps);
      }
    }
    for (auto& e : family) {
      AlgElement ne = mul(nw->n, e);
      if (!is_integral(ne)) {
        int idx = -1;
        for (int i = 0; i < G.order; ++i)
          if (rat_den(ne.c[i]) != 1) { idx = i; break; }
        NdWitness w{nw->n, e, idx, idx >= 0 ? ne.c[idx] : Rat(0), "(1-y)x(1+y) witness"};
        rep.verdict = {NdStatus::Fails, std::move(w), "witness-found"};
        return rep;
      }
    }
  }
  rep.verdict = {NdStatus::Undetermined, std::nullopt, "family-exhausted"};
  return rep;
}

} // namespace gring
