#pragma once

#include "grouprings/algebra.hpp"
#include "grouprings/hilbert.hpp"

#include <map>
#include <optional>

namespace gring {

/// epsilon(H,K) = hat(K) * prod over the minimal overnormals M of K in H of
/// (1 - hat(M)); epsilon(H,H) = hat(H). A central idempotent of QH, viewed
/// inside QG.
inline AlgElement epsilon(const CayleyGroup& g, const Subgroup& h, const Subgroup& k) {
  if (h == k) return hat(h);
  // minimal normal subgroups of H/K, computed inside H
  auto [hg, emb] = as_group(Subgroup{h});
  // K as subgroup of hg
  std::vector<int> pos(g.order, -1);
  for (int i = 0; i < (int)emb.size(); ++i) pos[emb[i]] = i;
  Subgroup kh{hg.get(), {}};
  for (int x : k.elems) {
    if (pos[x] < 0) throw group_error("epsilon: K not inside H");
    kh.elems.push_back(pos[x]);
  }
  std::sort(kh.elems.begin(), kh.elems.end());
  auto mins = minimal_overnormals(*hg, kh);
  AlgElement e = hat(k);
  AlgElement one = alg_one(g);
  for (auto& m : mins) {
    Subgroup mg{&g, {}};
    for (int x : m.elems) mg.elems.push_back(emb[x]);
    std::sort(mg.elems.begin(), mg.elems.end());
    e = mul(e, sub(one, hat(mg)));
  }
  return e;
}

/// Centralizer of an algebra element in the group: { g : x^g = x }.
inline Subgroup stabilizer_of(const AlgElement& x) {
  const auto& G = *x.g;
  std::vector<int> e;
  for (int t = 0; t < G.order; ++t)
    if (conjugate(x, t) == x) e.push_back(t);
  return {&G, e};
}

/// e(G,H,K) = sum of the conjugates of epsilon(H,K) over a right transversal
/// of Cen_G(epsilon(H,K)). Central always; idempotent when (H,K) is a
/// strong Shoda pair.
struct PairIdempotent {
  AlgElement eps;
  AlgElement e;
  Subgroup stabilizer;
  std::vector<int> transversal;
};

inline PairIdempotent e_from_pair(const CayleyGroup& g, const Subgroup& h, const Subgroup& k) {
  AlgElement eps = epsilon(g, h, k);
  Subgroup stab = stabilizer_of(eps);
  std::vector<int> trans;
  std::vector<char> covered(g.order, 0);
  for (int t = 0; t < g.order; ++t) {
    if (covered[t]) continue;
    trans.push_back(t);
    for (int s : stab.elems) covered[g.mul(s, t)] = 1;
  }
  AlgElement e = alg_zero(g);
  for (int t : trans) e = add(e, conjugate(eps, t));
  return {std::move(eps), std::move(e), std::move(stab), std::move(trans)};
}

struct SspDiagnostics {
  bool k_normal_in_h = false;
  bool h_normal_in_nk = false;
  bool hk_cyclic = false;
  bool hk_maximal_abelian = false;
  bool conjugates_orthogonal = false;
  bool ok() const {
    return k_normal_in_h && h_normal_in_nk && hk_cyclic && hk_maximal_abelian &&
           conjugates_orthogonal;
  }
};

inline SspDiagnostics is_strong_shoda_pair_diag(const CayleyGroup& g, const Subgroup& h,
                                                const Subgroup& k) {
  SspDiagnostics d;
  // K normal in H
  d.k_normal_in_h = true;
  for (int x : h.elems)
    for (int y : k.elems)
      if (!k.contains(g.conj(y, x))) { d.k_normal_in_h = false; goto knh_done; }
knh_done:
  if (!d.k_normal_in_h) return d;
  {
    Subgroup nk = normalizer(g, k);
    d.h_normal_in_nk = h.subset_of(nk);
    if (d.h_normal_in_nk)
      for (int x : nk.elems)
        for (int y : h.elems)
          if (!h.contains(g.conj(y, x))) { d.h_normal_in_nk = false; goto hnk_done; }
  hnk_done:
    if (!d.h_normal_in_nk) return d;
    // H/K cyclic: some h0 with <K, h0> = H
    for (int x : h.elems) {
      std::vector<int> gens = k.elems;
      gens.push_back(x);
      if (subgroup_closure(g, gens).order() == h.order()) { d.hk_cyclic = true; break; }
    }
    if (!d.hk_cyclic) return d;
    // H/K maximal abelian in N/K: { n in N : [n,H] <= K } = H
    d.hk_maximal_abelian = true;
    for (int x : nk.elems) {
      if (h.contains(x)) continue;
      bool centralizes = true;
      for (int y : h.elems)
        if (!k.contains(g.comm(x, y))) { centralizes = false; break; }
      if (centralizes) { d.hk_maximal_abelian = false; break; }
    }
    // also H itself must be abelian mod K
    for (int x : h.elems) {
      for (int y : h.elems)
        if (!k.contains(g.comm(x, y))) { d.hk_maximal_abelian = false; goto mab_done; }
    }
  mab_done:
    if (!d.hk_maximal_abelian) return d;
  }
  {
    AlgElement eps = epsilon(g, h, k);
    Subgroup stab = stabilizer_of(eps);
    d.conjugates_orthogonal = true;
    std::vector<char> covered(g.order, 0);
    for (int s : stab.elems) covered[s] = 1;
    for (int t = 1; t < g.order; ++t) {
      if (covered[t]) continue;
      for (int s : stab.elems) covered[g.mul(s, t)] = 1;
      if (!mul(eps, conjugate(eps, t)).is_zero()) { d.conjugates_orthogonal = false; break; }
    }
  }
  return d;
}

inline bool is_strong_shoda_pair(const CayleyGroup& g, const Subgroup& h, const Subgroup& k) {
  return is_strong_shoda_pair_diag(g, h, k).ok();
}

struct ShodaPair {
  Subgroup h, k;
  AlgElement eps;
  AlgElement e;
  Subgroup stabilizer;
  std::vector<int> transversal;
};

namespace detail {

inline std::vector<int> canonical_pair_image(const CayleyGroup& g, const Subgroup& h,
                                             const Subgroup& k) {
  // min over conjugation of the concatenated element lists; used only to
  // dedupe conjugate pairs cheaply
  std::vector<int> best;
  for (int t = 0; t < g.order; ++t) {
    auto hc = conjugate_subgroup(h, t);
    auto kc = conjugate_subgroup(k, t);
    std::vector<int> key = hc.elems;
    key.push_back(-1);
    key.insert(key.end(), kc.elems.begin(), kc.elems.end());
    if (best.empty() || key < best) best = key;
  }
  return best;
}

} // namespace detail

/// Enumerate strong Shoda pairs, one per distinct central idempotent
/// e(G,H,K). H descending by order, K ascending.
inline std::vector<ShodaPair> enumerate_ssp(const CayleyGroup& g,
                                            const std::vector<Subgroup>& lattice) {
  std::vector<Subgroup> hs = lattice;
  std::sort(hs.begin(), hs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.elems < b.elems;
  });
  std::vector<ShodaPair> out;
  std::set<std::vector<int>> seen_pairs;
  std::vector<AlgElement> idems;
  for (auto& h : hs) {
    // derived subgroup of H (cyclic quotients are abelian quotients)
    std::vector<int> dgens;
    for (int x : h.elems)
      for (int y : h.elems) dgens.push_back((*h.parent).comm(x, y));
    std::sort(dgens.begin(), dgens.end());
    dgens.erase(std::unique(dgens.begin(), dgens.end()), dgens.end());
    Subgroup hder = subgroup_closure(g, dgens);
    for (auto& k : lattice) {
      if (!k.subset_of(h)) continue;
      if (!hder.subset_of(k)) continue;
      auto diag = is_strong_shoda_pair_diag(g, h, k);
      if (!diag.k_normal_in_h) continue;
      if (!seen_pairs.insert(detail::canonical_pair_image(g, h, k)).second) continue;
      if (!diag.ok()) continue;
      auto pe = e_from_pair(g, h, k);
      bool dup = false;
      for (auto& e0 : idems)
        if (e0 == pe.e) { dup = true; break; }
      if (dup) continue;
      idems.push_back(pe.e);
      out.push_back({h, k, std::move(pe.eps), std::move(pe.e), std::move(pe.stabilizer),
                     std::move(pe.transversal)});
    }
  }
  return out;
}

enum class Classification { Field, Matrix, DivisionQuaternionOverQ, Undecided };

inline const char* classification_name(Classification c) {
  switch (c) {
    case Classification::Field: return "Field";
    case Classification::Matrix: return "Matrix";
    case Classification::DivisionQuaternionOverQ: return "DivisionQuaternionOverQ";
    default: return "Undecided";
  }
}

struct Component {
  AlgElement idempotent;
  long long dim_q = 0;
  Subgroup kernel;
  int reduced_degree_lower_bound = 1;
  Classification classification = Classification::Undecided;
  ShodaPair provenance;
};

struct WedderburnReport {
  std::vector<Component> components;
  bool covered = false;
  int matrix_count_min = 0;
  int matrix_count_max = 0;
  int cyclic_class_count = 0;
  long long residual_dim = 0;   // |G| - sum of found dims
  int residual_components = 0;  // class count - found components (when covered=false)
  bool dk_holds = false;        // epsilon-count test, used for the min bound
  std::string notes;
};

inline long long euler_phi(long long n) {
  long long r = n;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      r -= r / d;
      while (n % d == 0) n /= d;
    }
  if (n > 1) r -= r / n;
  return r;
}

/// { g : g*e = e }; for SSP components this equals core_G(K).
inline Subgroup component_kernel(const AlgElement& e) {
  const auto& G = *e.g;
  std::vector<int> out;
  for (int t = 0; t < G.order; ++t) {
    int ti = G.inv(t);
    bool ok = true;
    for (int i = 0; i < G.order && ok; ++i)
      if (e.c[G.mul(ti, i)] != e.c[i]) ok = false;
    if (ok) out.push_back(t);
  }
  return {&G, out};
}

/// Exact rank over Q of x -> x*e acting on QG; equals dim_Q(QG e).
inline long long rank_right_mul(const AlgElement& e) {
  const auto& G = *e.g;
  const int n = G.order;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    AlgElement r = mul(alg_unit(G, i), e);
    for (int j = 0; j < n; ++j) m[i][j] = r.c[j];
  }
  long long rank = 0;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (!m[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    Rat inv = Rat(1) / m[row][col];
    for (int j = col; j < n; ++j) m[row][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rat f = m[r][col];
      for (int j = col; j < n; ++j) m[r][j] -= f * m[row][j];
    }
    ++rank;
    ++row;
  }
  return rank;
}

namespace detail {

/// Empirical gate for the quaternion-symbol translation: the anchor symbols
/// must come out as expected ((-1,-1) and (-3,-1) division, gamma=+1 split)
/// before R3 is trusted; on mismatch R3 falls back to Undecided.
inline bool validate_r3_impl() {
  return !quaternion_splits_over_Q(Rat(-1), Rat(-1)) &&
         !quaternion_splits_over_Q(Rat(-3), Rat(-1)) &&
         quaternion_splits_over_Q(Rat(-1), Rat(1)) && quaternion_splits_over_Q(Rat(-3), Rat(1));
}

inline bool r3_validated() {
  static const bool ok = validate_r3_impl();
  return ok;
}

} // namespace detail

inline Classification classify_component(const CayleyGroup& g, const ShodaPair& sp,
                                         int* reduced_lb) {
  const Subgroup& h = sp.h;
  const Subgroup& k = sp.k;
  *reduced_lb = 1;
  if (h.order() == g.order) return Classification::Field; // R1
  Subgroup nk = normalizer(g, k);
  long long idx_nk = g.order / nk.order();
  if (idx_nk >= 2) { // R2
    *reduced_lb = (int)idx_nk;
    return Classification::Matrix;
  }
  // R3: N_G(K) = G, [G:H] = 2, [H:K] in {3,4,6}
  long long hk = h.order() / k.order();
  if (g.order / h.order() == 2 && (hk == 3 || hk == 4 || hk == 6)) {
    if (!detail::r3_validated()) return Classification::Undecided;
    int gg = -1;
    for (int x = 0; x < g.order; ++x)
      if (!h.contains(x)) { gg = x; break; }
    int g2 = g.mul(gg, gg);
    if (!h.contains(g2)) return Classification::Undecided;
    // image of g^2 in H/K: trivial (in K) => gamma=+1; order 2 => gamma=-1
    int gamma;
    if (k.contains(g2)) gamma = 1;
    else {
      // order of g2 K in H/K
      int ordq = 1, y = g2;
      while (!k.contains(y)) { y = g.mul(y, g2); ++ordq; }
      if (ordq != 2) return Classification::Undecided;
      gamma = -1;
    }
    Rat d = (hk == 4) ? Rat(-1) : Rat(-3);
    bool split = quaternion_splits_over_Q(d, Rat(gamma));
    if (split) {
      *reduced_lb = 2;
      return Classification::Matrix;
    }
    return Classification::DivisionQuaternionOverQ;
  }
  return Classification::Undecided; // R4
}

/// #\{ N normal : epsilon(G,N) != 0 \} vs the cyclic-subgroup class count;
/// equality is the DK property.
struct DkCounts {
  bool verdict = false;
  int nonzero_epsilon_count = 0;
  int cyclic_class_count = 0;
};

inline DkCounts dk_counts(const CayleyGroup& g, const std::vector<Subgroup>& lattice) {
  DkCounts d;
  d.cyclic_class_count = cyclic_subgroup_class_count(g);
  Subgroup full = full_subgroup(g);
  for (auto& n : lattice) {
    if (!is_normal(g, n)) continue;
    if (!epsilon(g, full, n).is_zero()) ++d.nonzero_epsilon_count;
  }
  d.verdict = (d.nonzero_epsilon_count == d.cyclic_class_count);
  return d;
}

/// Assemble the Wedderburn data of QG from strong Shoda pairs.
inline WedderburnReport pci_set(const CayleyGroup& g, const std::vector<Subgroup>& lattice) {
  WedderburnReport rep;
  auto pairs = enumerate_ssp(g, lattice);
  AlgElement sum = alg_zero(g);
  long long dimsum = 0;
  for (auto& sp : pairs) {
    Component c;
    c.idempotent = sp.e;
    Subgroup nk = normalizer(g, sp.k);
    c.dim_q = (g.order / sp.h.order()) * (g.order / nk.order()) *
              euler_phi(sp.h.order() / sp.k.order());
    c.kernel = component_kernel(sp.e);
    Subgroup kc = core(g, sp.k);
    if (!(c.kernel == kc))
      throw group_error("pci_set: component kernel differs from core_G(K)");
    c.classification = classify_component(g, sp, &c.reduced_degree_lower_bound);
    c.provenance = sp;
    sum = add(sum, c.idempotent);
    dimsum += c.dim_q;
    rep.components.push_back(std::move(c));
  }
  rep.covered = (sum == alg_one(g));
  rep.cyclic_class_count = cyclic_subgroup_class_count(g);
  rep.residual_dim = g.order - dimsum;
  rep.residual_components = rep.covered ? 0 : rep.cyclic_class_count - (int)rep.components.size();
  auto dk = dk_counts(g, lattice);
  rep.dk_holds = dk.verdict;
  int n_matrix = 0, n_undecided = 0;
  for (auto& c : rep.components) {
    if (c.classification == Classification::Matrix) ++n_matrix;
    if (c.classification == Classification::Undecided) ++n_undecided;
  }
  rep.matrix_count_min = n_matrix;
  // a group with at most one matrix component has DK; contrapositive:
  // no DK forces at least two matrix components
  if (!rep.dk_holds && rep.matrix_count_min < 2) {
    rep.matrix_count_min = 2;
    rep.notes += "matrix lower bound raised to 2: distinct components share a kernel; ";
  }
  rep.matrix_count_max = n_matrix + n_undecided + rep.residual_components;
  if (rep.matrix_count_min > rep.matrix_count_max)
    throw group_error("pci_set: inconsistent matrix-count interval");
  return rep;
}

} // namespace gring
