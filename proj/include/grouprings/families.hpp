#pragma once

#include "grouprings/pc.hpp"

#include <array>
#include <map>
#include <numeric>
#include <set>

namespace gring {

namespace detail {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline PcPresentation pc_shell(std::vector<std::string> names, std::vector<int> orders) {
  PcPresentation p;
  p.names = std::move(names);
  p.relative_orders = std::move(orders);
  const int n = p.ngens();
  p.power.assign(n, std::vector<int>(n, 0));
  p.conj.assign(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      p.conj[i][j].assign(n, 0);
      p.conj[i][j][j] = 1; // default: commute
    }
  return p;
}

// closure of permutations of {0..deg-1}; returns the Cayley group with
// cycle-notation element names
inline GroupPtr perm_closure(int deg, std::vector<std::vector<int>> gens,
                             std::vector<std::string> gen_names, FamilyTag tag) {
  using Perm = std::vector<int>;
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [&](const Perm& a, const Perm& b) { // (a then b)(x) = b[a[x]]
    Perm c(deg);
    for (int i = 0; i < deg; ++i) c[i] = b[a[i]];
    return c;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (size_t head = 0; head < elems.size(); ++head)
    for (auto& g : gens) {
      Perm p = compose(elems[head], g);
      if (!index.count(p)) {
        index[p] = (int)elems.size();
        elems.push_back(p);
      }
    }
  const int N = (int)elems.size();
  if (N > 1 << 12) throw group_error("permutation closure too large");
  auto g = std::make_shared<CayleyGroup>();
  g->order = N;
  g->table.assign(size_t(N) * N, 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      g->table[size_t(i) * N + j] = index.at(compose(elems[i], elems[j]));
  g->inverse.assign(N, 0);
  for (int i = 0; i < N; ++i) {
    Perm inv(deg);
    for (int k = 0; k < deg; ++k) inv[elems[i][k]] = k;
    g->inverse[i] = index.at(inv);
  }
  g->element_names.resize(N);
  for (int i = 0; i < N; ++i) {
    std::string s;
    std::vector<char> done(deg, 0);
    for (int k = 0; k < deg; ++k) {
      if (done[k] || elems[i][k] == k) continue;
      s += "(";
      int x = k;
      bool first = true;
      while (!done[x]) {
        done[x] = 1;
        if (!first) s += " ";
        s += std::to_string(x + 1);
        first = false;
        x = elems[i][x];
      }
      s += ")";
    }
    g->element_names[i] = s.empty() ? "1" : s;
  }
  for (size_t k = 0; k < gens.size(); ++k)
    g->generators.push_back({gen_names[k], index.at(gens[k])});
  g->tag = std::move(tag);
  g->validate();
  return g;
}

} // namespace detail

inline GroupPtr cyclic(int n) {
  if (n < 1) throw group_error("cyclic: order must be positive");
  if (n == 1) {
    auto p = detail::pc_shell({"g"}, {2});
    auto g2 = group_from_pc(p, {"cyclic", {1}});
    // order-1 group built directly instead
    auto g = std::make_shared<CayleyGroup>();
    g->order = 1;
    g->table = {0};
    g->inverse = {0};
    g->element_names = {"1"};
    g->tag = {"cyclic", {1}};
    g->validate();
    (void)g2;
    return g;
  }
  auto p = detail::pc_shell({"g"}, {n});
  return group_from_pc(p, {"cyclic", {n}});
}

/// Dihedral group of order 2n, presented on (b, a) with a^b = a^{-1}.
inline GroupPtr dihedral(int order2n) {
  if (order2n < 4 || order2n % 2) throw group_error("dihedral: order must be even and >= 4");
  const int n = order2n / 2;
  auto p = detail::pc_shell({"b", "a"}, {2, n});
  p.conj[0][1][1] = (n - 1) % n; // a^b = a^{-1}
  return group_from_pc(p, {"dihedral", {order2n}});
}

/// Generalized quaternion group of order 2^k, k >= 3:
/// a^{2^{k-1}} = b^4 = 1, b^2 = a^{2^{k-2}}, a^b = a^{-1}.
inline GroupPtr generalized_quaternion(int order) {
  int k = 0;
  while ((1 << k) < order) ++k;
  if ((1 << k) != order || k < 3)
    throw group_error("generalized_quaternion: order must be 2^k >= 8");
  const int na = 1 << (k - 1);
  auto p = detail::pc_shell({"b", "a"}, {2, na});
  p.power[0][1] = na / 2;      // b^2 = a^{2^{k-2}}
  p.conj[0][1][1] = na - 1;    // a^b = a^{-1}
  return group_from_pc(p, {"quaternion", {order}});
}

inline GroupPtr symmetric(int n) {
  if (n < 1 || n > 5) throw group_error("symmetric: n in 1..5 supported");
  if (n == 1) return cyclic(1);
  std::vector<int> tr(n), cyc(n);
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return detail::perm_closure(n, {tr, cyc}, {"s", "c"}, {"symmetric", {n}});
}

inline GroupPtr alternating(int n) {
  if (n < 1 || n > 5) throw group_error("alternating: n in 1..5 supported");
  if (n <= 2) return cyclic(1);
  if (n == 3) return cyclic(3);
  std::vector<int> t3(n), rest(n);
  std::iota(t3.begin(), t3.end(), 0);
  t3[0] = 1; t3[1] = 2; t3[2] = 0; // (1 2 3)
  std::iota(rest.begin(), rest.end(), 0);
  if (n == 4) { rest[0] = 1; rest[1] = 0; rest[2] = 3; rest[3] = 2; } // (1 2)(3 4)
  else { rest = {0, 1, 2, 3, 4}; rest[2] = 3; rest[3] = 4; rest[4] = 2; } // (3 4 5)
  return detail::perm_closure(n, {t3, rest}, {"x", "y"}, {"alternating", {n}});
}

/// G(p,m,n) = < a,b | a^{p^m} = b^{p^n} = 1, a^b = a^{1+p^{m-1}} >,
/// p prime, m >= 2, n >= 1; order p^{m+n}.
inline GroupPtr gpmn(int p, int m, int n) {
  if (!detail::is_prime(p) || m < 2 || n < 1) throw group_error("G(p,m,n): need p prime, m >= 2, n >= 1");
  long long pm = 1, pn = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  for (int i = 0; i < n; ++i) pn *= p;
  if (pm * pn > 2048) throw group_error("G(p,m,n): order cap 2048 exceeded");
  long long pm1 = pm / p;
  auto pr = detail::pc_shell({"b", "a"}, {(int)pn, (int)pm});
  pr.conj[0][1][1] = int((1 + pm1) % pm); // a^b = a^{1+p^{m-1}}
  return group_from_pc(pr, {"G", {p, m, n}});
}

/// Metacyclic C_m x| C_k with a^b = a^r (k a prime power for the paper's
/// unfaithful-type families; r^k = 1 mod m required).
inline GroupPtr metacyclic(long long m, long long k, long long r) {
  if (m < 2 || k < 2) throw group_error("metacyclic: orders must be >= 2");
  if (m * k > 4096) throw group_error("metacyclic: order cap 4096 exceeded");
  r %= m;
  if (r < 0) r += m;
  if (std::gcd(r, m) != 1) throw group_error("metacyclic: action exponent r not a unit mod m");
  long long rk = 1;
  for (long long i = 0; i < k; ++i) rk = (rk * r) % m;
  if (rk != 1) throw group_error("metacyclic: r^k != 1 mod m, action is not well defined");
  auto p = detail::pc_shell({"b", "a"}, {(int)k, (int)m});
  p.conj[0][1][1] = (int)r;
  return group_from_pc(p, {"metacyclic", {m, k, r}});
}

inline GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2) {
  const int n1 = g1->order, n2 = g2->order;
  if ((long long)n1 * n2 > 4096) throw group_error("direct product too large");
  auto g = std::make_shared<CayleyGroup>();
  const int N = n1 * n2;
  g->order = N;
  g->table.assign(size_t(N) * N, 0);
  auto id = [&](int x, int y) { return x * n2 + y; };
  for (int x1 = 0; x1 < n1; ++x1)
    for (int y1 = 0; y1 < n2; ++y1)
      for (int x2 = 0; x2 < n1; ++x2)
        for (int y2 = 0; y2 < n2; ++y2)
          g->table[size_t(id(x1, y1)) * N + id(x2, y2)] = id(g1->mul(x1, x2), g2->mul(y1, y2));
  g->inverse.assign(N, 0);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y)
      g->inverse[id(x, y)] = id(g1->inv(x), g2->inv(y));
  g->element_names.resize(N);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y) {
      auto &a = g1->element_names[x], &b = g2->element_names[y];
      g->element_names[id(x, y)] = (x == 0 && y == 0) ? "1" : "(" + a + "," + b + ")";
    }
  for (auto& [nm, i] : g1->generators) g->generators.push_back({nm + ".1", id(i, 0)});
  for (auto& [nm, i] : g2->generators) g->generators.push_back({nm + ".2", id(0, i)});
  g->tag = {"product", {}};
  g->validate();
  return g;
}

/// SL(2,q) for q in {2,3,5}, by closure of the standard generators
/// [[1,1],[0,1]] and [[0,-1],[1,0]] over F_q.
inline GroupPtr sl2(int q) {
  if (q != 2 && q != 3 && q != 5) throw group_error("sl2: q in {2,3,5} supported");
  using Mat = std::array<int, 4>;
  auto mmul = [&](const Mat& x, const Mat& y) {
    return Mat{(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q,
               (x[2] * y[0] + x[3] * y[2]) % q, (x[2] * y[1] + x[3] * y[3]) % q};
  };
  Mat I{1, 0, 0, 1}, T{1, 1, 0, 1}, S{0, (q - 1) % q, 1, 0};
  std::vector<Mat> elems{I};
  std::map<Mat, int> index{{I, 0}};
  for (size_t head = 0; head < elems.size(); ++head)
    for (auto& g : {T, S}) {
      Mat p = mmul(elems[head], g);
      if (!index.count(p)) {
        index[p] = (int)elems.size();
        elems.push_back(p);
      }
    }
  const int N = (int)elems.size();
  auto g = std::make_shared<CayleyGroup>();
  g->order = N;
  g->table.assign(size_t(N) * N, 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      g->table[size_t(i) * N + j] = index.at(mmul(elems[i], elems[j]));
  g->inverse.assign(N, 0);
  for (int i = 0; i < N; ++i) {
    const Mat& m = elems[i];
    Mat inv{m[3], (q - m[1]) % q, (q - m[2]) % q, m[0]}; // det = 1
    g->inverse[i] = index.at(inv);
  }
  g->element_names.resize(N);
  for (int i = 0; i < N; ++i) {
    const Mat& m = elems[i];
    g->element_names[i] = i == 0 ? "1"
                                 : "[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + ";" +
                                       std::to_string(m[2]) + "," + std::to_string(m[3]) + "]";
  }
  g->generators = {{"t", index.at(T)}, {"s", index.at(S)}};
  g->tag = {"sl2", {q}};
  g->validate();
  return g;
}

// --- named groups from the source material ---

/// <a,b,c | a^9 = b^3 = [a,b] = 1, a^c = ab, b^c = a^{-3}b, c^3 = a^3>, order 81.
inline GroupPtr bj4() {
  auto p = detail::pc_shell({"c", "a", "b"}, {3, 9, 3});
  p.power[0][1] = 3;        // c^3 = a^3
  p.conj[0][1] = {0, 1, 1}; // a^c = a b
  p.conj[0][2] = {0, 6, 1}; // b^c = a^{-3} b = a^6 b
  return group_from_pc(p, {"BJ4", {}});
}

/// <a,b | a^8 = 1, a^b = a^{-1}, a^4 = b^4>, order 32.
inline GroupPtr bj5() {
  auto p = detail::pc_shell({"b", "a"}, {4, 8});
  p.power[0][1] = 4;       // b^4 = a^4
  p.conj[0][1][1] = 7;     // a^b = a^{-1}
  return group_from_pc(p, {"BJ5", {}});
}

/// <a,b,c | a^4 = b^4 = [a,b] = 1, a^c = ab^2, b^c = ba^2, c^2 = a^2>, order 32.
inline GroupPtr bj8() {
  auto p = detail::pc_shell({"c", "a", "b"}, {2, 4, 4});
  p.power[0][1] = 2;        // c^2 = a^2
  p.conj[0][1] = {0, 1, 2}; // a^c = a b^2
  p.conj[0][2] = {0, 2, 1}; // b^c = a^2 b
  return group_from_pc(p, {"BJ8", {}});
}

/// <a,b,c,d | a^4 = b^4 = [a,b] = 1, a^c = a^{-1}, b^c = b^{-1}a^2,
///  a^d = a^{-1}b^2, b^d = b^{-1}, c^2 = a^2b^2, d^2 = a^2>, order 64.
/// The printed relations leave [c,d] open; d^c = d is the consistent choice
/// (checked by the exhaustive table validation).
inline GroupPtr bj9() {
  auto p = detail::pc_shell({"c", "d", "a", "b"}, {2, 2, 4, 4});
  p.power[0][2] = 2; p.power[0][3] = 2; // c^2 = a^2 b^2
  p.power[1][2] = 2;                    // d^2 = a^2
  p.conj[0][2] = {0, 0, 3, 0};          // a^c = a^{-1}
  p.conj[0][3] = {0, 0, 2, 3};          // b^c = a^2 b^{-1} = b^{-1} a^2
  p.conj[1][2] = {0, 0, 3, 2};          // a^d = a^{-1} b^2
  p.conj[1][3] = {0, 0, 0, 3};          // b^d = b^{-1}
  p.conj[0][1] = {0, 1, 0, 0};          // d^c = d
  return group_from_pc(p, {"BJ9", {}});
}

/// SmallGroup(32,11): <a,b,c | a^4=b^4=c^2=1, [a,b]=[b,c]=1, [a,c]=a^2b>.
inline GroupPtr sg32_11() {
  auto p = detail::pc_shell({"c", "a", "b"}, {2, 4, 4});
  p.conj[0][1] = {0, 3, 1}; // a^c = a*a^2*b = a^3 b
  return group_from_pc(p, {"SG32_11", {}});
}

/// SmallGroup(32,12) = G(2,2,3) = C4 x| C8.
inline GroupPtr sg32_12() { return gpmn(2, 2, 3); }

/// SmallGroup(64,135) = ((C4 x C4) x| C2) x| C2, relations
/// [a,c]=a^2b, [a,d]=a^2b^2, [b,d]=b^2, [c,d]=a^2b^{-1}, [b,c]=1.
inline GroupPtr sg64_135() {
  auto p = detail::pc_shell({"c", "d", "a", "b"}, {2, 2, 4, 4});
  p.conj[0][1] = {0, 1, 2, 1}; // d^c = d [d,c] = d (a^2 b^{-1})^{-1} = d a^2 b
  p.conj[0][2] = {0, 0, 3, 1}; // a^c = a * a^2 b = a^3 b
  p.conj[0][3] = {0, 0, 0, 1}; // b^c = b
  p.conj[1][2] = {0, 0, 3, 2}; // a^d = a * a^2 b^2 = a^3 b^2
  p.conj[1][3] = {0, 0, 0, 3}; // b^d = b * b^2 = b^3
  auto g = group_from_pc(p, {"SG64_135", {}});
  if (g->order != 64) throw group_error("SG64_135: collected order is not 64");
  return g;
}

inline GroupPtr q8() { return generalized_quaternion(8); }
inline GroupPtr q8xq8() {
  auto g = direct_product(q8(), q8());
  auto h = std::make_shared<CayleyGroup>(*g);
  h->tag = {"Q8xQ8", {}};
  return h;
}

} // namespace gring
