#pragma once

#include "grouprings/algebra.hpp"

#include <optional>

namespace gring {

/// 2x2 integer matrix with arbitrary-precision entries.
struct IntMat2 {
  Int a = 0, b = 0, c = 0, d = 0;

  bool operator==(const IntMat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  IntMat2 operator*(const IntMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  IntMat2 operator+(const IntMat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  IntMat2 operator-(const IntMat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  static IntMat2 identity() { return {1, 0, 0, 1}; }
  IntMat2 inv_unimodular() const {
    if (det() != 1) throw group_error("inverse: determinant is not 1");
    return {d, -b, -c, a};
  }
};

inline std::string mat_string(const IntMat2& m) {
  return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() + "]]";
}

/// Nilpotency criterion for 2x2 matrices over a domain: x = -w and x^2 = -yz.
inline bool nilpotent2x2(const IntMat2& m) { return m.a == -m.d && m.a * m.a == -m.b * m.c; }

inline bool is_unipotent(const IntMat2& m) {
  IntMat2 n = m - IntMat2::identity();
  return nilpotent2x2(n);
}

/// Conjugate a unipotent u inside SL2(Z) to (1, m; 0, 1): for u-1 = (x,y;z,w)
/// with y != 0 take xbar = x/g, ybar = y/g (g signed so ybar > 0), Bezout
/// a*xbar + b*ybar = 1 and S = (ybar, a; -xbar, b); the completion (a,b) is
/// normalized to make tr S = 0 whenever xbar divides 1 + ybar^2, matching the
/// conjugators used for these matrices. y = 0 is handled by the swap matrix.
struct UnipotentNormalForm {
  IntMat2 S;
  Int m;
};

inline UnipotentNormalForm unipotent_normal_form(const IntMat2& u) {
  if (u.det() != 1) throw group_error("unipotent_normal_form: det != 1");
  if (!is_unipotent(u)) throw group_error("unipotent_normal_form: matrix is not unipotent");
  IntMat2 n = u - IntMat2::identity();
  UnipotentNormalForm out;
  if (u == IntMat2::identity()) {
    out.S = IntMat2::identity();
    out.m = 0;
    return out;
  }
  if (n.b == 0) {
    // lower triangular: (0,0;z,0); S = (0,1;-1,0) sends it to (0,-z;0,0)
    out.S = {0, 1, -1, 0};
    out.m = -n.c;
  } else {
    Int g = boost::multiprecision::gcd(n.a, n.b);
    if (g == 0) g = 1;
    if (n.b < 0) g = -boost::multiprecision::abs(g);
    else g = boost::multiprecision::abs(g);
    Int xb = n.a / g, yb = n.b / g; // ybar > 0
    // extended euclid for a*xb + b*yb = 1
    Int old_r = xb, r = yb, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      Int q = old_r / r;
      Int tmp = old_r - q * r; old_r = r; r = tmp;
      tmp = old_s - q * s; old_s = s; s = tmp;
      tmp = old_t - q * t; old_t = t; t = tmp;
    }
    Int A = old_s, B = old_t;
    if (old_r < 0) { A = -A; B = -B; old_r = -old_r; }
    if (old_r != 1) throw group_error("unipotent_normal_form: gcd normalization failed");
    // shift freedom: (A,B) -> (A + t*yb, B - t*xb); prefer tr S = ybar + B = 0
    if (xb != 0 && (B + yb) % xb == 0) {
      Int t0 = (B + yb) / xb;
      A += t0 * yb;
      B -= t0 * xb;
    } else if (yb != 0) {
      // canonical reduction of A modulo ybar
      Int t0 = A / yb;
      A -= t0 * yb;
      B += t0 * xb;
    }
    out.S = {yb, A, -xb, B};
    // m from S^{-1} (u-1) S = (0,m;0,0): (u-1)(A,B)^T = m (yb,-xb)^T
    Int v0 = n.a * A + n.b * B;
    out.m = v0 / yb;
  }
  if (out.S.det() != 1) throw group_error("unipotent_normal_form: conjugator not unimodular");
  IntMat2 check = out.S.inv_unimodular() * u * out.S;
  if (!(check.a == 1 && check.d == 1 && check.c == 0 && check.b == out.m))
    throw group_error("unipotent_normal_form: conjugation check failed");
  return out;
}

/// Largest n with M in Gamma(n): gcd(a-1, d-1, b, c). The identity belongs
/// to every Gamma(n); its level is reported as the distinguished value 0
/// standing for infinity (the is_identity flag disambiguates).
struct CongruenceLevel {
  bool infinite = false;
  Int level = 1;
};

inline CongruenceLevel congruence_level(const IntMat2& m) {
  if (m.det() != 1) throw group_error("congruence_level: det != 1");
  if (m == IntMat2::identity()) return {true, 0};
  using boost::multiprecision::gcd;
  Int g = gcd(gcd(m.a - Int(1), m.d - Int(1)), gcd(m.b, m.c));
  if (g < 0) g = -g;
  return {false, g};
}

/// Membership in V_m <= Gamma(m): M = (1 + m*l2, m*t1; m*t2, 1 + m*l1) with
/// l1 = l2 and t1 = t2 mod 2.
inline bool in_V(const IntMat2& M, const Int& m) {
  if (M.det() != 1) throw group_error("in_V: det != 1");
  if (m == 0) throw group_error("in_V: modulus must be nonzero");
  if ((M.a - 1) % m != 0 || (M.d - 1) % m != 0 || M.b % m != 0 || M.c % m != 0) return false;
  Int l2 = (M.a - 1) / m, l1 = (M.d - 1) / m, t1 = M.b / m, t2 = M.c / m;
  return (l1 - l2) % 2 == 0 && (t1 - t2) % 2 == 0;
}

/// The (2,3,n) triangle group is finite iff n <= 5.
inline bool triangle_quotient_is_finite(long long n) {
  if (n < 1) throw group_error("triangle_quotient_is_finite: n must be >= 1");
  return n <= 5;
}

/// Rational 2x2 matrix for the dihedral-component embedding.
struct RatMat2 {
  Rat a = 0, b = 0, c = 0, d = 0;
  RatMat2 operator*(const RatMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  RatMat2 operator+(const RatMat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  bool operator==(const RatMat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

/// phi: Q D8 -> M2(Q) by linear extension of a -> (0,1;-1,0), b -> (0,1;1,0)
/// (the matrix-component projection of the dihedral group of order 8).
inline RatMat2 d8_embedding(const AlgElement& x) {
  const CayleyGroup& G = *x.g;
  if (G.tag.name != "dihedral" || G.order != 8)
    throw group_error("d8_embedding: element must live over dihedral(8)");
  const int a = G.generator("a"), b = G.generator("b");
  auto matmul = [](const RatMat2& p, const RatMat2& q) { return p * q; };
  RatMat2 Ma{0, 1, -1, 0}, Mb{0, 1, 1, 0};
  // image of each group element: write g = a^i b^j by brute-force search
  std::vector<RatMat2> img(G.order);
  std::vector<char> have(G.order, 0);
  RatMat2 I{1, 0, 0, 1};
  img[0] = I;
  have[0] = 1;
  RatMat2 cur = I;
  int ge = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) {
      int e = G.mul(G.pow(a, i), G.pow(b, j));
      if (have[e]) continue;
      RatMat2 v = I;
      for (int t = 0; t < i; ++t) v = matmul(v, Ma);
      for (int t = 0; t < j; ++t) v = matmul(v, Mb);
      img[e] = v;
      have[e] = 1;
    }
  }
  (void)cur;
  (void)ge;
  RatMat2 out{0, 0, 0, 0};
  for (int e = 0; e < G.order; ++e) {
    if (x.c[e].is_zero()) continue;
    out.a += x.c[e] * img[e].a;
    out.b += x.c[e] * img[e].b;
    out.c += x.c[e] * img[e].c;
    out.d += x.c[e] * img[e].d;
  }
  return out;
}

/// Image characterization of phi on Z D8 e: a = d and b = c mod 2.
inline bool d8_image_member(const IntMat2& m) {
  return (m.a - m.d) % 2 == 0 && (m.b - m.c) % 2 == 0;
}

} // namespace gring
