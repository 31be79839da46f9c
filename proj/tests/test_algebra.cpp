#include "grouprings/algebra.hpp"
#include "grouprings/families.hpp"

#include <doctest.h>

#include <random>

using namespace gring;

namespace {

AlgElement random_element(const CayleyGroup& g, std::mt19937_64& rng, int support, int span) {
  AlgElement x(g);
  for (int k = 0; k < support; ++k) {
    int e = (int)(rng() % g.order);
    long c = (long)(rng() % (2 * span + 1)) - span;
    x.c[e] += Rat(c);
  }
  return x;
}

// Newton-identity oracle: x is nilpotent iff trace(L_x^k) = 0 for k = 1..|G|,
// and trace of left multiplication by y is |G| * (coefficient of 1 in y).
bool nilpotent_by_traces(const AlgElement& x) {
  const auto& G = *x.g;
  AlgElement p = x;
  for (int k = 1; k <= G.order; ++k) {
    if (!p.c[0].is_zero()) return false;
    p = mul(p, x);
  }
  return true;
}

} // namespace

TEST_CASE("tilde absorbs its subgroup") {
  auto d8 = dihedral(8);
  int a = d8->generator("a"), b = d8->generator("b");
  Subgroup H = cyclic_subgroup(*d8, a);
  AlgElement t = tilde(H);
  for (int h : H.elems) {
    CHECK(mul(sub(alg_one(*d8), alg_unit(*d8, h)), t).is_zero());
    CHECK(mul(t, sub(alg_one(*d8), alg_unit(*d8, h))).is_zero());
  }
  // (1-a) b <a>~ squares to zero (here it even vanishes: <a> is normal)
  AlgElement n = mul(mul(sub(alg_one(*d8), alg_unit(*d8, a)), alg_unit(*d8, b)), t);
  CHECK(mul(n, n).is_zero());
  // a genuinely nonzero square-zero element over the non-normal <b>
  Subgroup B = cyclic_subgroup(*d8, b);
  AlgElement n2 = mul(mul(sub(alg_one(*d8), alg_unit(*d8, b)), alg_unit(*d8, a)), tilde(B));
  CHECK_FALSE(n2.is_zero());
  CHECK(mul(n2, n2).is_zero());
}

TEST_CASE("hat is the averaging idempotent") {
  auto d8 = dihedral(8);
  auto H = cyclic_subgroup(*d8, d8->generator("a"));
  AlgElement h = hat(H);
  CHECK(is_idempotent(h));
  CHECK(hat(trivial_subgroup(*d8)) == alg_one(*d8));
  AlgElement hg = hat(full_subgroup(*d8));
  for (int g = 0; g < d8->order; ++g) CHECK(mul(hg, alg_unit(*d8, g)) == hg);
}

TEST_CASE("tilde of <b^2> in G(2,2,3) has support {1,b^2,b^4,b^6}") {
  auto g = gpmn(2, 2, 3);
  int b = g->generator("b");
  auto t = tilde(cyclic_subgroup(*g, g->pow(b, 2)));
  auto s = support(t);
  std::vector<int> expect{0, g->pow(b, 2), g->pow(b, 4), g->pow(b, 6)};
  std::sort(expect.begin(), expect.end());
  CHECK(s == expect);
}

TEST_CASE("product is associative and distributive (randomized)") {
  std::mt19937_64 rng(42);
  for (auto& g : {dihedral(8), sl2(3)}) {
    for (int trial = 0; trial < 8; ++trial) {
      auto x = random_element(*g, rng, 3, 2);
      auto y = random_element(*g, rng, 3, 2);
      auto z = random_element(*g, rng, 3, 2);
      CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
      CHECK(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
    }
  }
}

TEST_CASE("hat of a normal subgroup is central idempotent") {
  auto g = gpmn(2, 2, 3);
  auto n = cyclic_subgroup(*g, g->pow(g->generator("b"), 2));
  REQUIRE(is_normal(*g, n));
  auto h = hat(n);
  CHECK(is_idempotent(h));
  CHECK(is_central(h));
  std::mt19937_64 rng(7);
  auto x = random_element(*g, rng, 4, 2);
  CHECK(mul(x, h) == mul(h, x));
}

TEST_CASE("nilpotency matches the trace oracle on small groups") {
  std::mt19937_64 rng(11);
  for (auto& g : {dihedral(8), symmetric(3), sl2(3)}) {
    REQUIRE(g->order <= 24);
    int agree = 0;
    for (int trial = 0; trial < 12; ++trial) {
      auto x = random_element(*g, rng, 3, 1);
      CHECK(is_nilpotent(x) == nilpotent_by_traces(x));
      ++agree;
    }
    CHECK(agree == 12);
    // a guaranteed nonzero nilpotent
    int a = -1, h = -1;
    for (int cand = 1; cand < g->order && a < 0; ++cand)
      for (int t = 1; t < g->order; ++t) {
        auto H = cyclic_subgroup(*g, cand);
        if (!H.contains(g->conj(cand, t))) { a = cand; h = t; break; }
      }
    if (a >= 0) {
      auto H = cyclic_subgroup(*g, a);
      auto n = mul(mul(sub(alg_one(*g), alg_unit(*g, a)), alg_unit(*g, h)), tilde(H));
      CHECK(is_nilpotent(n));
      CHECK(nilpotent_by_traces(n));
    }
  }
}

TEST_CASE("1 + x is not nilpotent for nilpotent x != -1") {
  auto d8 = dihedral(8);
  int a = d8->generator("a"), b = d8->generator("b");
  auto n = mul(mul(sub(alg_one(*d8), alg_unit(*d8, b)), alg_unit(*d8, a)),
               tilde(cyclic_subgroup(*d8, b)));
  REQUIRE(is_nilpotent(n));
  CHECK_FALSE(is_nilpotent(add(alg_one(*d8), n)));
}

TEST_CASE("integrality and conjugation") {
  auto g = dihedral(8);
  auto x = alg_unit(*g, g->generator("a"), Rat(1, 2));
  CHECK_FALSE(is_integral(x));
  CHECK(is_integral(scale(x, 2)));
  auto y = conjugate(x, g->generator("b"));
  CHECK(y.c[g->inv(g->generator("a"))] == Rat(1, 2));
}

TEST_CASE("group mismatch is an error") {
  auto g1 = dihedral(8);
  auto g2 = cyclic(8);
  auto a = alg_one(*g1);
  auto b = alg_one(*g2);
  CHECK_THROWS_AS(add(a, b), group_error);
}
