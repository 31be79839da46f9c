#include "grouprings/families.hpp"
#include "grouprings/sl2z.hpp"

#include <doctest.h>

#include <random>

using namespace gring;

TEST_CASE("nilpotent 2x2 criterion") {
  CHECK(nilpotent2x2({0, 1, 0, 0}));
  CHECK(nilpotent2x2({2, -4, 1, -2}));
  CHECK_FALSE(nilpotent2x2({1, 0, 0, 1}));
  CHECK_FALSE(nilpotent2x2({0, 1, 1, 0}));
}

TEST_CASE("unipotent normal form: the anchored conjugator") {
  IntMat2 u{5, -4, 4, -3};
  auto nf = unipotent_normal_form(u);
  CHECK(nf.S == IntMat2{1, -2, 1, -1});
  CHECK(nf.m == -4);
}

TEST_CASE("unipotent normal form: identity and lower-triangular") {
  auto nf = unipotent_normal_form(IntMat2::identity());
  CHECK(nf.m == 0);
  auto nf2 = unipotent_normal_form({1, 0, 7, 1});
  CHECK(nf2.S == IntMat2{0, 1, -1, 0});
  CHECK(nf2.m == -7);
}

TEST_CASE("unipotent normal form: 500 randomized round trips") {
  std::mt19937_64 rng(2024);
  IntMat2 T{1, 1, 0, 1}, S{0, -1, 1, 0};
  int done = 0;
  while (done < 500) {
    long long k = (long long)(rng() % 41) - 20;
    if (k == 0) continue;
    IntMat2 u{1, k, 0, 1};
    IntMat2 w = IntMat2::identity();
    int len = 1 + (int)(rng() % 6);
    for (int i = 0; i < len; ++i) {
      w = w * (rng() % 2 ? T : S);
      if (rng() % 3 == 0) w = w * T;
    }
    u = w.inv_unimodular() * u * w;
    auto nf = unipotent_normal_form(u);
    CHECK(nf.S.det() == 1);
    IntMat2 c = nf.S.inv_unimodular() * u * nf.S;
    CHECK(c.a == 1);
    CHECK(c.d == 1);
    CHECK(c.c == 0);
    CHECK(boost::multiprecision::abs(nf.m) == boost::multiprecision::abs(Int(k)));
    // the congruence level of a unipotent divides its normal-form entry
    auto lv = congruence_level(u);
    CHECK_FALSE(lv.infinite);
    CHECK(nf.m % lv.level == 0);
    ++done;
  }
}

TEST_CASE("congruence level") {
  CHECK(congruence_level({5, -4, 4, -3}).level == 4);
  CHECK(congruence_level({1, 6, 0, 1}).level == 6);
  CHECK(congruence_level({0, -1, 1, 0}).level == 1);
  CHECK(congruence_level(IntMat2::identity()).infinite);
}

TEST_CASE("V_m membership") {
  for (int m : {2, 3, 4, 6}) CHECK(in_V(IntMat2::identity(), m));
  CHECK(in_V({5, -4, 4, -3}, 4));
  // parity violation: t1 = 1, t2 = 0
  CHECK_FALSE(in_V({1, 4, 0, 1}, 4));
  CHECK(in_V({1, 8, 0, 1}, 4));
  CHECK_FALSE(in_V({1, 1, 0, 1}, 4)); // not in Gamma(4) at all
}

TEST_CASE("triangle group finiteness rule") {
  for (int n = 1; n <= 5; ++n) CHECK(triangle_quotient_is_finite(n));
  for (int n : {6, 7, 12}) CHECK_FALSE(triangle_quotient_is_finite(n));
}

TEST_CASE("D8 embedding is a ring homomorphism on the component") {
  auto d8 = dihedral(8);
  int a = d8->generator("a"), b = d8->generator("b");
  auto phi = [&](int g) { return d8_embedding(alg_unit(*d8, g)); };
  CHECK(phi(a) == RatMat2{0, 1, -1, 0});
  CHECK(phi(b) == RatMat2{0, 1, 1, 0});
  CHECK(phi(d8->mul(a, b)) == phi(a) * phi(b));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) CHECK(phi(d8->mul(x, y)) == phi(x) * phi(y));
  // every group element lands in the congruence-characterized image
  for (int x = 0; x < 8; ++x) {
    auto m = phi(x);
    IntMat2 im{rat_num(m.a), rat_num(m.b), rat_num(m.c), rat_num(m.d)};
    CHECK(d8_image_member(im));
  }
  CHECK_FALSE(d8_image_member({1, 0, 0, 0}));
}

TEST_CASE("phi(ue) example matrix from the H-unit computation") {
  // (1+4, -4; 4, 1-4) has level 4 and lies in V_4
  IntMat2 m{5, -4, 4, -3};
  CHECK(congruence_level(m).level == 4);
  CHECK(in_V(m, 4));
}
