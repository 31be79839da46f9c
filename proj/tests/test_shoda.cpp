#include "grouprings/families.hpp"
#include "grouprings/shoda.hpp"

#include <doctest.h>

#include <map>

using namespace gring;

namespace {

Subgroup find_cyclic(const CayleyGroup& g, int gen) { return cyclic_subgroup(g, gen); }

// brute-force oracle for the 2-adic Hilbert symbol (-1,-1): the form
// x^2+y^2+z^2 has no nontrivial zero mod 8 with not all of x,y,z even
bool quat_m1m1_anisotropic_mod8() {
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int z = 0; z < 8; ++z) {
        if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
        if ((x * x + y * y + z * z) % 8 == 0) return false;
      }
  return true;
}

std::multiset<long long> dims_of(const WedderburnReport& rep) {
  std::multiset<long long> d;
  for (auto& c : rep.components) d.insert(c.dim_q);
  return d;
}

} // namespace

TEST_CASE("epsilon basics") {
  auto c4 = cyclic(4);
  int g = c4->generator("g");
  auto full = full_subgroup(*c4);
  CHECK(epsilon(*c4, full, full) == hat(full));
  // epsilon(C4, 1) = (1 - g^2)/2
  AlgElement e = epsilon(*c4, full_subgroup(*c4), trivial_subgroup(*c4));
  AlgElement expect(*c4);
  expect.c[0] = Rat(1, 2);
  expect.c[c4->pow(g, 2)] = Rat(-1, 2);
  CHECK(e == expect);
  auto c2 = cyclic(2);
  AlgElement e2 = epsilon(*c2, full_subgroup(*c2), trivial_subgroup(*c2));
  AlgElement ex2(*c2);
  ex2.c[0] = Rat(1, 2);
  ex2.c[1] = Rat(-1, 2);
  CHECK(e2 == ex2);
}

TEST_CASE("e(G,H,K) examples") {
  auto d8 = dihedral(8);
  int a = d8->generator("a");
  auto pe = e_from_pair(*d8, find_cyclic(*d8, a), trivial_subgroup(*d8));
  AlgElement expect(*d8);
  expect.c[0] = Rat(1, 2);
  expect.c[d8->pow(a, 2)] = Rat(-1, 2);
  CHECK(pe.e == expect);
  CHECK(is_central(pe.e));
  CHECK(is_idempotent(pe.e));
  CHECK(rank_right_mul(pe.e) == 4);

  auto q8 = generalized_quaternion(8);
  int i = q8->generator("a");
  auto pq = e_from_pair(*q8, find_cyclic(*q8, i), trivial_subgroup(*q8));
  AlgElement eq(*q8);
  eq.c[0] = Rat(1, 2);
  eq.c[q8->pow(i, 2)] = Rat(-1, 2); // i^2 = -1
  CHECK(pq.e == eq);
  CHECK(rank_right_mul(pq.e) == 4);

  // (G,G,G) gives hat(G)
  auto full = full_subgroup(*d8);
  auto pg = e_from_pair(*d8, full, full);
  CHECK(pg.e == hat(full));
}

TEST_CASE("strong Shoda pair detection") {
  auto d8 = dihedral(8);
  CHECK(is_strong_shoda_pair(*d8, find_cyclic(*d8, d8->generator("a")), trivial_subgroup(*d8)));
  auto full = full_subgroup(*d8);
  CHECK(is_strong_shoda_pair(*d8, full, full));
  // (G, 1) is not a strong Shoda pair for nonabelian G: G/1 is not cyclic
  CHECK_FALSE(is_strong_shoda_pair(*d8, full, trivial_subgroup(*d8)));
}

TEST_CASE("stabilizer of epsilon equals the normalizer of K") {
  auto s4 = symmetric(4);
  auto lat = all_subgroups(*s4);
  for (auto& sp : enumerate_ssp(*s4, lat)) {
    CHECK(sp.stabilizer == normalizer(*s4, sp.k));
  }
}

TEST_CASE("SSP counts") {
  auto c4 = cyclic(4);
  CHECK(enumerate_ssp(*c4, all_subgroups(*c4)).size() == 3);
  auto q8 = generalized_quaternion(8);
  CHECK(enumerate_ssp(*q8, all_subgroups(*q8)).size() == 5);
  auto g223 = gpmn(2, 2, 3);
  auto pairs = enumerate_ssp(*g223, all_subgroups(*g223));
  CHECK(pairs.size() == (size_t)cyclic_subgroup_class_count(*g223));
  CHECK(pairs.size() == 11);
}

TEST_CASE("pci_set census: D8, Q8, A4") {
  auto d8 = dihedral(8);
  auto rd = pci_set(*d8, all_subgroups(*d8));
  CHECK(rd.covered);
  CHECK(dims_of(rd) == std::multiset<long long>{1, 1, 1, 1, 4});
  int mat = 0;
  for (auto& c : rd.components) mat += c.classification == Classification::Matrix;
  CHECK(mat == 1);
  CHECK(rd.matrix_count_min == 1);
  CHECK(rd.matrix_count_max == 1);

  auto q8 = generalized_quaternion(8);
  auto rq = pci_set(*q8, all_subgroups(*q8));
  CHECK(rq.covered);
  CHECK(dims_of(rq) == std::multiset<long long>{1, 1, 1, 1, 4});
  int divq = 0;
  for (auto& c : rq.components) divq += c.classification == Classification::DivisionQuaternionOverQ;
  CHECK(divq == 1);
  CHECK(rq.matrix_count_max == 0);

  auto a4 = alternating(4);
  auto ra = pci_set(*a4, all_subgroups(*a4));
  CHECK(ra.covered);
  CHECK(dims_of(ra) == std::multiset<long long>{1, 2, 9});
  int mata = 0;
  for (auto& c : ra.components) mata += c.classification == Classification::Matrix;
  CHECK(mata == 1);
}

TEST_CASE("pci_set: SL(2,3) is not covered but has at least two matrix components") {
  auto g = sl2(3);
  auto rep = pci_set(*g, all_subgroups(*g));
  CHECK_FALSE(rep.covered);
  CHECK(rep.matrix_count_min >= 2);
  CHECK(rep.matrix_count_min <= rep.matrix_count_max);
  CHECK(dims_of(rep) == std::multiset<long long>{1, 2, 9});
  CHECK(rep.residual_dim == 12);
}

TEST_CASE("S3 metacyclic classifies as a split matrix component") {
  auto s3 = metacyclic(3, 2, 2);
  auto rep = pci_set(*s3, all_subgroups(*s3));
  CHECK(rep.covered);
  bool found = false;
  for (auto& c : rep.components)
    if (c.dim_q == 4) {
      CHECK(c.classification == Classification::Matrix);
      found = true;
      // independent nilpotent certificate: (1-b) a <b>~ is nonzero nilpotent
      int a = s3->generator("a"), b = s3->generator("b");
      auto n = mul(mul(sub(alg_one(*s3), alg_unit(*s3, b)), alg_unit(*s3, a)),
                   tilde(cyclic_subgroup(*s3, b)));
      CHECK(is_nilpotent(n));
      CHECK_FALSE(n.is_zero());
      CHECK_FALSE(mul(n, c.idempotent).is_zero());
    }
  CHECK(found);
}

TEST_CASE("orthogonality, coverage and dimension invariants on small groups") {
  for (auto& g : {dihedral(8), generalized_quaternion(8), symmetric(3), alternating(4),
                  gpmn(2, 2, 3), metacyclic(7, 9, 2)}) {
    auto lat = all_subgroups(*g);
    auto rep = pci_set(*g, lat);
    AlgElement sum = alg_zero(*g);
    long long dims = 0;
    for (size_t i = 0; i < rep.components.size(); ++i) {
      auto& ci = rep.components[i];
      CHECK(is_idempotent(ci.idempotent));
      CHECK(is_central(ci.idempotent));
      for (size_t j = i + 1; j < rep.components.size(); ++j)
        CHECK(mul(ci.idempotent, rep.components[j].idempotent).is_zero());
      CHECK(ci.dim_q == rank_right_mul(ci.idempotent));
      sum = add(sum, ci.idempotent);
      dims += ci.dim_q;
    }
    CHECK(rep.covered);
    CHECK(sum == alg_one(*g));
    CHECK(dims == g->order);
    CHECK((int)rep.components.size() == rep.cyclic_class_count);
  }
}

TEST_CASE("epsilon(G,N) family is orthogonal and sums to 1") {
  for (auto& g : {dihedral(8), symmetric(4), sl2(3), gpmn(2, 2, 3)}) {
    auto lat = all_subgroups(*g);
    auto full = full_subgroup(*g);
    std::vector<AlgElement> eps;
    for (auto& n : normal_subgroups(*g, lat)) {
      auto e = epsilon(*g, full, n);
      if (!e.is_zero()) eps.push_back(e);
    }
    AlgElement sum = alg_zero(*g);
    for (size_t i = 0; i < eps.size(); ++i) {
      for (size_t j = i + 1; j < eps.size(); ++j) CHECK(mul(eps[i], eps[j]).is_zero());
      sum = add(sum, eps[i]);
    }
    CHECK(sum == alg_one(*g));
  }
}

TEST_CASE("component kernels") {
  auto q8 = generalized_quaternion(8);
  auto rep = pci_set(*q8, all_subgroups(*q8));
  for (auto& c : rep.components)
    if (c.dim_q == 4) CHECK(c.kernel.order() == 1); // the quaternion component is faithful
  // e = hat(G) has kernel G
  CHECK(component_kernel(hat(full_subgroup(*q8))).order() == 8);
}

TEST_CASE("hilbert symbols") {
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), 0) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), 2) == -1);
  CHECK(quat_m1m1_anisotropic_mod8()); // oracle behind the (-1,-1)_2 value
  CHECK_FALSE(quaternion_splits_over_Q(Rat(-1), Rat(-1)));
  CHECK(quaternion_splits_over_Q(Rat(-1), Rat(1)));
  CHECK(quaternion_splits_over_Q(Rat(-3), Rat(1)));
  CHECK_FALSE(quaternion_splits_over_Q(Rat(-3), Rat(-1)));
  CHECK(hilbert_symbol(Rat(2), Rat(3), 5) == 1);
  CHECK(hilbert_symbol(Rat(5), Rat(3), 5) == -1); // 3 is not a square mod 5
  // product formula spot check: product of local symbols over all places is 1
  for (auto [x, y] : {std::pair<long, long>{-1, -1}, {2, 3}, {-3, 5}, {6, -10}}) {
    int prod = hilbert_symbol(Rat(x), Rat(y), 0) * hilbert_symbol(Rat(x), Rat(y), 2);
    for (Int q : {Int(3), Int(5), Int(7), Int(11), Int(13)})
      prod *= hilbert_symbol(Rat(x), Rat(y), q);
    CHECK(prod == 1);
  }
}

TEST_CASE("dk counts by epsilon") {
  auto s4 = symmetric(4);
  auto d = dk_counts(*s4, all_subgroups(*s4));
  CHECK_FALSE(d.verdict);
  auto d8 = dihedral(8);
  CHECK(dk_counts(*d8, all_subgroups(*d8)).verdict);
}
