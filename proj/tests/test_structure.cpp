#include "grouprings/families.hpp"
#include "grouprings/iso.hpp"
#include "grouprings/structure.hpp"

#include <doctest.h>

#include <set>

using namespace gring;

namespace {

// oracle: all subgroups of a tiny group by subset enumeration
int brute_subgroup_count(const CayleyGroup& g) {
  REQUIRE(g.order <= 16);
  int count = 0;
  for (unsigned mask = 1; mask < (1u << g.order); ++mask) {
    if (!(mask & 1)) continue; // must contain identity
    bool closed = true;
    for (int i = 0; i < g.order && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      if (!(mask >> g.inv(i) & 1)) { closed = false; break; }
      for (int j = 0; j < g.order; ++j) {
        if (!(mask >> j & 1)) continue;
        if (!(mask >> g.mul(i, j) & 1)) { closed = false; break; }
      }
    }
    if (closed) ++count;
  }
  return count;
}

Subgroup klein_four(const CayleyGroup& s4, const std::vector<Subgroup>& lat) {
  for (auto& s : lat)
    if (s.order() == 4 && is_normal(s4, s)) return s;
  REQUIRE(false);
  return trivial_subgroup(s4);
}

} // namespace

TEST_CASE("subgroup counts against the subset oracle") {
  auto c6 = cyclic(6);
  CHECK(all_subgroups(*c6).size() == 4);
  CHECK(brute_subgroup_count(*c6) == 4);
  auto q8 = generalized_quaternion(8);
  auto lat = all_subgroups(*q8);
  CHECK(lat.size() == 6);
  CHECK(brute_subgroup_count(*q8) == 6);
  auto d8 = dihedral(8);
  CHECK(all_subgroups(*d8).size() == (size_t)brute_subgroup_count(*d8));
}

TEST_CASE("S4 has 30 subgroups") {
  auto s4 = symmetric(4);
  CHECK(all_subgroups(*s4).size() == 30);
}

TEST_CASE("core of a non-normal subgroup of S4 is trivial") {
  auto s4 = symmetric(4);
  // <(12)>: a transposition = an involution with 6 conjugates
  int t = -1;
  for (int x = 1; x < s4->order && t < 0; ++x) {
    if (s4->element_order(x) != 2) continue;
    std::set<int> orb;
    for (int g = 0; g < s4->order; ++g) orb.insert(s4->conj(x, g));
    if (orb.size() == 6) t = x;
  }
  REQUIRE(t >= 0);
  Subgroup h = cyclic_subgroup(*s4, t);
  // oracle: intersect all conjugates directly
  std::set<int> inter(h.elems.begin(), h.elems.end());
  for (int g = 0; g < s4->order; ++g) {
    auto cj = conjugate_subgroup(h, g);
    std::set<int> next;
    for (int x : cj.elems)
      if (inter.count(x)) next.insert(x);
    inter = next;
  }
  CHECK(inter == std::set<int>{0});
  CHECK(core(*s4, h).order() == 1);
  // core of a normal subgroup is itself
  auto lat = all_subgroups(*s4);
  auto v4 = klein_four(*s4, lat);
  CHECK(core(*s4, v4) == v4);
}

TEST_CASE("center of G(2,2,3) is <a^2> x <b^2>") {
  auto g = gpmn(2, 2, 3);
  auto z = center(*g);
  int a = g->generator("a"), b = g->generator("b");
  auto expect = subgroup_closure(*g, {g->pow(a, 2), g->pow(b, 2)});
  CHECK(z == expect);
  CHECK(z.order() == 8);
}

TEST_CASE("quotients of G(2,2,3)") {
  auto g = gpmn(2, 2, 3);
  int a = g->generator("a"), b = g->generator("b");
  auto gprime = derived_subgroup(*g);
  CHECK(gprime == cyclic_subgroup(*g, g->pow(a, 2)));
  auto q1 = quotient(*g, gprime);
  CHECK(q1.quotient->order == 16);
  CHECK(q1.quotient->is_abelian());
  CHECK(is_isomorphic(*q1.quotient, *direct_product(cyclic(2), cyclic(8))));
  auto q2 = quotient(*g, cyclic_subgroup(*g, g->pow(b, 2)));
  CHECK(is_isomorphic(*q2.quotient, *dihedral(8)));
  auto q3 = quotient(*g, cyclic_subgroup(*g, g->mul(g->pow(a, 2), g->pow(b, 2))));
  CHECK(is_isomorphic(*q3.quotient, *generalized_quaternion(8)));
  auto q4 = quotient(*g, full_subgroup(*g));
  CHECK(q4.quotient->order == 1);
}

TEST_CASE("projection is a homomorphism (exhaustive)") {
  auto s4 = symmetric(4);
  auto lat = all_subgroups(*s4);
  auto v4 = klein_four(*s4, lat);
  auto q = quotient(*s4, v4);
  CHECK(is_isomorphic(*q.quotient, *symmetric(3)));
  for (int x = 0; x < s4->order; ++x)
    for (int y = 0; y < s4->order; ++y)
      CHECK(q.projection[s4->mul(x, y)] == q.quotient->mul(q.projection[x], q.projection[y]));
}

TEST_CASE("minimal overnormals") {
  auto c4 = cyclic(4);
  auto m = minimal_overnormals(*c4, trivial_subgroup(*c4));
  CHECK(m.size() == 1);
  CHECK(m[0].order() == 2);
  auto q8 = generalized_quaternion(8);
  auto mq = minimal_overnormals(*q8, trivial_subgroup(*q8));
  CHECK(mq.size() == 1);
  CHECK(mq[0].order() == 2);
  auto v4 = direct_product(cyclic(2), cyclic(2));
  CHECK(minimal_overnormals(*v4, trivial_subgroup(*v4)).size() == 3);
}

TEST_CASE("predicates") {
  CHECK(is_nilpotent_group(*dihedral(8)));
  CHECK_FALSE(is_nilpotent_group(*symmetric(3)));
  CHECK(is_solvable_group(*symmetric(4)));
  CHECK_FALSE(is_solvable_group(*alternating(5)));
  CHECK(is_supersolvable_group(*dihedral(8)));
  CHECK(is_supersolvable_group(*metacyclic(7, 9, 2)));
  CHECK_FALSE(is_supersolvable_group(*symmetric(4)));
  CHECK_FALSE(is_supersolvable_group(*alternating(4)));
}

TEST_CASE("dedekind: direct test and classification agree") {
  auto q8c2 = direct_product(generalized_quaternion(8), cyclic(2));
  auto lat = all_subgroups(*q8c2);
  CHECK(is_dedekind_direct(*q8c2, lat));
  CHECK(is_dedekind_classification(*q8c2, lat));
  for (auto& g : {dihedral(8), symmetric(4), generalized_quaternion(16), cyclic(12),
                  generalized_quaternion(8), q8xq8(),
                  direct_product(generalized_quaternion(8), cyclic(3))}) {
    auto l = all_subgroups(*g);
    CHECK(is_dedekind_direct(*g, l) == is_dedekind_classification(*g, l));
  }
}

TEST_CASE("conjugacy class equation") {
  for (auto& g : {symmetric(4), gpmn(2, 2, 3), sl2(3)}) {
    auto classes = conjugacy_classes(*g);
    size_t total = 0;
    for (auto& c : classes) {
      total += c.size();
      CHECK(g->order % c.size() == 0);
    }
    CHECK(total == (size_t)g->order);
  }
}

TEST_CASE("cyclic subgroup class counts") {
  CHECK(cyclic_subgroup_class_count(*generalized_quaternion(8)) == 5);
  CHECK(cyclic_subgroup_class_count(*gpmn(2, 2, 3)) == 11);
  CHECK(cyclic_subgroup_class_count(*sl2(3)) == 5);
  CHECK(cyclic_subgroup_class_count(*cyclic(6)) == 4);
}

TEST_CASE("metacyclic derived subgroup has order m/gcd(m, r-1) for prime m") {
  auto g = metacyclic(7, 9, 2);
  CHECK(derived_subgroup(*g).order() == 7 / std::gcd(7LL, 1LL));
  auto h = metacyclic(17, 8, 16);
  CHECK(derived_subgroup(*h).order() == 17);
}
