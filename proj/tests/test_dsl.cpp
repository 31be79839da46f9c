#include "grouprings/cache.hpp"
#include "grouprings/dsl.hpp"
#include "grouprings/report.hpp"

#include <doctest.h>

using namespace gring;

TEST_CASE("parse basics") {
  auto e = parse_expr("G(2,2,3)");
  CHECK(e->kind == GroupExpr::Kind::Call);
  CHECK(e->head == "G");
  CHECK(e->args == std::vector<long long>{2, 2, 3});
  auto mc = parse_expr("MC(17, 8, 16)");
  auto g = build_group(*mc);
  CHECK(g->order == 136);
  // 16 = -1 mod 17: inversion action
  int a = g->generator("a"), b = g->generator("b");
  CHECK(g->conj(a, b) == g->inv(a));
}

TEST_CASE("parse rejects bad parameters with positions") {
  CHECK_THROWS_AS(parse_expr("Q(6)"), parse_error);
  CHECK_THROWS_AS(parse_expr("D(7)"), parse_error);
  CHECK_THROWS_AS(parse_expr("MC(7,9,3)"), parse_error);
  CHECK_THROWS_AS(parse_expr("Z(5)"), parse_error);
  CHECK_THROWS_AS(parse_expr("D(8) y C(2)"), parse_error);
  try {
    parse_expr("Q(6)");
  } catch (const parse_error& e) {
    CHECK(e.offset == 0);
    CHECK_FALSE(e.expected.empty());
  }
}

TEST_CASE("products and the Q8xQ8 atom") {
  auto p = parse_expr("Q(8) x Q(8)");
  CHECK(p->kind == GroupExpr::Kind::Product);
  CHECK(build_group(*p)->order == 64);
  auto atom = parse_expr("Q8xQ8");
  CHECK(atom->kind == GroupExpr::Kind::Atom);
  CHECK(build_group(*atom)->order == 64);
  auto tight = parse_expr("D(8)xC(2)");
  CHECK(build_group(*tight)->order == 16);
  auto chain = parse_expr("C(2)xC(2)xC(2)");
  CHECK(build_group(*chain)->order == 8);
}

TEST_CASE("print/parse round trip") {
  for (const char* s : {"G(2,2,3)", "Q8xQ8", "D(8) x C(2)", "MC(17,8,16)", "SL2(3)",
                        "C(2) x C(2) x C(3)", "SG64_135"}) {
    auto e = parse_expr(s);
    auto printed = print_expr(*e);
    auto e2 = parse_expr(printed);
    CHECK(print_expr(*e2) == printed);
  }
}

TEST_CASE("analysis record is deterministic and serializes exact rationals") {
  auto g = dihedral(8);
  auto lat = all_subgroups(*g);
  auto r1 = analyze_group("D(8)", *g, lat);
  auto r2 = analyze_group("D(8)", *g, lat);
  CHECK(analysis_to_json(r1).dump() == analysis_to_json(r2).dump());
  auto j = analysis_to_json(r1);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["order"] == 8);
  CHECK(j["properties"]["nd"]["status"] == "Holds");
  // exact rational serialization of an idempotent
  auto ej = alg_to_json(hat(full_subgroup(*g)));
  CHECK(ej["1"] == "1/8");
}

TEST_CASE("result cache round trip and corruption guard") {
  setenv("GROUPRINGS_CACHE_DIR", "/tmp/grouprings-test-cache", 1);
  ResultCache cache(true);
  json j;
  j["fingerprint"] = "abc";
  j["artifact_version"] = kArtifactVersion;
  j["payload"] = 42;
  cache.store("abc", "analyze", j);
  auto hit = cache.load("abc", "analyze");
  REQUIRE(hit.has_value());
  CHECK((*hit)["payload"] == 42);
  // fingerprint mismatch is treated as a miss
  cache.store("def", "analyze", j);
  CHECK_FALSE(cache.load("def", "analyze").has_value());
  unsetenv("GROUPRINGS_CACHE_DIR");
}
