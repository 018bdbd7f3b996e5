#include <doctest.h>

#include "catalog.hpp"
#include "constructions.hpp"

using namespace pgx;
using namespace pgx::testcat;

namespace {

GroupBundle trivial_bundle_over(Idx m_count, const FiniteGroup& g) {
  return from_group_action(g, m_count, trivial_action(m_count, g)).bundle;
}

// Bundle with a Z/2 fiber over point 0 and a Z/3 fiber over point 1.
GroupBundle mixed_fiber_bundle() {
  GroupBundle b;
  b.base = 2;
  b.size = 5;
  b.pi = {0, 0, 1, 1, 1};
  b.unit = {0, 2};
  b.inv = {0, 1, 2, 4, 3};
  b.mul = Table2(5, 5);
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup z3 = cyclic_group(3);
  for (Idx a = 0; a < 2; ++a)
    for (Idx c = 0; c < 2; ++c) b.mul.at(a, c) = z2.mul.at(a, c);
  for (Idx a = 0; a < 3; ++a)
    for (Idx c = 0; c < 3; ++c) b.mul.at(2 + a, 2 + c) = 2 + z3.mul.at(a, c);
  return b;
}

}  // namespace

TEST_CASE("z3 multiplication table is a group") {
  Report r = validate_group(cyclic_group(3));
  CHECK(r.ok());
}

TEST_CASE("forced mul(1,1)=1 in z3 is rejected with a replayable witness") {
  FiniteGroup g = cyclic_group(3);
  g.mul.at(1, 1) = 1;
  Report r = validate_group(g);
  REQUIRE_FALSE(r.ok());
  bool replayed = false;
  for (const auto& v : r.violations) {
    if (v.rule == "group-assoc") {
      Idx a = v.witness[0], b = v.witness[1], c = v.witness[2];
      CHECK(g.mul.at(g.mul.at(a, b), c) != g.mul.at(a, g.mul.at(b, c)));
      replayed = true;
    } else if (v.rule == "group-inv") {
      Idx a = v.witness[0];
      CHECK((g.mul.at(a, g.inv[a]) != g.id || g.mul.at(g.inv[a], a) != g.id));
      replayed = true;
    }
  }
  CHECK(replayed);
}

TEST_CASE("order-1 table is a group") {
  CHECK(validate_group(cyclic_group(1)).ok());
}

TEST_CASE("witness collection respects the cap") {
  FiniteGroup g = cyclic_group(4);
  g.mul.at(1, 1) = 1;  // wrecks many triples
  Report all = validate_group(g);
  Report capped = validate_group(g, {.max_witnesses = 2});
  CHECK(all.violations.size() > 2);
  CHECK(capped.violations.size() == 2);
  CHECK(capped.violations[0] == all.violations[0]);
  CHECK(capped.violations[1] == all.violations[1]);
}

TEST_CASE("group shape mismatch is malformed input, not a violation") {
  FiniteGroup g = cyclic_group(3);
  g.inv.pop_back();
  CHECK_THROWS_AS(validate_group(g), Error);
}

TEST_CASE("trivial bundle over three points is a group bundle with isomorphic fibers") {
  GroupBundle b = trivial_bundle_over(3, cyclic_group(3));
  Report r = validate_group_bundle(b);
  CHECK(r.ok());
  CHECK(r.stats.at("fibers_isomorphic") == 1);
}

TEST_CASE("bundle with z2 and z3 fibers is accepted but flagged") {
  Report r = validate_group_bundle(mixed_fiber_bundle());
  CHECK(r.ok());
  CHECK(r.stats.at("fibers_isomorphic") == 0);
}

TEST_CASE("bundle with a broken unit section reports the base point") {
  GroupBundle b = trivial_bundle_over(3, cyclic_group(3));
  b.unit[1] = b.unit[0];  // unit of fiber 1 now lives over point 0
  Report r = validate_group_bundle(b);
  REQUIRE_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.violations)
    if (v.rule == "bundle-unit-section" && v.witness == std::vector<Idx>{1})
      found = true;
  CHECK(found);
}

TEST_CASE("every fiber of an accepted bundle is itself a valid group") {
  GroupBundle b = mixed_fiber_bundle();
  REQUIRE(validate_group_bundle(b).ok());
  for (Idx m = 0; m < b.base; ++m) CHECK(validate_group(b.fiber_group(m)).ok());
}

TEST_CASE("action groupoid of z3 on itself is a groupoid") {
  Groupoid g = oracle_action_groupoid(cyclic_group(3), 3, addition_action(3));
  Report r = validate_groupoid(g);
  CHECK(r.ok());
  // 9 arrows, 3 composable partners at each end: 27 pairs, 81 triples.
  CHECK(r.stats.at("triples") == 81);
}

TEST_CASE("a finite group is a one-object groupoid") {
  FiniteGroup g = symmetric3();
  Groupoid one;
  one.base = 1;
  one.arrows = g.n;
  one.alpha.assign(g.n, 0);
  one.beta.assign(g.n, 0);
  one.mul = g.mul;
  one.unit = {g.id};
  one.inv = g.inv;
  CHECK(validate_groupoid(one).ok());
}

TEST_CASE("pair groupoid with corrupted inv fails invertibility") {
  // Pair groupoid on two points: arrows (i, j), alpha = i, beta = j.
  Groupoid g;
  g.base = 2;
  g.arrows = 4;
  auto id_of = [](Idx i, Idx j) { return i * 2 + j; };
  g.alpha = {0, 0, 1, 1};
  g.beta = {0, 1, 0, 1};
  g.unit = {id_of(0, 0), id_of(1, 1)};
  g.inv = {id_of(0, 0), id_of(1, 0), id_of(0, 1), id_of(1, 1)};
  g.mul = Table2(4, 4);
  for (Idx i = 0; i < 2; ++i)
    for (Idx j = 0; j < 2; ++j)
      for (Idx k = 0; k < 2; ++k) g.mul.at(id_of(i, j), id_of(j, k)) = id_of(i, k);
  REQUIRE(validate_groupoid(g).ok());

  g.inv[id_of(0, 1)] = id_of(0, 1);
  Report r = validate_groupoid(g);
  REQUIRE_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.violations)
    if (v.rule == "gpd-invertibility") found = true;
  CHECK(found);
}

TEST_CASE("composable pairs over a one-point base are all pairs") {
  Quiver q{1, 4, {0, 0, 0, 0}, {0, 0, 0, 0}};
  CHECK(composable_pairs(q).size() == 16);
}

TEST_CASE("action quiver of z3 on z3 has 27 composable pairs") {
  PostGroupoid p = instance_a();
  Quiver q{p.base(), p.size(), p.bundle.pi, p.phi};
  auto pairs = composable_pairs(q);
  CHECK(pairs.size() == 27);
  CHECK(pairs == oracle_composable_pairs(q));
}

TEST_CASE("quiver whose beta image misses the alpha image composes nothing") {
  Quiver q{3, 2, {0, 0}, {1, 2}};  // arrows start only at 0, end only at 1, 2
  CHECK(composable_pairs(q).empty());
}

TEST_CASE("composable pairs agree with the naive double loop across the catalog") {
  for (const auto& inst : full_catalog()) {
    Quiver q{inst.post.base(), inst.post.size(), inst.post.bundle.pi, inst.post.phi};
    auto pairs = composable_pairs(q);
    CHECK(pairs == oracle_composable_pairs(q));
    for (auto [x, y] : pairs) CHECK(q.beta[x] == q.alpha[y]);
  }
}

TEST_CASE("groupoid associativity holds on every composable triple of accepted inputs") {
  Groupoid g = oracle_action_groupoid(symmetric3(), 3, s3_natural_action());
  REQUIRE(validate_groupoid(g).ok());
  for (Idx x = 0; x < g.arrows; ++x)
    for (Idx y = 0; y < g.arrows; ++y) {
      if (g.beta[x] != g.alpha[y]) continue;
      for (Idx z = 0; z < g.arrows; ++z) {
        if (g.beta[y] != g.alpha[z]) continue;
        CHECK(g.mul.at(g.mul.at(x, y), z) == g.mul.at(x, g.mul.at(y, z)));
      }
    }
}

TEST_CASE("non-surjective source map is a note when requested") {
  Groupoid g = oracle_action_groupoid(cyclic_group(2), 2, addition_action(2));
  g.base = 3;  // extra base point nothing reaches
  g.unit.push_back(g.unit[0]);
  REQUIRE_FALSE(validate_groupoid(g).ok());
  CheckOptions opts;
  opts.surjectivity_is_violation = false;
  Report r = validate_groupoid(g, opts);
  bool surjectivity_violation = false;
  for (const auto& v : r.violations)
    if (v.rule == "gpd-surjective") surjectivity_violation = true;
  CHECK_FALSE(surjectivity_violation);
  CHECK_FALSE(r.notes.empty());
}
