#include <doctest.h>

#include "catalog.hpp"
#include "sections.hpp"

using namespace pgx;
using namespace pgx::testcat;

TEST_CASE("action post-groupoid of z3 on z3 satisfies every axiom") {
  Report r = validate_post_groupoid(instance_a());
  CHECK(r.ok());
  CHECK(r.stats.at("pairs") == 27);
  CHECK(r.stats.at("triples") == 81);
}

TEST_CASE("redirected tri entry breaks left bijectivity or the composition axiom") {
  PostGroupoid p = instance_a();
  REQUIRE(p.tri.at(1, 5) == 2);  // (0,1) |> (1,2) = (0,2)
  p.tri.at(1, 5) = 1;
  Report r = validate_post_groupoid(p);
  REQUIRE_FALSE(r.ok());
  bool relevant = false;
  for (const auto& v : r.violations) {
    if (v.rule == "post-left-bijective" && v.witness.size() == 3) {
      relevant = true;
      CHECK(p.tri.at(v.witness[0], v.witness[1]) ==
            p.tri.at(v.witness[0], v.witness[2]));
    }
    if (v.rule == "post-axiom-iii") relevant = true;
  }
  CHECK(relevant);
}

TEST_CASE("one-point z2 with trivial tri is a post structure") {
  CHECK(validate_post_groupoid(trivial_post_group(cyclic_group(2))).ok());
}

TEST_CASE("whole catalog validates") {
  for (const auto& inst : full_catalog()) {
    INFO(inst.name);
    CHECK(validate_post_groupoid(inst.post).ok());
  }
}

TEST_CASE("unit identities hold on every valid instance") {
  for (const auto& inst : full_catalog()) {
    INFO(inst.name);
    CHECK(check_unit_identities(inst.post).ok());
  }
}

TEST_CASE("left multiplications are group isomorphisms between fibers") {
  for (const auto& inst : full_catalog()) {
    INFO(inst.name);
    const PostGroupoid& p = inst.post;
    auto fibers = p.bundle.fibers();
    for (Idx x = 0; x < p.size(); ++x) {
      const auto& domain = fibers[p.phi[x]];
      std::vector<char> seen(p.size(), 0);
      for (Idx d : domain) {
        Idx image = p.tri_req(x, d);
        CHECK(p.bundle.pi[image] == p.bundle.pi[x]);
        CHECK_FALSE(seen[image]);
        seen[image] = 1;
      }
      for (Idx d1 : domain)
        for (Idx d2 : domain)
          CHECK(p.tri_req(x, p.bundle.mul_req(d1, d2)) ==
                p.bundle.mul_req(p.tri_req(x, d1), p.tri_req(x, d2)));
    }
  }
}

TEST_CASE("corrupted unit pair fails the unit identity oracle") {
  PostGroupoid p = instance_a();
  REQUIRE(check_unit_identities(p).ok());
  REQUIRE(p.tri.at(1, 3) == 0);  // (0,1) |> (1,0) = (0,0)
  p.tri.at(1, 3) = 1;
  Report r = check_unit_identities(p);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].rule == "post-unit-right");
  CHECK(r.violations[0].witness == std::vector<Idx>{1});
}

TEST_CASE("identity map is a post-groupoid homomorphism") {
  PostGroupoid p = instance_a();
  std::vector<Idx> psi(p.size());
  for (Idx i = 0; i < p.size(); ++i) psi[i] = i;
  CHECK(check_post_homomorphism(p, p, psi).ok());
}

TEST_CASE("mod-2 collapse of M x Z4 onto M x Z2 over the trivial action") {
  FiniteGroup z4 = cyclic_group(4);
  FiniteGroup z2 = cyclic_group(2);
  PostGroupoid p = from_group_action(z4, 2, trivial_action(2, z4));
  PostGroupoid q = from_group_action(z2, 2, trivial_action(2, z2));
  std::vector<Idx> psi(p.size());
  for (Idx m = 0; m < 2; ++m)
    for (Idx g = 0; g < 4; ++g) psi[m * 4 + g] = m * 2 + g % 2;
  CHECK(check_post_homomorphism(p, q, psi).ok());
}

TEST_CASE("map breaking phi compatibility is rejected") {
  PostGroupoid p = instance_a();
  std::vector<Idx> psi(p.size());
  for (Idx i = 0; i < p.size(); ++i) psi[i] = i;
  psi[1] = 2;  // same fiber, different phi
  Report r = check_post_homomorphism(p, p, psi);
  REQUIRE_FALSE(r.ok());
  bool phi_broken = false;
  for (const auto& v : r.violations)
    if (v.rule == "hom-phi" && v.witness == std::vector<Idx>{1}) phi_broken = true;
  CHECK(phi_broken);
}

TEST_CASE("psi must be total") {
  PostGroupoid p = instance_a();
  std::vector<Idx> psi(p.size() - 1, 0);
  CHECK_THROWS_AS(check_post_homomorphism(p, p, psi), Error);
}

TEST_CASE("section algebra of the z2 instance") {
  PostGroupoid p = instance_d();
  SectionAlgebra s = section_algebra(p);
  REQUIRE(s.sections.size() == 4);

  // Bisections are exactly the two constant sections.
  CHECK(s.bisection_mask == std::vector<char>{1, 0, 0, 1});
  CHECK(s.sections[0] == std::vector<Idx>{0, 2});
  CHECK(s.sections[3] == std::vector<Idx>{1, 3});

  Report r = validate_section_algebra(s);
  CHECK(r.ok());
  CHECK(r.stats.at("sections") == 4);
  CHECK(r.stats.at("bisections") == 2);

  // The section chosen as (0, 1) in fiber coordinates has a non-bijective
  // left multiplication: both output components depend only on sigma(0).
  auto row_bijective = [&](Idx i) {
    std::vector<char> seen(4, 0);
    for (Idx j = 0; j < 4; ++j) {
      if (seen[s.tri.at(i, j)]) return false;
      seen[s.tri.at(i, j)] = 1;
    }
    return true;
  };
  CHECK(s.sections[1] == std::vector<Idx>{0, 3});
  CHECK_FALSE(row_bijective(1));
  CHECK(row_bijective(0));
  CHECK(row_bijective(3));
}

TEST_CASE("one-point base recovers the group as its own section algebra") {
  FiniteGroup g = cyclic_group(3);
  PostGroupoid p = trivial_post_group(g);
  SectionAlgebra s = section_algebra(p);
  REQUIRE(s.sections.size() == 3);
  for (Idx i = 0; i < 3; ++i) {
    CHECK(s.sections[i] == std::vector<Idx>{i});
    for (Idx j = 0; j < 3; ++j) {
      CHECK(s.mul.at(i, j) == g.mul.at(i, j));
      CHECK(s.tri.at(i, j) == j);
    }
  }
  CHECK(validate_section_algebra(s).ok());
}

TEST_CASE("27 sections of the z3 instance satisfy the weak laws exhaustively") {
  SectionAlgebra s = section_algebra(instance_a());
  CHECK(s.sections.size() == 27);
  Report r = validate_section_algebra(s);
  CHECK(r.ok());
}

TEST_CASE("section cap is enforced") {
  CHECK_THROWS_AS(section_algebra(instance_a(), 10), Error);
}

TEST_CASE("masked sections have bijective left multiplication on all sections") {
  for (const auto& inst : full_catalog()) {
    INFO(inst.name);
    SectionAlgebra s = section_algebra(inst.post);
    Report r = validate_section_algebra(s);
    CHECK(r.ok());
  }
}
