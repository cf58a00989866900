#include <doctest.h>

#include <set>

#include "fixtures.hpp"

using namespace forge;
using forge::test::atlas;
using forge::test::map_m;
using forge::test::sp;

namespace {

std::set<SignedPerm> as_set(const ConcreteGroup& g) { return {g.elements().begin(), g.elements().end()}; }

}  // namespace

TEST_CASE("closure orders") {
  const auto& s = atlas();
  CHECK(ConcreteGroup::closure(s.rho()).order() == 384);
  CHECK(ConcreteGroup::closure({s["sigma1"], s["sigma2"]}).order() == 48);
  CHECK(ConcreteGroup::closure({SignedPerm::identity(4)}).order() == 1);
  CHECK(ConcreteGroup::closure({s["gamma1"], s["gamma2"]}).order() == 24);
  CHECK(ConcreteGroup::closure(s.sigma()).order() == 192);
  CHECK_THROWS_AS(ConcreteGroup::closure(s.rho(), {}, 100), CapExceeded);
  CHECK_THROWS_AS(ConcreteGroup::closure({}), std::invalid_argument);
}

TEST_CASE("elements are in breadth-first order from the identity") {
  const auto g = cube_group(atlas());
  CHECK(g.identity().is_identity());
  CHECK(g.element(0).is_identity());
  for (std::size_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element(i)) == i);
  CHECK_FALSE(g.find(SignedPerm::identity(8)).has_value());
}

TEST_CASE("from_elements rebuilds a subgroup") {
  const auto& s = atlas();
  const auto k = ConcreteGroup::closure({s["mu0"], s["mu1"]});
  const auto rebuilt = ConcreteGroup::from_elements(k.elements());
  CHECK(rebuilt.same_elements(k));
  CHECK_THROWS_AS(ConcreteGroup::from_elements({s["pi"]}), std::invalid_argument);
}

TEST_CASE("centres") {
  const auto& s = atlas();
  CHECK(as_set(centre(cube_group(s))) == std::set<SignedPerm>{SignedPerm::identity(4), s["zeta"]});
  const auto z = centre(map_m().rotations);
  CHECK(z.same_elements(ConcreteGroup::closure({power(s["sigma1"], 4)})));
  const auto zt = centre(forge::test::cover().rotations);
  CHECK(zt.order() == 4);
  const auto one = SignedPerm::identity(4);
  CHECK(zt.contains(block_pair(s["zeta"], one)));
  CHECK(zt.contains(block_pair(one, s["zeta"])));
  CHECK(zt.contains(block_pair(s["zeta"], s["zeta"])));
}

TEST_CASE("orbits and stabilizers") {
  const auto& s = atlas();
  const auto g = cube_group(s);
  CHECK(orbit(g, s.v).size() == 16);
  CHECK(stabilizer(g, s.v).order() == 24);
  const auto id = ConcreteGroup::closure({SignedPerm::identity(4)});
  CHECK(orbit(id, s.v) == std::set<PointVec>{s.v});
}

TEST_CASE("setwise stabilizers") {
  const auto& s = atlas();
  const auto g = cube_group(s);
  const auto k = setwise_stabilizer(g, s.C.vertex_set());
  CHECK(k.order() == 16);
  CHECK(k.contains(s["mu0"]));
  CHECK(k.contains(s["mu1"]));
  const auto all = cube_vertices();
  CHECK(setwise_stabilizer(g, {all.begin(), all.end()}).same_elements(g));
  CHECK(setwise_stabilizer(rotation_group(s), s.C.vertex_set()).order() == 16);
  CHECK(k.is_subgroup_of(rotation_group(s)));
}

TEST_CASE("normal subgroups") {
  const auto& s = atlas();
  CHECK(is_normal(rotation_group(s), cube_group(s)));
  CHECK(is_normal(centre(cube_group(s)), cube_group(s)));
  CHECK_FALSE(is_normal(ConcreteGroup::closure({s["rho0"]}), cube_group(s)));
}

TEST_CASE("coset representatives") {
  const auto& s = atlas();
  const auto g = cube_group(s);
  CHECK(coset_reps(g, stabilizer(g, s.v)).size() == 16);
  CHECK(coset_reps(g, g) == std::vector<SignedPerm>{SignedPerm::identity(4)});
  CHECK(coset_reps(rotation_group(s), map_m().rotations).size() == 4);
}

TEST_CASE("extending generator maps") {
  const auto& s = atlas();
  const auto& s1 = s["sigma1"];
  const auto& s2 = s["sigma2"];
  const auto& s3 = s["sigma3"];

  SUBCASE("the rotation group of the map has an involutory automorphism") {
    const auto e = extend_homomorphism(map_m().rotations, std::vector<SignedPerm>{inverse(s1), s1 * s1 * s2});
    REQUIRE(e.ok());
    CHECK(e.hom->injective());
    for (const auto& x : map_m().rotations.elements()) CHECK((*e.hom)((*e.hom)(x)) == x);
  }
  SUBCASE("it does not extend to the rotation group of the cube") {
    const std::vector<SignedPerm> images{inverse(s1), s1 * s1 * s2, s3};
    const auto e = extend_homomorphism(ConcreteGroup::closure(s.sigma()), images);
    CHECK_FALSE(e.ok());
    CHECK_FALSE(e.witness.empty());
    CHECK(evaluate(e.witness, s.sigma(), SignedPerm::identity(4)).is_identity());
    CHECK_FALSE(evaluate(e.witness, images, SignedPerm::identity(4)).is_identity());
    CHECK(witnesses_non_automorphism(repeat_word({1, 3}, 4), s.sigma(), images));
    CHECK(power(s1 * s3, 4) == s["zeta"]);
    CHECK(power(inverse(s1) * s3, 4).is_identity());
  }
  SUBCASE("the identity assignment gives the identity map") {
    const auto g = ConcreteGroup::closure(s.sigma());
    const auto e = extend_homomorphism(g, s.sigma());
    REQUIRE(e.ok());
    CHECK(e.hom->images() == g.elements());
    CHECK(e.hom->kernel().size() == 1);
  }
}

TEST_CASE("homomorphism kernels") {
  const auto& s = atlas();
  const auto e = extend_homomorphism(forge::test::cover().group, s.rho());
  REQUIRE(e.ok());
  CHECK(e.hom->kernel().size() == 2);
  CHECK(e.hom->image_size() == 384);
}

TEST_CASE("string C-group conditions") {
  const auto& s = atlas();
  CHECK(string_condition(s.rho()));
  CHECK(intersection_condition(s.rho()));
  CHECK(string_condition(s.tau()));
  CHECK(intersection_condition(s.tau()));
  CHECK(string_condition(std::vector<SignedPerm>{s["rho0"]}));
  CHECK(intersection_condition(std::vector<SignedPerm>{s["rho0"]}));
  CHECK_FALSE(string_condition(std::vector<SignedPerm>{s["rho0"], s["rho2"], s["rho1"], s["rho3"]}));
  CHECK_THROWS(string_condition(std::vector<SignedPerm>{s["pi"]}));
}

TEST_CASE("generator maps that are isomorphisms") {
  const auto& s = atlas();
  CHECK_FALSE(generator_map_is_isomorphism(s.sigma(), s.sigma_bar()));
  const auto& b1 = s["sigma1_bar"];
  CHECK(generator_map_is_isomorphism(s.sigma(), std::vector<SignedPerm>{inverse(b1), b1 * b1 * s["sigma2_bar"], s["sigma3_bar"]}));
  CHECK(generator_map_is_isomorphism(std::vector<SignedPerm>{s["tau1"], s["tau2"], s["tau3"]},
                                     std::vector<SignedPerm>{s["rho1"], s["rho2"], s["rho3"]}));
  CHECK_FALSE(generator_map_is_isomorphism(s.tau(), s.rho()));
}

TEST_CASE("words") {
  CHECK(free_reduce({1, -1, 2, 3, -3}) == Word{2});
  CHECK(inverse_word({1, 2, -3}) == Word{3, -2, -1});
  CHECK(repeat_word({1, 3}, 2) == Word{1, 3, 1, 3});
  CHECK(word_to_string({1, -2}, {"a", "b"}) == "a b^-1");
}
