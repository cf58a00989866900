#include <doctest.h>

#include "fixtures.hpp"

using namespace forge;
using forge::test::atlas;
using forge::test::map_m;

namespace {

const CosetGeometry<SignedPerm>& cube() {
  static const auto cg = polytope_from_reflections(cube_group(atlas()));
  return cg;
}

RankedIncidenceStructure segment() {
  RankedIncidenceStructure p(1, {{"a", "b"}});
  return p;
}

}  // namespace

TEST_CASE("the 4-cube from its reflection group") {
  const auto& p = cube().poset;
  CHECK(p.f_vector() == std::vector<int>{16, 32, 24, 8});
  CHECK(flags(p).size() == 384);
  CHECK(schlafli_type(p) == std::vector<int>{4, 3, 3});
  const auto cl = classify(p, cube().generator_actions());
  CHECK(cl.kind == Symmetry::Regular);
  CHECK(cl.flag_count == 384);
  CHECK(cl.flag_orbits == 1);
  CHECK(automorphism_count(p) == 384);
}

TEST_CASE("the double cover from its reflection group") {
  const auto& c = forge::test::cover();
  CHECK(c.geometry.poset.f_vector() == std::vector<int>{32, 64, 24, 8});
  CHECK(classify(c.geometry.poset, c.geometry.generator_actions()).kind == Symmetry::Regular);
}

TEST_CASE("a segment") {
  const auto g = ConcreteGroup::closure({atlas()["rho0"]});
  const auto cg = polytope_from_reflections(g);
  CHECK(cg.poset.f_vector() == std::vector<int>{2});
  CHECK(flags(cg.poset).size() == 2);
  CHECK(flags(segment()).size() == 2);
  CHECK(classify(cg.poset, cg.generator_actions()).kind == Symmetry::Regular);
}

TEST_CASE("coset geometries from given stabilizers") {
  const auto& s = atlas();
  const auto& g = map_m().rotations;
  const auto cg = coset_geometry(g, {ConcreteGroup::closure({s["sigma2"]}), ConcreteGroup::closure({s["sigma1"] * s["sigma2"]}),
                                     ConcreteGroup::closure({s["sigma1"]})});
  CHECK(cg.poset.f_vector() == std::vector<int>{16, 24, 6});
  CHECK(schlafli_type(cg.poset) == std::vector<int>{8, 3});
  CHECK(find_isomorphism(cg.poset, map_m().geometry.poset).has_value());

  const auto again = coset_geometry(cube().group, distinguished_subgroups(cube().group));
  CHECK(find_isomorphism(again.poset, cube().poset).has_value());
}

TEST_CASE("the chiral polytope and its flags") {
  const auto& r = forge::test::roli();
  CHECK(flags(r.geometry.poset).size() == 384);
  const auto cl = classify(r.geometry.poset, r.geometry.generator_actions());
  CHECK(cl.kind == Symmetry::Chiral);
  CHECK(cl.flag_orbits == 2);
  CHECK(cl.adjacent_flags_split);
  CHECK(schlafli_type(r.geometry.poset) == std::vector<int>{8, 3, 3});
}

TEST_CASE("actions preserve incidence") {
  for (const auto& a : cube().generator_actions()) CHECK(preserves_incidence(cube().poset, a));
}

TEST_CASE("the hemi-cube") {
  const auto q = central_quotient(cube(), atlas()["zeta"]);
  CHECK(q.poset.f_vector() == std::vector<int>{8, 16, 12, 4});
  CHECK(q.induced_group.order() == 192);
  const auto& gens = q.induced_group.generators();
  Perm prod = gens[0] * gens[1] * gens[2] * gens[3];
  CHECK(element_order(prod) == 4);
  CHECK(classify(q.poset, q.generator_actions).kind == Symmetry::Regular);

  const auto same = central_quotient(cube(), SignedPerm::identity(4));
  CHECK(find_isomorphism(same.poset, cube().poset).has_value());
  CHECK_THROWS_AS(central_quotient(cube(), atlas()["pi"]), NotCentral);
}

TEST_CASE("colourful polytopes") {
  CHECK(find_isomorphism(colourful_polytope(coloured_cube_skeleton()), cube().poset).has_value());
  const auto hemi = central_quotient(cube(), atlas()["zeta"]);
  CHECK(find_isomorphism(colourful_polytope(coloured_k44()), hemi.poset).has_value());
  const ColoredGraph edge{2, 1, {{0, 1, 1}}};
  const auto seg = colourful_polytope(edge);
  CHECK(seg.f_vector() == std::vector<int>{2});
  const ColoredGraph bad{3, 1, {{0, 1, 1}, {1, 2, 1}}};
  CHECK_THROWS_AS(colourful_polytope(bad), ImproperColouring);
}

TEST_CASE("coverings") {
  const auto& p = cube().poset;
  FaceMap id;
  for (int r = 0; r < p.rank(); ++r) {
    std::vector<int> img(p.face_count(r));
    for (int i = 0; i < p.face_count(r); ++i) img[i] = i;
    id.push_back(img);
  }
  const auto rep = verify_covering(p, p, id);
  CHECK(rep.multiplicity == 1);

  const auto q = central_quotient(cube(), atlas()["zeta"]);
  const auto two = verify_covering(p, q.poset, q.orbit_of);
  CHECK(two.multiplicity == 2);
  CHECK(two.facets_isomorphic);
  CHECK(two.vertex_figures_isomorphic);

  const auto& c = forge::test::cover();
  const auto phi = verify_covering(c.geometry.poset, forge::test::roli().geometry.poset, c.to_roli);
  CHECK(phi.multiplicity == 2);
  CHECK(phi.facets_isomorphic);
  CHECK(phi.vertex_figures_isomorphic);
  CHECK(phi.k == 3);

  FaceMap collapse = id;
  for (auto& v : collapse[0]) v = 0;
  CHECK_THROWS_AS(verify_covering(p, p, collapse), NotACovering);
}

TEST_CASE("structures that are not polytopes") {
  RankedIncidenceStructure three(1, {{"a", "b", "c"}});
  CHECK_THROWS_AS(verify_polytope(three), NotAPolytope);
  RankedIncidenceStructure two_triangles(2, {{"a", "b", "c", "d", "e", "f"}, {"ab", "bc", "ca", "de", "ef", "fd"}});
  const int e[6][2] = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  for (int k = 0; k < 6; ++k) {
    two_triangles.set_incident(0, e[k][0], 1, k);
    two_triangles.set_incident(0, e[k][1], 1, k);
  }
  try {
    verify_polytope(two_triangles);
    FAIL("disconnected structure accepted");
  } catch (const NotAPolytope& x) {
    CHECK(x.axiom().find("connect") != std::string::npos);
  }
}

TEST_CASE("isomorphism search fails on different polytopes") {
  CHECK_FALSE(find_isomorphism(map_m().geometry.poset, segment()).has_value());
  CHECK_FALSE(find_isomorphism(cube().poset, forge::test::roli().geometry.poset).has_value());
}
