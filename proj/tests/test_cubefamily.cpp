#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"

using namespace forge;
using forge::test::atlas;
using forge::test::map_m;
using forge::test::sp;

TEST_CASE("the named elements") {
  const auto& s = atlas();
  CHECK(s["pi"] == sp("(-1,1,1,1)·(4,3,2,1)"));
  CHECK(power(s["pi"], 4) == s["zeta"]);
  CHECK(s["zeta"] == sp("(-1,-1,-1,-1)"));
  CHECK(s["sigma2_bar"] == s["sigma1"] * s["sigma1"] * s["sigma2"]);
  CHECK(s["sigma2_bar"] == sp("(-1,-1,1,1)·(1,3,2)"));
  CHECK(s["gamma1"] == sp("(1,4,2)"));
  CHECK(s["gamma1"] == s["rho1"] * s["rho2"] * s["rho3"] * s["rho2"]);
  CHECK(s.v == make_point({1, 1, 1, 1}));
  CHECK_THROWS_AS(s["no-such-element"], std::out_of_range);
}

TEST_CASE("cube basics") {
  CHECK(cube_vertices().size() == 16);
  CHECK(cube_vertices(3).size() == 8);
  CHECK(cube_edges().size() == 32);
  CHECK(edge_direction(make_point({1, 1, 1, 1}), make_point({1, 1, -1, 1})) == 3);
  CHECK_THROWS(edge_direction(make_point({1, 1, 1, 1}), make_point({1, 1, -1, -1})));
  CHECK(minus_count(make_point({-1, 1, -1, 1})) == 2);
  const auto g = cube_group(atlas());
  for (const auto& x : g.elements()) CHECK(act(cube_edges(), x) == cube_edges());
}

TEST_CASE("Petrie polygons") {
  const auto slow = petrie_polygons(false);
  const auto fast = petrie_polygons(true);
  CHECK(slow.size() == 24);
  CHECK(slow == fast);
  const auto r = std::count_if(slow.begin(), slow.end(), [](const auto& p) { return chiral_class(p) == ChiralClass::R; });
  CHECK(r == 12);
  for (const auto& p : slow) {
    CHECK(p.vertices.size() == 8);
    CHECK(is_petrie_cycle(p.vertices));
    CHECK(abs(petrie_determinant(p)) == 8);
  }
}

TEST_CASE("the base octagon") {
  const auto& s = atlas();
  const auto& c = s.C;
  CHECK(chiral_class(c) == ChiralClass::R);
  CHECK(petrie_determinant(c) == 8);
  CHECK(chiral_class(act(c, s["rho0"])) == ChiralClass::L);
  CHECK(chiral_class(s.C_star) == ChiralClass::R);
  const std::vector<PointVec> walk{make_point({1, 1, 1, 1}), make_point({1, 1, 1, -1}), make_point({1, 1, -1, -1}),
                                   make_point({1, -1, -1, -1}), make_point({-1, -1, -1, -1})};
  const auto e = c.edges();
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) CHECK(e.count(make_edge(walk[k], walk[k + 1])) == 1);
}

TEST_CASE("the Petrie predicate rejects other cycles") {
  std::vector<PointVec> square{make_point({1, 1, 1, 1}), make_point({-1, 1, 1, 1}), make_point({-1, -1, 1, 1}),
                               make_point({1, -1, 1, 1})};
  CHECK_FALSE(is_petrie_cycle(square));
  const auto steps = polygon_from_steps(make_point({1, 1, 1, 1}), {1, 2, 1, 2});
  CHECK(steps.vertices.size() == 4);
  CHECK_FALSE(is_petrie_cycle(steps.vertices));
}

TEST_CASE("canonical form ignores start and direction") {
  auto cyc = atlas().C.vertices;
  std::rotate(cyc.begin(), cyc.begin() + 3, cyc.end());
  CHECK(make_polygon(cyc) == atlas().C);
  std::reverse(cyc.begin(), cyc.end());
  CHECK(make_polygon(cyc) == atlas().C);
}

TEST_CASE("companions") {
  const auto& s = atlas();
  CHECK(companion(s.C) == s.C_star);
  const auto gp = rotation_group(s);
  for (const auto& p : petrie_polygons(true)) {
    CHECK(companion(companion(p)) == p);
    CHECK(chiral_class(companion(p)) == chiral_class(p));
    const auto vp = p.vertex_set();
    for (const auto& v : companion(p).vertices) CHECK(vp.count(v) == 0);
    for (const auto& g : {s["sigma1"], s["sigma2"], s["sigma3"]}) CHECK(companion(act(p, g)) == act(companion(p), g));
  }
}

TEST_CASE("the map of type {8,3}") {
  const auto& m = map_m();
  CHECK(m.geometry.poset.f_vector() == std::vector<int>{16, 24, 6});
  CHECK(m.edges.size() == 24);
  std::map<Edge, int> on;
  for (const auto& oct : m.octagons) {
    CHECK(chiral_class(oct) == ChiralClass::R);
    for (const auto& e : oct.edges()) ++on[e];
  }
  CHECK(on.size() == 24);
  for (const auto& [e, n] : on) CHECK(n == 2);
  CHECK(count_isomorphisms(m.levi, generalized_petersen(8, 3)) == 96);
  CHECK(count_isomorphisms(m.levi, m.levi) == 96);
  CHECK(automorphism_count(m.geometry.poset) == 96);
}

TEST_CASE("generalized Petersen graphs") {
  const auto g = generalized_petersen(5, 2);
  CHECK(g.size() == 10);
  CHECK(count_isomorphisms(g, g) == 120);
  CHECK(count_isomorphisms(generalized_petersen(8, 3), generalized_petersen(8, 1)) == 0);
}

TEST_CASE("point labels") {
  const auto sols = solve_point_labels(map_m(), atlas());
  REQUIRE(sols.size() == 1);
  const auto& l = forge::test::labels();
  std::set<std::string> got;
  for (const auto& oct : map_m().octagons) got.insert(alternate_labels(oct, l));
  std::set<std::string> want;
  for (const char* w : {"0246", "1357", "0541", "1256", "2367", "0743"}) want.insert(normalize_cyclic_digits(w));
  CHECK(got == want);
  for (int k = 0; k < 8; ++k) {
    CHECK(minus_count(l.point[k]) % 2 == 1);
    CHECK(l.label_of(l.point[k]) == k);
  }
  CHECK(l.label_of(atlas().v) == -1);
  CHECK(normalize_cyclic_digits("0541") == normalize_cyclic_digits("1450"));
  CHECK(normalize_cyclic_digits("0541") == normalize_cyclic_digits("1054"));
}

TEST_CASE("geometric chirality of the map") {
  const auto w = geometric_chirality_M(map_m(), atlas());
  CHECK_FALSE(w.mu0_preserves_edges);
  CHECK(w.non_rotations_preserving == 0);
  CHECK(w.rotations_preserving == 48);
  CHECK(w.rotation_stabilizer_is_rotation_group);
  CHECK(w.stabilizer_preserves_octagons);
}

TEST_CASE("the chiral polytope of type {8,3,3}") {
  const auto& r = forge::test::roli();
  CHECK(r.geometry.poset.f_vector() == std::vector<int>{16, 32, 12, 4});
  std::vector<std::size_t> orders;
  for (const auto& h : r.geometry.subgroups) orders.push_back(h.order());
  CHECK(orders == std::vector<std::size_t>{12, 6, 16, 48});
  CHECK(automorphism_count(r.geometry.poset) == 192);
  CHECK(r.edge_segments.size() == 32);
  for (const auto& p : r.polygons) CHECK(chiral_class(p) == ChiralClass::R);
  for (const auto& p : r.polygons) {
    const auto e = p.edges();
    const auto copies = std::count_if(r.facet_edges.begin(), r.facet_edges.end(), [&](const EdgeSet& f) {
      return std::includes(f.begin(), f.end(), e.begin(), e.end());
    });
    CHECK(copies == 2);
  }
}

TEST_CASE("the enantiomorph shares the face realizations") {
  const auto& r = forge::test::roli();
  const auto& b = forge::test::enantiomorph();
  const auto& s = atlas();
  CHECK(b.geometry.poset.f_vector() == std::vector<int>{16, 32, 12, 4});
  CHECK(ConcreteGroup::closure(s.sigma_bar()).same_elements(rotation_group(s)));
  CHECK(std::set<PetriePolygon>(b.polygons.begin(), b.polygons.end()) ==
        std::set<PetriePolygon>(r.polygons.begin(), r.polygons.end()));
  for (const auto& p : b.polygons) CHECK(chiral_class(p) == ChiralClass::R);
  CHECK(induced_face_map(r, b, s["pi"]).has_value());
  CHECK_FALSE(induced_face_map(r, b, s["rho0"]).has_value());
}

TEST_CASE("the regular cover") {
  const auto& c = forge::test::cover();
  const auto& s = atlas();
  CHECK(c.rotations.order() == 384);
  CHECK(c.group.order() == 768);
  CHECK(c.base_vertex.size() == 8);
  CHECK(c.geometry.poset.f_vector() == std::vector<int>{32, 64, 24, 8});
  const auto one = SignedPerm::identity(4);
  const auto e = extend_homomorphism(c.group, s.rho());
  REQUIRE(e.ok());
  const auto k = e.hom->kernel();
  CHECK(std::set<SignedPerm>(k.begin(), k.end()) == std::set<SignedPerm>{block_pair(one, one), block_pair(s["zeta"], s["zeta"])});
  CHECK(power(s["kappa1"] * s["kappa3"], 4) == block_pair(s["zeta"], one));
  CHECK(power(inverse(s["kappa1"]) * s["kappa3"], 4) == block_pair(one, s["zeta"]));
  CHECK(power(s["kappa1"], 4) == block_pair(s["zeta"], s["zeta"]));
}

TEST_CASE("the binary tetrahedral subgroup") {
  const auto b = binary_tetrahedral_check(atlas());
  CHECK(b.relations_hold);
  CHECK(b.order == 24);
  CHECK(b.normal);
  CHECK(power(b.a, 3) == atlas()["zeta"]);
}

TEST_CASE("the full group of the map from its rotation automorphism") {
  const auto t = map_reflections(map_m(), atlas());
  REQUIRE(t.size() == 3);
  for (const auto& x : t) CHECK((x * x).is_identity());
  CHECK(verify_relators(t, map_presentation()));
  const auto g = PermGroup::closure(t);
  CHECK(g.order() == 96);
  CHECK(string_condition(t));
  CHECK(intersection_condition(t));
  CHECK(generator_map_is_isomorphism(std::vector<Perm>{t[0] * t[1], t[1] * t[2]},
                                     std::vector<SignedPerm>{atlas()["sigma1"], atlas()["sigma2"]}));
}
