#include <doctest.h>

#include "fixtures.hpp"

using namespace forge;
using forge::test::atlas;

TEST_CASE("coset indices from the presentations") {
  CHECK(enumerate_cosets(map_rotation_presentation(), {{1}}).index() == 6);
  CHECK(enumerate_cosets(roli_presentation(false), {{1}, {2}}).index() == 8);
  CHECK(enumerate_cosets(roli_presentation(), {{1}, {2}, {3}}).index() == 1);
  CHECK(enumerate_cosets(presentation_333(), {}).index() == 24);
  CHECK(enumerate_cosets(map_rotation_presentation(), {}).index() == 48);
}

TEST_CASE("small groups") {
  const auto cyclic = Presentation::make(1, {{1, 1, 1, 1, 1}});
  CHECK(enumerate_cosets(cyclic, {}).index() == 5);
  const auto s3 = Presentation::make(2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});
  CHECK(presented_group(s3).order() == 6);
  CHECK(enumerate_cosets(s3, {{1}}).index() == 3);
  const auto trivial = Presentation::make(2, {{1}, {2}});
  CHECK(enumerate_cosets(trivial, {}).index() == 1);
}

TEST_CASE("tables are consistent") {
  const auto p = roli_presentation();
  const auto t = enumerate_cosets(p, {{1}});
  CHECK(table_is_consistent(t, p));
  CHECK(t.index() == 24);
  for (const auto& r : p.relators) {
    for (int c = 0; c < t.index(); ++c) CHECK(t.trace(c, r) == c);
  }
  CHECK(t.trace(0, {1}) == 0);
}

TEST_CASE("presented group orders") {
  CHECK(presented_group(map_presentation()).order() == 96);
  CHECK(presented_group(roli_presentation()).order() == 192);
  CHECK(presented_group(cover_presentation()).order() == 768);
  CHECK(presented_group(presentation_333()).order() == 24);
}

TEST_CASE("presented groups match the concrete ones") {
  const auto& s = atlas();
  CHECK(generator_map_is_isomorphism(presented_group(roli_presentation()).generators(), s.sigma()));
  CHECK(generator_map_is_isomorphism(presented_group(cover_presentation()).generators(), s.tau()));
  CHECK(generator_map_is_isomorphism(presented_group(presentation_333()).generators(),
                                     std::vector<SignedPerm>{s["gamma1"], s["gamma2"]}));
}

TEST_CASE("relators hold on the named generators") {
  const auto& s = atlas();
  CHECK(verify_relators(std::vector<SignedPerm>{s["sigma1"], s["sigma2"]}, map_rotation_presentation()));
  CHECK(verify_relators(s.sigma(), roli_presentation()));
  // The barred generators satisfy the mirrored relations instead.
  CHECK_FALSE(verify_relators(s.sigma_bar(), roli_presentation()));
  CHECK(power(inverse(s["sigma1_bar"]) * s["sigma3_bar"], 4) == s["zeta"]);
  CHECK(verify_relators(s.tau(), cover_presentation()));
  CHECK(verify_relators(std::vector<SignedPerm>{s["gamma1"], s["gamma2"]}, presentation_333()));
  CHECK(verify_relators(s.sigma(), Presentation::make(3, {})));
  // G is a quotient of T, so the reflections satisfy the cover relators too.
  CHECK(verify_relators(s.rho(), cover_presentation()));
  CHECK_FALSE(verify_relators(s.rho(), Presentation::make(4, {{1, 2, 3, 4, 1, 2, 3, 4}})));
  CHECK_THROWS_AS(verify_relators(s.rho(), roli_presentation()), std::invalid_argument);
}

TEST_CASE("infinite presentations hit the cap") {
  const auto free2 = Presentation::make(2, {});
  CHECK_THROWS_AS(enumerate_cosets(free2, {}, 200), CapExceeded);
  CHECK_THROWS_AS(presented_group(cover_presentation(CoverReading::Literal), 20000), CapExceeded);
}

TEST_CASE("presentations round trip through JSON") {
  const auto p = cover_presentation();
  const auto q = Presentation::from_json(p.to_json());
  CHECK(q.generators == p.generators);
  CHECK(q.relators == p.relators);
  CHECK(q.names == p.names);
  CHECK_THROWS(Presentation::make(2, {{3}}));
}
