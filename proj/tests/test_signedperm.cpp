#include <doctest.h>

#include "fixtures.hpp"

using namespace forge;
using forge::test::atlas;
using forge::test::sp;

TEST_CASE("product of the four reflections is the Petrie symmetry") {
  const auto& s = atlas();
  const SignedPerm pi = s["rho0"] * s["rho1"] * s["rho2"] * s["rho3"];
  CHECK(pi == sp("(-1,1,1,1)·(4,3,2,1)"));
  CHECK(pi == s["pi"]);
  CHECK(power(pi, 8).is_identity());
  CHECK_FALSE(power(pi, 4).is_identity());
  CHECK(power(pi, 4) == s["zeta"]);
  CHECK(element_order(pi) == 8);
}

TEST_CASE("composition with the identity") {
  const auto g = sp("(-1,-1,1,1)·(1,3,2)");
  const auto id = SignedPerm::identity(4);
  CHECK(g * id == g);
  CHECK(id * g == g);
}

TEST_CASE("inverse") {
  const auto& s = atlas();
  CHECK(inverse(SignedPerm::identity(4)).is_identity());
  CHECK(inverse(s["pi"]) == power(s["pi"], 7));
  CHECK(inverse(s["rho0"]) == s["rho0"]);
  for (const auto& [name, g] : s.elements) CHECK((g * inverse(g)).is_identity());
}

TEST_CASE("action on row vectors") {
  const auto& s = atlas();
  CHECK(act(make_point({1, 1, 1, 1}), s["pi"]) == make_point({1, 1, 1, -1}));
  CHECK(act(make_point({1, 1, 1, 1}), s["sigma2"]) == make_point({1, 1, 1, 1}));
  const auto p = make_point({1, -1, 1, -1});
  CHECK(act(p, SignedPerm::identity(4)) == p);
  CHECK_THROWS_AS(act(make_point({1, 1, 1}), s["pi"]), DimensionMismatch);
}

TEST_CASE("determinant") {
  const auto& s = atlas();
  CHECK(determinant(s["rho0"]) == -1);
  CHECK(determinant(s["pi"]) == 1);
  CHECK(determinant(SignedPerm::identity(4)) == 1);
  CHECK(determinant(s["zeta"]) == 1);
}

TEST_CASE("conjugation") {
  const auto& s = atlas();
  CHECK(conjugate(s["rho0"], s["rho1"]) == sp("(1,-1,1,1)"));
  CHECK(conjugate(s["pi"], SignedPerm::identity(4)) == s["pi"]);
  for (const auto& [name, h] : s.elements) {
    if (h.dim() == 4) CHECK(conjugate(s["zeta"], h) == s["zeta"]);
  }
}

TEST_CASE("block pairs") {
  const auto& s = atlas();
  CHECK(block_pair(s["sigma1"], s["sigma1_bar"]) == sp("(-1,1,1,1,1,1,1,-1)·(4,3,2,1)(5,6,7,8)", 8));
  CHECK(block_pair(s["sigma1"], s["sigma1_bar"]) == s["kappa1"]);
  CHECK(block_pair(SignedPerm::identity(4), SignedPerm::identity(4)).is_identity());
  CHECK(block_pair(s["zeta"], SignedPerm::identity(4)) == power(s["kappa1"] * s["kappa3"], 4));
  const auto [a, b] = split_blocks(s["kappa2"]);
  CHECK(block_pair(a, b) == s["kappa2"]);
  CHECK_THROWS(split_blocks(sp("(1,5)", 8)));
  CHECK_THROWS_AS(block_pair(SignedPerm::identity(3), SignedPerm::identity(4)), DimensionMismatch);
}

TEST_CASE("text form round trip") {
  for (const char* t : {"(-1,1,1,1)·(1,4,3,2)", "(1,1,1,1)·()", "(-1,-1,1,1)·(1,3,2)", "(1,1,1,1)·(1,2)(3,4)"}) {
    CHECK(sp(t).to_string() == t);
  }
  CHECK(sp("(1,4,2)") == sp("(1,1,1,1)·(1,4,2)"));
  CHECK(sp("(−1,1,1,1)*(4,3,2,1)") == sp("(-1,1,1,1)·(4,3,2,1)"));
  CHECK(sp("()").is_identity());
  CHECK_THROWS_AS(sp("(1,5)"), ParseError);
  CHECK_THROWS_AS(sp("1,2"), ParseError);
  CHECK_THROWS_AS(sp("(1,2"), ParseError);
  CHECK_THROWS_AS(sp("(1,x)"), ParseError);
}

TEST_CASE("matrix form") {
  const auto m = atlas()["pi"].matrix();
  CHECK(m[0][3] == -1);
  CHECK(m[3][2] == 1);
  CHECK(m[2][1] == 1);
  CHECK(m[1][0] == 1);
}

TEST_CASE("mismatched dimensions are rejected") {
  CHECK_THROWS_AS(compose(SignedPerm::identity(4), SignedPerm::identity(8)), DimensionMismatch);
}
