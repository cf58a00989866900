#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace forge;
using forge::test::atlas;

namespace {

std::mt19937& rng() {
  static std::mt19937 gen(20261015);
  return gen;
}

const SignedPerm& random_element(const ConcreteGroup& g) {
  std::uniform_int_distribution<std::size_t> d(0, g.order() - 1);
  return g.element(d(rng()));
}

Rational random_rational() {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  return Rational(num(rng()), den(rng()));
}

Q3 random_q3() { return {random_rational(), random_rational()}; }
QField random_qfield() { return {random_q3(), random_q3()}; }

PointVec random_point() {
  PointVec p;
  for (int k = 0; k < 4; ++k) p.push_back(random_rational());
  return p;
}

}  // namespace

TEST_CASE("signed permutations form a group acting on the right") {
  const auto g = cube_group(atlas());
  for (int trial = 0; trial < 300; ++trial) {
    const auto& a = random_element(g);
    const auto& b = random_element(g);
    const auto& c = random_element(g);
    CHECK((a * b) * c == a * (b * c));
    CHECK(inverse(a * b) == inverse(b) * inverse(a));
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
    const auto p = random_point();
    CHECK(act(act(p, a), b) == act(p, a * b));
    CHECK(SignedPerm::parse(a.to_string(), 4) == a);
    CHECK(g.contains(a * b));
    CHECK(power(a, element_order(a)).is_identity());
  }
}

TEST_CASE("block pairs are homomorphisms") {
  const auto g = cube_group(atlas());
  for (int trial = 0; trial < 100; ++trial) {
    const auto& a = random_element(g);
    const auto& b = random_element(g);
    const auto& c = random_element(g);
    const auto& d = random_element(g);
    CHECK(block_pair(a, b) * block_pair(c, d) == block_pair(a * c, b * d));
    CHECK(split_blocks(block_pair(a, b)) == std::pair{a, b});
  }
}

TEST_CASE("the action preserves the cube and its Petrie polygons") {
  const auto g = cube_group(atlas());
  const auto polys = petrie_polygons(true);
  const std::set<PetriePolygon> all(polys.begin(), polys.end());
  for (int trial = 0; trial < 50; ++trial) {
    const auto& a = random_element(g);
    for (const auto& p : polys) {
      const auto q = act(p, a);
      CHECK(all.count(q) == 1);
      const bool same = chiral_class(q) == chiral_class(p);
      CHECK(same == (determinant(a) == 1));
    }
  }
}

TEST_CASE("canonical polygon form is invariant under rotation and reversal") {
  std::uniform_int_distribution<int> shift(0, 7), flip(0, 1);
  for (const auto& p : petrie_polygons(true)) {
    for (int trial = 0; trial < 5; ++trial) {
      auto cyc = p.vertices;
      std::rotate(cyc.begin(), cyc.begin() + shift(rng()), cyc.end());
      if (flip(rng())) std::reverse(cyc.begin(), cyc.end());
      CHECK(make_polygon(cyc) == p);
    }
  }
}

TEST_CASE("field axioms in Q(sqrt3)") {
  for (int trial = 0; trial < 300; ++trial) {
    const Q3 a = random_q3(), b = random_q3(), c = random_q3();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * a.conj()).b() == 0);
    CHECK((a * b).norm() == a.norm() * b.norm());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    const double x = a.to_double(), y = b.to_double();
    if (std::abs(x - y) > 1e-9) CHECK((a < b) == (x < y));
  }
}

TEST_CASE("field axioms in Q(sqrt3, i)") {
  for (int trial = 0; trial < 300; ++trial) {
    const QField a = random_qfield(), b = random_qfield(), c = random_qfield();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK((a * b).conj_i() == a.conj_i() * b.conj_i());
    CHECK((a * b).conj_sqrt3() == a.conj_sqrt3() * b.conj_sqrt3());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("complexification is inverse to the real embedding") {
  const Q3Matrix J = build_J(), L = build_L();
  for (int trial = 0; trial < 100; ++trial) {
    const QField z1 = random_qfield(), z2 = random_qfield();
    const auto a = scalar_action(z1, L[0], J);
    const auto b = scalar_action(z2, L[2], J);
    Q3Vec v;
    for (int k = 0; k < 4; ++k) v[k] = a[k] + b[k];
    const auto z = complexify(v);
    CHECK(z[0] == z1);
    CHECK(z[1] == z2);
  }
}

TEST_CASE("matrix inverses are exact") {
  for (int trial = 0; trial < 50; ++trial) {
    Q3Matrix m;
    for (auto& row : m) {
      for (auto& x : row) x = random_q3();
    }
    try {
      CHECK(multiply(m, invert(m)) == identity_q3());
    } catch (const std::domain_error&) {
    }
  }
}

TEST_CASE("random coset geometries of the cube group are polytopes") {
  const auto& s = atlas();
  const auto g = cube_group(s);
  for (int trial = 0; trial < 5; ++trial) {
    const auto& x = random_element(g);
    std::vector<SignedPerm> conj;
    for (const auto& r : s.rho()) conj.push_back(conjugate(r, x));
    const auto h = ConcreteGroup::closure(conj);
    const auto cg = polytope_from_reflections(h);
    CHECK(cg.poset.f_vector() == std::vector<int>{16, 32, 24, 8});
    CHECK(classify(cg.poset, cg.generator_actions()).kind == Symmetry::Regular);
  }
}
