#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "forge/cli/commands.hpp"

using namespace forge;
using namespace forge::cli;

TEST_CASE("Coxeter projection is isometric on edges") {
  const auto l = projected_edge_lengths(coxeter_preset());
  REQUIRE(l.size() == 32);
  for (double x : l) CHECK(std::abs(x - l.front()) <= 1e-9);
  const auto c = projected_edge_lengths(coxeter_complement_preset());
  for (double x : c) CHECK(std::abs(x - c.front()) <= 1e-9);
}

TEST_CASE("Coxeter projection shows the base octagon as a regular octagon") {
  const auto spec = coxeter_preset();
  std::vector<double> radii;
  for (const auto& v : forge::test::atlas().C.vertices) {
    const auto p = project(spec, v);
    radii.push_back(std::hypot(p[0], p[1]));
  }
  for (double r : radii) CHECK(std::abs(r - radii.front()) <= 1e-9);
  const auto ang = petrie_rotation_angles();
  CHECK(ang[0] == doctest::Approx(45).epsilon(1e-12));
  CHECK(ang[1] == doctest::Approx(135).epsilon(1e-12));
}

TEST_CASE("Lambda projection shows two concentric squares") {
  const auto spec = lambda_preset();
  const auto& l = forge::test::labels();
  const double r = std::sqrt(3.0) - 1;
  const std::vector<Vec2> want{{r, 0}, {1, 1}, {0, r}, {-1, 1}, {-r, 0}, {-1, -1}, {0, -r}, {1, -1}};
  std::vector<Vec2> got;
  for (int k = 0; k < 8; ++k) got.push_back(project(spec, l.point[k]));
  std::vector<Vec2> table;
  for (const auto& z : coordinate_table()) table.push_back({z[0].re().to_double(), z[0].im().to_double()});
  CHECK(similar(got, table));
  std::set<std::pair<long, long>> want_set, table_set;
  for (const auto& p : want) want_set.insert({std::lround(p[0] * 1e6), std::lround(p[1] * 1e6)});
  for (const auto& p : table) table_set.insert({std::lround(p[0] * 1e6), std::lround(p[1] * 1e6)});
  CHECK(want_set == table_set);
}

TEST_CASE("similarity test") {
  const std::vector<Vec2> a{{0, 0}, {1, 0}, {0, 1}};
  CHECK(similar(a, {{1, 1}, {1, 3}, {-1, 1}}));
  CHECK(similar(a, {{0, 0}, {1, 0}, {0, -1}}));
  CHECK_FALSE(similar(a, {{0, 0}, {1, 0}, {0, 2}}));
}

TEST_CASE("projection specs are validated") {
  auto spec = coxeter_preset();
  spec.scale = 0;
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec = coxeter_preset();
  spec.basis[1] = spec.basis[0];
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec = coxeter_preset();
  spec.colours = {5};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  CHECK_FALSE(preset("nope").has_value());
}

TEST_CASE("SVG output is deterministic") {
  const auto spec = coxeter_preset();
  const auto a = render_svg(spec);
  CHECK(a == render_svg(spec));
  CHECK(a.find("<svg") == 0);
  std::size_t lines = 0;
  for (auto p = a.find("<line"); p != std::string::npos; p = a.find("<line", p + 1)) ++lines;
  CHECK(lines == 32);
  auto one_colour = spec;
  one_colour.colours = {1};
  const auto b = render_svg(one_colour);
  lines = 0;
  for (auto p = b.find("<line"); p != std::string::npos; p = b.find("<line", p + 1)) ++lines;
  CHECK(lines == 8);
  auto labelled = lambda_preset();
  labelled.labelled_only = true;
  CHECK_THROWS(render_svg(labelled));
  const auto c = render_svg(labelled, &forge::test::labels());
  CHECK(c.find("<line") == std::string::npos);
}

TEST_CASE("reports") {
  Report r{"x"};
  r.claims.push_back(equal_claim("a", 1, 2, 2, "topic"));
  r.claims.push_back(equal_claim("b", 0, 2, 3, "topic"));
  CHECK(r.claims[0].pass);
  CHECK_FALSE(r.claims[1].pass);
  CHECK_FALSE(r.all_pass());
  const auto j = r.to_json();
  CHECK(j["schema"] == "polytope-forge/1");
  CHECK(j["claims"].size() == 2);
  CHECK_FALSE(j.contains("seconds"));
  CHECK(r.to_text().find("1/2 claims pass") != std::string::npos);
  CHECK(rational_json(Rational(-3, 4)) == "-3/4");
  CHECK(qfield_json(QField::r()) == json({"-1", "1", "0", "0"}));
}

TEST_CASE("commands") {
  Options o;
  std::ostringstream out, err;
  SUBCASE("verify needs ids") { CHECK(cmd_verify({}, false, o, out, err) == kUsage); }
  SUBCASE("verify rejects unknown ids") { CHECK(cmd_verify({"nope"}, false, o, out, err) == kUsage); }
  SUBCASE("verify one claim") {
    CHECK(cmd_verify({"petrie-count"}, false, o, out, err) == kPass);
    const auto j = json::parse(out.str());
    CHECK(j["claims"][0]["computed"] == 24);
  }
  SUBCASE("build rejects unknown targets") { CHECK(cmd_build("nope", o, out, err) == kUsage); }
  SUBCASE("build roli") {
    CHECK(cmd_build("roli", o, out, err) == kPass);
    const auto j = json::parse(out.str());
    CHECK(j["artifact"]["f_vector"] == json({16, 32, 12, 4}));
  }
  SUBCASE("build cover") {
    CHECK(cmd_build("cover", o, out, err) == kPass);
    const auto j = json::parse(out.str());
    CHECK(j["pass"] == true);
  }
  SUBCASE("text format") {
    o.format = "text";
    CHECK(cmd_build("mk", o, out, err) == kPass);
    CHECK(out.str().find("claims pass") != std::string::npos);
  }
  SUBCASE("bad format") {
    o.format = "xml";
    CHECK(cmd_build("cube", o, out, err) == kUsage);
  }
  SUBCASE("zero scale") {
    auto spec = coxeter_preset();
    spec.scale = 0;
    CHECK(cmd_project(spec, o, out, err) == kUsage);
  }
}

TEST_CASE("reports are identical across runs") {
  Options o;
  CHECK(build_report("map", o).to_json() == build_report("map", o).to_json());
}
