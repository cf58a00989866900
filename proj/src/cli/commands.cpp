#include "forge/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <set>

namespace forge::cli {

namespace {

json elements_json(const std::vector<SignedPerm>& gs) {
  json out = json::array();
  for (const auto& g : gs) out.push_back(g.to_string());
  return out;
}

json points_json(const std::vector<PointVec>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(point_json(p));
  return out;
}

json classification_json(const Classification& c) {
  return {{"kind", to_string(c.kind)},
          {"flags", c.flag_count},
          {"flag_orbits", c.flag_orbits},
          {"adjacent_flags_split", c.adjacent_flags_split}};
}

json polygons_json(const std::vector<PetriePolygon>& ps) {
  json out = json::array();
  for (const auto& p : ps) {
    json verts = json::array();
    for (const auto& v : p.vertices) verts.push_back(point_json(v));
    out.push_back({{"vertices", verts}, {"colours", p.colours}, {"class", to_string(chiral_class(p))}});
  }
  return out;
}

template <class E>
json subgroup_orders(const CosetGeometry<E>& cg) {
  json out = json::array();
  for (const auto& h : cg.subgroups) out.push_back(h.order());
  return out;
}

void polytope_claims(Report& r, const std::string& prefix, const RankedIncidenceStructure& p,
                     const std::vector<FaceAction>& gens, json f_vector, json type, const std::string& kind,
                     int flags) {
  const auto cl = classify(p, gens);
  r.claims.push_back(equal_claim(prefix + ".f-vector", 0, std::move(f_vector), p.f_vector(), "face counts"));
  r.claims.push_back(equal_claim(prefix + ".schlafli", 0, std::move(type), schlafli_type(p), "Schlafli type"));
  r.claims.push_back(equal_claim(prefix + ".classification", 0, json({{"kind", kind}, {"flags", flags}}),
                                 json({{"kind", to_string(cl.kind)}, {"flags", cl.flag_count}}), "flag orbits"));
  r.artifact["f_vector"] = p.f_vector();
  r.artifact["classification"] = classification_json(cl);
}

json roli_artifact(const Roli& x) {
  return {{"group_order", x.group.order()},
          {"generators", elements_json(x.group.generators())},
          {"stabilizer_orders", subgroup_orders(x.geometry)},
          {"vertices", points_json(x.vertex_points)},
          {"two_faces", polygons_json(x.polygons)}};
}

Report build_cube(const NamedScene& s) {
  Report r;
  r.object = "cube";
  const auto g = cube_group(s);
  const auto cg = polytope_from_reflections(g);
  polytope_claims(r, "cube", cg.poset, cg.generator_actions(), json({16, 32, 24, 8}), json({4, 3, 3}), "regular", 384);
  r.claims.push_back(equal_claim("cube.group-order", 0, 384, g.order(), "group orders"));
  r.artifact["generators"] = elements_json(s.rho());
  r.artifact["group_order"] = g.order();
  return r;
}

Report build_hemi(const NamedScene& s) {
  Report r;
  r.object = "hemi";
  const auto cg = polytope_from_reflections(cube_group(s));
  const auto q = central_quotient(cg, s["zeta"]);
  polytope_claims(r, "hemi", q.poset, q.generator_actions, json({8, 16, 12, 4}), json({4, 3, 3}), "regular", 192);
  const auto& gens = q.induced_group.generators();
  Perm prod = gens.front();
  for (std::size_t k = 1; k < gens.size(); ++k) prod = prod * gens[k];
  r.claims.push_back(equal_claim("hemi.generator-product-order", 0, 4, element_order(prod), "colourful polytopes"));
  r.claims.push_back(equal_claim("hemi.isomorphic-to-colourful-k44", 0, true,
                                 find_isomorphism(colourful_polytope(coloured_k44()), q.poset).has_value(),
                                 "colourful polytopes"));
  r.artifact["group_order"] = q.induced_group.order();
  return r;
}

Report build_map(const NamedScene& s, const Options& o) {
  Report r;
  r.object = "map";
  const auto m = build_map_M(s);
  polytope_claims(r, "map", m.geometry.poset, m.geometry.generator_actions(), json({16, 24, 6}), json({8, 3}), "chiral",
                  96);
  r.claims.push_back(equal_claim("map.rotation-order", 0, 48, m.rotations.order(), "group orders"));
  r.claims.push_back(equal_claim("map.levi-is-GP(8,3)", 0, true, count_isomorphisms(m.levi, generalized_petersen(8, 3)) > 0,
                                 "Levi graph"));
  const auto labels = configuration_labels(m, s, o.seed);
  json octs = json::array();
  for (const auto& oct : m.octagons) octs.push_back(alternate_labels(oct, labels));
  r.artifact["generators"] = elements_json(m.rotations.generators());
  r.artifact["vertices"] = points_json(m.vertex_points);
  r.artifact["octagons"] = polygons_json(m.octagons);
  r.artifact["octagon_labels"] = octs;
  return r;
}

Report build_roli_report(const NamedScene& s, bool bar) {
  Report r;
  r.object = bar ? "enantiomorph" : "roli";
  const auto x = bar ? build_enantiomorph(s) : build_roli(s);
  polytope_claims(r, r.object, x.geometry.poset, x.geometry.generator_actions(), json({16, 32, 12, 4}),
                  json({8, 3, 3}), "chiral", 384);
  r.claims.push_back(equal_claim(r.object + ".group-order", 0, 192, x.group.order(), "group orders"));
  std::vector<std::size_t> orders;
  for (const auto& h : x.geometry.subgroups) orders.push_back(h.order());
  r.claims.push_back(equal_claim(r.object + ".stabilizer-orders", 0, json({12, 6, 16, 48}), orders, "face stabilizers"));
  const json art = roli_artifact(x);
  for (const auto& [k, v] : art.items()) r.artifact[k] = v;
  return r;
}

Report build_cover_report(const NamedScene& s) {
  Report r;
  r.object = "cover";
  const auto roli = build_roli(s);
  const auto bar = build_enantiomorph(s);
  const auto c = build_cover(s, roli, bar);
  polytope_claims(r, "cover", c.geometry.poset, c.geometry.generator_actions(), json({32, 64, 24, 8}),
                  json({8, 3, 3}), "regular", 768);
  r.claims.push_back(equal_claim("cover.group-order", 0, 768, c.group.order(), "group orders"));
  r.claims.push_back(equal_claim("cover.rotation-order", 0, 384, c.rotations.order(), "group orders"));
  const auto to_roli = verify_covering(c.geometry.poset, roli.geometry.poset, c.to_roli);
  const auto to_bar = verify_covering(c.geometry.poset, bar.geometry.poset, c.to_enantiomorph);
  r.claims.push_back(equal_claim("cover.multiplicities", 0, json({2, 2}), json({to_roli.multiplicity, to_bar.multiplicity}),
                                 "the minimal regular cover"));
  r.artifact["generators"] = elements_json(s.tau());
  r.artifact["base_vertex"] = point_json(c.base_vertex);
  r.artifact["vertices"] = points_json(c.vertex_points);
  return r;
}

Report build_mk(const NamedScene& s, const Options& o) {
  Report r;
  r.object = "mk";
  const auto m = build_map_M(s);
  const auto labels = configuration_labels(m, s, o.seed);
  const auto conf = build_configuration(labels);
  int total = 0;
  for (const auto& row : conf.incidence) total += std::count(row.begin(), row.end(), 1);
  r.claims.push_back(equal_claim("mk.incidences", 0, 24, total, "the configuration 8_3"));
  const auto tc = check_table(conf);
  r.claims.push_back(check_claim("mk.coordinate-table", 0, json({{"match", true}}),
                                 json({{"literal_match", tc.literal_match}}), tc.relabeling.has_value(),
                                 "the configuration 8_3"));
  const auto g = group_333(s);
  r.claims.push_back(equal_claim("mk.group-order", 0, 24, g.group.order(), "the group 3[3]3"));
  r.claims.push_back(equal_claim("mk.centralizer-order", 0, 24, g.centralizer.order(), "the group 3[3]3"));

  json points = json::array();
  for (const auto& p : conf.points) {
    points.push_back({{"label", p.label},
                      {"ambient", point_json(p.ambient)},
                      {"z1", qfield_json(p.z[0])},
                      {"z2", qfield_json(p.z[1])}});
  }
  json lines = json::array();
  for (const auto& l : conf.lines) {
    json coeffs = json::array();
    for (const auto& c : l.coeffs) coeffs.push_back(qfield_json(c));
    lines.push_back({{"index", l.index}, {"points", l.points}, {"coeffs", coeffs}});
  }
  r.artifact["points"] = points;
  r.artifact["lines"] = lines;
  r.artifact["incidence"] = conf.incidence;
  if (tc.relabeling) r.artifact["table_relabeling"] = *tc.relabeling;
  r.artifact["group"] = {{"generators", elements_json({s["gamma1"], s["gamma2"]})},
                         {"order", g.group.order()},
                         {"centralizer_order", g.centralizer.order()},
                         {"relations", {{"gamma1_cubed", g.gamma1_cubed}, {"gamma2_cubed", g.gamma2_cubed}, {"braid", g.braid}}}};
  return r;
}

int exit_for(const Report& r, std::ostream& err) {
  for (const auto& c : r.claims) {
    if (!c.pass) {
      err << "claim failed: " << c.id << " (expected " << c.expected.dump() << ", computed " << c.computed.dump()
          << ")\n";
      return kClaimFailure;
    }
  }
  return kPass;
}

}  // namespace

Report build_report(const std::string& target, const Options& opts) {
  const auto start = std::chrono::steady_clock::now();
  const NamedScene s = build_atlas();
  Report r;
  if (target == "cube") {
    r = build_cube(s);
  } else if (target == "hemi") {
    r = build_hemi(s);
  } else if (target == "map") {
    r = build_map(s, opts);
  } else if (target == "roli") {
    r = build_roli_report(s, false);
  } else if (target == "enantiomorph") {
    r = build_roli_report(s, true);
  } else if (target == "cover") {
    r = build_cover_report(s);
  } else if (target == "mk") {
    r = build_mk(s, opts);
  } else {
    throw std::invalid_argument("unknown target: " + target);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int cmd_build(const std::string& target, const Options& opts, std::ostream& out, std::ostream& err) {
  Report r;
  try {
    r = build_report(target, opts);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "build failed: " << e.what() << '\n';
    return kUsage;
  }
  const int code = emit(r, opts, out, err);
  return code != kPass ? code : exit_for(r, err);
}

int cmd_verify(const std::vector<std::string>& ids, bool all, const Options& opts, std::ostream& out,
               std::ostream& err) {
  if (!all && ids.empty()) {
    err << "usage error: give claim ids or --all\n";
    return kUsage;
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<Claim> claims;
  try {
    claims = run_battery(opts);
  } catch (const std::exception& e) {
    err << "build failed: " << e.what() << '\n';
    return kUsage;
  }
  Report r;
  r.object = "battery";
  if (all) {
    r.claims = std::move(claims);
  } else {
    for (const auto& id : ids) {
      auto it = std::find_if(claims.begin(), claims.end(), [&](const Claim& c) { return c.id == id; });
      if (it == claims.end()) {
        err << "usage error: unknown claim id " << id << '\n';
        return kUsage;
      }
      r.claims.push_back(*it);
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int code = emit(r, opts, out, err);
  return code != kPass ? code : exit_for(r, err);
}

int cmd_project(const ProjectionSpec& spec, const Options& opts, std::ostream& out, std::ostream& err) {
  std::string svg;
  PointLabels labels;
  try {
    validate(spec);
    const NamedScene s = build_atlas();
    labels = configuration_labels(build_map_M(s), s, opts.seed);
    svg = render_svg(spec, &labels);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  if (opts.out.empty()) {
    out << svg;
    return kPass;
  }
  std::ofstream f(opts.out);
  if (!f || !(f << svg)) {
    err << "cannot write " << opts.out << '\n';
    return kUsage;
  }
  f.close();

  Report r;
  r.object = "projection";
  r.artifact = {{"svg", opts.out}, {"preset", spec.name}, {"scale", spec.scale}, {"colours", spec.colours}};
  const auto lengths = projected_edge_lengths(spec);
  if (!lengths.empty()) {
    const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
    r.artifact["edge_length_spread"] = *hi - *lo;
    if (spec.name == "coxeter") {
      r.claims.push_back(check_claim("projection.edges-equal", 0, json({{"equal_within", 1e-9}}),
                                     json({{"edges", lengths.size()}}), *hi - *lo <= 1e-9, "Coxeter-plane projection"));
    }
  }
  if (spec.name == "lambda") {
    const auto table = coordinate_table();
    std::vector<Vec2> got, want;
    for (int k = 0; k < 8; ++k) {
      got.push_back(project(spec, labels.point[k]));
      want.push_back({table[k][0].re().to_double(), table[k][0].im().to_double()});
    }
    r.claims.push_back(equal_claim("projection.two-squares", 0, true, similar(got, want, 1e-9), "cross-polytope view"));
  }
  Options report_opts = opts;
  report_opts.out.clear();
  const int code = emit(r, report_opts, out, err);
  return code != kPass ? code : exit_for(r, err);
}

int emit(const Report& r, const Options& opts, std::ostream& out, std::ostream& err) {
  std::string text;
  if (opts.format == "json") {
    text = r.to_json().dump(2) + "\n";
  } else if (opts.format == "text") {
    text = r.to_text();
  } else {
    err << "usage error: unknown format " << opts.format << '\n';
    return kUsage;
  }
  if (opts.out.empty()) {
    out << text;
    return kPass;
  }
  std::ofstream f(opts.out);
  if (!f || !(f << text)) {
    err << "cannot write " << opts.out << '\n';
    return kUsage;
  }
  return kPass;
}

}  // namespace forge::cli
