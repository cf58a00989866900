#include "forge/cli/battery.hpp"

#include <algorithm>
#include <cmath>

#include "forge/cli/projection.hpp"

namespace forge::cli {

namespace {

SignedPerm block(const SignedPerm& a, const SignedPerm& b) { return block_pair(a, b); }

std::vector<std::string> normalized(std::vector<std::string> xs) {
  for (auto& x : xs) x = normalize_cyclic_digits(x);
  std::sort(xs.begin(), xs.end());
  return xs;
}

json class_split(const std::vector<PetriePolygon>& ps) {
  int r = 0, l = 0;
  for (const auto& p : ps) (chiral_class(p) == ChiralClass::R ? r : l)++;
  return {{"R", r}, {"L", l}};
}

json covering_json(const CoveringReport& rep) {
  return {{"multiplicity", rep.multiplicity},
          {"facets_isomorphic", rep.facets_isomorphic},
          {"vertex_figures_isomorphic", rep.vertex_figures_isomorphic}};
}

json covering_summary(const RankedIncidenceStructure& cover, const RankedIncidenceStructure& base, const FaceMap& map) {
  try {
    return covering_json(verify_covering(cover, base, map));
  } catch (const NotACovering& e) {
    return {{"error", e.what()}};
  }
}

// Everything the battery inspects, built once.
struct Scene {
  NamedScene s;
  ConcreteGroup G, Gp;
  CosetGeometry<SignedPerm> cube;
  MapM m;
  Roli roli, bar;
  Cover cover;
  PointLabels labels;
  Configuration conf;

  explicit Scene(const Options& o)
      : s(build_atlas()),
        G(cube_group(s)),
        Gp(rotation_group(s)),
        cube(polytope_from_reflections(G)),
        m(build_map_M(s)),
        roli(build_roli(s)),
        bar(build_enantiomorph(s)),
        cover(build_cover(s, roli, bar)),
        labels(configuration_labels(m, s, o.seed)),
        conf(build_configuration(labels)) {}
};

void group_orders(const Scene& x, const Options& o, std::vector<Claim>& out) {
  const char* a = "group orders";
  out.push_back(equal_claim("order.G", 1, 384, x.G.order(), a));
  out.push_back(equal_claim("order.G-plus", 1, 192, x.Gp.order(), a));
  out.push_back(equal_claim("order.map-rotations", 1, 48, x.m.rotations.order(), a));
  out.push_back(equal_claim("order.map-group", 1, 96, presented_group(map_presentation(), o.cap).order(), a));
  out.push_back(equal_claim("order.map-automorphisms", 1, 96, automorphism_count(x.m.geometry.poset), a));
  out.push_back(equal_claim("order.T-plus", 1, 384, x.cover.rotations.order(), a));
  out.push_back(equal_claim("order.T", 1, 768, x.cover.group.order(), a));
  const auto gamma = ConcreteGroup::closure({x.s["gamma1"], x.s["gamma2"]});
  out.push_back(equal_claim("order.gamma", 1, 24, gamma.order(), a));
}

void coset_enumeration(const Scene& x, const Options& o, std::vector<Claim>& out) {
  const char* a = "coset enumeration";
  out.push_back(equal_claim("cosets.map-over-sigma1", 2, 6,
                            enumerate_cosets(map_rotation_presentation(), {{1}}, o.cap).index(), a));
  out.push_back(equal_claim("cosets.roli-partial-over-sigma12", 2, 8,
                            enumerate_cosets(roli_presentation(false), {{1}, {2}}, o.cap).index(), a));
  const auto roli_pg = presented_group(roli_presentation(), o.cap);
  out.push_back(equal_claim("presentation.roli-order", 2, 192, roli_pg.order(), a));
  out.push_back(equal_claim("presentation.roli-matches-G-plus", 2, true,
                            generator_map_is_isomorphism(roli_pg.generators(), x.s.sigma(), o.cap) &&
                                ConcreteGroup::closure(x.s.sigma()).same_elements(x.Gp),
                            a));
  out.push_back(equal_claim("presentation.333-order", 2, 24, presented_group(presentation_333(), o.cap).order(), a));
  out.push_back(equal_claim("relators.sigma", 2, true,
                            verify_relators(x.s.sigma(), roli_presentation()) &&
                                verify_relators(std::vector<SignedPerm>{x.s["sigma1"], x.s["sigma2"]}, map_rotation_presentation()),
                            a));
  out.push_back(equal_claim("relators.tau", 6, true, verify_relators(x.s.tau(), cover_presentation()), a));
  out.push_back(equal_claim("presentation.cover-order", 6, 768, presented_group(cover_presentation(), o.cap).order(), a));
  std::string literal;
  try {
    literal = "order " + std::to_string(presented_group(cover_presentation(CoverReading::Literal),
                                                        std::min<std::size_t>(o.cap, 200000))
                                            .order());
  } catch (const CapExceeded&) {
    literal = "cap exceeded";
  }
  out.push_back(equal_claim("presentation.cover-literal-reading", 0, "cap exceeded", literal, a));
}

void petrie(const Scene& x, std::vector<Claim>& out) {
  const char* a = "Petrie polygons";
  const auto slow = petrie_polygons(false);
  const auto fast = petrie_polygons(true);
  out.push_back(equal_claim("petrie-count", 3, 24, slow.size(), a));
  out.push_back(equal_claim("petrie.brute-force-equals-orbit", 3, true, slow == fast, a));
  out.push_back(equal_claim("petrie.class-split", 3, json({{"R", 12}, {"L", 12}}), class_split(slow), a));
  std::set<std::string> dr, dl;
  for (const auto& p : slow) {
    (chiral_class(p) == ChiralClass::R ? dr : dl).insert(rational_json(petrie_determinant(p)).get<std::string>());
  }
  out.push_back(equal_claim("petrie.determinants", 3, json({{"R", json::array({"8"})}, {"L", json::array({"-8"})}}), json({{"R", dr}, {"L", dl}}), a));
  out.push_back(equal_claim("petrie.base-octagon-class", 3, "R", to_string(chiral_class(x.s.C)), a));
  const auto stab = setwise_stabilizer(x.G, x.s.C.vertex_set());
  out.push_back(equal_claim("petrie.stabilizer-order", 3, 16, stab.order(), a));
  const auto k = ConcreteGroup::closure({x.s["mu0"], x.s["mu1"]});
  out.push_back(equal_claim("petrie.stabilizer-dihedral", 0, true, k.same_elements(stab) && stab.is_subgroup_of(x.Gp), a));
  out.push_back(equal_claim("petrie.companion", 0, true, companion(x.s.C) == x.s.C_star, a));
}

void map_battery(const Scene& x, const Options& o, std::vector<Claim>& out) {
  const char* a = "the map of type {8,3}";
  const auto& s = x.s;
  out.push_back(equal_claim("map.f-vector", 4, json({16, 24, 6}), x.m.geometry.poset.f_vector(), a));
  std::vector<std::string> got;
  for (const auto& oct : x.m.octagons) got.push_back(alternate_labels(oct, x.labels));
  out.push_back(equal_claim("map.octagon-labels", 4, normalized({"0246", "1357", "0541", "1256", "2367", "0743"}),
                            normalized(got), a));
  const auto gp = generalized_petersen(8, 3);
  out.push_back(equal_claim("map.levi-is-GP(8,3)", 4, true, count_isomorphisms(x.m.levi, gp) > 0, a));
  out.push_back(equal_claim("map.levi-automorphisms", 4, 96, count_isomorphisms(x.m.levi, x.m.levi), a));

  const auto& s1 = s["sigma1"];
  const auto& s2 = s["sigma2"];
  const auto ext = extend_homomorphism(x.m.rotations, std::vector<SignedPerm>{inverse(s1), s1 * s1 * s2});
  json auto_json = {{"extends", ext.ok()}};
  if (ext.ok()) {
    const auto& h = *ext.hom;
    auto_json["injective"] = h.injective();
    auto_json["involutory"] = h(h(s1)) == s1 && h(h(s2)) == s2;
  }
  out.push_back(equal_claim("map.rotation-automorphism", 4,
                            json({{"extends", true}, {"injective", true}, {"involutory", true}}), auto_json, a));
  const auto pg6 = presented_group(map_presentation(), o.cap);
  const auto& t = pg6.generators();
  out.push_back(equal_claim("map.full-group-contains-rotations", 4, true,
                            generator_map_is_isomorphism(std::vector<Perm>{t[0] * t[1], t[1] * t[2]},
                                                         std::vector<SignedPerm>{s1, s2}, o.cap),
                            a));
  const auto t_concrete = map_reflections(x.m, s);
  const auto full = PermGroup::closure(t_concrete, {"t0", "t1", "t2"});
  out.push_back(equal_claim("map.full-group-from-automorphism", 4,
                            json({{"relators_hold", true}, {"order", 96}, {"matches_presentation", true}}),
                            json({{"relators_hold", verify_relators(t_concrete, map_presentation())},
                                  {"order", full.order()},
                                  {"matches_presentation", generator_map_is_isomorphism(t, t_concrete, o.cap)}}),
                            a));
  const auto w = geometric_chirality_M(x.m, s);
  out.push_back(equal_claim("map.geometric-chirality", 4,
                            json({{"mu0_preserves_edges", false},
                                  {"non_rotations_preserving", 0},
                                  {"rotations_preserving", 48},
                                  {"stabilizer_is_rotation_group", true}}),
                            json({{"mu0_preserves_edges", w.mu0_preserves_edges},
                                  {"non_rotations_preserving", w.non_rotations_preserving},
                                  {"rotations_preserving", w.rotations_preserving},
                                  {"stabilizer_is_rotation_group", w.rotation_stabilizer_is_rotation_group}}),
                            a));
  std::map<Edge, int> on;
  for (const auto& oct : x.m.octagons) {
    for (const auto& e : oct.edges()) ++on[e];
  }
  out.push_back(equal_claim("map.edges-on-two-octagons", 0, true,
                            on.size() == 24 && std::all_of(on.begin(), on.end(), [](const auto& kv) { return kv.second == 2; }),
                            a));
  const auto cl = classify(x.m.geometry.poset, x.m.geometry.generator_actions());
  out.push_back(equal_claim("map.rotation-flag-orbits", 0, 2, cl.flag_orbits, a));
}

void roli_battery(const Scene& x, std::vector<Claim>& out) {
  const char* a = "the chiral polytope of type {8,3,3}";
  const auto& s = x.s;
  const auto& p = x.roli.geometry.poset;
  out.push_back(equal_claim("roli.f-vector", 5, json({16, 32, 12, 4}), p.f_vector(), a));
  std::vector<std::size_t> orders;
  for (const auto& h : x.roli.geometry.subgroups) orders.push_back(h.order());
  out.push_back(equal_claim("roli.stabilizer-orders", 5, json({12, 6, 16, 48}), orders, a));
  const auto cl = classify(p, x.roli.geometry.generator_actions());
  out.push_back(equal_claim("roli.classification", 5,
                            json({{"kind", "chiral"}, {"flag_orbits", 2}, {"adjacent_flags_split", true}}),
                            json({{"kind", to_string(cl.kind)},
                                  {"flag_orbits", cl.flag_orbits},
                                  {"adjacent_flags_split", cl.adjacent_flags_split}}),
                            a));
  const auto& s1 = s["sigma1"];
  const auto& s2 = s["sigma2"];
  const auto& s3 = s["sigma3"];
  const std::vector<SignedPerm> images{inverse(s1), s1 * s1 * s2, s3};
  const auto ext = extend_homomorphism(x.roli.group, images);
  const Word w = repeat_word({1, 3}, 4);
  const bool accepted = witnesses_non_automorphism(w, s.sigma(), images);
  const bool is_zeta = power(s1 * s3, 4) == s["zeta"];
  const bool is_one = power(inverse(s1) * s3, 4).is_identity();
  json computed = {{"extends", ext.ok()},
                   {"witness_accepted", accepted},
                   {"s1s3_4_is_zeta", is_zeta},
                   {"s1inv_s3_4_is_identity", is_one}};
  const bool pass = !ext.ok() && accepted && is_zeta && is_one;
  if (!ext.ok()) computed["first_conflict"] = word_to_string(ext.witness, {"s1", "s2", "s3"});
  out.push_back(check_claim("roli.chirality-witness", 5,
                            json({{"extends", false},
                                  {"witness_accepted", true},
                                  {"s1s3_4_is_zeta", true},
                                  {"s1inv_s3_4_is_identity", true}}),
                            computed, pass, a));
  out.push_back(equal_claim("roli.schlafli", 5, json({8, 3, 3}), schlafli_type(p), a));

  std::set<PetriePolygon> class_r;
  for (const auto& q : petrie_polygons(true)) {
    if (chiral_class(q) == ChiralClass::R) class_r.insert(q);
  }
  out.push_back(equal_claim("roli.two-faces-are-class-R", 0, true,
                            std::set<PetriePolygon>(x.roli.polygons.begin(), x.roli.polygons.end()) == class_r, a));
  std::set<EdgeSet> copies;
  for (const auto& g : x.Gp.elements()) copies.insert(act(x.m.edges, g));
  out.push_back(equal_claim("roli.facets-are-copies-of-M", 0, true,
                            copies.size() == 4 && std::set<EdgeSet>(x.roli.facet_edges.begin(), x.roli.facet_edges.end()) == copies,
                            a));
  out.push_back(equal_claim("roli.automorphisms", 0, 192, automorphism_count(p), a));

  const auto& pb = x.bar.geometry.poset;
  out.push_back(equal_claim("enantiomorph.f-vector", 0, json({16, 32, 12, 4}), pb.f_vector(), a));
  out.push_back(equal_claim("enantiomorph.same-group", 0, true, x.bar.group.same_elements(x.roli.group), a));
  out.push_back(equal_claim("enantiomorph.abstractly-isomorphic", 0, true, find_isomorphism(p, pb).has_value(), a));
  int rot = 0, non = 0;
  for (const auto& g : x.G.elements()) {
    const auto f = induced_face_map(x.roli, x.bar, g);
    if (!f) continue;
    const auto rep = covering_summary(p, pb, *f);
    if (rep.contains("multiplicity") && rep["multiplicity"] == 1) (determinant(g) == 1 ? rot : non)++;
  }
  out.push_back(equal_claim("enantiomorph.isomorphisms-induced-by-cube-symmetries", 0,
                            json({{"rotations", 192}, {"non_rotations", 0}}),
                            json({{"rotations", rot}, {"non_rotations", non}}), a));
}

void cover_battery(const Scene& x, std::vector<Claim>& out) {
  const char* a = "the minimal regular cover";
  const auto& s = x.s;
  const auto& c = x.cover;
  const auto& p = c.geometry.poset;
  out.push_back(equal_claim("cover.string-c-group", 6, json({{"string", true}, {"intersection", true}}),
                            json({{"string", string_condition(s.tau())}, {"intersection", intersection_condition(s.tau())}}),
                            a));
  const auto cl = classify(p, c.geometry.generator_actions());
  out.push_back(equal_claim("cover.classification", 6, json({{"kind", "regular"}, {"flags", 768}}),
                            json({{"kind", to_string(cl.kind)}, {"flags", cl.flag_count}}), a));
  out.push_back(equal_claim("cover.schlafli", 6, json({8, 3, 3}), schlafli_type(p), a));
  out.push_back(equal_claim("cover.f-vector", 6, json({32, 64, 24, 8}), p.f_vector(), a));
  const json two_to_one = {{"multiplicity", 2}, {"facets_isomorphic", true}, {"vertex_figures_isomorphic", true}};
  out.push_back(equal_claim("cover.phi-R", 6, two_to_one, covering_summary(p, x.roli.geometry.poset, c.to_roli), a));
  out.push_back(equal_claim("cover.phi-L", 6, two_to_one, covering_summary(p, x.bar.geometry.poset, c.to_enantiomorph), a));
  const auto r = s.rho();
  out.push_back(equal_claim("cover.quotient-criterion", 6, true,
                            generator_map_is_isomorphism(std::vector<SignedPerm>{s["tau1"], s["tau2"], s["tau3"]},
                                                         std::vector<SignedPerm>{r[1], r[2], r[3]}),
                            a));
  const SignedPerm one = SignedPerm::identity(4), zeta = s["zeta"];
  const std::set<SignedPerm> expected_centre{block(one, one), block(zeta, one), block(one, zeta), block(zeta, zeta)};
  const auto z = centre(c.rotations);
  out.push_back(equal_claim("cover.centre-T-plus", 6, true,
                            std::set<SignedPerm>(z.elements().begin(), z.elements().end()) == expected_centre, a));
  const auto& k1 = s["kappa1"];
  const auto& k3 = s["kappa3"];
  out.push_back(equal_claim("cover.centre-words", 6,
                            json({{"(zeta,1)", true}, {"(1,zeta)", true}, {"(zeta,zeta)", true}}),
                            json({{"(zeta,1)", power(k1 * k3, 4) == block(zeta, one)},
                                  {"(1,zeta)", power(inverse(k1) * k3, 4) == block(one, zeta)},
                                  {"(zeta,zeta)", power(k1, 4) == block(zeta, zeta)}}),
                            a));

  // Kernels of the three quotient maps of the rotation group.
  auto kernel_of = [&](const std::vector<SignedPerm>& images) {
    const auto e = extend_homomorphism(c.rotations, images);
    if (!e.ok()) return std::set<SignedPerm>{};
    const auto k = e.hom->kernel();
    return std::set<SignedPerm>(k.begin(), k.end());
  };
  const auto to_cube = extend_homomorphism(c.group, r);
  std::set<SignedPerm> cube_kernel;
  if (to_cube.ok()) {
    const auto k = to_cube.hom->kernel();
    cube_kernel.insert(k.begin(), k.end());
  }
  out.push_back(equal_claim("cover.quotients", 0,
                            json({{"to_roli", true}, {"to_enantiomorph", true}, {"to_cube", true}}),
                            json({{"to_roli", kernel_of(s.sigma()) == std::set<SignedPerm>{block(one, one), block(one, zeta)}},
                                  {"to_enantiomorph",
                                   kernel_of(s.sigma_bar()) == std::set<SignedPerm>{block(one, one), block(zeta, one)}},
                                  {"to_cube", cube_kernel == std::set<SignedPerm>{block(one, one), block(zeta, zeta)}}}),
                            a));
  bool vertices_ok = true;
  for (int i = 0; i < p.face_count(0); ++i) {
    const auto& q = c.vertex_points[i];
    const PointVec left(q.begin(), q.begin() + 4), right(q.begin() + 4, q.end());
    vertices_ok = vertices_ok && left == x.roli.vertex_points[c.to_roli[0][i]] &&
                  right == x.bar.vertex_points[c.to_enantiomorph[0][i]];
  }
  out.push_back(equal_claim("cover.vertex-projections", 0, true, vertices_ok, a));
}

void mk_battery(const Scene& x, std::vector<Claim>& out) {
  const char* a = "the configuration 8_3";
  const Q3Matrix J = build_J(), L = build_L();
  Q3Matrix minus_i = scale(identity_q3(), Q3(-1));
  out.push_back(equal_claim("mk.J-squared", 7, true, multiply(J, J) == minus_i, a));
  out.push_back(equal_claim("mk.J-orthogonal", 7, true, multiply(J, transpose(J)) == identity_q3(), a));
  out.push_back(equal_claim("mk.a1J-b1", 7, true, multiply(L[0], J) == L[1], a));
  out.push_back(equal_claim("mk.a2J-b2", 7, true, multiply(L[2], J) == L[3], a));
  out.push_back(equal_claim("mk.a1a1-b1b1", 7, true, dot(L[0], L[0]) == dot(L[1], L[1]), a));
  out.push_back(equal_claim("mk.a1b1-zero", 7, true, dot(L[0], L[1]).is_zero(), a));
  std::vector<int> rows(8, 0), cols(8, 0);
  for (int pt = 0; pt < 8; ++pt) {
    for (int ln = 0; ln < 8; ++ln) {
      rows[pt] += x.conf.incidence[pt][ln];
      cols[ln] += x.conf.incidence[pt][ln];
    }
  }
  out.push_back(equal_claim("mk.incidence", 7,
                            json({{"points", 8}, {"lines", 8}, {"row_sums", std::vector<int>(8, 3)}, {"col_sums", std::vector<int>(8, 3)}}),
                            json({{"points", x.conf.points.size()}, {"lines", x.conf.lines.size()}, {"row_sums", rows}, {"col_sums", cols}}),
                            a));
  const QField r = QField::r(), i = QField::i(), one = 1;
  const MKLine& l167 = x.conf.lines[6];
  const std::array<QField, 3> want{r * (one - i), 2, QField(2) * r * (one + i)};
  json got_coeffs = json::array();
  json want_coeffs = json::array();
  for (int k = 0; k < 3; ++k) {
    got_coeffs.push_back(l167.coeffs[k].to_string());
    want_coeffs.push_back(want[k].to_string());
  }
  out.push_back(check_claim("mk.line-167", 7, want_coeffs, got_coeffs,
                            l167.coeffs == want && std::set<int>(l167.points.begin(), l167.points.end()) == std::set<int>{1, 6, 7},
                            a));
  const auto tc = check_table(x.conf);
  json table = {{"literal_match", tc.literal_match}, {"collineations", tc.collineation_count}};
  if (tc.relabeling) table["relabeling"] = *tc.relabeling;
  out.push_back(check_claim("mk.coordinate-table", 7, json({{"match", true}}), table, tc.relabeling.has_value(), a));
  const auto g = group_333(x.s);
  out.push_back(equal_claim("mk.gamma-relations", 7,
                            json({{"gamma1_cubed", true}, {"braid", true}, {"gamma2_cubed", true}}),
                            json({{"gamma1_cubed", g.gamma1_cubed}, {"braid", g.braid}, {"gamma2_cubed", g.gamma2_cubed}}),
                            a));
  out.push_back(equal_claim("mk.centralizer-of-J", 7, json({{"order", 24}, {"equals_gamma_group", true}}),
                            json({{"order", g.centralizer.order()}, {"equals_gamma_group", g.centralizer.same_elements(g.group)}}),
                            a));
  const auto bt = binary_tetrahedral_check(x.s);
  out.push_back(equal_claim("mk.binary-tetrahedral", 7, json({{"relations", true}, {"order", 24}, {"normal", true}}),
                            json({{"relations", bt.relations_hold}, {"order", bt.order}, {"normal", bt.normal}}), a));
  out.push_back(equal_claim("mk.cross-polytope", 0, true, cross_polytope_check(x.labels).ok(), a));
  const auto pairs = quadrangle_pairings(x.m, x.labels, x.conf);
  out.push_back(equal_claim("mk.quadrangle-pairings", 0, json({{"pairs", 3}, {"all_inscribed", true}}),
                            json({{"pairs", pairs.size()},
                                  {"all_inscribed", std::all_of(pairs.begin(), pairs.end(),
                                                                [](const auto& q) { return q.mutually_inscribed; })}}),
                            a));
  out.push_back(equal_claim("mk.coset-index-333", 0, 24, g.coset_index, a));
}

void colourful(const Scene& x, std::vector<Claim>& out) {
  const char* a = "colourful polytopes";
  const auto from_cube = colourful_polytope(coloured_cube_skeleton());
  out.push_back(equal_claim("colourful.cube", 8, true, find_isomorphism(from_cube, x.cube.poset).has_value(), a));
  const auto hemi = central_quotient(x.cube, x.s["zeta"]);
  const auto from_k44 = colourful_polytope(coloured_k44());
  out.push_back(equal_claim("colourful.k44-is-hemi-cube", 8, true, find_isomorphism(from_k44, hemi.poset).has_value(), a));
  const auto& gens = hemi.induced_group.generators();
  Perm prod = gens.front();
  for (std::size_t k = 1; k < gens.size(); ++k) prod = prod * gens[k];
  out.push_back(equal_claim("colourful.hemi-petrie-order", 8, 4, element_order(prod), a));
  out.push_back(equal_claim("colourful.hemi-group-order", 0, 192, hemi.induced_group.order(), a));
}

void projection(const Scene& x, std::vector<Claim>& out) {
  const char* a = "Coxeter-plane projection";
  const auto lengths = projected_edge_lengths(coxeter_preset());
  const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
  out.push_back(check_claim("projection.coxeter-edges-equal", 9, json({{"edges", 32}, {"equal_within", 1e-9}}),
                            json({{"edges", lengths.size()}, {"spread_below_1e-9", *hi - *lo <= 1e-9}}),
                            lengths.size() == 32 && *hi - *lo <= 1e-9, a));
  const auto lam = lambda_preset();
  const auto table = coordinate_table();
  std::vector<Vec2> got, want;
  for (int k = 0; k < 8; ++k) {
    got.push_back(project(lam, x.labels.point[k]));
    want.push_back({table[k][0].re().to_double(), table[k][0].im().to_double()});
  }
  out.push_back(equal_claim("projection.lambda-layout", 9, true, similar(got, want, 1e-9), a));
  const auto ang = petrie_rotation_angles();
  out.push_back(check_claim("projection.petrie-rotation-angles", 0, json({45, 135}),
                            json({std::round(ang[0] * 1e6) / 1e6, std::round(ang[1] * 1e6) / 1e6}),
                            std::abs(ang[0] - 45) < 1e-9 && std::abs(ang[1] - 135) < 1e-9, a));
}

}  // namespace

std::vector<Claim> run_battery(const Options& opts) {
  const Scene x(opts);
  std::vector<Claim> out;
  group_orders(x, opts, out);
  coset_enumeration(x, opts, out);
  petrie(x, out);
  map_battery(x, opts, out);
  roli_battery(x, out);
  cover_battery(x, out);
  mk_battery(x, out);
  colourful(x, out);
  projection(x, out);
  return out;
}

}  // namespace forge::cli
