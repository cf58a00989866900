#include "forge/mkconfig.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace forge {

namespace {

Q3Matrix integer_matrix(const std::array<std::array<int, 4>, 4>& m) {
  Q3Matrix out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i][j] = m[i][j];
  }
  return out;
}

Q3Matrix perm_matrix(const SignedPerm& g) {
  const auto m = g.matrix();
  Q3Matrix out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i][j] = m[i][j];
  }
  return out;
}

bool on_line(const MKLine& l, const Complex2& z) { return l.coeffs[0] * z[0] + l.coeffs[1] * z[1] == l.coeffs[2]; }

MKLine line_through(const Complex2& p, const Complex2& q) {
  QField a = q[1] - p[1];
  QField b = p[0] - q[0];
  QField c = a * p[0] + b * p[1];
  const QField& pivot = b.is_zero() ? a : b;
  if (pivot.is_zero()) throw CollinearityFailure("coincident points do not span a line");
  const QField f = QField(2) / pivot;
  MKLine l;
  l.coeffs = {a * f, b * f, c * f};
  return l;
}

std::array<std::array<int, 3>, 8> line_points() {
  std::array<std::array<int, 3>, 8> out;
  for (int i = 0; i < 8; ++i) out[i] = {i, (i + 1) % 8, (i + 3) % 8};
  return out;
}

}  // namespace

Q3Matrix build_J() {
  return scale(integer_matrix({{{0, 1, -1, -1}, {-1, 0, -1, 1}, {1, 1, 0, 1}, {1, -1, -1, 0}}}), Q3(0, Rational(1, 3)));
}

Q3Matrix build_L() {
  const Q3 s = Q3::sqrt3(), t = Q3(2, 1);
  const Q3Matrix raw{{{s, -1, 1, -t}, {-1, t, s, -1}, {-1, -s, t, 1}, {t, 1, 1, s}}};
  return scale(raw, Q3(0, Rational(1, 6)));
}

Q3Vec to_q3(const PointVec& v) {
  if (v.size() != 4) throw DimensionMismatch(4, static_cast<int>(v.size()));
  Q3Vec out;
  for (int k = 0; k < 4; ++k) out[k] = Q3(v[k]);
  return out;
}

Q3Vec scalar_action(const QField& z, const Q3Vec& u, const Q3Matrix& J) {
  const Q3Vec uj = multiply(u, J);
  Q3Vec out;
  for (int k = 0; k < 4; ++k) out[k] = z.re() * u[k] + z.im() * uj[k];
  return out;
}

Complex2 complexify(const Q3Vec& v) {
  static const Q3Matrix inv = invert(build_L());
  const Q3Vec c = multiply(v, inv);
  return {QField(c[0], c[1]), QField(c[2], c[3])};
}

Complex2 complexify(const PointVec& v) { return complexify(to_q3(v)); }

PointLabels configuration_labels(const MapM& m, const NamedScene& s, LabelSeed seed) {
  const auto sols = solve_point_labels(m, s);
  if (sols.empty()) throw std::logic_error("no consistent point labelling");
  if (seed == LabelSeed::Table) {
    for (const auto& pl : sols) {
      if (check_table(build_configuration(pl)).literal_match) return pl;
    }
  }
  return sols.front();
}

Configuration build_configuration(const PointLabels& labels) {
  Configuration c;
  for (int k = 0; k < 8; ++k) c.points.push_back({k, labels.point[k], complexify(labels.point[k])});
  const auto lp = line_points();
  for (int i = 0; i < 8; ++i) {
    MKLine l = line_through(c.points[lp[i][0]].z, c.points[lp[i][1]].z);
    l.index = i;
    l.points = lp[i];
    if (!on_line(l, c.points[lp[i][2]].z)) {
      throw CollinearityFailure("points of line " + std::to_string(i) + " are not collinear");
    }
    c.lines.push_back(l);
  }
  c.incidence.assign(8, std::vector<int>(8, 0));
  for (int k = 0; k < 8; ++k) {
    for (int i = 0; i < 8; ++i) c.incidence[k][i] = on_line(c.lines[i], c.points[k].z) ? 1 : 0;
  }
  for (int i = 0; i < 8; ++i) {
    int col = 0;
    for (int k = 0; k < 8; ++k) col += c.incidence[k][i];
    if (col != 3) throw CollinearityFailure("line " + std::to_string(i) + " meets " + std::to_string(col) + " points");
  }
  return c;
}

std::array<Complex2, 8> coordinate_table() {
  const QField r = QField::r(), i = QField::i(), one = 1;
  return {{{r, one - i},
           {-one + i, r},
           {r * i, -one - i},
           {-one - i, -(r * i)},
           {-r, -one + i},
           {one - i, -r},
           {-(r * i), one + i},
           {one + i, r * i}}};
}

std::vector<std::array<int, 8>> configuration_collineations() {
  std::set<std::set<int>> lines;
  for (const auto& l : line_points()) lines.insert({l.begin(), l.end()});
  std::vector<std::array<int, 8>> out;
  std::array<int, 8> p;
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& l : line_points()) {
      if (!lines.count({p[l[0]], p[l[1]], p[l[2]]})) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

TableCheck check_table(const Configuration& c) {
  const auto table = coordinate_table();
  TableCheck t;
  const auto coll = configuration_collineations();
  t.collineation_count = coll.size();
  auto matches = [&](const std::array<int, 8>& p) {
    for (int k = 0; k < 8; ++k) {
      if (!(table[p[k]] == c.points[k].z)) return false;
    }
    return true;
  };
  std::array<int, 8> id;
  std::iota(id.begin(), id.end(), 0);
  t.literal_match = matches(id);
  if (t.literal_match) {
    t.relabeling = id;
    return t;
  }
  for (const auto& p : coll) {
    if (matches(p)) {
      t.relabeling = p;
      break;
    }
  }
  return t;
}

std::vector<QuadranglePairing> quadrangle_pairings(const MapM& m, const PointLabels& labels, const Configuration& c) {
  std::vector<std::string> quads;
  for (const auto& o : m.octagons) quads.push_back(alternate_labels(o, labels));
  auto digits = [](const std::string& s) {
    std::set<int> out;
    for (char ch : s) out.insert(ch - '0');
    return out;
  };
  // Every side of `outer` lies on a line whose third point is a vertex of `inner`.
  auto inscribed = [&](const std::string& inner, const std::string& outer, std::set<int>& used) {
    const auto in = digits(inner);
    for (std::size_t k = 0; k < outer.size(); ++k) {
      const int a = outer[k] - '0', b = outer[(k + 1) % outer.size()] - '0';
      bool found = false;
      for (const auto& l : c.lines) {
        const std::set<int> pts(l.points.begin(), l.points.end());
        if (!pts.count(a) || !pts.count(b)) continue;
        for (int x : pts) {
          if (x != a && x != b && in.count(x)) {
            found = true;
            used.insert(l.index);
          }
        }
      }
      if (!found) return false;
    }
    return true;
  };
  std::vector<QuadranglePairing> out;
  for (std::size_t i = 0; i < quads.size(); ++i) {
    for (std::size_t j = i + 1; j < quads.size(); ++j) {
      const auto a = digits(quads[i]), b = digits(quads[j]);
      std::set<int> all(a.begin(), a.end());
      all.insert(b.begin(), b.end());
      if (all.size() != 8) continue;
      QuadranglePairing qp;
      qp.first = std::min(quads[i], quads[j]);
      qp.second = std::max(quads[i], quads[j]);
      std::set<int> used;
      qp.mutually_inscribed = inscribed(quads[i], quads[j], used) && inscribed(quads[j], quads[i], used) && used.size() == 8;
      out.push_back(qp);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Presentation presentation_333() {
  return Presentation::make(2, {{1, 1, 1}, {1, 2, 1, -2, -1, -2}}, {"gamma1", "gamma2"});
}

Group333 group_333(const NamedScene& s) {
  Group333 g;
  const auto& g1 = s["gamma1"];
  const auto& g2 = s["gamma2"];
  g.group = ConcreteGroup::closure({g1, g2}, {"gamma1", "gamma2"});
  g.gamma1_cubed = power(g1, 3).is_identity();
  g.gamma2_cubed = power(g2, 3).is_identity();
  g.braid = g1 * g2 * g1 == g2 * g1 * g2;
  const Q3Matrix J = build_J();
  std::vector<SignedPerm> comm;
  const ConcreteGroup cube = cube_group(s);
  for (const auto& x : cube.elements()) {
    const Q3Matrix mx = perm_matrix(x);
    if (multiply(mx, J) == multiply(J, mx)) comm.push_back(x);
  }
  g.centralizer = ConcreteGroup::from_elements(comm);
  g.coset_index = enumerate_cosets(presentation_333(), {}).index();
  return g;
}

CrossPolytopeCheck cross_polytope_check(const PointLabels& labels) {
  CrossPolytopeCheck c;
  c.opposite_or_orthogonal = true;
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      Rational d = 0;
      for (int k = 0; k < 4; ++k) d += labels.point[a][k] * labels.point[b][k];
      const bool opposite = d == -4;
      c.opposite_or_orthogonal = c.opposite_or_orthogonal && (opposite || d == 0);
    }
  }
  c.all_odd = std::all_of(labels.point.begin(), labels.point.end(), [](const PointVec& p) { return minus_count(p) % 2 == 1; });
  std::set<PointVec> odd;
  for (const auto& p : cube_vertices()) {
    if (minus_count(p) % 2 == 1) odd.insert(p);
  }
  c.is_inscribed_16_cell = std::set<PointVec>(labels.point.begin(), labels.point.end()) == odd;
  return c;
}

}  // namespace forge
