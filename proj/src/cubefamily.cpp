#include "forge/cubefamily.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace forge {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("atlas check failed: " + what);
}

SignedPerm sp(const char* text, int n = 4) { return SignedPerm::parse(text, n); }

SignedPerm product(std::initializer_list<SignedPerm> factors) {
  auto it = factors.begin();
  SignedPerm x = *it;
  for (++it; it != factors.end(); ++it) x = x * *it;
  return x;
}

// Number of coordinates constant across all points of the window.
int constant_coords(const std::vector<PointVec>& w) {
  int count = 0;
  for (std::size_t k = 0; k < w.front().size(); ++k) {
    bool same = true;
    for (const auto& p : w) same = same && p[k] == w.front()[k];
    count += same;
  }
  return count;
}

std::vector<PointVec> window(const std::vector<PointVec>& cycle, std::size_t start, std::size_t len) {
  std::vector<PointVec> out;
  for (std::size_t k = 0; k < len; ++k) out.push_back(cycle[(start + k) % cycle.size()]);
  return out;
}

// Window of 3 edges: inside a facet, as a Petrie path of it.
bool three_edge_ok(const std::vector<PointVec>& w4) {
  if (constant_coords(w4) != 1) return false;
  return constant_coords({w4[0], w4[1], w4[2]}) == 2 && constant_coords({w4[1], w4[2], w4[3]}) == 2;
}

bool four_edge_ok(const std::vector<PointVec>& w5) { return constant_coords(w5) == 0; }

PointVec flip(PointVec p, int direction) {
  p[direction - 1] = -p[direction - 1];
  return p;
}

// Face realizations shared by M and the rank-4 polytopes.
struct Realization {
  std::vector<PointVec> vertex_points;
  std::vector<Edge> edge_segments;
  std::vector<PetriePolygon> polygons;
  std::vector<EdgeSet> facet_edges;
};

Realization realize_faces(const CosetGeometry<SignedPerm>& cg, const PointVec& base) {
  const auto& p = cg.poset;
  for (const auto& h : cg.subgroups[0].elements()) {
    if (act(base, h) != base) throw std::logic_error("vertex stabilizer moves the base vertex");
  }
  Realization r;
  for (const auto& rep : cg.representatives[0]) r.vertex_points.push_back(act(base, rep));
  if (std::set<PointVec>(r.vertex_points.begin(), r.vertex_points.end()).size() != r.vertex_points.size()) {
    throw std::logic_error("vertex realization is not injective");
  }
  for (int e = 0; e < p.face_count(1); ++e) {
    const auto& vs = p.neighbours(1, e, 0);
    if (vs.size() != 2) throw std::logic_error("edge without two vertices");
    const auto& a = r.vertex_points[vs[0]];
    const auto& b = r.vertex_points[vs[1]];
    edge_direction(a, b);
    r.edge_segments.push_back(make_edge(a, b));
  }
  if (p.rank() < 3) return r;
  for (int f = 0; f < p.face_count(2); ++f) {
    const auto& vs = p.neighbours(2, f, 0);
    std::map<int, std::vector<int>> adj;
    for (int e : p.neighbours(2, f, 1)) {
      const auto& ends = p.neighbours(1, e, 0);
      adj[ends[0]].push_back(ends[1]);
      adj[ends[1]].push_back(ends[0]);
    }
    std::vector<PointVec> cycle;
    int prev = -1, cur = vs.front();
    do {
      if (adj[cur].size() != 2) throw std::logic_error("2-face is not a cycle");
      cycle.push_back(r.vertex_points[cur]);
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    } while (cur != vs.front() && cycle.size() <= vs.size());
    if (cycle.size() != vs.size()) throw std::logic_error("2-face cycle misses vertices");
    r.polygons.push_back(make_polygon(cycle));
  }
  if (p.rank() < 4) return r;
  for (int f = 0; f < p.face_count(3); ++f) {
    EdgeSet es;
    for (int e : p.neighbours(3, f, 1)) es.insert(r.edge_segments[e]);
    r.facet_edges.push_back(std::move(es));
  }
  return r;
}

std::string digits_of(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += static_cast<char>('0' + x);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

Edge make_edge(PointVec a, PointVec b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

int edge_direction(const PointVec& a, const PointVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch(static_cast<int>(a.size()), static_cast<int>(b.size()));
  int dir = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) {
      if (dir != 0) throw std::invalid_argument("points differ in more than one coordinate");
      dir = static_cast<int>(k) + 1;
    }
  }
  if (dir == 0) throw std::invalid_argument("points coincide");
  return dir;
}

std::vector<PointVec> cube_vertices(int n) {
  std::vector<PointVec> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    PointVec p(n);
    for (int k = 0; k < n; ++k) p[k] = (mask >> (n - 1 - k) & 1) ? 1 : -1;
    out.push_back(std::move(p));
  }
  return out;
}

EdgeSet cube_edges(int n) {
  EdgeSet out;
  for (const auto& p : cube_vertices(n)) {
    for (int d = 1; d <= n; ++d) out.insert(make_edge(p, flip(p, d)));
  }
  return out;
}

EdgeSet act(const EdgeSet& edges, const SignedPerm& g) {
  EdgeSet out;
  for (const auto& [a, b] : edges) out.insert(make_edge(act(a, g), act(b, g)));
  return out;
}

int minus_count(const PointVec& p) {
  return static_cast<int>(std::count_if(p.begin(), p.end(), [](const Rational& x) { return x < 0; }));
}

std::string to_string(ChiralClass c) { return c == ChiralClass::R ? "R" : "L"; }

EdgeSet PetriePolygon::edges() const {
  EdgeSet out;
  for (std::size_t i = 0; i < vertices.size(); ++i) out.insert(make_edge(vertices[i], vertices[(i + 1) % vertices.size()]));
  return out;
}

std::string PetriePolygon::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < vertices.size(); ++i) s += (i ? " -> " : "") + forge::to_string(vertices[i]);
  return s;
}

PetriePolygon make_polygon(std::vector<PointVec> cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  std::vector<PointVec> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<PointVec> cand;
      for (std::size_t k = 0; k < n; ++k) cand.push_back(dir == 0 ? cycle[(s + k) % n] : cycle[(s + n - k) % n]);
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  PetriePolygon p;
  p.vertices = std::move(best);
  for (std::size_t i = 0; i < n; ++i) p.colours.push_back(edge_direction(p.vertices[i], p.vertices[(i + 1) % n]));
  return p;
}

PetriePolygon act(const PetriePolygon& p, const SignedPerm& g) {
  std::vector<PointVec> cycle;
  for (const auto& v : p.vertices) cycle.push_back(act(v, g));
  return make_polygon(std::move(cycle));
}

PetriePolygon polygon_from_steps(const PointVec& start, const std::vector<int>& directions) {
  std::vector<PointVec> cycle{start};
  PointVec cur = start;
  for (std::size_t k = 0;; ++k) {
    cur = flip(cur, directions[k % directions.size()]);
    if (cur == start) break;
    if (cycle.size() > 64) throw std::invalid_argument("steps do not close up");
    cycle.push_back(cur);
  }
  return make_polygon(std::move(cycle));
}

bool is_petrie_cycle(const std::vector<PointVec>& cycle) {
  const std::size_t n = cycle.size();
  if (n < 5 || std::set<PointVec>(cycle.begin(), cycle.end()).size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    try {
      edge_direction(cycle[i], cycle[(i + 1) % n]);
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!three_edge_ok(window(cycle, i, 4)) || !four_edge_ok(window(cycle, i, 5))) return false;
  }
  return true;
}

Rational determinant4(const std::array<PointVec, 4>& rows) {
  std::array<std::array<Rational, 4>, 4> m;
  for (int i = 0; i < 4; ++i) {
    if (rows[i].size() != 4) throw DimensionMismatch(4, static_cast<int>(rows[i].size()));
    for (int j = 0; j < 4; ++j) m[i][j] = rows[i][j];
  }
  Rational det = 1;
  for (int c = 0; c < 4; ++c) {
    int pivot = c;
    while (pivot < 4 && m[pivot][c] == 0) ++pivot;
    if (pivot == 4) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Rational petrie_determinant(const PetriePolygon& p) {
  return determinant4({p.vertices[0], p.vertices[1], p.vertices[2], p.vertices[3]});
}

ChiralClass chiral_class(const PetriePolygon& p) {
  const Rational d = petrie_determinant(p);
  if (d == 0) throw std::invalid_argument("consecutive vertices are not a basis");
  return d > 0 ? ChiralClass::R : ChiralClass::L;
}

std::vector<PetriePolygon> petrie_polygons(bool fast) {
  std::set<PetriePolygon> found;
  if (fast) {
    const NamedScene s = build_atlas();
    const ConcreteGroup cube = cube_group(s);
    for (const auto& g : cube.elements()) found.insert(act(s.C, g));
    return {found.begin(), found.end()};
  }
  const auto verts = cube_vertices();
  std::vector<PointVec> path;
  std::function<void()> extend = [&]() {
    const std::size_t n = path.size();
    for (int d = 1; d <= 4; ++d) {
      PointVec next = flip(path.back(), d);
      if (next == path.front() && n >= 5) {
        if (is_petrie_cycle(path)) found.insert(make_polygon(path));
        continue;
      }
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      path.push_back(next);
      const std::size_t m = path.size();
      bool ok = true;
      if (m >= 4) ok = three_edge_ok({path.end() - 4, path.end()});
      if (ok && m >= 5) ok = four_edge_ok({path.end() - 5, path.end()});
      if (ok) extend();
      path.pop_back();
    }
  };
  for (const auto& v : verts) {
    path = {v};
    extend();
  }
  return {found.begin(), found.end()};
}

PetriePolygon companion(const PetriePolygon& p) {
  const auto cls = chiral_class(p);
  const auto vs = p.vertex_set();
  std::vector<PetriePolygon> hits;
  for (const auto& q : petrie_polygons(true)) {
    if (chiral_class(q) != cls) continue;
    const auto qs = q.vertex_set();
    if (std::none_of(qs.begin(), qs.end(), [&](const PointVec& x) { return vs.count(x) != 0; })) hits.push_back(q);
  }
  if (hits.size() != 1) throw std::logic_error("companion is not unique");
  return hits.front();
}

// ---------------------------------------------------------------------------

const SignedPerm& NamedScene::operator[](const std::string& name) const {
  auto it = elements.find(name);
  if (it == elements.end()) throw std::out_of_range("no named element " + name);
  return it->second;
}

NamedScene build_atlas() {
  NamedScene s;
  auto& e = s.elements;
  const SignedPerm r0 = sp("(-1,1,1,1)"), r1 = sp("(1,2)"), r2 = sp("(2,3)"), r3 = sp("(3,4)");
  e["rho0"] = r0;
  e["rho1"] = r1;
  e["rho2"] = r2;
  e["rho3"] = r3;

  const SignedPerm pi = product({r0, r1, r2, r3});
  require(pi == sp("(-1,1,1,1)(4,3,2,1)"), "pi = rho0 rho1 rho2 rho3");
  e["pi"] = pi;

  const SignedPerm zeta = sp("(-1,-1,-1,-1)");
  require(power(pi, 4) == zeta, "zeta = pi^4");
  {
    SignedPerm prod = SignedPerm::identity(4), conj = SignedPerm::identity(4);
    const std::vector<SignedPerm> rs{r1, r2, r3};
    for (int j = 0; j < 4; ++j) {
      prod = prod * conjugate(r0, conj);
      if (j < 3) conj = conj * rs[j];
    }
    require(prod == zeta, "zeta is the product of the coordinate reflections");
  }
  e["zeta"] = zeta;

  const SignedPerm mu0 = product({r0, r2, r3, r2});
  require(mu0 == sp("(-1,1,1,1)(2,4)"), "mu0 form");
  const SignedPerm mu1 = mu0 * pi;
  require(mu1 == product({r2, r3, r2, r1, r2, r3}) && mu1 == sp("(1,4)(2,3)"), "mu1 = mu0 pi");
  const SignedPerm mu2 = product({r1, r2, r0, r1});
  require(mu2 == sp("(1,-1,1,1)(1,3)") && determinant(mu2) == 1, "mu2 form");
  e["mu0"] = mu0;
  e["mu1"] = mu1;
  e["mu2"] = mu2;

  const SignedPerm s1 = pi, s2 = product({r3, r2, r1, r3}), s3 = r2 * r3;
  require(s1 == (r0 * r1) * (r2 * r3), "sigma1 = (rho0 rho1)(rho2 rho3)");
  require(s2 == product({r3 * r2, r1 * r2, r2 * r3}) && s2 == sp("(1,2,4)"), "sigma2 form");
  require(s3 == sp("(2,4,3)"), "sigma3 form");
  e["sigma1"] = s1;
  e["sigma2"] = s2;
  e["sigma3"] = s3;

  const SignedPerm b1 = inverse(s1), b2 = s1 * s1 * s2, b3 = s3;
  require(b1 == sp("(1,1,1,-1)(1,2,3,4)"), "sigma1_bar form");
  require(b2 == sp("(-1,-1,1,1)(1,3,2)"), "sigma2_bar form");
  e["sigma1_bar"] = b1;
  e["sigma2_bar"] = b2;
  e["sigma3_bar"] = b3;

  const SignedPerm k1 = block_pair(s1, b1), k2 = block_pair(s2, b2), k3 = block_pair(s3, b3);
  require(k1 == sp("(-1,1,1,1,1,1,1,-1)(4,3,2,1)(5,6,7,8)", 8), "kappa1 form");
  require(k2 == sp("(1,1,1,1,-1,-1,1,1)(1,2,4)(5,7,6)", 8), "kappa2 form");
  require(k3 == sp("(2,4,3)(6,8,7)", 8), "kappa3 form");
  e["kappa1"] = k1;
  e["kappa2"] = k2;
  e["kappa3"] = k3;

  const SignedPerm t0 = sp("(1,5)(2,6)(3,7)(4,8)", 8);
  const std::vector<std::pair<SignedPerm, SignedPerm>> swaps{{k1, s1}, {k2, s2}, {k3, s3}};
  for (std::size_t j = 0; j < 3; ++j) {
    const auto [l, r] = split_blocks(conjugate(swaps[j].first, t0));
    require(l == std::vector<SignedPerm>{b1, b2, b3}[j] && r == swaps[j].second, "tau0 conjugates sigma to sigma_bar");
  }
  e["tau0"] = t0;
  e["tau1"] = t0 * k1;
  e["tau2"] = t0 * k1 * k2;
  e["tau3"] = t0 * k1 * k2 * k3;

  const SignedPerm g1 = product({r1, r2, r3, r2}), g2 = product({r2, r0, r1, r0});
  require(g1 == sp("(1,4,2)"), "gamma1 = (1,4,2)");
  e["gamma1"] = g1;
  e["gamma2"] = g2;

  s.v = make_point({1, 1, 1, 1});
  s.v_bar = act(s.v, mu0);
  require(s.v_bar == make_point({-1, 1, 1, 1}), "v_bar = (v)mu0");
  s.w = act(act(act(s.v, r1), r0), r1);
  require(s.w == make_point({1, -1, 1, 1}), "w = (v)rho1 rho0 rho1");

  s.C = polygon_from_steps(s.v, {4, 3, 2, 1});
  {
    std::vector<PointVec> orbit_cycle;
    PointVec x = s.v;
    for (int k = 0; k < 8; ++k, x = act(x, pi)) orbit_cycle.push_back(x);
    require(make_polygon(orbit_cycle) == s.C, "C is the pi-orbit of v");
    require(orbit_cycle[1] == make_point({1, 1, 1, -1}) && orbit_cycle[4] == make_point({-1, -1, -1, -1}),
            "C form");
  }
  s.C_star = polygon_from_steps(s.w, {4, 1, 2, 3});
  require(act(s.C, mu2) == s.C_star && act(s.C_star, mu2) == s.C, "mu2 swaps C and C*");
  require(act(s.C, mu0) == s.C && act(s.C, mu1) == s.C, "mu0, mu1 preserve C");
  require(petrie_determinant(s.C) == 8, "C has determinant +8");
  return s;
}

ColoredGraph coloured_cube_skeleton() {
  const auto verts = cube_vertices();
  ColoredGraph g;
  g.vertex_count = static_cast<int>(verts.size());
  g.colours = 4;
  for (int a = 0; a < g.vertex_count; ++a) {
    for (int b = a + 1; b < g.vertex_count; ++b) {
      int diff = 0, dir = 0;
      for (int k = 0; k < 4; ++k) {
        if (verts[a][k] != verts[b][k]) {
          ++diff;
          dir = k + 1;
        }
      }
      if (diff == 1) g.edges.push_back({a, b, dir});
    }
  }
  return g;
}

ColoredGraph coloured_k44() {
  ColoredGraph g;
  g.vertex_count = 8;
  g.colours = 4;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) g.edges.push_back({i, 4 + j, (i ^ j) + 1});
  }
  return g;
}

ConcreteGroup cube_group(const NamedScene& s) {
  return ConcreteGroup::closure(s.rho(), {"rho0", "rho1", "rho2", "rho3"});
}

ConcreteGroup rotation_group(const NamedScene& s) {
  const auto r = s.rho();
  return ConcreteGroup::closure({r[0] * r[1], r[1] * r[2], r[2] * r[3]}, {"rho0rho1", "rho1rho2", "rho2rho3"});
}

// ---------------------------------------------------------------------------

Presentation map_rotation_presentation() {
  return Presentation::make(2,
                            {repeat_word({1}, 8), repeat_word({2}, 3), repeat_word({1, 2}, 2),
                             repeat_word({-1, -1, -1, 2}, 2)},
                            {"sigma1", "sigma2"});
}

Presentation map_presentation() {
  return Presentation::make(3,
                            {{1, 1}, {2, 2}, {3, 3}, repeat_word({1, 2}, 8), repeat_word({2, 3}, 3),
                             repeat_word({1, 3}, 2), repeat_word(concat({repeat_word({2, 1}, 3), {2, 3}}), 2)},
                            {"tau0", "tau1", "tau2"});
}

Presentation roli_presentation(bool with_last) {
  std::vector<Word> rel{repeat_word({1}, 8),       repeat_word({2}, 3),       repeat_word({3}, 3),
                        repeat_word({1, 2}, 2),    repeat_word({2, 3}, 2),    repeat_word({1, 2, 3}, 2),
                        repeat_word({-1, -1, -1, 2}, 2)};
  if (with_last) rel.push_back(repeat_word({-1, 3}, 4));
  return Presentation::make(3, std::move(rel), {"sigma1", "sigma2", "sigma3"});
}

Presentation cover_presentation(CoverReading reading) {
  std::vector<Word> rel{{1, 1}, {2, 2}, {3, 3}, {4, 4}, repeat_word({1, 2}, 8), repeat_word({2, 3}, 3)};
  rel.push_back(reading == CoverReading::Corrected ? repeat_word({3, 4}, 3) : repeat_word({4, 4}, 3));
  rel.push_back(repeat_word({1, 3}, 2));
  rel.push_back(repeat_word({1, 4}, 2));
  rel.push_back(repeat_word({2, 4}, 2));
  rel.push_back(repeat_word(concat({repeat_word({2, 1}, 3), {2, 3}}), 2));
  return Presentation::make(4, std::move(rel), {"tau0", "tau1", "tau2", "tau3"});
}

// ---------------------------------------------------------------------------

bool SimpleGraph::has_edge(int a, int b) const {
  return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
}

SimpleGraph generalized_petersen(int n, int k) {
  SimpleGraph g;
  g.adj.resize(2 * n);
  auto link = [&](int a, int b) {
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  };
  for (int i = 0; i < n; ++i) {
    link(i, (i + 1) % n);
    link(i, n + i);
    link(n + i, n + (i + k) % n);
  }
  return g;
}

std::size_t count_isomorphisms(const SimpleGraph& a, const SimpleGraph& b) {
  const int n = a.size();
  if (n != b.size()) return 0;
  if (n == 0) return 1;
  std::size_t ea = 0, eb = 0;
  for (int i = 0; i < n; ++i) {
    ea += a.adj[i].size();
    eb += b.adj[i].size();
  }
  if (ea != eb) return 0;
  // Breadth-first order of a with parents, so each vertex after the first
  // in its component has an already-mapped neighbour.
  std::vector<int> order, parent(n, -1);
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    order.push_back(s);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h) {
      for (int y : a.adj[order[h]]) {
        if (!seen[y]) {
          seen[y] = true;
          parent[y] = order[h];
          order.push_back(y);
        }
      }
    }
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::size_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == order.size()) {
      ++count;
      return;
    }
    const int x = order[k];
    std::vector<int> cands;
    if (parent[x] >= 0) {
      cands = b.adj[image[parent[x]]];
    } else {
      cands.resize(n);
      std::iota(cands.begin(), cands.end(), 0);
    }
    for (int y : cands) {
      if (used[y] || b.adj[y].size() != a.adj[x].size()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        ok = a.has_edge(x, order[j]) == b.has_edge(y, image[order[j]]);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      go(k + 1);
      used[y] = false;
      image[x] = -1;
    }
  };
  go(0);
  return count;
}

// ---------------------------------------------------------------------------

MapM build_map_M(const NamedScene& s) {
  MapM m;
  const auto& s1 = s["sigma1"];
  const auto& s2 = s["sigma2"];
  m.rotations = ConcreteGroup::closure({s1, s2}, {"sigma1", "sigma2"});
  m.geometry = coset_geometry(m.rotations, {ConcreteGroup::closure({s2}, {"sigma2"}),
                                            ConcreteGroup::closure({s1 * s2}, {"sigma1sigma2"}),
                                            ConcreteGroup::closure({s1}, {"sigma1"})});
  auto r = realize_faces(m.geometry, s.v);
  m.vertex_points = std::move(r.vertex_points);
  m.edge_segments = std::move(r.edge_segments);
  m.octagons = std::move(r.polygons);
  m.edges = EdgeSet(m.edge_segments.begin(), m.edge_segments.end());

  EdgeSet orbit_edges;
  const Edge base = make_edge(s.v, s.v_bar);
  for (const auto& g : m.rotations.elements()) orbit_edges.insert(make_edge(act(base.first, g), act(base.second, g)));
  if (orbit_edges != m.edges) throw std::logic_error("edges of M differ from the base-edge orbit");
  for (const auto& oct : m.octagons) {
    if (!is_petrie_cycle(oct.vertices)) throw std::logic_error("a 2-face of M is not a Petrie polygon");
  }

  const auto verts = cube_vertices();
  std::map<PointVec, int> idx;
  for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
  m.levi.adj.resize(verts.size());
  for (const auto& [a, b] : m.edges) {
    m.levi.adj[idx[a]].push_back(idx[b]);
    m.levi.adj[idx[b]].push_back(idx[a]);
  }
  for (auto& row : m.levi.adj) std::sort(row.begin(), row.end());
  return m;
}

int PointLabels::label_of(const PointVec& p) const {
  for (int i = 0; i < 8; ++i) {
    if (point[i] == p) return i;
  }
  return -1;
}

std::string normalize_cyclic_digits(const std::string& digits) {
  std::string best;
  const std::size_t n = digits.size();
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t st = 0; st < n; ++st) {
      std::string cand;
      for (std::size_t k = 0; k < n; ++k) cand += dir == 0 ? digits[(st + k) % n] : digits[(st + n - k) % n];
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

std::string alternate_labels(const PetriePolygon& octagon, const PointLabels& labels) {
  std::vector<int> ds;
  for (const auto& v : octagon.vertices) {
    const int l = labels.label_of(v);
    if (l >= 0) ds.push_back(l);
  }
  return normalize_cyclic_digits(digits_of(ds));
}

std::vector<PointLabels> solve_point_labels(const MapM& m, const NamedScene& s) {
  const auto verts = cube_vertices();
  std::vector<int> odd, even;
  for (std::size_t i = 0; i < verts.size(); ++i) (minus_count(verts[i]) % 2 ? odd : even).push_back(static_cast<int>(i));
  const int line013 = static_cast<int>(std::find(verts.begin(), verts.end(), make_point({-1, -1, 1, 1})) - verts.begin());
  const int v_idx = static_cast<int>(std::find(verts.begin(), verts.end(), s.v) - verts.begin());
  const std::string want_c = normalize_cyclic_digits("1357"), want_cs = normalize_cyclic_digits("0246");

  std::vector<PointLabels> out;
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> label(verts.size(), -1);
  do {
    for (int k = 0; k < 8; ++k) label[odd[k]] = perm[k];
    std::set<int> lines;
    bool ok = true;
    for (int e : even) {
      std::set<int> nb;
      for (int x : m.levi.adj[e]) nb.insert(label[x]);
      int which = -1;
      for (int i = 0; i < 8 && which < 0; ++i) {
        if (nb == std::set<int>{i, (i + 1) % 8, (i + 3) % 8}) which = i;
      }
      if (which < 0 || !lines.insert(which).second || (e == line013 && which != 0)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (std::none_of(m.levi.adj[v_idx].begin(), m.levi.adj[v_idx].end(), [&](int x) { return label[x] == 1; })) continue;
    PointLabels pl;
    for (int k = 0; k < 8; ++k) pl.point[perm[k]] = verts[odd[k]];
    if (alternate_labels(s.C, pl) != want_c || alternate_labels(s.C_star, pl) != want_cs) continue;
    out.push_back(pl);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const PointLabels& a, const PointLabels& b) { return a.point < b.point; });
  return out;
}

std::vector<Perm> map_reflections(const MapM& m, const NamedScene& s) {
  const auto& g = m.rotations;
  const auto& s1 = s["sigma1"];
  const auto& s2 = s["sigma2"];
  const auto ext = extend_homomorphism(g, std::vector<SignedPerm>{inverse(s1), s1 * s1 * s2});
  if (!ext.ok()) throw std::logic_error("map automorphism does not extend");
  const auto& tau = *ext.hom;
  const int n = static_cast<int>(g.order());
  auto right = [&](const SignedPerm& x, int e) {
    std::vector<int> images(2 * n);
    for (int f = 0; f < 2; ++f) {
      const SignedPerm z = f ? tau(x) : x;
      for (int i = 0; i < n; ++i) {
        images[f * n + i] = static_cast<int>(g.index_of(g.element(i) * z)) + n * ((f + e) % 2);
      }
    }
    return Perm(std::move(images));
  };
  const Perm t0 = right(SignedPerm::identity(4), 1);
  return {t0, t0 * right(s1, 0), t0 * right(s1 * s2, 0)};
}

ChiralityWitness geometric_chirality_M(const MapM& m, const NamedScene& s) {
  ChiralityWitness w;
  w.mu0_preserves_edges = act(m.edges, s["mu0"]) == m.edges;
  const std::set<PetriePolygon> octs(m.octagons.begin(), m.octagons.end());
  std::vector<SignedPerm> stab;
  w.stabilizer_preserves_octagons = true;
  const ConcreteGroup cube = cube_group(s);
  for (const auto& g : cube.elements()) {
    if (act(m.edges, g) != m.edges) continue;
    if (determinant(g) == 1) {
      ++w.rotations_preserving;
    } else {
      ++w.non_rotations_preserving;
    }
    stab.push_back(g);
    std::set<PetriePolygon> moved;
    for (const auto& o : m.octagons) moved.insert(act(o, g));
    w.stabilizer_preserves_octagons = w.stabilizer_preserves_octagons && moved == octs;
  }
  w.rotation_stabilizer_is_rotation_group =
      w.non_rotations_preserving == 0 && stab.size() == m.rotations.order() &&
      std::all_of(stab.begin(), stab.end(), [&](const SignedPerm& g) { return m.rotations.contains(g); });
  return w;
}

// ---------------------------------------------------------------------------

Roli realize(ConcreteGroup group, CosetGeometry<SignedPerm> geometry, const PointVec& base_vertex) {
  Roli r;
  auto faces = realize_faces(geometry, base_vertex);
  r.group = std::move(group);
  r.geometry = std::move(geometry);
  r.vertex_points = std::move(faces.vertex_points);
  r.edge_segments = std::move(faces.edge_segments);
  r.polygons = std::move(faces.polygons);
  r.facet_edges = std::move(faces.facet_edges);
  for (const auto& p : r.polygons) {
    if (!is_petrie_cycle(p.vertices)) throw std::logic_error("a 2-face is not a Petrie polygon");
  }
  return r;
}

namespace {

Roli build_from(const std::vector<SignedPerm>& g, const PointVec& base, const std::string& suffix) {
  const std::vector<std::string> names{"sigma1" + suffix, "sigma2" + suffix, "sigma3" + suffix};
  auto group = ConcreteGroup::closure(g, names);
  std::vector<ConcreteGroup> subs{
      ConcreteGroup::closure({g[1], g[2]}, {names[1], names[2]}),
      ConcreteGroup::closure({g[0] * g[1], g[2]}, {names[0] + names[1], names[2]}),
      ConcreteGroup::closure({g[0], g[1] * g[2]}, {names[0], names[1] + names[2]}),
      ConcreteGroup::closure({g[0], g[1]}, {names[0], names[1]}),
  };
  auto cg = coset_geometry(group, std::move(subs));
  return realize(std::move(group), std::move(cg), base);
}

}  // namespace

Roli build_roli(const NamedScene& s) { return build_from(s.sigma(), s.v, ""); }

Roli build_enantiomorph(const NamedScene& s) { return build_from(s.sigma_bar(), s.v_bar, "_bar"); }

std::optional<FaceMap> induced_face_map(const Roli& r, const Roli& r_bar, const SignedPerm& g) {
  std::map<PointVec, int> v_idx;
  std::map<Edge, int> e_idx;
  std::map<PetriePolygon, int> p_idx;
  std::map<EdgeSet, int> f_idx;
  for (std::size_t i = 0; i < r_bar.vertex_points.size(); ++i) v_idx[r_bar.vertex_points[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < r_bar.edge_segments.size(); ++i) e_idx[r_bar.edge_segments[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < r_bar.polygons.size(); ++i) p_idx[r_bar.polygons[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < r_bar.facet_edges.size(); ++i) f_idx[r_bar.facet_edges[i]] = static_cast<int>(i);

  FaceMap out(4);
  auto push = [&](int rank, const auto& table, const auto& key) {
    auto it = table.find(key);
    if (it == table.end()) return false;
    out[rank].push_back(it->second);
    return true;
  };
  for (const auto& p : r.vertex_points) {
    if (!push(0, v_idx, act(p, g))) return std::nullopt;
  }
  for (const auto& [a, b] : r.edge_segments) {
    if (!push(1, e_idx, make_edge(act(a, g), act(b, g)))) return std::nullopt;
  }
  for (const auto& p : r.polygons) {
    if (!push(2, p_idx, act(p, g))) return std::nullopt;
  }
  for (const auto& f : r.facet_edges) {
    if (!push(3, f_idx, act(f, g))) return std::nullopt;
  }
  return out;
}

// ---------------------------------------------------------------------------

Cover build_cover(const NamedScene& s, const Roli& roli, const Roli& enantiomorph) {
  Cover c;
  c.rotations = ConcreteGroup::closure(s.kappa(), {"kappa1", "kappa2", "kappa3"});
  c.group = ConcreteGroup::closure(s.tau(), {"tau0", "tau1", "tau2", "tau3"});
  c.geometry = polytope_from_reflections(c.group);
  c.base_vertex = s.v;
  c.base_vertex.insert(c.base_vertex.end(), s.v_bar.begin(), s.v_bar.end());
  for (const auto& h : c.geometry.subgroups[0].elements()) {
    if (act(c.base_vertex, h) != c.base_vertex) throw std::logic_error("vertex stabilizer moves the base vertex");
  }
  for (const auto& rep : c.geometry.representatives[0]) c.vertex_points.push_back(act(c.base_vertex, rep));

  const auto& p = c.geometry.poset;
  c.to_roli.assign(4, {});
  c.to_enantiomorph.assign(4, {});
  for (int j = 0; j < 4; ++j) {
    c.to_roli[j].assign(p.face_count(j), -1);
    c.to_enantiomorph[j].assign(p.face_count(j), -1);
  }
  auto assign = [](int& slot, int value) {
    if (slot >= 0 && slot != value) throw std::logic_error("induced face map is not well defined");
    slot = value;
  };
  for (std::size_t i = 0; i < c.group.order(); ++i) {
    const auto& x = c.group.element(i);
    if (!c.rotations.contains(x)) continue;
    const auto [left, right] = split_blocks(x);
    for (int j = 0; j < 4; ++j) {
      const int f = c.geometry.face_of[j][i];
      assign(c.to_roli[j][f], roli.geometry.face(j, left));
      assign(c.to_enantiomorph[j][f], enantiomorph.geometry.face(j, right));
    }
  }
  return c;
}

BinaryTetrahedral binary_tetrahedral_check(const NamedScene& s) {
  const auto& s1 = s["sigma1"];
  const auto& s2 = s["sigma2"];
  const auto& zeta = s["zeta"];
  BinaryTetrahedral bt;
  bt.a = inverse(s1) * s2 * inverse(s1);
  bt.b = s2 * power(s1, 4);
  bt.relations_hold = power(bt.a, 3) == zeta && power(bt.b, 3) == zeta && power(bt.a * bt.b, 2) == zeta;
  const auto sub = ConcreteGroup::closure({bt.a, bt.b}, {"a", "b"});
  const auto whole = ConcreteGroup::closure({s1, s2}, {"sigma1", "sigma2"});
  bt.order = sub.order();
  bt.normal = sub.is_subgroup_of(whole) && is_normal(sub, whole);
  return bt;
}

}  // namespace forge
