#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "forge/groupcore.hpp"
#include "forge/polycore.hpp"

namespace forge {

// ---------------------------------------------------------------------------
// The 4-cube with vertices {+-1}^4.

/// An edge as an ordered pair of endpoints with first < second.
using Edge = std::pair<PointVec, PointVec>;
using EdgeSet = std::set<Edge>;

Edge make_edge(PointVec a, PointVec b);
/// Coordinate direction (1-based) along which the two endpoints differ;
/// throws unless they differ in exactly one coordinate.
int edge_direction(const PointVec& a, const PointVec& b);

std::vector<PointVec> cube_vertices(int n = 4);
EdgeSet cube_edges(int n = 4);
EdgeSet act(const EdgeSet& edges, const SignedPerm& g);
int minus_count(const PointVec& p);

// ---------------------------------------------------------------------------

enum class ChiralClass { R, L };
std::string to_string(ChiralClass c);

/// A closed edge path of the 4-cube kept in canonical form: the
/// lexicographically least vertex sequence over all rotations and both
/// directions.
struct PetriePolygon {
  std::vector<PointVec> vertices;
  /// colours[i]: coordinate direction of the step vertices[i] -> vertices[i+1].
  std::vector<int> colours;

  std::set<PointVec> vertex_set() const { return {vertices.begin(), vertices.end()}; }
  EdgeSet edges() const;
  std::string to_string() const;
  friend bool operator==(const PetriePolygon&, const PetriePolygon&) = default;
  friend auto operator<=>(const PetriePolygon& a, const PetriePolygon& b) { return a.vertices <=> b.vertices; }
};

PetriePolygon make_polygon(std::vector<PointVec> cycle);
PetriePolygon act(const PetriePolygon& p, const SignedPerm& g);

/// The cycle from `start` stepping through the coordinate directions
/// `directions` (1-based) repeatedly until it closes.
PetriePolygon polygon_from_steps(const PointVec& start, const std::vector<int>& directions);

/// Closed-path Petrie predicate for the 4-cube: any 3 consecutive edges,
/// but no 4, lie in (a Petrie polygon of) a facet.
bool is_petrie_cycle(const std::vector<PointVec>& cycle);

/// Determinant of the matrix whose rows are the given 4 vectors.
Rational determinant4(const std::array<PointVec, 4>& rows);
/// Determinant of 4 consecutive canonical vertices (+8 or -8).
Rational petrie_determinant(const PetriePolygon& p);
/// R when that determinant is positive (the class of the base octagon).
ChiralClass chiral_class(const PetriePolygon& p);

/// fast: the orbit of the base octagon under the full cube group;
/// otherwise a search over closed edge paths satisfying the predicate.
std::vector<PetriePolygon> petrie_polygons(bool fast);

/// The unique polygon of the same chiral class that shares no vertex with p.
PetriePolygon companion(const PetriePolygon& p);

// ---------------------------------------------------------------------------

/// Symbol table of the named elements, points and polygons, each checked
/// against its defining product and its expected signed-permutation form.
struct NamedScene {
  std::map<std::string, SignedPerm> elements;
  PointVec v, v_bar, w;
  PetriePolygon C, C_star;

  const SignedPerm& operator[](const std::string& name) const;
  std::vector<SignedPerm> sigma() const { return {at("sigma1"), at("sigma2"), at("sigma3")}; }
  std::vector<SignedPerm> sigma_bar() const { return {at("sigma1_bar"), at("sigma2_bar"), at("sigma3_bar")}; }
  std::vector<SignedPerm> rho() const { return {at("rho0"), at("rho1"), at("rho2"), at("rho3")}; }
  std::vector<SignedPerm> kappa() const { return {at("kappa1"), at("kappa2"), at("kappa3")}; }
  std::vector<SignedPerm> tau() const { return {at("tau0"), at("tau1"), at("tau2"), at("tau3")}; }
  const SignedPerm& at(const std::string& name) const { return (*this)[name]; }
};

/// Throws std::logic_error naming the relation when a check fails.
NamedScene build_atlas();

/// The 1-skeleton of the 4-cube (vertices in cube_vertices() order), each
/// edge coloured by its coordinate direction.
ColoredGraph coloured_cube_skeleton();
/// K_{4,4} with colour(a_i, b_j) = (i xor j) + 1; the antipodal quotient
/// of the coloured cube skeleton.
ColoredGraph coloured_k44();

/// The cube group G = <rho0..rho3> and its rotation subgroup
/// G+ = <rho0 rho1, rho1 rho2, rho2 rho3>.
ConcreteGroup cube_group(const NamedScene& s);
ConcreteGroup rotation_group(const NamedScene& s);

// ---------------------------------------------------------------------------
// Presentations.

Presentation map_rotation_presentation();  // <s1, s2>
Presentation map_presentation();           // <t0, t1, t2>
/// <s1, s2, s3>; the last relator (s1^-1 s3)^4 only when `with_last`.
Presentation roli_presentation(bool with_last = true);

enum class CoverReading { Corrected, Literal };
/// <t0..t3>. The literal relator (t3 t3)^3 is vacuous; the corrected
/// reading uses (t2 t3)^3 as the type {8,3,3} requires.
Presentation cover_presentation(CoverReading reading = CoverReading::Corrected);

// ---------------------------------------------------------------------------
// Simple graphs (for the Levi graph).

struct SimpleGraph {
  std::vector<std::vector<int>> adj;
  int size() const { return static_cast<int>(adj.size()); }
  bool has_edge(int a, int b) const;
};

SimpleGraph generalized_petersen(int n, int k);
/// Number of adjacency-preserving bijections a -> b (0 when not isomorphic).
std::size_t count_isomorphisms(const SimpleGraph& a, const SimpleGraph& b);

// ---------------------------------------------------------------------------
// The map M of type {8,3}.

struct MapM {
  ConcreteGroup rotations;  // <sigma1, sigma2>
  CosetGeometry<SignedPerm> geometry;
  EdgeSet edges;
  std::vector<PointVec> vertex_points;        // per rank-0 face
  std::vector<Edge> edge_segments;            // per rank-1 face
  std::vector<PetriePolygon> octagons;        // per rank-2 face
  SimpleGraph levi;                           // 1-skeleton on cube_vertices() order
};

MapM build_map_M(const NamedScene& s);

/// label -> cube vertex, for the 8 points of the configuration.
struct PointLabels {
  std::array<PointVec, 8> point;
  int label_of(const PointVec& p) const;  // -1 when unlabelled
};

/// Every labelling of the odd-sign vertices for which each even vertex of
/// the Levi graph meets exactly {i, i+1, i+3} (mod 8) for a distinct i,
/// line 013 sits at (-1,-1,1,1), the base octagon carries 1357 and its
/// companion 0246, and label 1 neighbours v. Sorted lexicographically.
std::vector<PointLabels> solve_point_labels(const MapM& m, const NamedScene& s);

/// Alternate (point) vertices of an octagon of M in cyclic order, as a
/// digit string normalized over rotations and reversal.
std::string alternate_labels(const PetriePolygon& octagon, const PointLabels& labels);
std::string normalize_cyclic_digits(const std::string& digits);

struct ChiralityWitness {
  bool mu0_preserves_edges = true;
  int non_rotations_preserving = 0;
  int rotations_preserving = 0;
  bool rotation_stabilizer_is_rotation_group = false;
  bool stabilizer_preserves_octagons = false;
};

/// Geometric chirality of M: which cube symmetries keep its edge set.
ChiralityWitness geometric_chirality_M(const MapM& m, const NamedScene& s);

/// The full group of M as Gamma(M)+ extended by the involutory automorphism
/// sigma1 -> sigma1^-1, sigma2 -> sigma1^2 sigma2, acting on its 96 elements
/// (x, e) by right multiplication (y, f)(x, e) = (y tau^f(x), f + e).
/// Returns t0 = tau, t1 = tau sigma1, t2 = tau sigma1 sigma2.
std::vector<Perm> map_reflections(const MapM& m, const NamedScene& s);

// ---------------------------------------------------------------------------
// The chiral polytope of type {8,3,3} and its enantiomorph.

struct Roli {
  ConcreteGroup group;
  CosetGeometry<SignedPerm> geometry;
  std::vector<PointVec> vertex_points;   // per rank-0 face
  std::vector<Edge> edge_segments;       // per rank-1 face
  std::vector<PetriePolygon> polygons;   // per rank-2 face
  std::vector<EdgeSet> facet_edges;      // per rank-3 face
};

Roli build_roli(const NamedScene& s);
/// Same construction from the barred generators and base vertex v_bar.
Roli build_enantiomorph(const NamedScene& s);

/// Realization of a coset geometry from the images of a base vertex: every
/// face is realized by the points of its incident vertices, ordered into
/// a cycle for 2-faces and into an edge set for 3-faces.
Roli realize(ConcreteGroup group, CosetGeometry<SignedPerm> geometry, const PointVec& base_vertex);

/// The map of faces R -> R-bar induced by a cube symmetry g, matching
/// realizations; nullopt when some image is not a face of R-bar. The two
/// realizations share their face sets, so rotations succeed here and
/// non-rotations (which swap the chiral classes) do not.
std::optional<FaceMap> induced_face_map(const Roli& r, const Roli& r_bar, const SignedPerm& g);

// ---------------------------------------------------------------------------
// The regular cover T in E^8.

struct Cover {
  ConcreteGroup rotations;  // T+ = <kappa1, kappa2, kappa3>
  ConcreteGroup group;      // T = <tau0..tau3>
  CosetGeometry<SignedPerm> geometry;
  PointVec base_vertex;
  std::vector<PointVec> vertex_points;  // per rank-0 face, in E^8
  FaceMap to_roli;                      // induced by (x, y) -> x
  FaceMap to_enantiomorph;              // induced by (x, y) -> y
};

Cover build_cover(const NamedScene& s, const Roli& roli, const Roli& enantiomorph);

struct BinaryTetrahedral {
  SignedPerm a, b;
  bool relations_hold = false;  // a^3 = b^3 = (ab)^2 = zeta
  std::size_t order = 0;
  bool normal = false;
};

BinaryTetrahedral binary_tetrahedral_check(const NamedScene& s);

}  // namespace forge
