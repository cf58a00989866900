#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "forge/cubefamily.hpp"
#include "forge/qfield.hpp"

namespace forge {

struct CollinearityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The complex structure: i.u = uJ.
Q3Matrix build_J();
/// Rows a1, b1 (spanning the plane of the cross-polytope view) and a2, b2.
Q3Matrix build_L();

using Complex2 = std::array<QField, 2>;

Q3Vec to_q3(const PointVec& v);
/// (x + iy).u = x u + y uJ.
Q3Vec scalar_action(const QField& z, const Q3Vec& u, const Q3Matrix& J);
/// The unique (z1, z2) with v = z1.a1 + z2.a2.
Complex2 complexify(const Q3Vec& v);
Complex2 complexify(const PointVec& v);

struct MKPoint {
  int label = 0;
  PointVec ambient;
  Complex2 z;
};

/// A z1 + B z2 = C, scaled so that B = 2 (or A = 2 when B vanishes).
struct MKLine {
  int index = 0;  // the line {i, i+1, i+3}
  std::array<QField, 3> coeffs;
  std::array<int, 3> points;
};

struct Configuration {
  std::vector<MKPoint> points;  // by label
  std::vector<MKLine> lines;    // by index
  std::vector<std::vector<int>> incidence;  // [point][line]
};

enum class LabelSeed { Lex, Table };

/// Point labels for the configuration. Lex takes the least solution of
/// the label constraints; Table picks the solution matching the reference
/// coordinate table when one exists (falling back to Lex).
PointLabels configuration_labels(const MapM& m, const NamedScene& s, LabelSeed seed = LabelSeed::Lex);

/// Throws CollinearityFailure if a line's three points are not collinear
/// or some other point lies on it.
Configuration build_configuration(const PointLabels& labels);

/// The reference coordinate table, with its last row read as label 7.
std::array<Complex2, 8> coordinate_table();

/// Label permutations preserving the line set {i, i+1, i+3}.
std::vector<std::array<int, 8>> configuration_collineations();

struct TableCheck {
  bool literal_match = false;
  /// Collineation p with table[p[k]] = computed point k, when the literal
  /// table disagrees; identity when it agrees.
  std::optional<std::array<int, 8>> relabeling;
  std::size_t collineation_count = 0;
};

TableCheck check_table(const Configuration& c);

struct QuadranglePairing {
  std::string first, second;  // normalized cyclic digit strings
  bool mutually_inscribed = false;
};

/// The three pairings of the six octagons of M into vertex-disjoint
/// quadrangles, each tested for being mutually inscribed.
std::vector<QuadranglePairing> quadrangle_pairings(const MapM& m, const PointLabels& labels, const Configuration& c);

struct Group333 {
  ConcreteGroup group;
  ConcreteGroup centralizer;  // of J in the cube group
  bool gamma1_cubed = false;
  bool gamma2_cubed = false;
  bool braid = false;
  int coset_index = 0;  // presentation over the trivial subgroup
};

Presentation presentation_333();
Group333 group_333(const NamedScene& s);

struct CrossPolytopeCheck {
  bool opposite_or_orthogonal = false;
  bool all_odd = false;
  bool is_inscribed_16_cell = false;
  bool ok() const { return opposite_or_orthogonal && all_odd && is_inscribed_16_cell; }
};

CrossPolytopeCheck cross_polytope_check(const PointLabels& labels);

}  // namespace forge
