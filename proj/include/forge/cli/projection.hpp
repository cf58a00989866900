#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "forge/cubefamily.hpp"

namespace forge::cli {

using Vec2 = std::array<double, 2>;

struct ProjectionSpec {
  std::string name;
  std::array<std::array<double, 4>, 2> basis{};
  double scale = 100.0;
  std::vector<int> colours{1, 2, 3, 4};  // edge directions to draw
  bool labelled_only = false;            // draw only the 8 labelled vertices
};

/// The invariant plane of the Petrie symmetry on which it turns by 45 degrees.
ProjectionSpec coxeter_preset();
/// The orthogonal complement of the Coxeter plane.
ProjectionSpec coxeter_complement_preset();
/// The plane spanned by the first two rows of the basis L.
ProjectionSpec lambda_preset();
std::optional<ProjectionSpec> preset(const std::string& name);

/// Throws std::invalid_argument on a non-positive scale, an unknown colour
/// or linearly dependent basis rows.
void validate(const ProjectionSpec& spec);

/// Coordinates with respect to the basis rows: (v.r1 / r1.r1, v.r2 / r2.r2).
Vec2 project(const ProjectionSpec& spec, const PointVec& v);

/// Projected lengths of the cube edges in the selected colours, in
/// cube_edges() order.
std::vector<double> projected_edge_lengths(const ProjectionSpec& spec);

/// True when one similarity of the plane (possibly orientation reversing)
/// carries a[k] to b[k] for all k within `tol`.
bool similar(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double tol = 1e-9);

/// Rotation angles (degrees, in [0, 180]) by which the Petrie symmetry acts
/// on the Coxeter plane and on its complement.
std::array<double, 2> petrie_rotation_angles();

/// Deterministic SVG text.
std::string render_svg(const ProjectionSpec& spec, const PointLabels* labels = nullptr);

}  // namespace forge::cli
