#include "forge/cli/projection.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "forge/mkconfig.hpp"

namespace forge::cli {

namespace {

using Cx = std::complex<double>;

double dot4(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  double s = 0;
  for (int k = 0; k < 4; ++k) s += a[k] * b[k];
  return s;
}

std::array<double, 4> to_double(const PointVec& v) {
  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = static_cast<double>(v[k]);
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", std::abs(x) < 5e-5 ? 0.0 : x);
  return buf;
}

const char* colour_hex(int d) {
  static const char* palette[] = {"#d62728", "#2ca02c", "#1f77b4", "#ff7f0e"};
  return palette[(d - 1) % 4];
}

}  // namespace

ProjectionSpec coxeter_preset() {
  const double h = 1.0 / std::sqrt(2.0);
  return {"coxeter", {{{h, 0.5, 0, -0.5}, {0, 0.5, h, 0.5}}}, 100.0, {1, 2, 3, 4}, false};
}

ProjectionSpec coxeter_complement_preset() {
  const double h = 1.0 / std::sqrt(2.0);
  return {"coxeter-complement", {{{h, -0.5, 0, 0.5}, {0, 0.5, -h, 0.5}}}, 100.0, {1, 2, 3, 4}, false};
}

ProjectionSpec lambda_preset() {
  const Q3Matrix L = build_L();
  ProjectionSpec s{"lambda", {}, 100.0, {1, 2, 3, 4}, false};
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 4; ++k) s.basis[i][k] = L[i][k].to_double();
  }
  return s;
}

std::optional<ProjectionSpec> preset(const std::string& name) {
  if (name == "coxeter") return coxeter_preset();
  if (name == "coxeter-complement") return coxeter_complement_preset();
  if (name == "lambda") return lambda_preset();
  return std::nullopt;
}

void validate(const ProjectionSpec& spec) {
  if (!(spec.scale > 0) || !std::isfinite(spec.scale)) throw std::invalid_argument("projection scale must be positive");
  for (int c : spec.colours) {
    if (c < 1 || c > 4) throw std::invalid_argument("edge colour must be 1..4");
  }
  const auto& [r1, r2] = spec.basis;
  const double g11 = dot4(r1, r1), g22 = dot4(r2, r2), g12 = dot4(r1, r2);
  if (g11 * g22 - g12 * g12 <= 1e-12 * std::max(1.0, g11 * g22)) {
    throw std::invalid_argument("projection basis rows are linearly dependent");
  }
}

Vec2 project(const ProjectionSpec& spec, const PointVec& v) {
  const auto x = to_double(v);
  const auto& [r1, r2] = spec.basis;
  return {dot4(x, r1) / dot4(r1, r1), dot4(x, r2) / dot4(r2, r2)};
}

std::vector<double> projected_edge_lengths(const ProjectionSpec& spec) {
  validate(spec);
  std::vector<double> out;
  for (const auto& [a, b] : cube_edges()) {
    const int d = edge_direction(a, b);
    if (std::find(spec.colours.begin(), spec.colours.end(), d) == spec.colours.end()) continue;
    const Vec2 pa = project(spec, a), pb = project(spec, b);
    out.push_back(std::hypot(pa[0] - pb[0], pa[1] - pb[1]));
  }
  return out;
}

bool similar(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double tol) {
  if (a.size() != b.size()) return false;
  if (a.size() < 2) return true;
  auto cx = [](const Vec2& p) { return Cx(p[0], p[1]); };
  std::size_t far = 1;
  for (std::size_t k = 1; k < a.size(); ++k) {
    if (std::abs(cx(a[k]) - cx(a[0])) > std::abs(cx(a[far]) - cx(a[0]))) far = k;
  }
  if (std::abs(cx(a[far]) - cx(a[0])) < tol) return false;
  for (bool reflect : {false, true}) {
    auto src = [&](std::size_t k) { return reflect ? std::conj(cx(a[k])) : cx(a[k]); };
    const Cx alpha = (cx(b[far]) - cx(b[0])) / (src(far) - src(0));
    const Cx beta = cx(b[0]) - alpha * src(0);
    if (std::abs(alpha) < tol) continue;
    bool ok = true;
    for (std::size_t k = 0; k < a.size() && ok; ++k) ok = std::abs(alpha * src(k) + beta - cx(b[k])) <= tol;
    if (ok) return true;
  }
  return false;
}

std::array<double, 2> petrie_rotation_angles() {
  const auto m = build_atlas()["pi"].matrix();
  std::array<double, 2> out{};
  const ProjectionSpec planes[] = {coxeter_preset(), coxeter_complement_preset()};
  for (int p = 0; p < 2; ++p) {
    const auto& P = planes[p].basis;
    double B[2][2] = {};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 4; ++k) {
          for (int l = 0; l < 4; ++l) B[i][j] += P[i][k] * m[k][l] * P[j][l];
        }
      }
    }
    out[p] = std::abs(std::atan2(B[0][1], B[0][0])) * 180.0 / std::acos(-1.0);
  }
  return out;
}

std::string render_svg(const ProjectionSpec& spec, const PointLabels* labels) {
  validate(spec);
  if (spec.labelled_only && labels == nullptr) throw std::invalid_argument("labelled view needs point labels");
  const auto verts = cube_vertices();
  std::vector<PointVec> shown;
  if (spec.labelled_only) {
    shown.assign(labels->point.begin(), labels->point.end());
  } else {
    shown = verts;
  }
  double extent = 0;
  for (const auto& v : verts) {
    const Vec2 p = project(spec, v);
    extent = std::max({extent, std::abs(p[0]), std::abs(p[1])});
  }
  const double half = extent * spec.scale + 40;
  auto sx = [&](const Vec2& p) { return fmt(p[0] * spec.scale); };
  auto sy = [&](const Vec2& p) { return fmt(-p[1] * spec.scale); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(-half) << ' ' << fmt(-half) << ' '
     << fmt(2 * half) << ' ' << fmt(2 * half) << "\" width=\"" << fmt(2 * half) << "\" height=\"" << fmt(2 * half)
     << "\">\n";
  os << "<title>" << spec.name << "</title>\n";
  os << "<rect x=\"" << fmt(-half) << "\" y=\"" << fmt(-half) << "\" width=\"" << fmt(2 * half) << "\" height=\""
     << fmt(2 * half) << "\" fill=\"white\"/>\n";
  if (!spec.labelled_only) {
    os << "<g stroke-width=\"2\">\n";
    for (const auto& [a, b] : cube_edges()) {
      const int d = edge_direction(a, b);
      if (std::find(spec.colours.begin(), spec.colours.end(), d) == spec.colours.end()) continue;
      const Vec2 pa = project(spec, a), pb = project(spec, b);
      os << "<line x1=\"" << sx(pa) << "\" y1=\"" << sy(pa) << "\" x2=\"" << sx(pb) << "\" y2=\"" << sy(pb)
         << "\" stroke=\"" << colour_hex(d) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<g fill=\"black\">\n";
  for (const auto& v : shown) {
    const Vec2 p = project(spec, v);
    os << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"4\"/>\n";
  }
  os << "</g>\n";
  if (labels != nullptr) {
    os << "<g font-family=\"sans-serif\" font-size=\"14\">\n";
    for (int k = 0; k < 8; ++k) {
      const Vec2 p = project(spec, labels->point[k]);
      os << "<text x=\"" << fmt(p[0] * spec.scale + 6) << "\" y=\"" << fmt(-p[1] * spec.scale - 6) << "\">" << k
         << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace forge::cli
