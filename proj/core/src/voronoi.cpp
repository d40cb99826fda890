#include "qlat/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qlat/root_system.hpp"
#include "qlat/tolerances.hpp"

namespace qlat {

std::array<VectorN, 4> face_vertices(const Face2& f) {
  const int n = static_cast<int>(f.center.size());
  VectorN ei = VectorN::Zero(n), ej = VectorN::Zero(n);
  ei[f.axis_i] = 0.5;
  ej[f.axis_j] = 0.5;
  return {f.center - ei - ej, f.center + ei - ej, f.center + ei + ej,
          f.center - ei + ej};
}

VoronoiCell voronoi_cell(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("voronoi_cell: rank out of range");
  VoronoiCell cell;
  cell.n = n;
  const long long count = 1LL << n;
  cell.vertices.reserve(count);
  for (long long mask = 0; mask < count; ++mask) {
    VectorN v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i & 1) ? -0.5 : 0.5;
    cell.vertices.push_back(std::move(v));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> rest;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) rest.push_back(k);
      const long long sub = 1LL << rest.size();
      for (long long mask = 0; mask < sub; ++mask) {
        Face2 f;
        f.axis_i = i;
        f.axis_j = j;
        f.center = VectorN::Zero(n);
        for (size_t r = 0; r < rest.size(); ++r)
          f.center[rest[r]] = (mask >> r & 1) ? -0.5 : 0.5;
        cell.faces.push_back(std::move(f));
      }
    }
  }
  return cell;
}

OrbitReport project_voronoi(const VoronoiCell& cell, const PrincipalBasis& basis,
                            int plane) {
  const auto proj = plane_projector(basis, plane);
  const int h = basis.coxeter_number();
  std::vector<double> radii;
  radii.reserve(cell.vertices.size());
  for (const auto& v : cell.vertices) radii.push_back((proj * v).norm());
  std::sort(radii.begin(), radii.end());

  OrbitReport rep;
  rep.n = cell.n;
  rep.h = h;
  const double eps = geo_eps();
  size_t i = 0;
  while (i < radii.size() && radii[i] < eps) {
    ++rep.origin_count;
    ++i;
  }
  while (i < radii.size()) {
    size_t j = i;
    while (j < radii.size() && radii[j] - radii[i] < eps) ++j;
    OrbitRing ring;
    ring.radius = radii[i];
    ring.vertex_count = static_cast<int>(j - i);
    if (ring.vertex_count % h != 0)
      throw std::runtime_error("project_voronoi: ring size not a multiple of h");
    ring.polygon_count = ring.vertex_count / h;
    rep.rings.push_back(ring);
    i = j;
  }
  std::reverse(rep.rings.begin(), rep.rings.end());  // outermost first
  return rep;
}

std::vector<int> rhomb_classes(const VoronoiCell& cell, const PrincipalBasis& basis,
                               int plane) {
  const auto proj = plane_projector(basis, plane);
  const int n = cell.n;
  const int h = basis.coxeter_number();
  std::vector<int> classes;
  // Faces with the same axis pair project congruently; one per pair suffices,
  // but iterating all faces keeps the degenerate-projection check honest.
  for (const auto& f : cell.faces) {
    VectorN ei = VectorN::Zero(n), ej = VectorN::Zero(n);
    ei[f.axis_i] = 1.0;
    ej[f.axis_j] = 1.0;
    const Vec2 a = proj * ei, b = proj * ej;
    const double crossv = std::abs(a.x() * b.y() - a.y() * b.x());
    if (crossv < kEpsArea)
      throw std::runtime_error("rhomb_classes: degenerate face projection");
    double ang = std::atan2(crossv, a.dot(b));
    ang = std::min(ang, M_PI - ang);
    const double snapped = std::round(ang / (M_PI / (2 * h)));
    if (std::abs(ang - snapped * M_PI / (2 * h)) > kEpsEigen ||
        llround(snapped) % 2 != 0)
      throw std::runtime_error("rhomb_classes: angle not a multiple of pi/h");
    const int k = static_cast<int>(llround(snapped)) / 2;
    if (std::find(classes.begin(), classes.end(), k) == classes.end())
      classes.push_back(k);
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

std::string angle_class_label(int k, int h) {
  const int g = std::gcd(k, h);
  const int num = k / g, den = h / g;
  std::string s;
  if (num != 1) s += std::to_string(num);
  s += "pi";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

namespace {

std::string polygon_name(int sides) {
  switch (sides) {
    case 6: return "hexagon";
    case 8: return "octagon";
    case 10: return "decagon";
    case 12: return "dodecagon";
    default: return std::to_string(sides) + "-gon";
  }
}

}  // namespace

std::vector<Table1Row> table1(int max_n) {
  if (max_n < 1 || max_n > 12) throw std::invalid_argument("table1: max_n out of range");
  std::vector<Table1Row> rows;
  for (int n = 1; n <= max_n; ++n) {
    Table1Row row;
    row.n = n;
    row.vertex_count = 1LL << n;
    if (n == 1) {
      row.polygon_text = "line-segment";
      rows.push_back(std::move(row));
      continue;
    }
    const auto rs = build_root_system(n, BasisChoice::PaperCyclic);
    const auto pb = principal_basis(rs);
    const auto cell = voronoi_cell(n);
    const auto rep = project_voronoi(cell, pb);
    row.polygon_count = rep.polygon_total();
    row.origin_count = rep.origin_count;
    row.angle_classes = rhomb_classes(cell, pb);
    if (n == 2) {
      row.polygon_text = "square";
    } else {
      const int sides = 2 * n;
      const std::string name = polygon_name(sides);
      if (sides <= 12) {
        row.polygon_text = std::to_string(row.polygon_count) + " " + name +
                           (row.polygon_count == 1 ? "" : "s");
      } else {
        row.polygon_text = std::to_string(row.polygon_count) + ", " + name + "s";
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qlat
