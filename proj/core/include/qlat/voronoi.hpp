#pragma once

#include <array>
#include <string>
#include <vector>

#include "qlat/projection.hpp"
#include "qlat/types.hpp"

namespace qlat {

// A 2-face of the Voronoi cell of Z^n: a unit square spanned by axes (i, j)
// about a center with the remaining coordinates frozen to +-1/2.
struct Face2 {
  int axis_i = 0;
  int axis_j = 0;
  VectorN center;
};

// Vertices of the face in a cyclic order (projects to a ccw or cw quad).
std::array<VectorN, 4> face_vertices(const Face2& f);

// Voronoi cell V(0) of Z^n: the 2^n vertices (+-1/2, ..., +-1/2) and the
// C(n,2) 2^(n-2) two-dimensional faces.
struct VoronoiCell {
  int n = 0;
  std::vector<VectorN> vertices;
  std::vector<Face2> faces;
};

VoronoiCell voronoi_cell(int n);  // valid for 1 <= n <= 12

// Radius decomposition of the projected vertices. Each ring holds a multiple
// of h vertices; rings at coinciding radii merge, so a ring may carry several
// h-gon orbits (polygon_count = vertex_count / h).
struct OrbitRing {
  double radius = 0.0;
  int vertex_count = 0;
  int polygon_count = 0;
};

struct OrbitReport {
  int n = 0;
  int h = 0;
  std::vector<OrbitRing> rings;  // decreasing radius
  int origin_count = 0;
  int polygon_total() const {
    int s = 0;
    for (const auto& r : rings) s += r.polygon_count;
    return s;
  }
};

OrbitReport project_voronoi(const VoronoiCell& cell, const PrincipalBasis& basis,
                            int plane = 1);

// Acute angles of the projected faces as multiples of pi/h, sorted ascending.
// k = n corresponds to squares (pi/2). Throws on a degenerate projection.
std::vector<int> rhomb_classes(const VoronoiCell& cell, const PrincipalBasis& basis,
                               int plane = 1);

// "pi/4", "2pi/5", "pi/2", ... for acute angle k*pi/h.
std::string angle_class_label(int k, int h);

struct Table1Row {
  int n = 0;
  long long vertex_count = 0;
  int polygon_count = 0;   // 0 for the degenerate ranks 1 and 2
  int origin_count = 0;
  std::vector<int> angle_classes;  // multiples of pi/h
  std::string polygon_text;        // "1 hexagon", "2 octagons", "9, 14-gons", ...
};

std::vector<Table1Row> table1(int max_n);

}  // namespace qlat
