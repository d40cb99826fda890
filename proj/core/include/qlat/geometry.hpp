#pragma once

#include <array>
#include <vector>

#include "qlat/types.hpp"

namespace qlat {

// Planar convex-polygon helpers used by the projection and tiling code.
// Polygons are vertex lists; functions taking "ccw" arguments expect
// counter-clockwise order.

double polygon_area(const std::vector<Vec2>& poly);  // unsigned

// Reorders a convex vertex set counter-clockwise around its centroid.
std::vector<Vec2> ccw_order(std::vector<Vec2> poly);

// Sutherland-Hodgman clip of a convex subject against a convex ccw clipper.
std::vector<Vec2> convex_clip(const std::vector<Vec2>& subject,
                              const std::vector<Vec2>& clipper);

// Area of the intersection of two convex ccw polygons.
double overlap_area(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

bool point_in_convex(const Vec2& p, const std::vector<Vec2>& ccw_poly,
                     double tol = 1e-9);

std::vector<Vec2> convex_hull(std::vector<Vec2> points);

Mat2 rotation2(double angle);
// Reflection across the line through the origin along dir.
Mat2 mirror2(const Vec2& dir);

// Canonical tile identity: vertices snapped to the geo_eps grid and sorted.
using TileKey = std::vector<std::array<long long, 2>>;
TileKey tile_key(const std::vector<Vec2>& vertices);

struct BBox {
  double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
  bool disjoint(const BBox& o, double tol = 1e-9) const {
    return xmax < o.xmin - tol || o.xmax < xmin - tol ||
           ymax < o.ymin - tol || o.ymax < ymin - tol;
  }
};
BBox bounding_box(const std::vector<Vec2>& poly);

}  // namespace qlat
