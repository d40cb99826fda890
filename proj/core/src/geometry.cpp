#include "qlat/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "qlat/tolerances.hpp"

namespace qlat {

namespace {
double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}
}  // namespace

double polygon_area(const std::vector<Vec2>& poly) {
  double s = 0.0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    s += p.x() * q.y() - q.x() * p.y();
  }
  return std::abs(s) / 2.0;
}

std::vector<Vec2> ccw_order(std::vector<Vec2> poly) {
  Vec2 c = Vec2::Zero();
  for (const auto& p : poly) c += p;
  c /= static_cast<double>(poly.size());
  std::sort(poly.begin(), poly.end(), [&](const Vec2& a, const Vec2& b) {
    return std::atan2(a.y() - c.y(), a.x() - c.x()) <
           std::atan2(b.y() - c.y(), b.x() - c.x());
  });
  return poly;
}

std::vector<Vec2> convex_clip(const std::vector<Vec2>& subject,
                              const std::vector<Vec2>& clipper) {
  std::vector<Vec2> out = subject;
  const size_t m = clipper.size();
  for (size_t i = 0; i < m && !out.empty(); ++i) {
    const Vec2& a = clipper[i];
    const Vec2& b = clipper[(i + 1) % m];
    std::vector<Vec2> in;
    in.swap(out);
    const size_t k = in.size();
    for (size_t j = 0; j < k; ++j) {
      const Vec2& cur = in[j];
      const Vec2& prv = in[(j + k - 1) % k];
      const bool ci = cross(a, b, cur) >= -kEps;
      const bool pi = cross(a, b, prv) >= -kEps;
      if (ci != pi) {
        const Vec2 d1 = prv - cur, d2 = a - b;
        const double den = d1.x() * d2.y() - d1.y() * d2.x();
        const double t = ((a.x() - cur.x()) * d2.y() - (a.y() - cur.y()) * d2.x()) / den;
        out.push_back(cur + t * d1);
      }
      if (ci) out.push_back(cur);
    }
  }
  return out;
}

double overlap_area(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  const auto inter = convex_clip(a, b);
  return inter.size() < 3 ? 0.0 : polygon_area(inter);
}

bool point_in_convex(const Vec2& p, const std::vector<Vec2>& poly, double tol) {
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i)
    if (cross(poly[i], poly[(i + 1) % n], p) < -tol) return false;
  return true;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) {
                          return (a - b).norm() < geo_eps();
                        }),
            pts.end());
  const size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vec2> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 1e-12) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

Mat2 rotation2(double angle) {
  Mat2 m;
  const double c = std::cos(angle), s = std::sin(angle);
  m << c, -s, s, c;
  return m;
}

Mat2 mirror2(const Vec2& dir) {
  const Vec2 d = dir.normalized();
  Mat2 m;
  m << d.x() * d.x() - d.y() * d.y(), 2.0 * d.x() * d.y(),
       2.0 * d.x() * d.y(), d.y() * d.y() - d.x() * d.x();
  return m;
}

TileKey tile_key(const std::vector<Vec2>& vertices) {
  const double g = geo_eps();
  TileKey key;
  key.reserve(vertices.size());
  for (const auto& v : vertices)
    key.push_back({llround(v.x() / g), llround(v.y() / g)});
  std::sort(key.begin(), key.end());
  return key;
}

BBox bounding_box(const std::vector<Vec2>& poly) {
  BBox b{poly[0].x(), poly[0].y(), poly[0].x(), poly[0].y()};
  for (const auto& p : poly) {
    b.xmin = std::min(b.xmin, p.x());
    b.ymin = std::min(b.ymin, p.y());
    b.xmax = std::max(b.xmax, p.x());
    b.ymax = std::max(b.ymax, p.y());
  }
  return b;
}

}  // namespace qlat
