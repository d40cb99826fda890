#include "qlat/patch_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "qlat/tolerances.hpp"

namespace qlat {

double round15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string tile_kind(const Tile& t, int h) {
  if (t.v.size() != 4) return "other";
  const int k = tile_acute_class(t, h);
  const int n = h / 2;
  if (k == n) return "square";
  return 2 * k <= n ? "thin" : "thick";
}

nlohmann::json patch_to_json(const TilingPatch& patch, int n) {
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["n"] = n;
  doc["h"] = patch.h;
  doc["layers"] = patch.layers;
  doc["center"] = {round15(patch.center.x()), round15(patch.center.y())};
  nlohmann::json tiles = nlohmann::json::array();
  for (const auto& t : patch.tiles) {
    nlohmann::json jt;
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : t.v) verts.push_back({round15(v.x()), round15(v.y())});
    jt["vertices"] = std::move(verts);
    jt["angle_class"] = angle_class_label(tile_acute_class(t, patch.h), patch.h);
    jt["kind"] = tile_kind(t, patch.h);
    tiles.push_back(std::move(jt));
  }
  doc["tiles"] = std::move(tiles);
  return doc;
}

TilingPatch patch_from_json(const nlohmann::json& doc) {
  if (doc.at("schema_version").get<int>() != 1)
    throw std::invalid_argument("patch_from_json: unsupported schema version");
  TilingPatch patch;
  patch.h = doc.at("h").get<int>();
  patch.layers = doc.at("layers").get<int>();
  patch.center = {doc.at("center")[0].get<double>(), doc.at("center")[1].get<double>()};
  for (const auto& jt : doc.at("tiles")) {
    Tile t;
    for (const auto& jv : jt.at("vertices"))
      t.v.emplace_back(jv[0].get<double>(), jv[1].get<double>());
    patch.tiles.push_back(std::move(t));
  }
  return patch;
}

nlohmann::json orbit_report_to_json(const OrbitReport& rep) {
  nlohmann::json doc;
  doc["n"] = rep.n;
  doc["h"] = rep.h;
  doc["origin_count"] = rep.origin_count;
  doc["polygon_total"] = rep.polygon_total();
  nlohmann::json rings = nlohmann::json::array();
  for (const auto& r : rep.rings) {
    rings.push_back({{"radius", round15(r.radius)},
                     {"vertex_count", r.vertex_count},
                     {"polygon_count", r.polygon_count}});
  }
  doc["rings"] = std::move(rings);
  return doc;
}

nlohmann::json table1_to_json(const std::vector<Table1Row>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json jr;
    jr["n"] = r.n;
    jr["vertices"] = r.vertex_count;
    jr["polygons"] = r.polygon_count;
    jr["polygon_text"] = r.polygon_text;
    jr["origin"] = r.origin_count;
    nlohmann::json cls = nlohmann::json::array();
    for (int k : r.angle_classes) {
      cls.push_back({{"acute", angle_class_label(k, 2 * r.n)},
                     {"obtuse", angle_class_label(2 * r.n - k, 2 * r.n)}});
    }
    jr["angle_classes"] = std::move(cls);
    out.push_back(std::move(jr));
  }
  return out;
}

namespace {

constexpr double kScale = 100.0;  // px per lattice unit

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string fill_for_class(int k, int n) {
  if (k == n) return "#9ecae1";          // squares
  if (2 * k <= n) return "#fdae6b";      // thin
  return "#a1d99b";                      // thick
}

struct SvgFrame {
  double xmin, ymin, xmax, ymax;
  std::string header() const {
    const double w = (xmax - xmin) * kScale, hgt = (ymax - ymin) * kScale;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << fmt(w) << "\" height=\"" << fmt(hgt) << "\" viewBox=\"0 0 " << fmt(w)
       << " " << fmt(hgt) << "\">\n";
    return os.str();
  }
  // y axis flipped to screen coordinates
  std::pair<double, double> map(const Vec2& p) const {
    return {(p.x() - xmin) * kScale, (ymax - p.y()) * kScale};
  }
};

SvgFrame frame_of(const std::vector<Vec2>& pts, double pad) {
  SvgFrame f{pts[0].x(), pts[0].y(), pts[0].x(), pts[0].y()};
  for (const auto& p : pts) {
    f.xmin = std::min(f.xmin, p.x());
    f.ymin = std::min(f.ymin, p.y());
    f.xmax = std::max(f.xmax, p.x());
    f.ymax = std::max(f.ymax, p.y());
  }
  f.xmin -= pad;
  f.ymin -= pad;
  f.xmax += pad;
  f.ymax += pad;
  return f;
}

}  // namespace

std::string patch_to_svg(const TilingPatch& patch, int n) {
  (void)n;
  std::vector<Vec2> pts;
  for (const auto& t : patch.tiles)
    for (const auto& v : t.v) pts.push_back(v);
  if (pts.empty()) pts.push_back(Vec2::Zero());
  const SvgFrame f = frame_of(pts, 0.1);
  std::ostringstream os;
  os << f.header();
  for (const auto& t : patch.tiles) {
    os << "  <polygon points=\"";
    for (size_t i = 0; i < t.v.size(); ++i) {
      const auto [x, y] = f.map(t.v[i]);
      if (i) os << ' ';
      os << fmt(x) << ',' << fmt(y);
    }
    std::string fill = "#cccccc";
    if (t.v.size() == 4) fill = fill_for_class(tile_acute_class(t, patch.h), patch.h / 2);
    os << "\" fill=\"" << fill << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string projection_to_svg(const VoronoiCell& cell, const PrincipalBasis& basis,
                              int plane) {
  const auto proj = plane_projector(basis, plane);
  std::vector<Vec2> pts;
  pts.reserve(cell.vertices.size());
  for (const auto& v : cell.vertices) pts.emplace_back(proj * v);
  const SvgFrame f = frame_of(pts, 0.1);
  std::ostringstream os;
  os << f.header();
  // projected 1-skeleton: vertices adjacent when they differ in one sign
  const int n = cell.n;
  const size_t count = cell.vertices.size();
  os << "  <g stroke=\"#888888\" stroke-width=\"0.7\">\n";
  for (size_t i = 0; i < count; ++i) {
    for (int bit = 0; bit < n; ++bit) {
      const size_t j = i ^ (size_t{1} << bit);
      if (j < i) continue;
      const auto [x1, y1] = f.map(pts[i]);
      const auto [x2, y2] = f.map(pts[j]);
      os << "    <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\""
         << fmt(x2) << "\" y2=\"" << fmt(y2) << "\"/>\n";
    }
  }
  os << "  </g>\n  <g fill=\"#c23b22\">\n";
  for (const auto& p : pts) {
    const auto [x, y] = f.map(p);
    os << "    <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\"/>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace qlat
