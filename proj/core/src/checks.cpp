#include "qlat/checks.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "qlat/dihedral.hpp"
#include "qlat/projection.hpp"
#include "qlat/root_system.hpp"
#include "qlat/tiling.hpp"
#include "qlat/tolerances.hpp"
#include "qlat/voronoi.hpp"

namespace qlat {

namespace {

// Reference census for ranks 1..10: polygon count, origin count, acute
// angle-class multiples of pi/h.
struct CensusRow {
  int polygons;
  int origin;
  std::vector<int> classes;
};
const CensusRow kCensus[] = {
    {0, 0, {}},                   // n = 1 (line segment)
    {1, 0, {2}},                  // n = 2 (square)
    {1, 2, {2}},                  // n = 3
    {2, 0, {2, 4}},               // n = 4
    {3, 2, {2, 4}},               // n = 5
    {5, 4, {2, 4, 6}},            // n = 6
    {9, 2, {2, 4, 6}},            // n = 7
    {16, 0, {2, 4, 6, 8}},        // n = 8
    {28, 8, {2, 4, 6, 8}},        // n = 9
    {51, 4, {2, 4, 6, 8, 10}},    // n = 10
};

VectorN unit_l(int n, int i) {
  VectorN v = VectorN::Zero(n);
  v[i] = 1.0;
  return v;
}

}  // namespace

std::vector<CheckResult> run_checks(int n) {
  std::vector<CheckResult> out;
  auto check = [&out](const std::string& name, const std::function<std::string()>& fn) {
    CheckResult r;
    r.name = name;
    try {
      r.detail = fn();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  };

  const auto rs = build_root_system(n, BasisChoice::PaperCyclic);
  const int h = 2 * n;

  check("root norms {2 x (n-1), 1 x 1}", [&]() -> std::string {
    int longs = 0, shorts = 0;
    for (const auto& a : rs.simple_roots) {
      const double nn = a.squaredNorm();
      if (std::abs(nn - 2.0) < kEps)
        ++longs;
      else if (std::abs(nn - 1.0) < kEps)
        ++shorts;
    }
    if (longs != n - 1 || shorts != 1) return "unexpected norm multiset";
    return {};
  });

  if (n >= 2)
    check("Cartan determinant = 2", [&]() -> std::string {
      const double det = rs.cartan.cast<double>().determinant();
      if (std::abs(det - 2.0) > kEpsEigen) return "det = " + std::to_string(det);
      return {};
    });

  check("Coxeter element cycles l_1 -> ... -> -l_1", [&]() -> std::string {
    auto [r1, r2] = dihedral_generators(rs, std::vector<int>(n, 0));
    const auto r = coxeter_element(r1, r2);
    for (int i = 0; i < n; ++i) {
      const VectorN want = (i + 1 < n) ? unit_l(n, i + 1) : VectorN(-unit_l(n, 0));
      if ((r(unit_l(n, i)) - want).cwiseAbs().maxCoeff() > kEps)
        return "cycle broken at l_" + std::to_string(i + 1);
    }
    return {};
  });

  check("dihedral relations and group order 4n", [&]() -> std::string {
    auto [r1, r2] = dihedral_generators(rs, std::vector<int>(n, 0));
    const auto id = AffineElement::identity(n);
    if (!approx_equal(compose(r1, r1), id, kEpsEigen)) return "R1^2 != 1";
    if (!approx_equal(compose(r2, r2), id, kEpsEigen)) return "R2^2 != 1";
    auto acc = AffineElement::identity(n);
    const auto r = coxeter_element(r1, r2);
    for (int i = 1; i <= h; ++i) {
      acc = compose(r, acc);
      const bool is_id = approx_equal(acc, id, kEpsEigen);
      if (i < h && is_id) return "(R1R2)^" + std::to_string(i) + " = 1 too early";
      if (i == h && !is_id) return "(R1R2)^h != 1";
    }
    const auto ext = extended_generator(r1, r2, n);
    if (!approx_equal(compose(ext, ext), id, kEpsEigen)) return "R01^2 != 1";
    const auto closure = point_group_closure(r1.linear, r2.linear);
    // rank 1 degenerates: the point group of Z^1 is {+-1}
    const int want = (n == 1) ? 2 : 2 * h;
    if (static_cast<int>(closure.size()) != want)
      return "closure order " + std::to_string(closure.size());
    return {};
  });

  if (n >= 2)
    check("extension mark h' and vanishing determinant", [&]() -> std::string {
      const auto hp = h_prime(h);
      const Rational want{2LL * h, h - 2};
      if (hp.num * want.den != hp.den * want.num) return "h' mismatch";
      if (std::abs(extended_diagram_det(h)) > kEpsEigen) return "determinant nonzero";
      return {};
    });

  check("Cartan eigen-structure and axis orthonormality", [&]() -> std::string {
    const auto pb = principal_basis(rs);
    const MatrixN c = rs.cartan.cast<double>();
    for (int i = 0; i < n; ++i) {
      const double want = 2.0 * (1.0 + std::cos(pb.exponents[i] * M_PI / h));
      if (std::abs(pb.eigenvalues[i] - want) > kEpsEigen) return "eigenvalue mismatch";
    }
    return {};
  });

  check("Coxeter rotation angle 2 pi m_i / h per plane", [&]() -> std::string {
    const auto pb = principal_basis(rs);
    auto [r1, r2] = dihedral_generators(rs, std::vector<int>(n, 0));
    const auto blocks = block_diagonalize(coxeter_element(r1, r2), pb);
    for (int p = 1; p <= pb.plane_count(); ++p) {
      const double ang = std::abs(block_rotation_angle(blocks.blocks[p - 1]));
      const double want = 2.0 * M_PI * pb.exponents[p - 1] / h;
      if (std::abs(ang - std::min(want, 2.0 * M_PI - want)) > kEpsEigen)
        return "angle mismatch on plane " + std::to_string(p);
    }
    return {};
  });

  if (n >= 2 && n <= 10)
    check("projection census (vertices, polygons, origin, angles)",
          [&]() -> std::string {
            const auto pb = principal_basis(rs);
            const auto cell = voronoi_cell(n);
            const auto rep = project_voronoi(cell, pb);
            const auto& want = kCensus[n - 1];
            if (rep.polygon_total() != want.polygons)
              return "polygon count " + std::to_string(rep.polygon_total());
            if (rep.origin_count != want.origin)
              return "origin count " + std::to_string(rep.origin_count);
            if (rhomb_classes(cell, pb) != want.classes) return "angle classes differ";
            return {};
          });

  if (n == 1)
    check("affine reflection pair composes to a unit translation",
          [&]() -> std::string {
            const VectorN a = unit_l(1, 0);
            const auto t = compose(reflection_element(a, 1), reflection_element(a, 0));
            if ((t.linear - MatrixN::Identity(1, 1)).cwiseAbs().maxCoeff() > kEps ||
                std::abs(t.translation[0] - 1.0) > kEps)
              return "not the unit translation";
            return {};
          });

  if (n >= 3) {
    check("fixed point of offset generators is generator-invariant",
          [&]() -> std::string {
            std::vector<int> offsets(n, 0);
            offsets[n - 1] = 1;
            const VectorN x = fixed_point(rs, offsets);
            auto [g1, g2] = dihedral_generators(rs, offsets);
            if ((g1(x) - x).cwiseAbs().maxCoeff() > kEps ||
                (g2(x) - x).cwiseAbs().maxCoeff() > kEps)
              return "generators move the point";
            return {};
          });
  }

  if (n >= 3 && n <= 5)
    check("dissociation: disjoint, area-complete, mirror-symmetric",
          [&]() -> std::string {
            const auto pb = principal_basis(rs);
            const auto cell = voronoi_cell(n);
            const auto subs = dissociate(cell, pb);
            if (static_cast<int>(subs.size()) != h) return "wrong subtiling count";
            const auto& s = subs[0];
            double area = 0.0;
            for (const auto& t : s.tiles) area += polygon_area(t.v);
            std::vector<Vec2> pts;
            const auto proj = plane_projector(pb, 1);
            for (const auto& v : cell.vertices) pts.emplace_back(proj * v);
            const double hull_area = polygon_area(convex_hull(pts));
            if (std::abs(area - hull_area) > kEpsArea) return "area not complete";
            for (size_t i = 0; i < s.tiles.size(); ++i)
              for (size_t j = i + 1; j < s.tiles.size(); ++j)
                if (overlap_area(s.tiles[i].v, s.tiles[j].v) > kEpsArea)
                  return "tiles overlap";
            const Mat2 m = mirror2(s.symmetry_axis);
            std::set<TileKey> keys, mirrored;
            for (const auto& t : s.tiles) {
              keys.insert(tile_key(t.v));
              Tile mt;
              for (const auto& v : t.v) mt.v.push_back(m * v);
              mirrored.insert(tile_key(mt.v));
            }
            if (keys != mirrored) return "not mirror-symmetric";
            return {};
          });

  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace qlat
