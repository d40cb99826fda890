#include "qlat/tiling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "qlat/root_system.hpp"
#include "qlat/tolerances.hpp"

namespace qlat {

namespace {

double signed_area(const std::vector<Vec2>& poly) {
  double s = 0.0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    s += p.x() * q.y() - q.x() * p.y();
  }
  return s / 2.0;
}

Tile transform_tile(const Tile& t, const Mat2& a, const Vec2& b) {
  Tile out;
  out.v.reserve(t.v.size());
  for (const auto& p : t.v) out.v.push_back(a * p + b);
  if (signed_area(out.v) < 0) std::reverse(out.v.begin(), out.v.end());
  return out;
}

// Incremental tile store with a coarse cell index for overlap queries.
class PatchBuilder {
 public:
  bool contains(const TileKey& k) const { return keys_.count(k) != 0; }

  bool conflicts(const Tile& t, const BBox& bb) const {
    std::set<int> seen;
    for (auto cell : cells(bb)) {
      auto it = grid_.find(cell);
      if (it == grid_.end()) continue;
      for (int idx : it->second) {
        if (!seen.insert(idx).second) continue;
        if (bb.disjoint(boxes_[idx])) continue;
        if (overlap_area(t.v, tiles_[idx].v) > kEpsArea) return true;
      }
    }
    return false;
  }

  void insert(Tile t, TileKey k) {
    const int idx = static_cast<int>(tiles_.size());
    const BBox bb = bounding_box(t.v);
    for (auto cell : cells(bb)) grid_[cell].push_back(idx);
    boxes_.push_back(bb);
    keys_.emplace(std::move(k), idx);
    tiles_.push_back(std::move(t));
  }

  const std::vector<Tile>& tiles() const { return tiles_; }
  size_t size() const { return tiles_.size(); }

 private:
  static constexpr double kCell = 0.5;

  static std::vector<std::pair<long long, long long>> cells(const BBox& bb) {
    std::vector<std::pair<long long, long long>> out;
    const long long x0 = static_cast<long long>(std::floor(bb.xmin / kCell));
    const long long x1 = static_cast<long long>(std::floor(bb.xmax / kCell));
    const long long y0 = static_cast<long long>(std::floor(bb.ymin / kCell));
    const long long y1 = static_cast<long long>(std::floor(bb.ymax / kCell));
    for (long long x = x0; x <= x1; ++x)
      for (long long y = y0; y <= y1; ++y) out.emplace_back(x, y);
    return out;
  }

  std::vector<Tile> tiles_;
  std::vector<BBox> boxes_;
  std::map<TileKey, int> keys_;
  std::map<std::pair<long long, long long>, std::vector<int>> grid_;
};

// Places every transform of sub at once: each tile must coincide with an
// existing tile or be interior-disjoint from everything, including the other
// new tiles of the same batch. Returns the number of tiles added, -1 if the
// batch is rejected.
int place_batch(PatchBuilder& pb, const std::vector<std::pair<Mat2, Vec2>>& maps,
                const std::vector<Tile>& sub) {
  std::map<TileKey, Tile> news;
  for (const auto& [a, b] : maps) {
    for (const auto& t : sub) {
      Tile tt = transform_tile(t, a, b);
      TileKey k = tile_key(tt.v);
      if (pb.contains(k)) continue;
      news.emplace(std::move(k), std::move(tt));
    }
  }
  if (news.empty()) return 0;
  std::vector<std::pair<TileKey, Tile>> items(news.begin(), news.end());
  std::vector<BBox> bbs;
  bbs.reserve(items.size());
  for (const auto& [k, t] : items) bbs.push_back(bounding_box(t.v));
  for (size_t i = 0; i < items.size(); ++i)
    if (pb.conflicts(items[i].second, bbs[i])) return -1;
  for (size_t i = 0; i < items.size(); ++i)
    for (size_t j = i + 1; j < items.size(); ++j) {
      if (bbs[i].disjoint(bbs[j])) continue;
      if (overlap_area(items[i].second.v, items[j].second.v) > kEpsArea) return -1;
    }
  for (auto& [k, t] : items) pb.insert(std::move(t), std::move(k));
  return static_cast<int>(items.size());
}

std::vector<Mat2> dihedral_point_parts(int h, const Vec2& axis) {
  const Mat2 m = mirror2(axis);
  std::vector<Mat2> els;
  els.reserve(2 * h);
  for (int k = 0; k < h; ++k) {
    const Mat2 r = rotation2(2.0 * M_PI * k / h);
    els.push_back(r);
    els.push_back(r * m);
  }
  return els;
}

// True when the h rotations of the tiles about p only reuse or avoid each
// other, never genuinely overlap.
bool rotation_compatible(const std::vector<Tile>& tiles, const Vec2& p, int h) {
  PatchBuilder pb;
  for (int k = 0; k < h; ++k) {
    const Mat2 a = rotation2(2.0 * M_PI * k / h);
    const Vec2 b = p - a * p;
    if (place_batch(pb, {{a, b}}, tiles) < 0) return false;
  }
  return true;
}

}  // namespace

int tile_acute_class(const Tile& t, int h) {
  const size_t m = t.v.size();
  double best = M_PI;
  for (size_t i = 0; i < m; ++i) {
    const Vec2 e1 = t.v[(i + 1) % m] - t.v[i];
    const Vec2 e2 = t.v[(i + m - 1) % m] - t.v[i];
    const double ang =
        std::atan2(std::abs(e1.x() * e2.y() - e1.y() * e2.x()), e1.dot(e2));
    best = std::min(best, ang);
  }
  const double snapped = std::round(best / (M_PI / (2 * h)));
  if (std::abs(best - snapped * M_PI / (2 * h)) > 1e-7 ||
      llround(snapped) % 2 != 0)
    throw std::runtime_error("tile_acute_class: angle off the pi/h grid");
  return static_cast<int>(llround(snapped)) / 2;
}

VectorN default_seed_vertex(int n) {
  VectorN v = VectorN::Constant(n, 0.5);
  switch (n) {
    case 3:
    case 5:
      return v;  // half the all-plus vertex
    case 4:
      v[2] = v[3] = -0.5;
      return v;
    default: {
      // first vertex (in cell enumeration order) on the outer ring
      const auto rs = build_root_system(n, BasisChoice::PaperCyclic);
      const auto pb = principal_basis(rs);
      const auto cell = voronoi_cell(n);
      double rmax = 0.0;
      for (const auto& w : cell.vertices)
        rmax = std::max(rmax, project(w, pb).norm());
      for (const auto& w : cell.vertices)
        if (project(w, pb).norm() > rmax - geo_eps()) return w;
      return v;
    }
  }
}

std::vector<SubTiling> dissociate(const VoronoiCell& cell, const PrincipalBasis& basis) {
  return dissociate(cell, basis, default_seed_vertex(cell.n));
}

std::vector<SubTiling> dissociate(const VoronoiCell& cell, const PrincipalBasis& basis,
                                  const VectorN& seed_vertex) {
  const int n = cell.n;
  if (n < 3) throw std::invalid_argument("dissociate: rank must be at least 3");
  const int h = 2 * n;
  const auto proj = plane_projector(basis, 1);

  std::vector<Vec2> projected;
  projected.reserve(cell.vertices.size());
  for (const auto& v : cell.vertices) projected.emplace_back(proj * v);
  const std::vector<Vec2> hull = convex_hull(projected);
  const double hull_area = polygon_area(hull);

  struct Candidate {
    Tile tile;
    TileKey key;
    double area = 0.0;
    Vec2 centroid = Vec2::Zero();
  };
  std::map<TileKey, Tile> uniq;
  for (const auto& f : cell.faces) {
    Tile t;
    for (const auto& w : face_vertices(f)) t.v.emplace_back(proj * w);
    t.v = ccw_order(t.v);
    bool inside = true;
    for (const auto& q : t.v)
      inside = inside && point_in_convex(q, hull, geo_eps());
    if (!inside) continue;
    uniq.emplace(tile_key(t.v), std::move(t));
  }
  std::vector<Candidate> cands;
  cands.reserve(uniq.size());
  for (auto& [k, t] : uniq) {
    Candidate c;
    c.key = k;
    c.area = polygon_area(t.v);
    c.centroid = Vec2::Zero();
    for (const auto& q : t.v) c.centroid += q;
    c.centroid /= static_cast<double>(t.v.size());
    c.tile = std::move(t);
    cands.push_back(std::move(c));
  }
  const int m = static_cast<int>(cands.size());
  if (m > 2000)
    throw std::runtime_error("dissociate: candidate set too large for this rank");

  const Vec2 anchor = proj * seed_vertex;
  if (anchor.norm() < geo_eps())
    throw std::invalid_argument("dissociate: seed vertex projects to the origin");
  const Mat2 mirror = mirror2(anchor);

  std::map<TileKey, int> index;
  for (int i = 0; i < m; ++i) index.emplace(cands[i].key, i);
  std::vector<int> mirror_of(m, -1);
  for (int i = 0; i < m; ++i) {
    const Tile mt = transform_tile(cands[i].tile, mirror, Vec2::Zero());
    auto it = index.find(tile_key(mt.v));
    if (it != index.end()) mirror_of[i] = it->second;
  }
  std::vector<std::vector<char>> overlaps(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      overlaps[i][j] = overlaps[j][i] =
          overlap_area(cands[i].tile.v, cands[j].tile.v) > kEpsArea;

  std::vector<char> used(m, 0);
  std::vector<int> placed;
  std::vector<Tile> solution;
  size_t nodes = 0;

  // A candidate is settled as a witness source once a placed tile that
  // genuinely overlaps it holds its centroid; candidates still placeable in
  // some completion always stay eligible.
  auto settled = [&](int idx) {
    if (used[idx]) return true;
    for (int p : placed)
      if (overlaps[idx][p] &&
          point_in_convex(cands[idx].centroid, cands[p].tile.v, 1e-9))
        return true;
    return false;
  };

  std::function<bool(double)> dfs = [&](double area) -> bool {
    if (++nodes > 5'000'000)
      throw std::runtime_error("dissociate: search budget exhausted");
    if (std::abs(area - hull_area) < kEpsArea) {
      std::vector<Tile> tiles;
      tiles.reserve(placed.size());
      for (int p : placed) tiles.push_back(cands[p].tile);
      if (!rotation_compatible(tiles, anchor, h)) return false;
      solution = std::move(tiles);
      return true;
    }
    int wit = -1;
    for (int i = 0; i < m; ++i)
      if (!settled(i)) {
        wit = i;
        break;
      }
    if (wit < 0) return false;
    const Vec2 witness = cands[wit].centroid;
    for (int i = 0; i < m; ++i) {
      if (used[i] || mirror_of[i] < 0) continue;
      if (!point_in_convex(witness, cands[i].tile.v, 1e-9)) continue;
      bool ok = true;
      for (int p : placed) ok = ok && !overlaps[i][p];
      if (!ok) continue;
      const int mi = mirror_of[i];
      std::vector<int> add{i};
      if (mi != i) {
        if (used[mi] || overlaps[i][mi]) continue;
        for (int p : placed) ok = ok && !overlaps[mi][p];
        if (!ok) continue;
        add.push_back(mi);
      }
      double da = 0.0;
      for (int a : add) da += cands[a].area;
      if (area + da > hull_area + kEpsArea) continue;
      for (int a : add) {
        used[a] = 1;
        placed.push_back(a);
      }
      if (dfs(area + da)) return true;
      for (size_t r = 0; r < add.size(); ++r) placed.pop_back();
      for (int a : add) used[a] = 0;
    }
    return false;
  };

  if (!dfs(0.0))
    throw std::runtime_error("dissociate: no rotation-compatible symmetric cover");

  std::vector<SubTiling> out;
  SubTiling base;
  base.tiles = std::move(solution);
  base.symmetry_axis = anchor.normalized();
  base.rotation_index = 0;
  out.push_back(std::move(base));
  for (int k = 1; k < h; ++k) out.push_back(rotate_subtiling(out[0], k, h));
  return out;
}

SubTiling rotate_subtiling(const SubTiling& s, int k, int h) {
  const Mat2 a = rotation2(2.0 * M_PI * k / h);
  SubTiling out;
  out.tiles.reserve(s.tiles.size());
  for (const auto& t : s.tiles) out.tiles.push_back(transform_tile(t, a, Vec2::Zero()));
  out.symmetry_axis = a * s.symmetry_axis;
  out.rotation_index = (s.rotation_index + k) % h;
  return out;
}

TilingPatch seed_rotation_patch(const SubTiling& s, const Vec2& p, int h) {
  PatchBuilder pb;
  for (int k = 0; k < h; ++k) {
    const Mat2 a = rotation2(2.0 * M_PI * k / h);
    const Vec2 b = p - a * p;
    if (place_batch(pb, {{a, b}}, s.tiles) < 0)
      throw std::runtime_error("seed_rotation_patch: rotated copies overlap");
  }
  TilingPatch patch;
  patch.tiles = pb.tiles();
  patch.center = p;
  patch.h = h;
  patch.layers = 0;
  return patch;
}

TilingPatch grow_patch(const TilingPatch& patch, const SubTiling& s, int layers,
                       const PrincipalBasis& basis) {
  if (layers <= 0) return patch;
  const int h = patch.h;
  const int n = basis.n;
  const Vec2 p = patch.center;
  const Vec2 axis = p.norm() > geo_eps() ? Vec2(p.normalized()) : s.symmetry_axis;
  const auto els = dihedral_point_parts(h, axis);

  PatchBuilder pb;
  for (const auto& t : patch.tiles) pb.insert(t, tile_key(t.v));

  double radius = 0.0;
  for (const auto& t : s.tiles)
    for (const auto& v : t.v) radius = std::max(radius, v.norm());
  const double limit = layers * 2.0 * radius;

  // Lattice translations reachable inside the budget; the box bound keeps the
  // enumeration finite (the planar projection of Z^n is dense for n >= 4).
  const auto proj = plane_projector(basis, 1);
  const int box = static_cast<int>(std::ceil(limit)) + 2;
  std::map<std::array<long long, 2>, Vec2> tset;
  const double grid = geo_eps();
  VectorN k(n);
  std::vector<int> idx(n, -box);
  while (true) {
    for (int i = 0; i < n; ++i) k[i] = idx[i];
    const Vec2 t = proj * k;
    if (t.norm() <= limit)
      tset.try_emplace({llround(t.x() / grid), llround(t.y() / grid)}, t);
    int d = 0;
    while (d < n && ++idx[d] > box) idx[d++] = -box;
    if (d == n) break;
  }
  std::vector<Vec2> ts;
  ts.reserve(tset.size());
  for (const auto& [kk, t] : tset) ts.push_back(t);
  std::sort(ts.begin(), ts.end(), [&](const Vec2& a, const Vec2& b) {
    const long long ra = llround(a.norm() * 1e9), rb = llround(b.norm() * 1e9);
    if (ra != rb) return ra < rb;
    const auto ka = std::array{llround(a.x() / grid), llround(a.y() / grid)};
    const auto kb = std::array{llround(b.x() / grid), llround(b.y() / grid)};
    return ka < kb;
  });

  auto placement_key = [&](const Mat2& a, const Vec2& b) {
    return std::array<long long, 6>{llround(a(0, 0) * 1e9), llround(a(0, 1) * 1e9),
                                    llround(a(1, 0) * 1e9), llround(a(1, 1) * 1e9),
                                    llround(b.x() * 1e9),   llround(b.y() * 1e9)};
  };
  std::set<std::array<long long, 6>> seen_orbits;

  for (const auto& t : ts) {
    for (const auto& b0 : els) {
      // orbit of x -> b0 x + t under the dihedral elements about p
      std::vector<std::pair<Mat2, Vec2>> maps;
      maps.reserve(els.size());
      std::array<long long, 6> rep{};
      bool first = true;
      for (const auto& d : els) {
        const Mat2 a = d * b0;
        const Vec2 b = d * (t - p) + p;
        maps.emplace_back(a, b);
        auto kq = placement_key(a, b);
        if (first || kq < rep) {
          rep = kq;
          first = false;
        }
      }
      if (!seen_orbits.insert(rep).second) continue;
      // cheap single-copy precheck before the full transactional batch
      bool quick_ok = true;
      for (const auto& tile : s.tiles) {
        const Tile tt = transform_tile(tile, b0, t);
        const TileKey kk = tile_key(tt.v);
        if (pb.contains(kk)) continue;
        if (pb.conflicts(tt, bounding_box(tt.v))) {
          quick_ok = false;
          break;
        }
      }
      if (!quick_ok) continue;
      place_batch(pb, maps, s.tiles);
    }
  }

  TilingPatch out;
  out.tiles = pb.tiles();
  out.center = p;
  out.h = h;
  out.layers = patch.layers + layers;
  return out;
}

TilingPatch hexagonal_lattice(int extent) {
  if (extent < 1) throw std::invalid_argument("hexagonal_lattice: extent must be >= 1");
  const auto rs = build_root_system(3, BasisChoice::PaperCyclic);
  const auto pb = principal_basis(rs);
  VectorN l1 = VectorN::Zero(3), l3 = VectorN::Zero(3);
  l1[0] = 1.0;
  l3[2] = 1.0;
  const Vec2 u = project(l1, pb);
  const Vec2 w = project(l3, pb);

  auto in_ball = [extent](int a, int b) {
    return std::max({std::abs(a), std::abs(b), std::abs(a - b)}) <= extent;
  };
  std::vector<Tile> tiles;
  for (int a = -extent - 1; a <= extent; ++a) {
    for (int b = -extent - 1; b <= extent; ++b) {
      const Vec2 base = a * u + b * w;
      if (in_ball(a, b) && in_ball(a + 1, b) && in_ball(a + 1, b + 1)) {
        Tile t;
        t.v = {base, base + u, base + u + w};
        if (signed_area(t.v) < 0) std::reverse(t.v.begin(), t.v.end());
        tiles.push_back(std::move(t));
      }
      if (in_ball(a, b) && in_ball(a + 1, b + 1) && in_ball(a, b + 1)) {
        Tile t;
        t.v = {base, base + u + w, base + w};
        if (signed_area(t.v) < 0) std::reverse(t.v.begin(), t.v.end());
        tiles.push_back(std::move(t));
      }
    }
  }
  TilingPatch patch;
  patch.tiles = std::move(tiles);
  patch.center = Vec2::Zero();
  patch.h = 6;
  patch.layers = extent;
  return patch;
}

}  // namespace qlat
