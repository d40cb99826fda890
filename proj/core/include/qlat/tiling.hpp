#pragma once

#include <vector>

#include "qlat/geometry.hpp"
#include "qlat/projection.hpp"
#include "qlat/voronoi.hpp"

namespace qlat {

// A planar tile: ccw vertex list. Projected Voronoi 2-faces give rhombs
// (4 vertices); the rank-3 hexagonal lattice is tiled by triangles.
struct Tile {
  std::vector<Vec2> v;
};

// Acute interior angle as a multiple of pi/h (snapped; throws if off-grid).
int tile_acute_class(const Tile& t, int h);

// One of the h congruent rhombically tiled h-gons the projected Voronoi cell
// dissociates into. Tiles are interior-disjoint, fill the h-gon exactly and
// are mirror-symmetric across symmetry_axis (a unit direction through the
// origin).
struct SubTiling {
  std::vector<Tile> tiles;
  Vec2 symmetry_axis = Vec2::UnitX();
  int rotation_index = 0;
};

// Deduplicated set of rhombs, dihedrally symmetric about center.
struct TilingPatch {
  std::vector<Tile> tiles;
  Vec2 center = Vec2::Zero();
  int h = 0;
  int layers = 0;
};

// The lattice vertex whose projection anchors the symmetry line (and the
// seed rotations) for rank n.
VectorN default_seed_vertex(int n);

// Dissociation of the projected Voronoi cell into h SubTilings, each the
// 2 pi k / h rotation of the first. The exact-cover search runs over the
// projected 2-faces; among the mirror-symmetric covers it returns the one
// whose h-fold rotation about the anchor vertex reuses tiles instead of
// overlapping them, which is the cover the downstream patch growth needs.
std::vector<SubTiling> dissociate(const VoronoiCell& cell, const PrincipalBasis& basis);
std::vector<SubTiling> dissociate(const VoronoiCell& cell, const PrincipalBasis& basis,
                                  const VectorN& seed_vertex);

SubTiling rotate_subtiling(const SubTiling& s, int k, int h);

// Union of the h rotations of s about p, coincident tiles merged. Throws if
// two copies overlap without coinciding.
TilingPatch seed_rotation_patch(const SubTiling& s, const Vec2& p, int h);

// Breadth-first growth by the planar affine dihedral action: h-gon copies at
// lattice translations (all 2h orientations), each accepted together with its
// dihedral orbit about the patch center so the patch stays symmetric after
// every step. A copy is accepted only if every tile of the orbit either
// coincides with an existing tile or is interior-disjoint from all of them.
TilingPatch grow_patch(const TilingPatch& patch, const SubTiling& s, int layers,
                       const PrincipalBasis& basis);

// Rank-3 special case: the triangular-lattice patch spanned by the projected
// l_1, l_3 (120 degrees apart, squared norm 2/3). extent counts hexagonal
// rings of vertices.
TilingPatch hexagonal_lattice(int extent);

}  // namespace qlat
