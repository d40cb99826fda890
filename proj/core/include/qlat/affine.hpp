#pragma once

#include "qlat/tolerances.hpp"
#include "qlat/types.hpp"

namespace qlat {

// Affine map x -> linear*x + translation with an orthogonal linear part.
// Composition follows (g1,t1)(g2,t2) = (g1 g2, g1 t2 + t1).
struct AffineElement {
  MatrixN linear;
  VectorN translation;

  int dim() const { return static_cast<int>(translation.size()); }

  static AffineElement identity(int n);

  VectorN operator()(const VectorN& v) const { return linear * v + translation; }

  // (n+1)x(n+1) block form: [linear translation; 0 1].
  MatrixN homogeneous() const;
};

AffineElement compose(const AffineElement& a, const AffineElement& b);
AffineElement inverse(const AffineElement& e);
bool approx_equal(const AffineElement& a, const AffineElement& b, double tol = kEps);

// Point reflection in the hyperplane orthogonal to alpha.
VectorN reflect(const VectorN& v, const VectorN& alpha);

// Two affine-reflection conventions. They agree on long roots; on short roots
// the Voronoi form shifts by k*alpha where the root-lattice form shifts by
// the coroot, so VoronoiLattice at k = 2m reproduces RootLattice at k = m.
// Lattice and tiling code uses the Voronoi form throughout.
enum class AffineFormula {
  RootLattice,    // v - 2((v,a) - k) a / (a,a)
  VoronoiLattice  // reflect(v, a) + k a
};

VectorN affine_reflect(const VectorN& v, const VectorN& alpha, int k, AffineFormula f);

// The element whose action matches affine_reflect; k = 0 gives the point
// reflection. Always an involution.
AffineElement reflection_element(const VectorN& alpha, int k,
                                 AffineFormula f = AffineFormula::VoronoiLattice);

}  // namespace qlat
