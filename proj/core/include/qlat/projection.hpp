#pragma once

#include <utility>
#include <vector>

#include "qlat/affine.hpp"
#include "qlat/root_system.hpp"
#include "qlat/types.hpp"

namespace qlat {

// Orthonormal principal axes of the rank-n root system. Axis i pairs with
// axis n+1-i to span a principal plane; the (x_1, x_n) pair is the Coxeter
// plane. Eigenvectors of the Cartan matrix are normalised so their last
// component is 1 before scaling, which pins every sign: the basis is unique,
// not just unique up to plane rotations.
struct PrincipalBasis {
  int n = 0;
  std::vector<int> exponents;        // m_i = 1, 3, ..., 2n-1
  std::vector<double> eigenvalues;   // 2(1 + cos(m_i pi / h))
  std::vector<VectorN> axes;         // unit vectors x_1 .. x_n

  int coxeter_number() const { return 2 * n; }
  int plane_count() const { return n / 2; }
  // Index pair (1-based) of principal plane p = 1..n/2.
  std::pair<int, int> plane_pair(int p) const { return {p, n + 1 - p}; }
};

PrincipalBasis principal_basis(const RootSystem& rs);

// Components of v along the axis pair of principal plane p (1-based).
Vec2 project(const VectorN& v, const PrincipalBasis& basis, int plane = 1);

// 2 x n matrix whose rows are the two axes of plane p.
Eigen::Matrix<double, 2, Eigen::Dynamic> plane_projector(const PrincipalBasis& basis,
                                                         int plane = 1);

// Conjugate of the linear part by the plane-ordered axis change. Throws if
// any off-block entry exceeds kEpsEigen.
struct BlockDiagonalForm {
  std::vector<Mat2> blocks;  // one per principal plane, plane order
  bool has_middle = false;   // odd rank: trailing 1x1 block
  double middle = 0.0;
};
BlockDiagonalForm block_diagonalize(const AffineElement& e, const PrincipalBasis& basis);

// Simple-root pair of the dihedral group acting in principal plane i
// (1 <= i <= n/2); both of squared norm 2, their reflections compose to a
// rotation by 2 m_i pi / h.
std::pair<VectorN, VectorN> beta_roots(const PrincipalBasis& basis, int i);

// Rotation angle of the 2x2 block, in (-pi, pi].
double block_rotation_angle(const Mat2& block);

}  // namespace qlat
