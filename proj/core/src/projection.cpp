#include "qlat/projection.hpp"

#include <cmath>
#include <stdexcept>

#include "qlat/tolerances.hpp"

namespace qlat {

PrincipalBasis principal_basis(const RootSystem& rs) {
  const int n = rs.n;
  const int h = 2 * n;
  const MatrixN cartan = rs.cartan.cast<double>();

  PrincipalBasis pb;
  pb.n = n;
  for (int idx = 0; idx < n; ++idx) {
    const int m = 2 * idx + 1;
    const double lam = 2.0 * (1.0 + std::cos(m * M_PI / h));
    // The Cartan matrix of every chain ordering is the same tridiagonal
    // matrix, so the eigenvector follows from back-substitution with the
    // last component fixed to 1.
    VectorN x = VectorN::Zero(n);
    x[n - 1] = 1.0;
    if (n >= 2) x[n - 2] = (2.0 - lam) * x[n - 1];
    for (int j = n - 2; j >= 1; --j) {
      const double upper = (j == n - 2) ? 2.0 : 1.0;  // C(j, j+1) = -upper
      x[j - 1] = (2.0 - lam) * x[j] - upper * x[j + 1];
    }
    if ((cartan * x - lam * x).cwiseAbs().maxCoeff() > kEpsEigen)
      throw std::runtime_error("principal_basis: eigenvector residual too large");
    VectorN axis = VectorN::Zero(n);
    for (int j = 0; j < n; ++j) axis += coroot(rs.simple_roots[j]) * x[j];
    axis /= std::sqrt(h * lam);
    pb.exponents.push_back(m);
    pb.eigenvalues.push_back(lam);
    pb.axes.push_back(std::move(axis));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(pb.axes[i].dot(pb.axes[j]) - want) > kEpsEigen)
        throw std::runtime_error("principal_basis: axes not orthonormal");
    }
  return pb;
}

Vec2 project(const VectorN& v, const PrincipalBasis& basis, int plane) {
  if (plane < 1 || plane > basis.plane_count())
    throw std::invalid_argument("project: invalid plane index");
  const auto [a, b] = basis.plane_pair(plane);
  return {basis.axes[a - 1].dot(v), basis.axes[b - 1].dot(v)};
}

Eigen::Matrix<double, 2, Eigen::Dynamic> plane_projector(const PrincipalBasis& basis,
                                                         int plane) {
  if (plane < 1 || plane > basis.plane_count())
    throw std::invalid_argument("plane_projector: invalid plane index");
  const auto [a, b] = basis.plane_pair(plane);
  Eigen::Matrix<double, 2, Eigen::Dynamic> p(2, basis.n);
  p.row(0) = basis.axes[a - 1].transpose();
  p.row(1) = basis.axes[b - 1].transpose();
  return p;
}

BlockDiagonalForm block_diagonalize(const AffineElement& e, const PrincipalBasis& basis) {
  const int n = basis.n;
  MatrixN u(n, n);
  int col = 0;
  for (int p = 1; p <= basis.plane_count(); ++p) {
    const auto [a, b] = basis.plane_pair(p);
    u.col(col++) = basis.axes[a - 1];
    u.col(col++) = basis.axes[b - 1];
  }
  if (n % 2 == 1) u.col(col++) = basis.axes[(n - 1) / 2];
  const MatrixN m = u.transpose() * e.linear * u;

  BlockDiagonalForm out;
  for (int p = 0; p < basis.plane_count(); ++p)
    out.blocks.push_back(m.block<2, 2>(2 * p, 2 * p));
  if (n % 2 == 1) {
    out.has_middle = true;
    out.middle = m(n - 1, n - 1);
  }
  // everything off the declared blocks must vanish
  MatrixN resid = m;
  for (int p = 0; p < basis.plane_count(); ++p)
    resid.block<2, 2>(2 * p, 2 * p).setZero();
  if (out.has_middle) resid(n - 1, n - 1) = 0.0;
  if (resid.cwiseAbs().maxCoeff() > kEpsEigen)
    throw std::runtime_error("block_diagonalize: residual off-block mass");
  return out;
}

std::pair<VectorN, VectorN> beta_roots(const PrincipalBasis& basis, int i) {
  if (i < 1 || i > basis.plane_count())
    throw std::invalid_argument("beta_roots: plane index out of range");
  const int n = basis.n;
  const int h = 2 * n;
  const int m = basis.exponents[i - 1];
  const double s = std::sin(m * M_PI / (2.0 * h));
  const double c = std::cos(m * M_PI / (2.0 * h));
  const VectorN& xi = basis.axes[i - 1];
  const VectorN& xj = basis.axes[n - i];
  const double r2 = std::sqrt(2.0);
  return {r2 * (s * xi + c * xj), r2 * (s * xi - c * xj)};
}

double block_rotation_angle(const Mat2& block) {
  return std::atan2(block(1, 0), block(0, 0));
}

}  // namespace qlat
