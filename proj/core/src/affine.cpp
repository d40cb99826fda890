#include "qlat/affine.hpp"

#include <stdexcept>

namespace qlat {

AffineElement AffineElement::identity(int n) {
  return {MatrixN::Identity(n, n), VectorN::Zero(n)};
}

MatrixN AffineElement::homogeneous() const {
  const int n = dim();
  MatrixN m = MatrixN::Zero(n + 1, n + 1);
  m.topLeftCorner(n, n) = linear;
  m.topRightCorner(n, 1) = translation;
  m(n, n) = 1.0;
  return m;
}

AffineElement compose(const AffineElement& a, const AffineElement& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("compose: dimension mismatch");
  return {a.linear * b.linear, a.linear * b.translation + a.translation};
}

AffineElement inverse(const AffineElement& e) {
  MatrixN gi = e.linear.transpose();  // orthogonal linear part
  return {gi, -(gi * e.translation)};
}

bool approx_equal(const AffineElement& a, const AffineElement& b, double tol) {
  if (a.dim() != b.dim()) return false;
  return (a.linear - b.linear).cwiseAbs().maxCoeff() <= tol &&
         (a.translation - b.translation).cwiseAbs().maxCoeff() <= tol;
}

VectorN reflect(const VectorN& v, const VectorN& alpha) {
  const double nn = alpha.squaredNorm();
  if (nn < kEps) throw std::invalid_argument("reflect: zero root");
  return v - (2.0 * v.dot(alpha) / nn) * alpha;
}

VectorN affine_reflect(const VectorN& v, const VectorN& alpha, int k, AffineFormula f) {
  const double nn = alpha.squaredNorm();
  if (nn < kEps) throw std::invalid_argument("affine_reflect: zero root");
  if (f == AffineFormula::RootLattice)
    return v - (2.0 * (v.dot(alpha) - k) / nn) * alpha;
  return reflect(v, alpha) + static_cast<double>(k) * alpha;
}

AffineElement reflection_element(const VectorN& alpha, int k, AffineFormula f) {
  const double nn = alpha.squaredNorm();
  if (nn < kEps) throw std::invalid_argument("reflection_element: zero root");
  const int n = static_cast<int>(alpha.size());
  AffineElement e;
  e.linear = MatrixN::Identity(n, n) - (2.0 / nn) * (alpha * alpha.transpose());
  if (f == AffineFormula::RootLattice)
    e.translation = (2.0 * k / nn) * alpha;
  else
    e.translation = static_cast<double>(k) * alpha;
  return e;
}

}  // namespace qlat
