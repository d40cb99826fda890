#include "qlat/dihedral.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qlat {

namespace {

// Per-root (root, offset) pairs realising the printed offset naming of the
// cyclic bases. Rank 3 attaches the first offset to the short root; rank 5
// couples the offsets of the last two roots and uses +l_5 rather than the
// simple root -l_5 as the reflection vector of the affine generator.
std::vector<std::pair<VectorN, int>> offset_assignment(const RootSystem& rs,
                                                       const std::vector<int>& k) {
  const int n = rs.n;
  std::vector<std::pair<VectorN, int>> out;
  out.reserve(n);
  const bool cyclic = rs.basis == BasisChoice::PaperCyclic;
  if (cyclic && n == 3) {
    out = {{rs.simple_roots[0], k[1]},
           {rs.simple_roots[1], k[2]},
           {rs.simple_roots[2], k[0]}};
  } else if (cyclic && n == 5) {
    out = {{rs.simple_roots[0], k[1]},
           {rs.simple_roots[1], k[2]},
           {rs.simple_roots[2], k[0]},
           {rs.simple_roots[3], k[3] + k[4]},
           {-rs.simple_roots[4], k[4]}};  // -alpha_5 = +l_5
  } else {
    for (int i = 0; i < n; ++i) out.emplace_back(rs.simple_roots[i], k[i]);
  }
  return out;
}

}  // namespace

std::pair<AffineElement, AffineElement>
dihedral_generators(const RootSystem& rs, const std::vector<int>& offsets) {
  const int n = rs.n;
  if (static_cast<int>(offsets.size()) != n)
    throw std::invalid_argument("dihedral_generators: need one offset per simple root");
  const auto assign = offset_assignment(rs, offsets);
  AffineElement r1 = AffineElement::identity(n);
  AffineElement r2 = AffineElement::identity(n);
  for (int i = 0; i < n; ++i) {
    const auto refl = reflection_element(assign[i].first, assign[i].second,
                                         AffineFormula::VoronoiLattice);
    if (i % 2 == 0)
      r1 = compose(r1, refl);
    else
      r2 = compose(r2, refl);
  }
  return {r1, r2};
}

AffineElement coxeter_element(const AffineElement& r1, const AffineElement& r2) {
  return compose(r1, r2);
}

std::vector<AffineElement> reflection_elements(const AffineElement& r1,
                                               const AffineElement& r2, int h) {
  std::vector<AffineElement> out;
  out.reserve(h);
  out.push_back(r1);
  out.push_back(r2);
  const AffineElement r = compose(r1, r2);
  AffineElement acc = r1;
  for (int i = 1; i <= h - 2; ++i) {
    acc = compose(r, acc);  // (R1 R2)^i R1
    out.push_back(acc);
  }
  return out;
}

AffineElement extended_generator(const AffineElement& r1, const AffineElement& r2, int n) {
  const AffineElement r = compose(r1, r2);
  AffineElement acc = r1;
  for (int i = 0; i < n; ++i) acc = compose(r, acc);
  return acc;
}

Rational h_prime(int h) {
  if (h < 4) throw std::invalid_argument("h_prime requires h >= 4");
  long long num = 2LL * h;
  long long den = h - 2;
  const long long g = std::gcd(num, den);
  return {num / g, den / g};
}

double extended_diagram_det(int h) {
  const double c1 = 2.0 * std::cos(M_PI / h);
  const double c2 = 2.0 * std::cos(M_PI / h_prime(h).value());
  Eigen::Matrix3d m;
  m << 2, -c1, 0, -c1, 2, -c2, 0, -c2, 2;
  return m.determinant();
}

VectorN fixed_point(const RootSystem& rs, const std::vector<int>& offsets) {
  auto [r1, r2] = dihedral_generators(rs, offsets);
  const AffineElement cox = compose(r1, r2);
  const int n = rs.n;
  // The Coxeter element has no unit eigenvalue, so g - I is invertible.
  VectorN x = (cox.linear - MatrixN::Identity(n, n))
                  .partialPivLu()
                  .solve(-cox.translation);
  if ((r1(x) - x).cwiseAbs().maxCoeff() > kEpsEigen ||
      (r2(x) - x).cwiseAbs().maxCoeff() > kEpsEigen)
    throw std::runtime_error("fixed_point: generators do not fix the solution");
  return x;
}

std::vector<MatrixN> point_group_closure(const MatrixN& g1, const MatrixN& g2,
                                         int max_order) {
  auto key = [](const MatrixN& m) {
    std::vector<long long> k(m.size());
    for (int i = 0; i < m.size(); ++i)
      k[i] = llround(m.data()[i] * 1e9);
    return k;
  };
  std::map<std::vector<long long>, MatrixN> seen;
  std::vector<MatrixN> frontier{MatrixN::Identity(g1.rows(), g1.cols())};
  seen.emplace(key(frontier[0]), frontier[0]);
  while (!frontier.empty()) {
    std::vector<MatrixN> next;
    for (const auto& m : frontier) {
      for (const MatrixN* g : {&g1, &g2}) {
        MatrixN p = m * (*g);
        auto k = key(p);
        if (seen.emplace(k, p).second) next.push_back(std::move(p));
        if (static_cast<int>(seen.size()) > max_order)
          throw std::runtime_error("point_group_closure: order bound exceeded");
      }
    }
    frontier = std::move(next);
  }
  std::vector<MatrixN> out;
  out.reserve(seen.size());
  for (auto& [k, m] : seen) out.push_back(std::move(m));
  return out;
}

}  // namespace qlat
