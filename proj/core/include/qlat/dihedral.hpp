#pragma once

#include <utility>
#include <vector>

#include "qlat/affine.hpp"
#include "qlat/root_system.hpp"

namespace qlat {

// Reduced fraction; the affine mark h' = 2h/(h-2) is non-integral for h >= 8.
struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Generators R1, R2 of the dihedral subgroup W(I2(2n)) < W(B_n), built as the
// parity-split products of affine reflections in the simple roots (Voronoi
// convention, one integer offset per root). All offsets zero gives the point
// group.
//
// For the cyclic bases of ranks 3, 4, 5 the offsets are named the way the
// closed-form fixed-point expressions of those ranks name them, so that
// fixed_point(rs, offsets) evaluates the printed formulas verbatim.
std::pair<AffineElement, AffineElement>
dihedral_generators(const RootSystem& rs, const std::vector<int>& offsets);

// R = R1 * R2; satisfies R^h = 1 with h the Coxeter number.
AffineElement coxeter_element(const AffineElement& r1, const AffineElement& r2);

// The h reflections {R1, R2, (R1 R2)^i R1, i = 1..h-2}.
std::vector<AffineElement> reflection_elements(const AffineElement& r1,
                                               const AffineElement& r2, int h);

// Extended-node generator (R1 R2)^n R1; an involution.
AffineElement extended_generator(const AffineElement& r1, const AffineElement& r2, int n);

// h' = 2h/(h-2), exact. Requires h >= 4.
Rational h_prime(int h);

// Determinant of the rank-3 extension matrix with marks (h, h'); vanishes at
// h' = 2h/(h-2), which is how the mark is fixed.
double extended_diagram_det(int h);

// The unique common fixed point of the offset generators, from the linear
// system (g - I) x = -t for the composed Coxeter element.
VectorN fixed_point(const RootSystem& rs, const std::vector<int>& offsets);

// Closure of {g1, g2} under multiplication, deduplicated entrywise.
std::vector<MatrixN> point_group_closure(const MatrixN& g1, const MatrixN& g2,
                                         int max_order = 4096);

}  // namespace qlat
