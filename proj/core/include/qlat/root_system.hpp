#pragma once

#include <vector>

#include "qlat/types.hpp"

namespace qlat {

enum class BasisChoice {
  Standard,    // alpha_i = l_i - l_{i+1}, alpha_n = l_n
  PaperCyclic  // ordering whose Coxeter element cycles l_1 -> l_2 -> ... -> -l_1
};

// Simple roots, extended root and Cartan matrix of B_n in the orthonormal
// l-basis. Long roots have squared norm 2, the single short root norm 1.
struct RootSystem {
  int n = 0;
  BasisChoice basis = BasisChoice::Standard;
  std::vector<VectorN> simple_roots;  // alpha_1 .. alpha_n
  VectorN extended_root;              // alpha_0, the negative highest root
  Eigen::MatrixXi cartan;             // rows: C(i,j) = 2(a_i,a_j)/(a_j,a_j)

  int coxeter_number() const { return 2 * n; }
};

// 2a/(a,a). Rejects the zero vector.
VectorN coroot(const VectorN& alpha);

// Cartan matrix of an arbitrary linearly independent root set; throws if an
// entry is not an integer to within kEps.
Eigen::MatrixXi cartan_matrix(const std::vector<VectorN>& roots);

RootSystem build_root_system(int n, BasisChoice basis);

}  // namespace qlat
