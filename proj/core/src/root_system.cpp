#include "qlat/root_system.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qlat/tolerances.hpp"

namespace qlat {

namespace {

VectorN basis_vec(int n, int i, double s = 1.0) {
  VectorN v = VectorN::Zero(n);
  v[i] = s;
  return v;
}

// Chain basis from a signed ordering e_i = s_i * l_{perm_i}:
// alpha_i = e_i - e_{i+1} for i < n, alpha_n = e_n.
std::vector<VectorN> chain_roots(const std::vector<int>& perm,
                                 const std::vector<int>& sign) {
  const int n = static_cast<int>(perm.size());
  std::vector<VectorN> roots;
  roots.reserve(n);
  for (int i = 0; i + 1 < n; ++i)
    roots.push_back(basis_vec(n, perm[i], sign[i]) -
                    basis_vec(n, perm[i + 1], sign[i + 1]));
  roots.push_back(basis_vec(n, perm[n - 1], sign[n - 1]));
  return roots;
}

// A cyclic ordering for ranks the source text does not list explicitly.
//
// The bipartite Coxeter element R1*R2 acts on the chain vectors e_i as a fixed
// signed n-cycle pi (independent of the ordering). Choosing which e_i plays
// the role of l_1 and propagating signs along the cycle yields every signed
// ordering whose Coxeter element realises the l_1 -> l_2 -> ... -> -l_1 cycle;
// we take the lexicographically smallest of the n candidates.
std::pair<std::vector<int>, std::vector<int>> synth_cyclic_order(int n) {
  // Involutions in chain coordinates. A = product over odd diagram nodes,
  // B over even nodes (1-based), matching the parity split of the generators.
  auto apply = [](const std::vector<std::pair<int, int>>& swaps, int neg,
                  int i, int s) {
    for (auto [a, b] : swaps) {
      if (i == a) return std::make_pair(b, s);
      if (i == b) return std::make_pair(a, s);
    }
    if (i == neg) return std::make_pair(i, -s);
    return std::make_pair(i, s);
  };
  std::vector<std::pair<int, int>> aswaps, bswaps;
  int aneg = -1, bneg = -1;
  if (n % 2 == 1) {
    for (int i = 0; i + 1 < n - 1; i += 2) aswaps.emplace_back(i, i + 1);
    aneg = n - 1;
    for (int i = 1; i + 1 < n; i += 2) bswaps.emplace_back(i, i + 1);
  } else {
    for (int i = 0; i + 1 < n; i += 2) aswaps.emplace_back(i, i + 1);
    for (int i = 1; i + 1 < n - 1; i += 2) bswaps.emplace_back(i, i + 1);
    bneg = n - 1;
  }
  std::vector<int> pi(n), tsign(n);
  for (int i = 0; i < n; ++i) {
    auto [j, s] = apply(bswaps, bneg, i, 1);
    auto [k, s2] = apply(aswaps, aneg, j, s);
    pi[i] = k;
    tsign[i] = s2;
  }
  std::pair<std::vector<int>, std::vector<int>> best;
  bool have = false;
  for (int i0 = 0; i0 < n; ++i0) {
    std::vector<int> perm(n, -1), sign(n, 0);
    int i = i0;
    perm[i] = 0;
    sign[i] = 1;
    for (int step = 1; step < n; ++step) {
      int j = pi[i];
      if (perm[j] != -1) throw std::runtime_error("cyclic synthesis: not an n-cycle");
      perm[j] = step;
      sign[j] = sign[i] * tsign[i];
      i = j;
    }
    auto cand = std::make_pair(perm, sign);
    if (!have || cand < best) {
      best = std::move(cand);
      have = true;
    }
  }
  return best;
}

std::vector<VectorN> paper_cyclic_roots(int n) {
  auto l = [n](int i, double s = 1.0) { return basis_vec(n, i - 1, s); };
  switch (n) {
    case 1:
      return {l(1)};
    case 2:
      return {l(1) - l(2), l(2)};
    case 3:
      return {l(2) - l(3), l(3) - l(1), l(1)};
    case 4:
      return {l(2) - l(3), l(3) - l(1), l(1) - l(4), l(4)};
    case 5:
      return {l(2) - l(3), l(3) - l(1), l(1) - l(4), l(4) + l(5), l(5, -1.0)};
    default: {
      auto [perm, sign] = synth_cyclic_order(n);
      return chain_roots(perm, sign);
    }
  }
}

}  // namespace

VectorN coroot(const VectorN& alpha) {
  const double nn = alpha.squaredNorm();
  if (nn < kEps) throw std::invalid_argument("coroot of zero vector");
  return 2.0 * alpha / nn;
}

Eigen::MatrixXi cartan_matrix(const std::vector<VectorN>& roots) {
  const int k = static_cast<int>(roots.size());
  Eigen::MatrixXi c(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const double v = 2.0 * roots[i].dot(roots[j]) / roots[j].squaredNorm();
      const double r = std::round(v);
      if (std::abs(v - r) > kEps)
        throw std::invalid_argument("cartan_matrix: non-integer entry");
      c(i, j) = static_cast<int>(r);
    }
  }
  return c;
}

RootSystem build_root_system(int n, BasisChoice basis) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  RootSystem rs;
  rs.n = n;
  rs.basis = basis;
  if (basis == BasisChoice::Standard) {
    for (int i = 0; i + 1 < n; ++i)
      rs.simple_roots.push_back(basis_vec(n, i) - basis_vec(n, i + 1));
    rs.simple_roots.push_back(basis_vec(n, n - 1));
  } else {
    rs.simple_roots = paper_cyclic_roots(n);
  }
  // Negative highest root. The highest root carries marks (1, 2, ..., 2)
  // along the chain; for rank 1 it is the single root itself.
  if (n == 1) {
    rs.extended_root = -rs.simple_roots[0];
  } else {
    VectorN theta = rs.simple_roots[0];
    for (int i = 1; i < n; ++i) theta += 2.0 * rs.simple_roots[i];
    rs.extended_root = -theta;
  }
  rs.cartan = cartan_matrix(rs.simple_roots);
  return rs;
}

}  // namespace qlat
