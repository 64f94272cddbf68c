#pragma once

#include "gradix/matrix.hpp"

namespace gradix::kernels {

// C = A B in [alpha][tau] for A in [alpha][beta], B in [beta][tau].
HomSpaceMatrix hom_mul_serial(const HomSpaceMatrix& A, const HomSpaceMatrix& B);
HomSpaceMatrix hom_mul_parallel(const HomSpaceMatrix& A, const HomSpaceMatrix& B);
// Picks the parallel kernel above a small work threshold.
HomSpaceMatrix hom_mul(const HomSpaceMatrix& A, const HomSpaceMatrix& B);

// Largest k with an invertible k x k submatrix; levels are scanned upward and the
// scan stops at the first level without one.
int minor_rank_serial(const HomSpaceMatrix& A);
int minor_rank_parallel(const HomSpaceMatrix& A);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace gradix::kernels
