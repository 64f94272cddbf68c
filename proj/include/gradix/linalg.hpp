#pragma once

#include "gradix/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gradix {

enum class StepKind { swap, scale, transvect };
enum class Side { row, column };

struct EliminationStep {
    StepKind kind;
    Side side;
    int i = 0;
    int j = 0;
    HomogeneousScalar coeff;
    std::vector<Morphism> new_signature;
};

std::string describe(const EliminationStep& s, const FiniteGroupoid& G);

// Elementary matrices. Row versions act from the left, column versions from the right.
// P_{r_ij} in [alpha'][alpha]
HomSpaceMatrix row_swap_matrix(const RingPtr& D, const std::vector<Morphism>& alpha, int i, int j);
// D_{r_i}(a) in [alpha'][alpha], alpha'_i = gamma alpha_i; needs d(gamma) = r(alpha_i)
HomSpaceMatrix row_scale_matrix(const RingPtr& D, const std::vector<Morphism>& alpha, int i, const HomogeneousScalar& a);
// T_{r_ij}(a) in [alpha][alpha]: row_j <- a row_i + row_j; needs gamma alpha_i = alpha_j
HomSpaceMatrix row_transvection_matrix(const RingPtr& D, const std::vector<Morphism>& alpha, int i, int j, const HomogeneousScalar& a);
// Q in [beta][beta']
HomSpaceMatrix col_swap_matrix(const RingPtr& D, const std::vector<Morphism>& beta, int i, int j);
// col_j <- col_j a, beta'_j = gamma^{-1} beta_j; needs r(gamma) = r(beta_j)
HomSpaceMatrix col_scale_matrix(const RingPtr& D, const std::vector<Morphism>& beta, int j, const HomogeneousScalar& a);
// col_j <- col_i a + col_j; needs gamma = beta_i beta_j^{-1}
HomSpaceMatrix col_transvection_matrix(const RingPtr& D, const std::vector<Morphism>& beta, int i, int j, const HomogeneousScalar& a);

// In-place row operations with the same preconditions.
void apply_row_swap(HomSpaceMatrix& A, int i, int j);
void apply_row_scale(HomSpaceMatrix& A, int i, const HomogeneousScalar& a);
void apply_row_transvection(HomSpaceMatrix& A, int i, int j, const HomogeneousScalar& a);

struct RowReduction {
    HomSpaceMatrix echelon;    // reduced, pivots equal to identities
    HomSpaceMatrix transform;  // E with E A = echelon, in [alpha'][alpha]
    std::vector<int> pivots;   // pivot column of row t
    std::vector<EliminationStep> steps;
    int rank = 0;
};

RowReduction row_reduce(const HomSpaceMatrix& A);
int rho_r(const HomSpaceMatrix& A);
int rho_c(const HomSpaceMatrix& A);

struct RankOptions {
    int brute_force_bound = -1;  // -1: GRADIX_MAX_BRUTE_FORCE or 8
    bool parallel = true;
    bool check_alternative = true;
};

struct RankReport {
    int rho_r = 0, rho_c = 0, rho = 0;
    std::optional<int> rho_i;  // absent when skipped
    bool rho_i_skipped = false;
    std::optional<int> rho_r_alternative;
    std::vector<EliminationStep> steps;
    std::optional<HomSpaceMatrix> B, C;  // A = B C with inner size rho
    bool consistent() const;
};

int default_brute_force_bound();
RankReport rank_all(const HomSpaceMatrix& A, RankOptions opt = {});

// Requires a square shape (ArgumentError) and r(alpha_i), r(beta_i) in Gamma'_0(D) (PreconditionError).
std::optional<HomSpaceMatrix> invert_square(const HomSpaceMatrix& A);

struct Solution {
    HomSpaceMatrix x;  // [beta][tau]
    bool unique = true;
};
// b in [alpha][tau] with one column.
std::optional<Solution> solve(const HomSpaceMatrix& A, const HomSpaceMatrix& b);

}  // namespace gradix
