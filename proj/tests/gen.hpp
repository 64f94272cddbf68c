#pragma once

// Seeded random instances for property tests.

#include "gradix/category.hpp"
#include "gradix/linalg.hpp"
#include "gradix/module.hpp"
#include "gradix/structure.hpp"

#include <random>
#include <string>
#include <vector>

namespace gen {

using namespace gradix;
using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
bool coin(Rng& rng, double p);
Scalar scalar(const FieldSpec& f, Rng& rng, bool nonzero = false);

RingPtr q_trivial();
RingPtr f5_c2();
// u_g u_g = 2 over F3, not a coboundary
RingPtr f3_c2_twisted();
// Matrix form over {1,2} x C2 of the twisted ring Q^{-1}[C2] at object 1.
RingPtr two_object_prime();

struct NamedRing {
    std::string name;
    RingPtr D;
};
std::vector<NamedRing> rank_rings();

// r(alpha_i), r(beta_j) in Gamma'_0(D); a common source most of the time so that slots exist.
HomSpaceMatrix random_matrix(const RingPtr& D, int m, int n, Rng& rng, double density = 0.8);
// Rows alpha given, columns sharing the source of alpha_1, so that B can follow A in a product.
HomSpaceMatrix random_matrix_rows(const RingPtr& D, const std::vector<Morphism>& alpha, int n, Rng& rng);
// Either random_matrix or a product through a random inner size, to hit low ranks.
HomSpaceMatrix random_matrix_mixed(const RingPtr& D, int m, int n, Rng& rng);

ModulePtr random_module(const RingPtr& D, int pdim, Rng& rng);
HomogeneousVector random_vector(const ModulePtr& M, Rng& rng);
// Mix of random vectors and combinations of earlier ones.
std::vector<HomogeneousVector> random_span(const ModulePtr& M, int count, Rng& rng);

MatrixFormCategory random_category(Rng& rng);

// A matrix ring over a direct sum of prime rings, plus the block list it was built from.
struct RandomProduct {
    MatrixRingPtr R;
    SemisimpleRingSpec blocks;
    std::vector<RingPtr> H;  // H_c per block
};
RandomProduct random_product(Rng& rng);
// H at object e supported on the subgroup {e} x S, twisted by t on an order-2 generator and a random coboundary.
RingPtr subgroup_ring(const GroupoidPtr& G, const FieldSpec& f, int e, const std::vector<int>& S, Rng& rng, bool twist);

}  // namespace gen
