#pragma once

#include "gradix/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gradix {

// M_K(D)(sigma) with D gr-prime and supp(D) inside base Gamma base.
struct SpecBlock {
    RingPtr D;
    int base = 0;
    std::vector<Morphism> sigma;  // r(sigma_k) = base
    std::vector<int> origin;      // 1-based index of sigma_k in the ring it came from
};

class SemisimpleRingSpec {
public:
    // Throws ValidationError when a block is malformed.
    static SemisimpleRingSpec make(std::vector<SpecBlock> blocks);

    const std::vector<SpecBlock>& blocks() const { return blocks_; }
    const GroupoidPtr& groupoid() const { return groupoid_; }
    // K_{j,e} = {k : d(sigma_k) = e}
    std::vector<int> K(int j, int e) const;
    // e -> blocks j with K_{j,e} nonempty
    std::map<int, std::vector<int>> summability() const;
    MatrixRingPtr block_ring(int j) const;

private:
    GroupoidPtr groupoid_;
    std::vector<SpecBlock> blocks_;
    std::vector<MatrixRingPtr> rings_;
};

struct ClassificationFlags {
    bool gr_semisimple = true;
    bool gamma0_artinian = true;
    bool gr_simple = false;
    bool pfm = false;
    bool gr_division = false;
    bool ipbn = false;

    std::vector<int> pfm_objects;  // f_j when pfm holds
    std::string simple_witness;
    std::string pfm_witness;
    std::string division_witness;
    std::string ipbn_witness;
    // Shifts with (+)R(left) ~ (+)R(right) and different counts when IPBN fails.
    std::vector<Morphism> ipbn_left, ipbn_right;
};

ClassificationFlags classify(const SemisimpleRingSpec& spec);
ClassificationFlags classify(const MatrixRingPtr& R);
// D viewed as M_1(D)({identities of Gamma'_0(D)}).
ClassificationFlags classify(const RingPtr& D);
MatrixRingPtr as_matrix_ring(const RingPtr& D);

// Gr-simple isotypic signature of R(gamma): (block, coset H_j sigma_k gamma) -> multiplicity.
std::map<std::pair<int, Morphism>, int> simple_signature(const SemisimpleRingSpec& spec, const Morphism& gamma);

SemisimpleRingSpec wedderburn_decompose(const MatrixRingPtr& R);
SemisimpleRingSpec wedderburn_decompose(const RingPtr& D, const std::vector<std::vector<Morphism>>& sigma);
// dim R_gamma == sum of block dimensions for every gamma; returns the first failing degree.
std::optional<Morphism> dimension_audit(const MatrixRingPtr& R, const SemisimpleRingSpec& spec);

struct IsoCertificate {
    Morphism tau;
    std::vector<int> pi;              // i -> pi(i)
    std::vector<Morphism> u;          // u_i = tau^{-1} delta_{pi(i)} sigma_i^{-1}
    std::map<Morphism, Scalar> c;     // phi(x u_rho) = x c(rho) u'_{tau rho tau^{-1}}
};

enum class IsoStatus { isomorphic, not_isomorphic, inconclusive };
std::string to_string(IsoStatus s);

struct IsoResult {
    IsoStatus status = IsoStatus::not_isomorphic;
    std::optional<IsoCertificate> cert;
    std::string reason;
};

struct IsoOptions {
    int coboundary_bound = 12;
    long max_prime_search = 65536;
};

IsoResult iso_test(const SpecBlock& a, const SpecBlock& b, IsoOptions opt = {});
// Checks Phi on all generator pairs, degrees and identities.
bool verify_certificate(const SpecBlock& a, const SpecBlock& b, const IsoCertificate& cert);
// Phi(A) for A in M(a).
HomogeneousMatrix apply_certificate(const SpecBlock& a, const MatrixRingPtr& Ra, const MatrixRingPtr& Rb, const IsoCertificate& cert,
                                    const HomogeneousMatrix& A);

struct SpecIsoResult {
    IsoStatus status = IsoStatus::not_isomorphic;
    std::vector<int> block_map;  // j -> pi(j)
    std::vector<IsoCertificate> certs;
    std::string reason;
};
SpecIsoResult iso_spec(const SemisimpleRingSpec& a, const SemisimpleRingSpec& b, IsoOptions opt = {});

// Block sizes n_1..n_k with R_e ~ prod M_{n_k}(D_{e0}); singleton signatures only.
std::vector<int> corner_structure(const MatrixRingPtr& R, int e);

// Element of (+)_i R(gamma_i) of a given degree: part (i, j) lies in block j of R_{gamma_i degree}.
struct SpecVector {
    Morphism degree;
    std::map<std::pair<int, int>, HomogeneousMatrix> parts;
};

SpecVector spec_standard_generator(const SemisimpleRingSpec& spec, const std::vector<Morphism>& shifts, int i);
// Gr-simple dimension of the submodule generated by gens; PreconditionError unless pfm.
int simple_dimension(const SemisimpleRingSpec& spec, const std::vector<Morphism>& shifts, const std::vector<SpecVector>& gens);
int simple_dimension(const SemisimpleRingSpec& spec, const std::vector<Morphism>& shifts);
bool is_pseudo_basis(const SemisimpleRingSpec& spec, const std::vector<Morphism>& shifts, const std::vector<SpecVector>& gens);

}  // namespace gradix
