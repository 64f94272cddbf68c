#pragma once

#include "gradix/matrix.hpp"

#include <map>
#include <memory>
#include <vector>

namespace gradix {

class GradedModule;
using ModulePtr = std::shared_ptr<const GradedModule>;

// Pseudo-free right module (+)_i D(delta_i).
class GradedModule {
public:
    static ModulePtr make(RingPtr D, std::vector<Morphism> shifts);

    const RingPtr& ring() const { return D_; }
    const std::vector<Morphism>& shifts() const { return shifts_; }
    int pdim() const { return static_cast<int>(shifts_.size()); }
    std::map<int, int> gamma0_dimension() const;
    // dim_F M_gamma
    std::size_t component_dimension(const Morphism& g) const;

private:
    GradedModule() = default;
    RingPtr D_;
    std::vector<Morphism> shifts_;
};

// Entry i is a coefficient of u_{delta_i degree}.
struct HomogeneousVector {
    ModulePtr module;
    Morphism degree;
    std::map<int, Scalar> entries;

    static HomogeneousVector make(ModulePtr M, Morphism degree, std::map<int, Scalar> entries);
    bool is_zero() const { return entries.empty(); }
};

// 1_{r(delta_i)} in slot i, degree delta_i^{-1}.
HomogeneousVector standard_generator(const ModulePtr& M, int i);
std::vector<HomogeneousVector> standard_pseudo_basis(const ModulePtr& M);

// Columns are the vectors: [delta][degree^{-1}].
HomSpaceMatrix vectors_matrix(const ModulePtr& M, const std::vector<HomogeneousVector>& v);

bool is_pseudo_independent(const ModulePtr& M, const std::vector<HomogeneousVector>& v);
std::vector<HomogeneousVector> extend_to_pseudo_basis(const ModulePtr& M, const std::vector<HomogeneousVector>& v);
std::vector<int> basis_from_generators(const ModulePtr& M, const std::vector<HomogeneousVector>& v);
int pdim_of_span(const ModulePtr& M, const std::vector<HomogeneousVector>& v);

// x a for a homogeneous a with r(deg a) = d(deg x).
HomogeneousVector act(const HomogeneousVector& x, const HomogeneousScalar& a);
HomogeneousVector add(const HomogeneousVector& x, const HomogeneousVector& y);
// Coefficients expressing b in the span of v, if any.
std::optional<std::vector<HomogeneousScalar>> express(const ModulePtr& M, const std::vector<HomogeneousVector>& v, const HomogeneousVector& b);

ModulePtr shift(const ModulePtr& M, const Morphism& sigma);
bool shift_identity_check(const ModulePtr& M, const Morphism& sigma);
// dim HOM(M, N)_gamma for M = (+)D(mu_j), N = (+)D(nu_i).
std::size_t hom_degree_dimension(const ModulePtr& M, const ModulePtr& N, const Morphism& gamma);
// The matching Hom-space [nu gamma][mu] restricted to rows where nu_i gamma is defined.
HomSpaceMatrix hom_space(const ModulePtr& M, const ModulePtr& N, const Morphism& gamma, std::vector<int>* rows = nullptr);

}  // namespace gradix
