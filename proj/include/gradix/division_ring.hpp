#pragma once

#include "gradix/field.hpp"
#include "gradix/groupoid.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace gradix {

// c * u_degree, or zero when degree is absent.
struct HomogeneousScalar {
    std::optional<Morphism> degree;
    Scalar coeff;

    bool is_zero() const { return !degree.has_value(); }
    static HomogeneousScalar zero(const FieldSpec& f) { return HomogeneousScalar{std::nullopt, Scalar::zero(f)}; }
};

struct FactorEntry {
    Morphism left;
    Morphism right;
    Scalar value;
};

class GradedDivisionRing;
using RingPtr = std::shared_ptr<const GradedDivisionRing>;

struct MatrixForm {
    RingPtr H;                       // 1_e D 1_e
    int base = 0;                    // e
    std::map<int, Morphism> sigma;   // f -> sigma_f in supp(D) with r = e, d = f
};

// Phi(u_gamma) = coeff[gamma] * u'_gamma between a prime ring and its matrix-form reconstruction.
struct SupportIsomorphism {
    std::map<Morphism, Scalar> coeff;
};

class GradedDivisionRing {
public:
    // Validates every invariant; throws ValidationError naming the failed one.
    static RingPtr build(GroupoidPtr g, FieldSpec f, std::vector<Morphism> support, const std::vector<FactorEntry>& factor);
    // Same data, factor = 1 on every composable pair.
    static RingPtr build_untwisted(GroupoidPtr g, FieldSpec f, std::vector<Morphism> support);

    static RingPtr trivial_field(FieldSpec f, GroupoidPtr g, int obj);
    static RingPtr group_ring(FieldSpec f, const FiniteGroup& g);
    // factor[g][h] over the one-object groupoid of g.
    static RingPtr twisted_group_ring(FieldSpec f, const FiniteGroup& g, const std::vector<std::vector<Scalar>>& factor);
    static RingPtr direct_sum(const std::vector<RingPtr>& parts);

    const FiniteGroupoid& groupoid() const { return *groupoid_; }
    const GroupoidPtr& groupoid_ptr() const { return groupoid_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<Morphism>& support() const { return support_; }
    bool in_support(const Morphism& m) const { return index_.count(m) != 0; }
    // Gamma'_0(D), sorted.
    const std::vector<int>& objects() const { return objects_; }
    bool has_object(int e) const;
    // supp cap target Gamma source, ordered by group element index.
    std::vector<Morphism> support_between(int target, int source) const;

    const Scalar& factor(const Morphism& a, const Morphism& b) const;
    std::vector<FactorEntry> factor_entries() const;

    HomogeneousScalar unit(const Morphism& deg, const Scalar& c) const;
    HomogeneousScalar unit(const Morphism& deg) const { return unit(deg, Scalar::one(field_)); }
    HomogeneousScalar one(int e) const;
    HomogeneousScalar zero() const { return HomogeneousScalar::zero(field_); }

    HomogeneousScalar mul_hom(const HomogeneousScalar& x, const HomogeneousScalar& y) const;
    HomogeneousScalar invert_hom(const HomogeneousScalar& x) const;
    // coefficient of u_g^{-1}
    Scalar unit_inverse_coeff(const Morphism& g) const;

    std::vector<std::vector<int>> primality_classes() const;
    bool is_gr_prime() const { return primality_classes().size() == 1; }
    std::vector<RingPtr> decompose_prime() const;
    RingPtr restrict_to_objects(const std::vector<int>& objs) const;

    MatrixForm matrix_form(int base) const;
    static RingPtr matrix_form_inverse(const RingPtr& H, const std::map<int, Morphism>& sigma);
    // Phi : this -> rebuilt, for rebuilt = matrix_form_inverse(matrix_form(base)).
    SupportIsomorphism matrix_form_isomorphism(const MatrixForm& mf) const;

    RingPtr opposite() const;

    bool same_data(const GradedDivisionRing& o) const;

private:
    GradedDivisionRing() = default;
    static RingPtr assemble(GroupoidPtr g, FieldSpec f, std::vector<Morphism> support);
    void set_factor(const Morphism& a, const Morphism& b, const Scalar& v);
    void validate() const;
    std::uint64_t key(int i, int j) const { return static_cast<std::uint64_t>(i) * support_.size() + static_cast<std::uint64_t>(j); }

    GroupoidPtr groupoid_;
    FieldSpec field_;
    std::vector<Morphism> support_;
    std::unordered_map<Morphism, int, MorphismHash> index_;
    std::vector<int> objects_;
    std::unordered_map<std::uint64_t, Scalar> factor_;
    std::unordered_map<int, std::vector<int>> by_target_;  // object -> support indices with that target
};

}  // namespace gradix
