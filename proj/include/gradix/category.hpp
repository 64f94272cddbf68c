#pragma once

#include "gradix/field.hpp"
#include "gradix/groupoid.hpp"
#include "gradix/structure.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace gradix {

// Hom(A, B) = prod_j M_{n(j,B) x n(j,A)}(D_j).
struct MatrixFormCategory {
    std::vector<std::string> objects;
    std::vector<FieldSpec> rings;
    std::vector<std::vector<int>> dims;  // dims[A][j] = n(j, A)

    // Throws ValidationError.
    void validate() const;
    int n(int j, int A) const { return dims.at(A).at(j); }
    // j with n(j, A) > 0 for some A
    std::vector<int> effective_rings() const;
};

struct CategoryFlags {
    bool semisimple = true;
    bool simple_artinian = false;
    bool all_functors_free = false;
    bool division = false;
    bool simple_division = false;

    std::vector<int> rings;         // effective j
    std::vector<int> free_objects;  // A_j per effective j, when all_functors_free
    std::string simple_witness;
    std::string free_witness;
    std::string division_witness;
};

CategoryFlags classify_category(const MatrixFormCategory& C);
// Block j: D_j at A_j, sigma_(j,A,p) = (A_j, A). Objects of the pair groupoid are 1-based indices.
SemisimpleRingSpec category_to_semisimple_spec(const MatrixFormCategory& C);
// Nonzero objects grouped by the nonzero-hom relation.
std::vector<std::vector<int>> division_components(const MatrixFormCategory& C);

struct RawHom {
    int from = 0;
    int to = 0;
    int dim = 0;
};

struct RawComposition {
    std::array<int, 2> f;  // (hom, basis) with f : A -> B
    std::array<int, 2> g;  // g : B -> C
    std::vector<std::pair<int, Scalar>> result;  // g o f in Hom(A, C)
};

struct RawCategory {
    FieldSpec field;
    std::vector<std::string> objects;
    std::vector<RawHom> homs;  // at most one per (from, to); absent means zero
    std::vector<RawComposition> compose;
    std::vector<std::vector<std::pair<int, Scalar>>> identities;  // per object, in Hom(A, A)
};

using Coords = std::vector<Scalar>;

// R[C] graded by the pair groupoid: R_(A,B) = Hom(B, A), product = composition or zero.
class CategoryRing {
public:
    // Throws ValidationError naming the failed axiom.
    static CategoryRing build(const RawCategory& C);

    const GroupoidPtr& groupoid() const { return groupoid_; }
    const FieldSpec& field() const { return field_; }
    int objects() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    // dim R_(A,B), 0-based objects
    int component_dimension(int A, int B) const;
    std::vector<Morphism> support() const;
    // x in R_(A,B), y in R_(B,C) -> xy in R_(A,C)
    Coords mul(int A, int B, int C, const Coords& x, const Coords& y) const;
    const Coords& unit(int A) const { return units_.at(A); }

private:
    Coords zero_coords_helper(int A, int B) const;
    Coords basis_product(int A, int B, int C, int bx, int by) const;

    GroupoidPtr groupoid_;
    FieldSpec field_;
    std::vector<std::string> names_;
    std::map<std::pair<int, int>, int> dim_;  // (A, B) -> dim Hom(B, A)
    // (A, B, C, bx, by) -> coordinates of bx * by
    std::map<std::array<int, 5>, Coords> table_;
    std::vector<Coords> units_;
};

CategoryRing ring_of_category(const RawCategory& C);
// Realizes the matrix-form data by matrix units; needs a single common field.
RawCategory to_raw_category(const MatrixFormCategory& C);

}  // namespace gradix
