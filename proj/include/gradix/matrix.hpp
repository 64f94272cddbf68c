#pragma once

#include "gradix/division_ring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace gradix {

class MatrixRing;
using MatrixRingPtr = std::shared_ptr<const MatrixRing>;

// M_I(D)(Sigma) with I = {0, ..., n-1}.
class MatrixRing {
public:
    // Throws ValidationError unless every Sigma_i is nonempty, d-unique and r-unique for D.
    static MatrixRingPtr build(RingPtr D, std::vector<std::vector<Morphism>> sigma);
    static MatrixRingPtr build_singletons(RingPtr D, const std::vector<Morphism>& sigma);

    const RingPtr& ring() const { return D_; }
    int size() const { return static_cast<int>(sigma_.size()); }
    const std::vector<Morphism>& sigma(int i) const { return sigma_.at(i); }
    const std::vector<std::vector<Morphism>>& sigmas() const { return sigma_; }
    bool singleton() const;

    std::optional<Morphism> with_source(int i, int obj) const;
    std::optional<Morphism> with_target(int i, int obj) const;
    // sigma_i deg tau_j^{-1} with d(sigma_i) = r(deg), d(tau_j) = d(deg), when it lies in supp(D).
    std::optional<Morphism> slot(int i, int j, const Morphism& deg) const;
    // I_e = {i : Sigma_i e defined}
    std::vector<int> index_set(int obj) const;
    std::size_t component_dimension(const Morphism& deg) const;

    // Same Sigma over D^op.
    MatrixRingPtr opposite() const;
    bool same_data(const MatrixRing& o) const;

private:
    MatrixRing() = default;
    RingPtr D_;
    std::vector<std::vector<Morphism>> sigma_;
};

class HomogeneousMatrix {
public:
    using Entries = std::map<std::pair<int, int>, Scalar>;

    explicit HomogeneousMatrix(MatrixRingPtr R);  // zero
    // Coefficient c at (i,j) stands for c u_{slot(i,j,deg)}.
    HomogeneousMatrix(MatrixRingPtr R, Morphism deg, Entries entries);

    const MatrixRingPtr& ring() const { return R_; }
    const std::optional<Morphism>& degree() const { return deg_; }
    const Entries& entries() const { return entries_; }
    bool is_zero() const { return !deg_.has_value(); }
    Scalar coeff(int i, int j) const;
    HomogeneousScalar entry(int i, int j) const;

    HomogeneousMatrix operator+(const HomogeneousMatrix& o) const;
    HomogeneousMatrix scaled(const Scalar& c) const;
    bool operator==(const HomogeneousMatrix& o) const;
    bool operator!=(const HomogeneousMatrix& o) const { return !(*this == o); }

private:
    MatrixRingPtr R_;
    std::optional<Morphism> deg_;
    Entries entries_;
};

HomogeneousMatrix mul(const HomogeneousMatrix& A, const HomogeneousMatrix& B);
HomogeneousMatrix identity_element(const MatrixRingPtr& R, int obj);
// E_ij^e : 1_e at (i,j), degree sigma_i^{-1} sigma_j with r(sigma_i) = r(sigma_j) = e.
HomogeneousMatrix matrix_unit(const MatrixRingPtr& R, int i, int j, int e);
// c u_rho at (i,j); degree sigma_i^{-1} rho tau_j.
HomogeneousMatrix unit_matrix(const MatrixRingPtr& R, int i, int j, const Morphism& rho, const Scalar& c);
// A of degree g over D maps to A^t of degree g^{-1} over D^op.
HomogeneousMatrix transpose_opposite(const HomogeneousMatrix& A, const MatrixRingPtr& Rop);
HomogeneousMatrix transpose_opposite(const HomogeneousMatrix& A);

// Non-homogeneous element: degree -> component.
class GradedMatrixElement {
public:
    explicit GradedMatrixElement(MatrixRingPtr R) : R_(std::move(R)) {}
    void add(const HomogeneousMatrix& A);
    const std::map<Morphism, HomogeneousMatrix>& components() const { return comps_; }
    GradedMatrixElement operator*(const GradedMatrixElement& o) const;
    bool operator==(const GradedMatrixElement& o) const;

private:
    MatrixRingPtr R_;
    std::map<Morphism, HomogeneousMatrix> comps_;
};

// M_{m x n}(D)[alpha][beta]: entry (i,j) is a coefficient of u_{alpha_i beta_j^{-1}}.
class HomSpaceMatrix {
public:
    HomSpaceMatrix(RingPtr D, std::vector<Morphism> alpha, std::vector<Morphism> beta);
    // I_{r(alpha)}
    static HomSpaceMatrix identity(RingPtr D, std::vector<Morphism> alpha);

    const RingPtr& ring() const { return D_; }
    int rows() const { return static_cast<int>(alpha_.size()); }
    int cols() const { return static_cast<int>(beta_.size()); }
    const std::vector<Morphism>& alpha() const { return alpha_; }
    const std::vector<Morphism>& beta() const { return beta_; }

    std::optional<Morphism> slot(int i, int j) const;
    bool has_slot(int i, int j) const { return slot_[idx(i, j)] >= 0; }
    // index into ring()->support(), or -1
    int slot_index(int i, int j) const { return slot_[idx(i, j)]; }
    const Scalar& at(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, const Scalar& v);
    HomogeneousScalar entry(int i, int j) const;
    bool is_zero() const;
    bool row_is_zero(int i) const;

    HomSpaceMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    // Same coefficients under another signature with identical slot degrees.
    HomSpaceMatrix with_signature(std::vector<Morphism> alpha, std::vector<Morphism> beta) const;
    HomSpaceMatrix hstack(const HomSpaceMatrix& o) const;
    HomSpaceMatrix transpose_opposite(const RingPtr& Dop) const;
    HomSpaceMatrix transpose_opposite() const { return transpose_opposite(D_->opposite()); }

    bool operator==(const HomSpaceMatrix& o) const;
    bool operator!=(const HomSpaceMatrix& o) const { return !(*this == o); }

    // Raw row mutation used by elimination.
    void swap_rows(int i, int j);
    void set_alpha(int i, const Morphism& a);

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * beta_.size() + static_cast<std::size_t>(j); }
    void recompute_slots();

    RingPtr D_;
    std::vector<Morphism> alpha_, beta_;
    std::vector<Scalar> a_;
    std::vector<int> slot_;
};

HomSpaceMatrix operator*(const HomSpaceMatrix& A, const HomSpaceMatrix& B);

// I_e x I_f block of A (degree g in e Gamma f) in [sigma_{I_e} g][sigma_{I_f}], plus its inverse.
struct RectangularBlock {
    std::vector<int> rows, cols;
    HomSpaceMatrix block;
};
RectangularBlock rectangular_block(const HomogeneousMatrix& A, int e, int f);
HomogeneousMatrix from_rectangular_block(const MatrixRingPtr& R, const Morphism& deg, const RectangularBlock& b);

}  // namespace gradix
