#include "gradix/linalg.hpp"

#include "gradix/error.hpp"
#include "gradix/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gradix {

static std::string hs_str(const HomogeneousScalar& a, const FiniteGroupoid& G)
{
    if (a.is_zero()) return "0";
    return a.coeff.str() + "u" + G.str(*a.degree);
}

std::string describe(const EliminationStep& s, const FiniteGroupoid& G)
{
    const char* side = s.side == Side::row ? "r" : "c";
    switch (s.kind) {
    case StepKind::swap:
        return std::string("P_") + side + "(" + std::to_string(s.i + 1) + "," + std::to_string(s.j + 1) + ")";
    case StepKind::scale:
        return std::string("D_") + side + std::to_string(s.i + 1) + "(" + hs_str(s.coeff, G) + ")";
    case StepKind::transvect:
        return std::string("T_") + side + "(" + std::to_string(s.i + 1) + "," + std::to_string(s.j + 1) + ")(" + hs_str(s.coeff, G) + ")";
    }
    return "";
}

static void check_index(int i, int n)
{
    if (i < 0 || i >= n) throw ArgumentError("elementary operation index " + std::to_string(i + 1) + " out of range");
}

static const Morphism& nonzero_degree(const HomogeneousScalar& a)
{
    if (a.is_zero()) throw PreconditionError("elementary coefficient must be nonzero");
    return *a.degree;
}

HomSpaceMatrix row_swap_matrix(const RingPtr& D, const std::vector<Morphism>& alpha, int i, int j)
{
    const int n = static_cast<int>(alpha.size());
    check_index(i, n);
    check_index(j, n);
    auto a2 = alpha;
    std::swap(a2[i], a2[j]);
    HomSpaceMatrix P(D, a2, alpha);
    for (int k = 0; k < n; ++k) {
        int c = k == i ? j : k == j ? i : k;
        if (P.has_slot(k, c)) P.set(k, c, Scalar::one(D->field()));
    }
    return P;
}

HomSpaceMatrix row_scale_matrix(const RingPtr& D, const std::vector<Morphism>& alpha, int i, const HomogeneousScalar& a)
{
    check_index(i, static_cast<int>(alpha.size()));
    const auto& g = nonzero_degree(a);
    const auto& G = D->groupoid();
    if (g.source != alpha[i].target) throw PreconditionError("row scale: d(gamma) != r(alpha_i)");
    auto a2 = alpha;
    a2[i] = *G.compose(g, alpha[i]);
    HomSpaceMatrix M(D, a2, alpha);
    for (int k = 0; k < M.rows(); ++k) {
        if (k == i)
            M.set(k, k, a.coeff);
        else if (M.has_slot(k, k))
            M.set(k, k, Scalar::one(D->field()));
    }
    return M;
}

HomSpaceMatrix row_transvection_matrix(const RingPtr& D, const std::vector<Morphism>& alpha, int i, int j, const HomogeneousScalar& a)
{
    const int n = static_cast<int>(alpha.size());
    check_index(i, n);
    check_index(j, n);
    if (i == j) throw PreconditionError("transvection needs distinct rows");
    auto T = HomSpaceMatrix::identity(D, alpha);
    if (a.is_zero()) return T;
    const auto& G = D->groupoid();
    auto comp = G.compose(*a.degree, alpha[i]);
    if (!comp || *comp != alpha[j]) throw PreconditionError("row transvection: gamma alpha_i != alpha_j");
    T.set(j, i, a.coeff);
    return T;
}

HomSpaceMatrix col_swap_matrix(const RingPtr& D, const std::vector<Morphism>& beta, int i, int j)
{
    const int n = static_cast<int>(beta.size());
    check_index(i, n);
    check_index(j, n);
    auto b2 = beta;
    std::swap(b2[i], b2[j]);
    HomSpaceMatrix Q(D, beta, b2);
    for (int k = 0; k < n; ++k) {
        int c = k == i ? j : k == j ? i : k;
        if (Q.has_slot(k, c)) Q.set(k, c, Scalar::one(D->field()));
    }
    return Q;
}

HomSpaceMatrix col_scale_matrix(const RingPtr& D, const std::vector<Morphism>& beta, int j, const HomogeneousScalar& a)
{
    check_index(j, static_cast<int>(beta.size()));
    const auto& g = nonzero_degree(a);
    const auto& G = D->groupoid();
    if (g.target != beta[j].target) throw PreconditionError("column scale: r(gamma) != r(beta_j)");
    auto b2 = beta;
    b2[j] = *G.compose(G.inverse(g), beta[j]);
    HomSpaceMatrix Q(D, beta, b2);
    for (int k = 0; k < Q.rows(); ++k) {
        if (k == j)
            Q.set(k, k, a.coeff);
        else if (Q.has_slot(k, k))
            Q.set(k, k, Scalar::one(D->field()));
    }
    return Q;
}

HomSpaceMatrix col_transvection_matrix(const RingPtr& D, const std::vector<Morphism>& beta, int i, int j, const HomogeneousScalar& a)
{
    const int n = static_cast<int>(beta.size());
    check_index(i, n);
    check_index(j, n);
    if (i == j) throw PreconditionError("transvection needs distinct columns");
    auto Q = HomSpaceMatrix::identity(D, beta);
    if (a.is_zero()) return Q;
    const auto& G = D->groupoid();
    auto want = G.compose(beta[i], G.inverse(beta[j]));
    if (!want || *want != *a.degree) throw PreconditionError("column transvection: gamma != beta_i beta_j^-1");
    Q.set(i, j, a.coeff);
    return Q;
}

void apply_row_swap(HomSpaceMatrix& A, int i, int j)
{
    check_index(i, A.rows());
    check_index(j, A.rows());
    A.swap_rows(i, j);
}

void apply_row_scale(HomSpaceMatrix& A, int i, const HomogeneousScalar& a)
{
    check_index(i, A.rows());
    const auto& g = nonzero_degree(a);
    const auto& D = *A.ring();
    const auto& G = D.groupoid();
    if (g.source != A.alpha()[i].target) throw PreconditionError("row scale: d(gamma) != r(alpha_i)");
    std::vector<Scalar> row(A.cols(), Scalar::zero(D.field()));
    for (int k = 0; k < A.cols(); ++k) {
        if (A.at(i, k).is_zero()) continue;
        row[k] = a.coeff * A.at(i, k) * D.factor(g, *A.slot(i, k));
    }
    for (int k = 0; k < A.cols(); ++k) A.set(i, k, Scalar::zero(D.field()));
    A.set_alpha(i, *G.compose(g, A.alpha()[i]));
    for (int k = 0; k < A.cols(); ++k) A.set(i, k, row[k]);
}

void apply_row_transvection(HomSpaceMatrix& A, int i, int j, const HomogeneousScalar& a)
{
    check_index(i, A.rows());
    check_index(j, A.rows());
    if (i == j) throw PreconditionError("transvection needs distinct rows");
    if (a.is_zero()) return;
    const auto& D = *A.ring();
    const auto& G = D.groupoid();
    const auto& g = *a.degree;
    auto comp = G.compose(g, A.alpha()[i]);
    if (!comp || *comp != A.alpha()[j]) throw PreconditionError("row transvection: gamma alpha_i != alpha_j");
    for (int k = 0; k < A.cols(); ++k) {
        if (A.at(i, k).is_zero()) continue;
        A.set(j, k, A.at(j, k) + a.coeff * A.at(i, k) * D.factor(g, *A.slot(i, k)));
    }
}

RowReduction row_reduce(const HomSpaceMatrix& A)
{
    const auto& D = A.ring();
    RowReduction out{A, HomSpaceMatrix::identity(D, A.alpha()), {}, {}, 0};
    auto& R = out.echelon;
    auto& E = out.transform;
    int r = 0;
    for (int c = 0; c < R.cols() && r < R.rows(); ++c) {
        int p = -1;
        for (int i = r; i < R.rows(); ++i)
            if (!R.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) {
            apply_row_swap(R, p, r);
            apply_row_swap(E, p, r);
            out.steps.push_back({StepKind::swap, Side::row, p, r, D->zero(), R.alpha()});
        }
        auto inv = D->invert_hom(R.entry(r, c));
        apply_row_scale(R, r, inv);
        apply_row_scale(E, r, inv);
        out.steps.push_back({StepKind::scale, Side::row, r, r, inv, R.alpha()});
        for (int i = 0; i < R.rows(); ++i) {
            if (i == r || R.at(i, c).is_zero()) continue;
            auto e = R.entry(i, c);
            HomogeneousScalar t{e.degree, -e.coeff};
            apply_row_transvection(R, r, i, t);
            apply_row_transvection(E, r, i, t);
            out.steps.push_back({StepKind::transvect, Side::row, r, i, t, R.alpha()});
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

int rho_r(const HomSpaceMatrix& A)
{
    return row_reduce(A).rank;
}

int rho_c(const HomSpaceMatrix& A)
{
    return row_reduce(A.transpose_opposite()).rank;
}

int default_brute_force_bound()
{
    if (const char* env = std::getenv("GRADIX_MAX_BRUTE_FORCE")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
    }
    return 8;
}

bool RankReport::consistent() const
{
    bool ok = rho_r == rho_c && rho_r == rho;
    if (rho_i) ok = ok && *rho_i == rho_r;
    if (rho_r_alternative) ok = ok && *rho_r_alternative == rho_r;
    return ok;
}

// kappa_e: smallest non-identity morphism with target e, if any.
static std::optional<Morphism> kappa(const FiniteGroupoid& G, int e)
{
    int b = G.block_of(e);
    for (int x : G.block(b).objects)
        for (const auto& m : G.hom(e, x))
            if (!G.is_identity(m)) return m;
    return std::nullopt;
}

RankReport rank_all(const HomSpaceMatrix& A, RankOptions opt)
{
    RankReport rep;
    auto red = row_reduce(A);
    rep.rho_r = red.rank;
    rep.steps = red.steps;
    rep.rho_c = rho_c(A);

    const auto& D = A.ring();
    std::vector<Morphism> inner;
    for (int t = 0; t < red.rank; ++t) inner.push_back(red.echelon.alpha()[t]);
    std::vector<int> all_rows(A.rows()), first(red.rank);
    for (int i = 0; i < A.rows(); ++i) all_rows[i] = i;
    for (int t = 0; t < red.rank; ++t) first[t] = t;
    std::vector<int> all_cols(A.cols());
    for (int j = 0; j < A.cols(); ++j) all_cols[j] = j;
    rep.B = A.submatrix(all_rows, red.pivots);
    rep.C = red.echelon.submatrix(first, all_cols);
    if (*rep.B * *rep.C != A) throw std::logic_error("rank factorization A = BC failed");
    rep.rho = red.rank;

    if (opt.check_alternative) {
        const auto& G = D->groupoid();
        bool ok = true;
        std::vector<Morphism> a2, b2;
        for (const auto& a : A.alpha()) {
            auto k = kappa(G, a.source);
            if (!k) {
                ok = false;
                break;
            }
            a2.push_back(*G.compose(a, *k));
        }
        for (const auto& b : A.beta()) {
            if (!ok) break;
            auto k = kappa(G, b.source);
            if (!k) {
                ok = false;
                break;
            }
            b2.push_back(*G.compose(b, *k));
        }
        if (ok) rep.rho_r_alternative = rho_r(A.with_signature(a2, b2));
    }

    int bound = opt.brute_force_bound >= 0 ? opt.brute_force_bound : default_brute_force_bound();
    if (std::max(A.rows(), A.cols()) <= bound)
        rep.rho_i = opt.parallel ? kernels::minor_rank_parallel(A) : kernels::minor_rank_serial(A);
    else
        rep.rho_i_skipped = true;
    if (!rep.consistent()) throw std::logic_error("rank equality violated");
    return rep;
}

std::optional<HomSpaceMatrix> invert_square(const HomSpaceMatrix& A)
{
    if (A.rows() != A.cols()) throw ArgumentError("invert_square needs a square signature");
    const auto& D = A.ring();
    for (int i = 0; i < A.rows(); ++i) {
        if (!D->has_object(A.alpha()[i].target))
            throw PreconditionError("1_r(alpha_" + std::to_string(i + 1) + ") is zero");
        if (!D->has_object(A.beta()[i].target))
            throw PreconditionError("1_r(beta_" + std::to_string(i + 1) + ") is zero");
    }
    auto red = row_reduce(A);
    if (red.rank < A.rows()) return std::nullopt;
    HomSpaceMatrix B = red.transform;
    if (A * B != HomSpaceMatrix::identity(D, A.alpha())) throw std::logic_error("right inverse check failed");
    if (B * A != HomSpaceMatrix::identity(D, A.beta())) throw std::logic_error("left inverse check failed");
    return B;
}

std::optional<Solution> solve(const HomSpaceMatrix& A, const HomSpaceMatrix& b)
{
    if (b.cols() != 1) throw ArgumentError("right-hand side must be a single column");
    if (b.alpha() != A.alpha()) throw ArgumentError("right-hand side rows do not match the row signature of A");
    auto red = row_reduce(A);
    auto Eb = red.transform * b;
    for (int t = red.rank; t < Eb.rows(); ++t)
        if (!Eb.at(t, 0).is_zero()) return std::nullopt;
    HomSpaceMatrix x(A.ring(), A.beta(), b.beta());
    for (int t = 0; t < red.rank; ++t) x.set(red.pivots[t], 0, Eb.at(t, 0));
    if (A * x != b) throw std::logic_error("solution check failed");
    return Solution{x, red.rank == A.cols()};
}

}  // namespace gradix
