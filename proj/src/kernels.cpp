#include "gradix/kernels.hpp"

#include "gradix/error.hpp"
#include "gradix/linalg.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gradix::kernels {

static void check_shapes(const HomSpaceMatrix& A, const HomSpaceMatrix& B)
{
    if (A.ring() != B.ring() && !A.ring()->same_data(*B.ring())) throw ArgumentError("Hom-space product over different rings");
    if (A.beta() != B.alpha()) throw ArgumentError("Hom-space product: middle signatures differ");
}

static Scalar entry_product(const HomSpaceMatrix& A, const HomSpaceMatrix& B, int i, int j)
{
    const auto& D = *A.ring();
    const auto& supp = D.support();
    Scalar s = Scalar::zero(D.field());
    for (int k = 0; k < A.cols(); ++k) {
        const Scalar& a = A.at(i, k);
        if (a.is_zero()) continue;
        const Scalar& b = B.at(k, j);
        if (b.is_zero()) continue;
        s += a * b * D.factor(supp[A.slot_index(i, k)], supp[B.slot_index(k, j)]);
    }
    return s;
}

HomSpaceMatrix hom_mul_serial(const HomSpaceMatrix& A, const HomSpaceMatrix& B)
{
    check_shapes(A, B);
    HomSpaceMatrix C(A.ring(), A.alpha(), B.beta());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j) C.set(i, j, entry_product(A, B, i, j));
    return C;
}

HomSpaceMatrix hom_mul_parallel(const HomSpaceMatrix& A, const HomSpaceMatrix& B)
{
    check_shapes(A, B);
    HomSpaceMatrix C(A.ring(), A.alpha(), B.beta());
    const int m = A.rows(), n = B.cols();
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < m; ++i) {
        try {
            for (int j = 0; j < n; ++j) C.set(i, j, entry_product(A, B, i, j));
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return C;
}

HomSpaceMatrix hom_mul(const HomSpaceMatrix& A, const HomSpaceMatrix& B)
{
    long work = static_cast<long>(A.rows()) * A.cols() * B.cols();
    if (work >= 4096) return hom_mul_parallel(A, B);
    return hom_mul_serial(A, B);
}

std::vector<std::vector<int>> subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

static bool invertible_minor(const HomSpaceMatrix& A, const std::vector<int>& r, const std::vector<int>& c)
{
    auto S = A.submatrix(r, c);
    const auto& D = *A.ring();
    for (int i = 0; i < S.rows(); ++i)
        if (!D.has_object(S.alpha()[i].target) || !D.has_object(S.beta()[i].target)) return false;
    return invert_square(S).has_value();
}

int minor_rank_serial(const HomSpaceMatrix& A)
{
    int best = 0;
    for (int k = 1; k <= std::min(A.rows(), A.cols()); ++k) {
        auto rs = subsets(A.rows(), k), cs = subsets(A.cols(), k);
        bool found = false;
        for (std::size_t a = 0; a < rs.size() && !found; ++a)
            for (std::size_t b = 0; b < cs.size() && !found; ++b) found = invertible_minor(A, rs[a], cs[b]);
        if (!found) break;
        best = k;
    }
    return best;
}

int minor_rank_parallel(const HomSpaceMatrix& A)
{
    int best = 0;
    for (int k = 1; k <= std::min(A.rows(), A.cols()); ++k) {
        auto rs = subsets(A.rows(), k), cs = subsets(A.cols(), k);
        const long total = static_cast<long>(rs.size()) * static_cast<long>(cs.size());
        const long ncols = static_cast<long>(cs.size());
        int found = 0;
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) shared(found)
        for (long t = 0; t < total; ++t) {
            int seen;
#pragma omp atomic read
            seen = found;
            if (seen) continue;
            try {
                if (invertible_minor(A, rs[t / ncols], cs[t % ncols])) {
#pragma omp atomic write
                    found = 1;
                }
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        if (!found) break;
        best = k;
    }
    return best;
}

}  // namespace gradix::kernels
