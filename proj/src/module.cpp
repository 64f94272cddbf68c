#include "gradix/module.hpp"

#include "gradix/error.hpp"
#include "gradix/linalg.hpp"

namespace gradix {

ModulePtr GradedModule::make(RingPtr D, std::vector<Morphism> shifts)
{
    if (!D) throw ArgumentError("module needs a ring");
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        D->groupoid().validate(shifts[i]);
        if (!D->has_object(shifts[i].target))
            throw ValidationError("module shift " + std::to_string(i + 1) + ": 1_r(delta) is zero, so D(delta) = 0");
    }
    std::shared_ptr<GradedModule> m(new GradedModule());
    m->D_ = std::move(D);
    m->shifts_ = std::move(shifts);
    return m;
}

std::map<int, int> GradedModule::gamma0_dimension() const
{
    std::map<int, int> out;
    for (const auto& d : shifts_) ++out[d.source];
    return out;
}

std::size_t GradedModule::component_dimension(const Morphism& g) const
{
    std::size_t n = 0;
    const auto& G = D_->groupoid();
    for (const auto& d : shifts_) {
        auto c = G.compose(d, g);
        if (c && D_->in_support(*c)) ++n;
    }
    return n;
}

HomogeneousVector HomogeneousVector::make(ModulePtr M, Morphism degree, std::map<int, Scalar> entries)
{
    const auto& D = *M->ring();
    const auto& G = D.groupoid();
    G.validate(degree);
    HomogeneousVector v{M, degree, {}};
    for (auto& [i, c] : entries) {
        if (i < 0 || i >= M->pdim()) throw ArgumentError("vector entry index " + std::to_string(i + 1) + " out of range");
        if (!(c.field() == D.field())) throw ArgumentError("vector entry lies in the wrong field");
        if (c.is_zero()) continue;
        auto s = G.compose(M->shifts()[i], degree);
        if (!s || !D.in_support(*s))
            throw ArgumentError("vector entry " + std::to_string(i + 1) + " must vanish: delta_i tau is not in the support");
        v.entries.emplace(i, c);
    }
    return v;
}

HomogeneousVector standard_generator(const ModulePtr& M, int i)
{
    const auto& G = M->ring()->groupoid();
    return HomogeneousVector::make(M, G.inverse(M->shifts().at(i)), {{i, Scalar::one(M->ring()->field())}});
}

std::vector<HomogeneousVector> standard_pseudo_basis(const ModulePtr& M)
{
    std::vector<HomogeneousVector> v;
    for (int i = 0; i < M->pdim(); ++i) v.push_back(standard_generator(M, i));
    return v;
}

static void check_module(const ModulePtr& M, const std::vector<HomogeneousVector>& v)
{
    for (const auto& x : v)
        if (x.module != M) throw ArgumentError("vectors belong to different modules");
}

HomSpaceMatrix vectors_matrix(const ModulePtr& M, const std::vector<HomogeneousVector>& v)
{
    check_module(M, v);
    const auto& G = M->ring()->groupoid();
    std::vector<Morphism> beta;
    for (const auto& x : v) beta.push_back(G.inverse(x.degree));
    HomSpaceMatrix A(M->ring(), M->shifts(), beta);
    for (std::size_t t = 0; t < v.size(); ++t)
        for (const auto& [i, c] : v[t].entries) A.set(i, static_cast<int>(t), c);
    return A;
}

int pdim_of_span(const ModulePtr& M, const std::vector<HomogeneousVector>& v)
{
    if (v.empty()) return 0;
    return rho_c(vectors_matrix(M, v));
}

bool is_pseudo_independent(const ModulePtr& M, const std::vector<HomogeneousVector>& v)
{
    return pdim_of_span(M, v) == static_cast<int>(v.size());
}

std::vector<HomogeneousVector> extend_to_pseudo_basis(const ModulePtr& M, const std::vector<HomogeneousVector>& v)
{
    if (!is_pseudo_independent(M, v)) throw PreconditionError("input vectors are not pseudo-linearly independent");
    auto out = v;
    for (int i = 0; i < M->pdim() && static_cast<int>(out.size()) < M->pdim(); ++i) {
        out.push_back(standard_generator(M, i));
        if (!is_pseudo_independent(M, out)) out.pop_back();
    }
    return out;
}

std::vector<int> basis_from_generators(const ModulePtr& M, const std::vector<HomogeneousVector>& v)
{
    check_module(M, v);
    std::vector<int> keep;
    std::vector<HomogeneousVector> cur;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t].is_zero()) continue;
        cur.push_back(v[t]);
        if (is_pseudo_independent(M, cur))
            keep.push_back(static_cast<int>(t));
        else
            cur.pop_back();
    }
    return keep;
}

HomogeneousVector act(const HomogeneousVector& x, const HomogeneousScalar& a)
{
    const auto& D = *x.module->ring();
    const auto& G = D.groupoid();
    if (a.is_zero()) throw ArgumentError("acting by zero has no degree");
    auto deg = G.compose(x.degree, *a.degree);
    if (!deg) throw ArgumentError("x a is not defined: d(deg x) != r(deg a)");
    std::map<int, Scalar> e;
    for (const auto& [i, c] : x.entries) {
        auto s = *G.compose(x.module->shifts()[i], x.degree);
        e.emplace(i, c * a.coeff * D.factor(s, *a.degree));
    }
    return HomogeneousVector::make(x.module, *deg, e);
}

HomogeneousVector add(const HomogeneousVector& x, const HomogeneousVector& y)
{
    if (x.module != y.module) throw ArgumentError("vectors belong to different modules");
    if (x.degree != y.degree) throw ArgumentError("sum of vectors of different degrees");
    auto e = x.entries;
    for (const auto& [i, c] : y.entries) {
        auto it = e.find(i);
        if (it == e.end())
            e.emplace(i, c);
        else
            it->second += c;
    }
    return HomogeneousVector::make(x.module, x.degree, e);
}

std::optional<std::vector<HomogeneousScalar>> express(const ModulePtr& M, const std::vector<HomogeneousVector>& v, const HomogeneousVector& b)
{
    const auto& G = M->ring()->groupoid();
    auto A = vectors_matrix(M, v);
    HomSpaceMatrix col(M->ring(), M->shifts(), {G.inverse(b.degree)});
    for (const auto& [i, c] : b.entries) col.set(i, 0, c);
    auto sol = solve(A, col);
    if (!sol) return std::nullopt;
    std::vector<HomogeneousScalar> out;
    for (int t = 0; t < sol->x.rows(); ++t) out.push_back(sol->x.entry(t, 0));
    return out;
}

ModulePtr shift(const ModulePtr& M, const Morphism& sigma)
{
    const auto& G = M->ring()->groupoid();
    G.validate(sigma);
    std::vector<Morphism> s;
    for (const auto& d : M->shifts())
        if (d.source == sigma.target) s.push_back(*G.compose(d, sigma));
    return GradedModule::make(M->ring(), s);
}

bool shift_identity_check(const ModulePtr& M, const Morphism& sigma)
{
    const auto& G = M->ring()->groupoid();
    auto Ms = shift(M, sigma);
    auto Mr = shift(M, G.identity(sigma.target));
    for (const auto& g : G.morphisms()) {
        std::size_t lhs = Ms->component_dimension(g);
        if (g.target != sigma.source) {
            if (lhs != 0) return false;
            continue;
        }
        if (lhs != Mr->component_dimension(*G.compose(sigma, g))) return false;
    }
    return true;
}

HomSpaceMatrix hom_space(const ModulePtr& M, const ModulePtr& N, const Morphism& gamma, std::vector<int>* rows)
{
    if (M->ring() != N->ring() && !M->ring()->same_data(*N->ring())) throw ArgumentError("modules over different rings");
    const auto& G = M->ring()->groupoid();
    G.validate(gamma);
    std::vector<Morphism> alpha;
    std::vector<int> idx;
    for (int i = 0; i < N->pdim(); ++i) {
        auto c = G.compose(N->shifts()[i], gamma);
        if (!c) continue;
        alpha.push_back(*c);
        idx.push_back(i);
    }
    if (rows) *rows = idx;
    return HomSpaceMatrix(M->ring(), alpha, M->shifts());
}

std::size_t hom_degree_dimension(const ModulePtr& M, const ModulePtr& N, const Morphism& gamma)
{
    auto H = hom_space(M, N, gamma);
    std::size_t n = 0;
    for (int i = 0; i < H.rows(); ++i)
        for (int j = 0; j < H.cols(); ++j)
            if (H.has_slot(i, j)) ++n;
    return n;
}

}  // namespace gradix
