#include "gradix/division_ring.hpp"

#include "gradix/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace gradix {

RingPtr GradedDivisionRing::assemble(GroupoidPtr g, FieldSpec f, std::vector<Morphism> support)
{
    if (!g) throw ArgumentError("ring needs a groupoid");
    std::shared_ptr<GradedDivisionRing> r(new GradedDivisionRing());
    r->groupoid_ = std::move(g);
    r->field_ = f;
    const auto& G = *r->groupoid_;
    for (auto& m : support)
        if (!G.valid(m)) throw ValidationError("support: morphism " + G.str(m) + " does not belong to the groupoid");
    std::sort(support.begin(), support.end());
    for (std::size_t i = 1; i < support.size(); ++i)
        if (support[i] == support[i - 1]) throw ValidationError("support: morphism " + G.str(support[i]) + " listed twice");
    if (support.empty()) throw ValidationError("support: empty support");
    r->support_ = std::move(support);
    std::set<int> objs;
    for (std::size_t i = 0; i < r->support_.size(); ++i) {
        const auto& m = r->support_[i];
        r->index_[m] = static_cast<int>(i);
        r->by_target_[m.target].push_back(static_cast<int>(i));
        objs.insert(m.target);
        objs.insert(m.source);
    }
    r->objects_.assign(objs.begin(), objs.end());

    for (int e : r->objects_)
        if (!r->in_support(G.identity(e)))
            throw ValidationError("support closure: identity at object " + std::to_string(e) + " is missing from the support");
    for (const auto& m : r->support_)
        if (!r->in_support(G.inverse(m)))
            throw ValidationError("support closure: not inverse-closed, inverse of " + G.str(m) + " is missing");
    for (const auto& a : r->support_)
        for (int j : r->by_target_[a.source]) {
            const auto& b = r->support_[j];
            auto c = *G.compose(a, b);
            if (!r->in_support(c))
                throw ValidationError("support closure: not composition-closed, " + G.str(a) + " o " + G.str(b) + " = " + G.str(c) +
                                      " is missing");
        }
    return r;
}

void GradedDivisionRing::set_factor(const Morphism& a, const Morphism& b, const Scalar& v)
{
    const auto& G = *groupoid_;
    auto ia = index_.find(a), ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end() || a.source != b.target)
        throw ValidationError("factor: entry (" + G.str(a) + "," + G.str(b) + ") is not a composable pair of support morphisms");
    if (!(v.field() == field_)) throw ValidationError("factor: value at (" + G.str(a) + "," + G.str(b) + ") lies in the wrong field");
    if (v.is_zero()) throw ValidationError("factor: zero value at (" + G.str(a) + "," + G.str(b) + ")");
    if (!factor_.emplace(key(ia->second, ib->second), v).second)
        throw ValidationError("factor: entry (" + G.str(a) + "," + G.str(b) + ") given twice");
}

void GradedDivisionRing::validate() const
{
    const auto& G = *groupoid_;
    const int k = static_cast<int>(support_.size());
    for (int i = 0; i < k; ++i)
        for (int j : by_target_.at(support_[i].source))
            if (!factor_.count(key(i, j)))
                throw ValidationError("factor: missing entry for composable pair (" + G.str(support_[i]) + "," + G.str(support_[j]) + ")");
    for (const auto& m : support_) {
        if (!factor(m, G.identity(m.source)).is_one())
            throw ValidationError("normalization: factor(" + G.str(m) + ", d) != 1");
        if (!factor(G.identity(m.target), m).is_one())
            throw ValidationError("normalization: factor(r, " + G.str(m) + ") != 1");
    }
    for (const auto& a : support_)
        for (int jb : by_target_.at(a.source)) {
            const auto& b = support_[jb];
            auto ab = *G.compose(a, b);
            const Scalar& fab = factor(a, b);
            for (int jc : by_target_.at(b.source)) {
                const auto& c = support_[jc];
                auto bc = *G.compose(b, c);
                if (fab * factor(ab, c) != factor(b, c) * factor(a, bc))
                    throw ValidationError("cocycle fails at triple (" + G.str(a) + "," + G.str(b) + "," + G.str(c) + ")");
            }
        }
}

RingPtr GradedDivisionRing::build(GroupoidPtr g, FieldSpec f, std::vector<Morphism> support, const std::vector<FactorEntry>& factor)
{
    auto base = assemble(std::move(g), f, std::move(support));
    auto r = std::const_pointer_cast<GradedDivisionRing>(base);
    for (const auto& e : factor) r->set_factor(e.left, e.right, e.value);
    r->validate();
    return base;
}

RingPtr GradedDivisionRing::build_untwisted(GroupoidPtr g, FieldSpec f, std::vector<Morphism> support)
{
    auto base = assemble(std::move(g), f, std::move(support));
    auto r = std::const_pointer_cast<GradedDivisionRing>(base);
    const int k = static_cast<int>(r->support_.size());
    for (int i = 0; i < k; ++i)
        for (int j : r->by_target_[r->support_[i].source]) r->factor_.emplace(r->key(i, j), Scalar::one(f));
    return base;
}

RingPtr GradedDivisionRing::trivial_field(FieldSpec f, GroupoidPtr g, int obj)
{
    auto id = g->identity(obj);
    return build_untwisted(std::move(g), f, {id});
}

RingPtr GradedDivisionRing::group_ring(FieldSpec f, const FiniteGroup& g)
{
    auto G = FiniteGroupoid::group_as_groupoid(g);
    return build_untwisted(G, f, G->morphisms());
}

RingPtr GradedDivisionRing::twisted_group_ring(FieldSpec f, const FiniteGroup& g, const std::vector<std::vector<Scalar>>& factor)
{
    auto G = FiniteGroupoid::group_as_groupoid(g);
    std::vector<FactorEntry> entries;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            entries.push_back({G->make_morphism(0, a, 0), G->make_morphism(0, b, 0), factor.at(a).at(b)});
    return build(G, f, G->morphisms(), entries);
}

RingPtr GradedDivisionRing::direct_sum(const std::vector<RingPtr>& parts)
{
    if (parts.empty()) throw ArgumentError("direct sum of no rings");
    std::vector<Morphism> support;
    std::vector<FactorEntry> entries;
    std::set<int> seen;
    for (const auto& p : parts) {
        if (p->groupoid_ptr() != parts[0]->groupoid_ptr()) throw ArgumentError("direct sum parts live over different groupoids");
        if (!(p->field() == parts[0]->field())) throw ArgumentError("direct sum parts have different fields");
        for (int e : p->objects())
            if (!seen.insert(e).second) throw ArgumentError("direct sum parts share object " + std::to_string(e));
        support.insert(support.end(), p->support().begin(), p->support().end());
        auto fe = p->factor_entries();
        entries.insert(entries.end(), fe.begin(), fe.end());
    }
    return build(parts[0]->groupoid_ptr(), parts[0]->field(), support, entries);
}

bool GradedDivisionRing::has_object(int e) const
{
    return std::binary_search(objects_.begin(), objects_.end(), e);
}

std::vector<Morphism> GradedDivisionRing::support_between(int target, int source) const
{
    std::vector<Morphism> v;
    auto it = by_target_.find(target);
    if (it == by_target_.end()) return v;
    for (int i : it->second)
        if (support_[i].source == source) v.push_back(support_[i]);
    std::sort(v.begin(), v.end(), [](const Morphism& a, const Morphism& b) { return a.elem < b.elem; });
    return v;
}

const Scalar& GradedDivisionRing::factor(const Morphism& a, const Morphism& b) const
{
    auto ia = index_.find(a), ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end() || a.source != b.target)
        throw ArgumentError("factor requested for non-composable or unsupported pair");
    auto it = factor_.find(key(ia->second, ib->second));
    if (it == factor_.end()) throw ArgumentError("factor entry missing");
    return it->second;
}

std::vector<FactorEntry> GradedDivisionRing::factor_entries() const
{
    std::vector<FactorEntry> v;
    const int k = static_cast<int>(support_.size());
    for (int i = 0; i < k; ++i)
        for (int j : by_target_.at(support_[i].source)) v.push_back({support_[i], support_[j], factor_.at(key(i, j))});
    std::sort(v.begin(), v.end(), [](const FactorEntry& x, const FactorEntry& y) {
        return x.left < y.left || (x.left == y.left && x.right < y.right);
    });
    return v;
}

HomogeneousScalar GradedDivisionRing::unit(const Morphism& deg, const Scalar& c) const
{
    if (!in_support(deg)) throw ArgumentError("degree " + groupoid_->str(deg) + " is not in the support");
    if (c.is_zero()) return zero();
    return HomogeneousScalar{deg, c};
}

HomogeneousScalar GradedDivisionRing::one(int e) const
{
    if (!has_object(e)) throw ArgumentError("1_" + std::to_string(e) + " is zero in this ring");
    return unit(groupoid_->identity(e));
}

HomogeneousScalar GradedDivisionRing::mul_hom(const HomogeneousScalar& x, const HomogeneousScalar& y) const
{
    if (x.is_zero() || y.is_zero()) return zero();
    if (x.degree->source != y.degree->target) return zero();
    auto deg = *groupoid_->compose(*x.degree, *y.degree);
    return HomogeneousScalar{deg, x.coeff * y.coeff * factor(*x.degree, *y.degree)};
}

Scalar GradedDivisionRing::unit_inverse_coeff(const Morphism& g) const
{
    return factor(g, groupoid_->inverse(g)).inverse();
}

HomogeneousScalar GradedDivisionRing::invert_hom(const HomogeneousScalar& x) const
{
    if (x.is_zero()) throw DivisionByZero("inverse of zero homogeneous element");
    return HomogeneousScalar{groupoid_->inverse(*x.degree), x.coeff.inverse() * unit_inverse_coeff(*x.degree)};
}

std::vector<std::vector<int>> GradedDivisionRing::primality_classes() const
{
    std::map<int, int> parent;
    for (int e : objects_) parent[e] = e;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& m : support_) {
        int a = find(m.target), b = find(m.source);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, std::vector<int>> cls;
    for (int e : objects_) cls[find(e)].push_back(e);
    std::vector<std::vector<int>> out;
    for (auto& [root, v] : cls) out.push_back(v);
    return out;
}

RingPtr GradedDivisionRing::restrict_to_objects(const std::vector<int>& objs) const
{
    std::set<int> keep(objs.begin(), objs.end());
    std::vector<Morphism> support;
    for (const auto& m : support_)
        if (keep.count(m.target) && keep.count(m.source)) support.push_back(m);
    if (support.empty()) throw ArgumentError("restriction to these objects is the zero ring");
    auto base = assemble(groupoid_, field_, support);
    auto r = std::const_pointer_cast<GradedDivisionRing>(base);
    const int k = static_cast<int>(r->support_.size());
    for (int i = 0; i < k; ++i)
        for (int j : r->by_target_[r->support_[i].source]) r->factor_.emplace(r->key(i, j), factor(r->support_[i], r->support_[j]));
    return base;
}

std::vector<RingPtr> GradedDivisionRing::decompose_prime() const
{
    std::vector<RingPtr> out;
    for (const auto& c : primality_classes()) out.push_back(restrict_to_objects(c));
    return out;
}

MatrixForm GradedDivisionRing::matrix_form(int base) const
{
    if (!is_gr_prime()) throw PreconditionError("matrix form needs a gr-prime graded division ring");
    if (!has_object(base)) throw ArgumentError("object " + std::to_string(base) + " is not in Gamma'_0(D)");
    MatrixForm mf;
    mf.base = base;
    mf.H = restrict_to_objects({base});
    for (int f : objects_) {
        if (f == base) {
            mf.sigma[f] = groupoid_->identity(base);
            continue;
        }
        auto cands = support_between(base, f);
        mf.sigma[f] = cands.front();
    }
    return mf;
}

RingPtr GradedDivisionRing::matrix_form_inverse(const RingPtr& H, const std::map<int, Morphism>& sigma)
{
    const auto& G = H->groupoid();
    if (H->objects().size() != 1) throw PreconditionError("H must be supported at a single object");
    int e = H->objects().front();
    std::set<int> sources;
    for (const auto& [f, s] : sigma) {
        G.validate(s);
        if (s.target != e || s.source != f) throw PreconditionError("sigma_" + std::to_string(f) + " must lie in eGamma f");
        sources.insert(f);
    }
    auto h_of = [&](const Morphism& g) {
        return G.compose_or_throw(G.compose_or_throw(sigma.at(g.target), g), G.inverse(sigma.at(g.source)));
    };
    std::vector<Morphism> support;
    for (int y : sources)
        for (int x : sources)
            for (const auto& g : G.hom(y, x))
                if (H->in_support(h_of(g))) support.push_back(g);
    auto base = assemble(H->groupoid_ptr(), H->field(), support);
    auto r = std::const_pointer_cast<GradedDivisionRing>(base);
    const int k = static_cast<int>(r->support_.size());
    for (int i = 0; i < k; ++i)
        for (int j : r->by_target_[r->support_[i].source])
            r->factor_.emplace(r->key(i, j), H->factor(h_of(r->support_[i]), h_of(r->support_[j])));
    r->validate();
    return base;
}

SupportIsomorphism GradedDivisionRing::matrix_form_isomorphism(const MatrixForm& mf) const
{
    SupportIsomorphism phi;
    for (const auto& g : support_) {
        auto x = mul_hom(mul_hom(unit(mf.sigma.at(g.target)), unit(g)), invert_hom(unit(mf.sigma.at(g.source))));
        phi.coeff.emplace(g, x.coeff);
    }
    return phi;
}

RingPtr GradedDivisionRing::opposite() const
{
    // (D^op)_g = D_{g^-1}; factor^op(a, b) = factor(b^-1, a^-1).
    auto base = assemble(groupoid_, field_, support_);
    auto r = std::const_pointer_cast<GradedDivisionRing>(base);
    const auto& G = *groupoid_;
    const int k = static_cast<int>(support_.size());
    for (int i = 0; i < k; ++i)
        for (int j : r->by_target_[support_[i].source])
            r->factor_.emplace(r->key(i, j), factor(G.inverse(support_[j]), G.inverse(support_[i])));
    return base;
}

bool GradedDivisionRing::same_data(const GradedDivisionRing& o) const
{
    if (!(field_ == o.field_) || support_ != o.support_) return false;
    if (groupoid_ != o.groupoid_ && groupoid_->signature() != o.groupoid_->signature()) return false;
    for (const auto& [k, v] : factor_) {
        auto it = o.factor_.find(k);
        if (it == o.factor_.end() || it->second != v) return false;
    }
    return factor_.size() == o.factor_.size();
}

}  // namespace gradix
