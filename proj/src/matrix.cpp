#include "gradix/matrix.hpp"

#include "gradix/error.hpp"
#include "gradix/kernels.hpp"

#include <algorithm>
#include <set>

namespace gradix {

MatrixRingPtr MatrixRing::build(RingPtr D, std::vector<std::vector<Morphism>> sigma)
{
    if (!D) throw ArgumentError("matrix ring needs a coefficient ring");
    const auto& G = D->groupoid();
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const std::string name = "Sigma_" + std::to_string(i + 1);
        if (sigma[i].empty()) throw ValidationError("matricial: " + name + " is empty");
        std::set<int> srcs, tgts;
        for (const auto& s : sigma[i]) {
            if (!G.valid(s)) throw ValidationError("matricial: " + name + " contains a morphism outside the groupoid");
            if (!srcs.insert(s.source).second)
                throw ValidationError("d-uniqueness: " + name + " has two morphisms with source " + std::to_string(s.source));
            if (!tgts.insert(s.target).second)
                throw ValidationError("r-uniqueness: " + name + " has two morphisms with target " + std::to_string(s.target));
            if (!D->has_object(s.target))
                throw ValidationError("r-uniqueness for D: target " + std::to_string(s.target) + " of " + G.str(s) + " in " + name +
                                      " is not in Gamma'_0(D)");
        }
        std::sort(sigma[i].begin(), sigma[i].end());
    }
    std::shared_ptr<MatrixRing> r(new MatrixRing());
    r->D_ = std::move(D);
    r->sigma_ = std::move(sigma);
    return r;
}

MatrixRingPtr MatrixRing::build_singletons(RingPtr D, const std::vector<Morphism>& sigma)
{
    std::vector<std::vector<Morphism>> s;
    for (const auto& m : sigma) s.push_back({m});
    return build(std::move(D), std::move(s));
}

bool MatrixRing::singleton() const
{
    return std::all_of(sigma_.begin(), sigma_.end(), [](const auto& s) { return s.size() == 1; });
}

std::optional<Morphism> MatrixRing::with_source(int i, int obj) const
{
    for (const auto& s : sigma_.at(i))
        if (s.source == obj) return s;
    return std::nullopt;
}

std::optional<Morphism> MatrixRing::with_target(int i, int obj) const
{
    for (const auto& s : sigma_.at(i))
        if (s.target == obj) return s;
    return std::nullopt;
}

std::optional<Morphism> MatrixRing::slot(int i, int j, const Morphism& deg) const
{
    auto s = with_source(i, deg.target);
    auto t = with_source(j, deg.source);
    if (!s || !t) return std::nullopt;
    const auto& G = D_->groupoid();
    auto m = G.compose_or_throw(G.compose_or_throw(*s, deg), G.inverse(*t));
    if (!D_->in_support(m)) return std::nullopt;
    return m;
}

std::vector<int> MatrixRing::index_set(int obj) const
{
    std::vector<int> v;
    for (int i = 0; i < size(); ++i)
        if (with_source(i, obj)) v.push_back(i);
    return v;
}

std::size_t MatrixRing::component_dimension(const Morphism& deg) const
{
    std::size_t n = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (slot(i, j, deg)) ++n;
    return n;
}

MatrixRingPtr MatrixRing::opposite() const
{
    std::shared_ptr<MatrixRing> r(new MatrixRing());
    r->D_ = D_->opposite();
    r->sigma_ = sigma_;
    return r;
}

bool MatrixRing::same_data(const MatrixRing& o) const
{
    return this == &o || (sigma_ == o.sigma_ && (D_ == o.D_ || D_->same_data(*o.D_)));
}

static void require_same(const MatrixRingPtr& a, const MatrixRingPtr& b)
{
    if (a != b && !a->same_data(*b)) throw ArgumentError("matrices belong to different matrix rings");
}

HomogeneousMatrix::HomogeneousMatrix(MatrixRingPtr R) : R_(std::move(R)) {}

HomogeneousMatrix::HomogeneousMatrix(MatrixRingPtr R, Morphism deg, Entries entries) : R_(std::move(R))
{
    const auto& D = *R_->ring();
    D.groupoid().validate(deg);
    for (auto& [ij, c] : entries) {
        auto [i, j] = ij;
        if (i < 0 || j < 0 || i >= R_->size() || j >= R_->size()) throw ArgumentError("matrix entry index out of range");
        if (!(c.field() == D.field())) throw ArgumentError("matrix entry lies in the wrong field");
        if (c.is_zero()) continue;
        if (!R_->slot(i, j, deg))
            throw ArgumentError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") must vanish in degree " + D.groupoid().str(deg));
        entries_.emplace(ij, c);
    }
    if (!entries_.empty()) deg_ = deg;
}

Scalar HomogeneousMatrix::coeff(int i, int j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Scalar::zero(R_->ring()->field()) : it->second;
}

HomogeneousScalar HomogeneousMatrix::entry(int i, int j) const
{
    auto it = entries_.find({i, j});
    if (it == entries_.end()) return R_->ring()->zero();
    return R_->ring()->unit(*R_->slot(i, j, *deg_), it->second);
}

HomogeneousMatrix HomogeneousMatrix::operator+(const HomogeneousMatrix& o) const
{
    require_same(R_, o.R_);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (*deg_ != *o.deg_) throw ArgumentError("sum of homogeneous matrices of different degrees");
    Entries e = entries_;
    for (const auto& [ij, c] : o.entries_) {
        auto it = e.find(ij);
        if (it == e.end())
            e.emplace(ij, c);
        else
            it->second += c;
    }
    return HomogeneousMatrix(R_, *deg_, e);
}

HomogeneousMatrix HomogeneousMatrix::scaled(const Scalar& c) const
{
    if (is_zero()) return *this;
    Entries e;
    for (const auto& [ij, v] : entries_) e.emplace(ij, v * c);
    return HomogeneousMatrix(R_, *deg_, e);
}

bool HomogeneousMatrix::operator==(const HomogeneousMatrix& o) const
{
    if (!R_->same_data(*o.R_)) return false;
    if (deg_ != o.deg_) return false;
    return entries_ == o.entries_;
}

HomogeneousMatrix mul(const HomogeneousMatrix& A, const HomogeneousMatrix& B)
{
    require_same(A.ring(), B.ring());
    const auto& R = A.ring();
    if (A.is_zero() || B.is_zero()) return HomogeneousMatrix(R);
    const auto& D = *R->ring();
    auto deg = D.groupoid().compose(*A.degree(), *B.degree());
    if (!deg) return HomogeneousMatrix(R);
    std::map<int, std::vector<std::pair<int, Scalar>>> brows;
    for (const auto& [ij, c] : B.entries()) brows[ij.first].emplace_back(ij.second, c);
    HomogeneousMatrix::Entries out;
    for (const auto& [ik, a] : A.entries()) {
        auto it = brows.find(ik.second);
        if (it == brows.end()) continue;
        auto sa = *R->slot(ik.first, ik.second, *A.degree());
        for (const auto& [j, b] : it->second) {
            auto sb = *R->slot(ik.second, j, *B.degree());
            Scalar v = a * b * D.factor(sa, sb);
            auto o = out.find({ik.first, j});
            if (o == out.end())
                out.emplace(std::make_pair(ik.first, j), v);
            else
                o->second += v;
        }
    }
    return HomogeneousMatrix(R, *deg, out);
}

HomogeneousMatrix identity_element(const MatrixRingPtr& R, int obj)
{
    const auto& D = *R->ring();
    auto e = D.groupoid().identity(obj);
    HomogeneousMatrix::Entries ent;
    for (int i : R->index_set(obj)) ent.emplace(std::make_pair(i, i), Scalar::one(D.field()));
    return HomogeneousMatrix(R, e, ent);
}

HomogeneousMatrix matrix_unit(const MatrixRingPtr& R, int i, int j, int e)
{
    const auto& G = R->ring()->groupoid();
    auto si = R->with_target(i, e), sj = R->with_target(j, e);
    if (!si || !sj)
        throw ArgumentError("matrix unit E_" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(e) +
                            " needs sigma_i and sigma_j with target " + std::to_string(e));
    auto deg = G.compose_or_throw(G.inverse(*si), *sj);
    return HomogeneousMatrix(R, deg, {{{i, j}, Scalar::one(R->ring()->field())}});
}

HomogeneousMatrix unit_matrix(const MatrixRingPtr& R, int i, int j, const Morphism& rho, const Scalar& c)
{
    const auto& G = R->ring()->groupoid();
    auto si = R->with_target(i, rho.target), tj = R->with_target(j, rho.source);
    if (!si || !tj) throw ArgumentError("no sigma with the required target for this unit");
    auto deg = G.compose_or_throw(G.compose_or_throw(G.inverse(*si), rho), *tj);
    return HomogeneousMatrix(R, deg, {{{i, j}, c}});
}

HomogeneousMatrix transpose_opposite(const HomogeneousMatrix& A, const MatrixRingPtr& Rop)
{
    if (Rop->sigmas() != A.ring()->sigmas()) throw ArgumentError("opposite matrix ring has a different signature");
    if (A.is_zero()) return HomogeneousMatrix(Rop);
    HomogeneousMatrix::Entries e;
    for (const auto& [ij, c] : A.entries()) e.emplace(std::make_pair(ij.second, ij.first), c);
    return HomogeneousMatrix(Rop, A.ring()->ring()->groupoid().inverse(*A.degree()), e);
}

HomogeneousMatrix transpose_opposite(const HomogeneousMatrix& A)
{
    return transpose_opposite(A, A.ring()->opposite());
}

void GradedMatrixElement::add(const HomogeneousMatrix& A)
{
    require_same(R_, A.ring());
    if (A.is_zero()) return;
    auto it = comps_.find(*A.degree());
    if (it == comps_.end()) {
        comps_.emplace(*A.degree(), A);
        return;
    }
    auto s = it->second + A;
    if (s.is_zero())
        comps_.erase(it);
    else
        it->second = s;
}

GradedMatrixElement GradedMatrixElement::operator*(const GradedMatrixElement& o) const
{
    GradedMatrixElement out(R_);
    for (const auto& [g, A] : comps_)
        for (const auto& [h, B] : o.comps_) out.add(mul(A, B));
    return out;
}

bool GradedMatrixElement::operator==(const GradedMatrixElement& o) const
{
    if (comps_.size() != o.comps_.size()) return false;
    for (const auto& [g, A] : comps_) {
        auto it = o.comps_.find(g);
        if (it == o.comps_.end() || it->second != A) return false;
    }
    return true;
}

HomSpaceMatrix::HomSpaceMatrix(RingPtr D, std::vector<Morphism> alpha, std::vector<Morphism> beta)
    : D_(std::move(D)), alpha_(std::move(alpha)), beta_(std::move(beta))
{
    const auto& G = D_->groupoid();
    for (const auto& a : alpha_) G.validate(a);
    for (const auto& b : beta_) G.validate(b);
    a_.assign(alpha_.size() * beta_.size(), Scalar::zero(D_->field()));
    recompute_slots();
}

void HomSpaceMatrix::recompute_slots()
{
    const auto& G = D_->groupoid();
    const auto& supp = D_->support();
    slot_.assign(alpha_.size() * beta_.size(), -1);
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) {
            if (alpha_[i].source != beta_[j].source) continue;
            auto m = *G.compose(alpha_[i], G.inverse(beta_[j]));
            if (!D_->in_support(m)) continue;
            slot_[idx(i, j)] = static_cast<int>(std::lower_bound(supp.begin(), supp.end(), m) - supp.begin());
        }
}

HomSpaceMatrix HomSpaceMatrix::identity(RingPtr D, std::vector<Morphism> alpha)
{
    HomSpaceMatrix I(D, alpha, alpha);
    for (int i = 0; i < I.rows(); ++i)
        if (I.has_slot(i, i)) I.a_[I.idx(i, i)] = Scalar::one(D->field());
    return I;
}

std::optional<Morphism> HomSpaceMatrix::slot(int i, int j) const
{
    int s = slot_[idx(i, j)];
    if (s < 0) return std::nullopt;
    return D_->support()[s];
}

void HomSpaceMatrix::set(int i, int j, const Scalar& v)
{
    if (i < 0 || j < 0 || i >= rows() || j >= cols()) throw ArgumentError("Hom-space entry index out of range");
    if (!(v.field() == D_->field())) throw ArgumentError("Hom-space entry lies in the wrong field");
    if (!v.is_zero() && !has_slot(i, j))
        throw ArgumentError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") must vanish: alpha_i beta_j^-1 is not in the support");
    a_[idx(i, j)] = v;
}

HomogeneousScalar HomSpaceMatrix::entry(int i, int j) const
{
    const Scalar& c = at(i, j);
    if (c.is_zero()) return D_->zero();
    return HomogeneousScalar{D_->support()[slot_[idx(i, j)]], c};
}

bool HomSpaceMatrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool HomSpaceMatrix::row_is_zero(int i) const
{
    for (int j = 0; j < cols(); ++j)
        if (!at(i, j).is_zero()) return false;
    return true;
}

HomSpaceMatrix HomSpaceMatrix::submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const
{
    std::vector<Morphism> a, b;
    for (int i : rs) a.push_back(alpha_.at(i));
    for (int j : cs) b.push_back(beta_.at(j));
    HomSpaceMatrix S(D_, a, b);
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) S.a_[S.idx(static_cast<int>(i), static_cast<int>(j))] = at(rs[i], cs[j]);
    return S;
}

HomSpaceMatrix HomSpaceMatrix::with_signature(std::vector<Morphism> alpha, std::vector<Morphism> beta) const
{
    HomSpaceMatrix S(D_, std::move(alpha), std::move(beta));
    if (S.rows() != rows() || S.cols() != cols()) throw ArgumentError("re-signing changes the shape");
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) {
            if (at(i, j).is_zero()) continue;
            if (S.slot_index(i, j) != slot_index(i, j)) throw ArgumentError("re-signing moves a nonzero entry to another component");
            S.a_[S.idx(i, j)] = at(i, j);
        }
    return S;
}

HomSpaceMatrix HomSpaceMatrix::hstack(const HomSpaceMatrix& o) const
{
    if (alpha_ != o.alpha_) throw ArgumentError("hstack needs equal row signatures");
    auto b = beta_;
    b.insert(b.end(), o.beta_.begin(), o.beta_.end());
    HomSpaceMatrix S(D_, alpha_, b);
    for (int i = 0; i < rows(); ++i) {
        for (int j = 0; j < cols(); ++j) S.a_[S.idx(i, j)] = at(i, j);
        for (int j = 0; j < o.cols(); ++j) S.a_[S.idx(i, cols() + j)] = o.at(i, j);
    }
    return S;
}

HomSpaceMatrix HomSpaceMatrix::transpose_opposite(const RingPtr& Dop) const
{
    if (Dop->support() != D_->support()) throw ArgumentError("not the opposite ring");
    HomSpaceMatrix T(Dop, beta_, alpha_);
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) T.a_[T.idx(j, i)] = at(i, j);
    return T;
}

bool HomSpaceMatrix::operator==(const HomSpaceMatrix& o) const
{
    if (alpha_ != o.alpha_ || beta_ != o.beta_) return false;
    if (D_ != o.D_ && !D_->same_data(*o.D_)) return false;
    return a_ == o.a_;
}

void HomSpaceMatrix::swap_rows(int i, int j)
{
    if (i == j) return;
    std::swap(alpha_[i], alpha_[j]);
    for (int k = 0; k < cols(); ++k) {
        std::swap(a_[idx(i, k)], a_[idx(j, k)]);
        std::swap(slot_[idx(i, k)], slot_[idx(j, k)]);
    }
}

void HomSpaceMatrix::set_alpha(int i, const Morphism& a)
{
    D_->groupoid().validate(a);
    alpha_[i] = a;
    const auto& G = D_->groupoid();
    const auto& supp = D_->support();
    for (int j = 0; j < cols(); ++j) {
        int s = -1;
        if (a.source == beta_[j].source) {
            auto m = *G.compose(a, G.inverse(beta_[j]));
            if (D_->in_support(m)) s = static_cast<int>(std::lower_bound(supp.begin(), supp.end(), m) - supp.begin());
        }
        if (s < 0 && !a_[idx(i, j)].is_zero()) throw ArgumentError("new row signature leaves a nonzero entry without a component");
        slot_[idx(i, j)] = s;
    }
}

HomSpaceMatrix operator*(const HomSpaceMatrix& A, const HomSpaceMatrix& B)
{
    return kernels::hom_mul(A, B);
}

RectangularBlock rectangular_block(const HomogeneousMatrix& A, int e, int f)
{
    if (A.is_zero()) throw ArgumentError("the zero matrix carries no degree");
    const auto& R = A.ring();
    const auto& g = *A.degree();
    if (g.target != e || g.source != f) throw ArgumentError("degree of A is not in e Gamma f");
    const auto& G = R->ring()->groupoid();
    RectangularBlock out{R->index_set(e), R->index_set(f), HomSpaceMatrix(R->ring(), {}, {})};
    std::vector<Morphism> alpha, beta;
    for (int i : out.rows) alpha.push_back(G.compose_or_throw(*R->with_source(i, e), g));
    for (int j : out.cols) beta.push_back(*R->with_source(j, f));
    out.block = HomSpaceMatrix(R->ring(), alpha, beta);
    for (std::size_t a = 0; a < out.rows.size(); ++a)
        for (std::size_t b = 0; b < out.cols.size(); ++b)
            out.block.set(static_cast<int>(a), static_cast<int>(b), A.coeff(out.rows[a], out.cols[b]));
    for (const auto& [ij, c] : A.entries())
        if (std::find(out.rows.begin(), out.rows.end(), ij.first) == out.rows.end() ||
            std::find(out.cols.begin(), out.cols.end(), ij.second) == out.cols.end())
            throw ArgumentError("entry outside the I_e x I_f block");
    return out;
}

HomogeneousMatrix from_rectangular_block(const MatrixRingPtr& R, const Morphism& deg, const RectangularBlock& b)
{
    HomogeneousMatrix::Entries e;
    for (std::size_t a = 0; a < b.rows.size(); ++a)
        for (std::size_t c = 0; c < b.cols.size(); ++c)
            e.emplace(std::make_pair(b.rows[a], b.cols[c]), b.block.at(static_cast<int>(a), static_cast<int>(c)));
    return HomogeneousMatrix(R, deg, e);
}

}  // namespace gradix
