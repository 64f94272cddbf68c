#include "gradix/structure.hpp"

#include "gradix/error.hpp"
#include "gradix/linalg.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace gradix {

SemisimpleRingSpec SemisimpleRingSpec::make(std::vector<SpecBlock> blocks)
{
    SemisimpleRingSpec s;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        auto& b = blocks[j];
        const std::string name = "block " + std::to_string(j + 1);
        if (!b.D) throw ValidationError(name + " has no coefficient ring");
        if (!s.groupoid_) s.groupoid_ = b.D->groupoid_ptr();
        if (b.D->groupoid_ptr() != s.groupoid_) throw ValidationError(name + " lives over a different groupoid");
        if (b.D->objects() != std::vector<int>{b.base})
            throw ValidationError(name + ": supp(D) must lie in e Gamma e for the base object " + std::to_string(b.base));
        if (b.sigma.empty()) throw ValidationError(name + " has an empty index set");
        for (const auto& m : b.sigma) {
            b.D->groupoid().validate(m);
            if (m.target != b.base) throw ValidationError(name + ": sigma " + b.D->groupoid().str(m) + " does not have target e_j");
        }
        if (b.origin.empty())
            for (std::size_t k = 0; k < b.sigma.size(); ++k) b.origin.push_back(static_cast<int>(k) + 1);
        if (b.origin.size() != b.sigma.size()) throw ValidationError(name + ": origin list has the wrong length");
        s.rings_.push_back(MatrixRing::build_singletons(b.D, b.sigma));
    }
    s.blocks_ = std::move(blocks);
    return s;
}

std::vector<int> SemisimpleRingSpec::K(int j, int e) const
{
    std::vector<int> v;
    const auto& s = blocks_.at(j).sigma;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k].source == e) v.push_back(static_cast<int>(k));
    return v;
}

std::map<int, std::vector<int>> SemisimpleRingSpec::summability() const
{
    std::map<int, std::vector<int>> out;
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        std::set<int> seen;
        for (const auto& m : blocks_[j].sigma)
            if (seen.insert(m.source).second) out[m.source].push_back(static_cast<int>(j));
    }
    return out;
}

MatrixRingPtr SemisimpleRingSpec::block_ring(int j) const
{
    return rings_.at(j);
}

static std::string unit_name(int o)
{
    if (o < 10) return "E" + std::to_string(o) + std::to_string(o);
    return "E_{" + std::to_string(o) + "," + std::to_string(o) + "}";
}

// Right coset H rho, represented by its smallest element.
static Morphism coset_key(const GradedDivisionRing& H, const Morphism& rho)
{
    const auto& G = H.groupoid();
    std::optional<Morphism> best;
    for (const auto& h : H.support()) {
        auto m = *G.compose(h, rho);
        if (!best || m < *best) best = m;
    }
    return *best;
}

std::map<std::pair<int, Morphism>, int> simple_signature(const SemisimpleRingSpec& spec, const Morphism& gamma)
{
    std::map<std::pair<int, Morphism>, int> sig;
    const auto& G = *spec.groupoid();
    for (std::size_t j = 0; j < spec.blocks().size(); ++j) {
        const auto& b = spec.blocks()[j];
        for (int k : spec.K(static_cast<int>(j), gamma.target)) {
            auto rho = *G.compose(b.sigma[k], gamma);
            ++sig[{static_cast<int>(j), coset_key(*b.D, rho)}];
        }
    }
    return sig;
}

// Basis of {z : M z = 0} for a dense rational matrix.
static std::vector<std::vector<mpq_class>> nullspace(std::vector<std::vector<mpq_class>> M, int ncols)
{
    const int nrows = static_cast<int>(M.size());
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int p = -1;
        for (int i = r; i < nrows; ++i)
            if (M[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(M[p], M[r]);
        mpq_class inv = 1 / M[r][c];
        for (auto& x : M[r]) x *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            mpq_class f = M[i][c];
            for (int k = 0; k < ncols; ++k) M[i][k] -= f * M[r][k];
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<std::vector<mpq_class>> basis;
    std::set<int> piv(pivcol.begin(), pivcol.end());
    for (int f = 0; f < ncols; ++f) {
        if (piv.count(f)) continue;
        std::vector<mpq_class> z(ncols, 0);
        z[f] = 1;
        for (int t = 0; t < r; ++t) z[pivcol[t]] = -M[t][f];
        basis.push_back(z);
    }
    return basis;
}

static void decide_ipbn(const SemisimpleRingSpec& spec, ClassificationFlags& fl)
{
    fl.ipbn = true;
    if (spec.blocks().empty()) return;
    const auto& G = *spec.groupoid();
    auto summ = spec.summability();
    std::vector<std::map<std::pair<int, Morphism>, int>> rows;
    std::vector<Morphism> reps;
    std::map<std::pair<int, Morphism>, int> types;
    for (const auto& g : G.morphisms()) {
        if (!summ.count(g.target)) continue;
        auto s = simple_signature(spec, g);
        if (std::find(rows.begin(), rows.end(), s) != rows.end()) continue;
        rows.push_back(s);
        reps.push_back(g);
        for (const auto& [t, n] : s) types.emplace(t, static_cast<int>(types.size()));
    }
    // z with z^T S = 0: nullspace of S^T (types x rows).
    const int nr = static_cast<int>(rows.size());
    std::vector<std::vector<mpq_class>> St(types.size(), std::vector<mpq_class>(nr, 0));
    for (int i = 0; i < nr; ++i)
        for (const auto& [t, n] : rows[i]) St[types.at(t)][i] = n;
    for (auto& z : nullspace(St, nr)) {
        mpq_class sum = 0;
        for (auto& x : z) sum += x;
        if (sum == 0) continue;
        fl.ipbn = false;
        mpz_class den = 1;
        for (auto& x : z) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        for (int i = 0; i < nr; ++i) {
            mpz_class v = z[i].get_num() * (den / z[i].get_den());
            for (long c = 0; c < std::abs(v.get_si()); ++c) (v > 0 ? fl.ipbn_left : fl.ipbn_right).push_back(reps[i]);
        }
        std::string l, r;
        for (const auto& m : fl.ipbn_left) l += (l.empty() ? "" : " + ") + std::string("R") + G.str(m);
        for (const auto& m : fl.ipbn_right) r += (r.empty() ? "" : " + ") + std::string("R") + G.str(m);
        fl.ipbn_witness = l + " ~ " + r;
        break;
    }
}

ClassificationFlags classify(const SemisimpleRingSpec& spec)
{
    ClassificationFlags fl;
    const int n = static_cast<int>(spec.blocks().size());
    auto summ = spec.summability();
    fl.gr_simple = n == 1;
    if (!fl.gr_simple) fl.simple_witness = std::to_string(n) + " gr-simple blocks";

    fl.pfm = true;
    for (int j = 0; j < n; ++j) {
        std::optional<int> f;
        for (const auto& [e, js] : summ)
            if (spec.K(j, e).size() == 1 && js.size() == 1) {
                f = e;
                break;
            }
        if (f) {
            fl.pfm_objects.push_back(*f);
        } else if (fl.pfm) {
            fl.pfm = false;
            fl.pfm_witness = "block " + std::to_string(j + 1) + " has no object f with |K_f| = 1 met by no other block";
        }
    }
    if (!fl.pfm) fl.pfm_objects.clear();

    fl.gr_division = true;
    for (const auto& [e, js] : summ) {
        if (js.size() >= 2) {
            fl.gr_division = false;
            fl.division_witness = "I_" + std::to_string(e) + " of block " + std::to_string(js[0] + 1) + " has no right inverse";
            break;
        }
        auto K = spec.K(js[0], e);
        if (K.size() >= 2) {
            fl.gr_division = false;
            fl.division_witness = unit_name(spec.blocks()[js[0]].origin[K[0]]) + " has no right inverse";
            break;
        }
    }
    decide_ipbn(spec, fl);
    if (fl.gr_division != (fl.pfm && fl.ipbn)) throw std::logic_error("gr-division != pfm and IPBN");
    return fl;
}

MatrixRingPtr as_matrix_ring(const RingPtr& D)
{
    std::vector<Morphism> ids;
    for (int e : D->objects()) ids.push_back(D->groupoid().identity(e));
    return MatrixRing::build(D, {ids});
}

ClassificationFlags classify(const MatrixRingPtr& R)
{
    return classify(wedderburn_decompose(R));
}

ClassificationFlags classify(const RingPtr& D)
{
    return classify(as_matrix_ring(D));
}

SemisimpleRingSpec wedderburn_decompose(const RingPtr& D, const std::vector<std::vector<Morphism>>& sigma)
{
    MatrixRingPtr R;
    try {
        R = MatrixRing::build(D, sigma);
    } catch (const ValidationError& e) {
        throw PreconditionError(std::string("signature is not matricial: ") + e.what());
    }
    return wedderburn_decompose(R);
}

SemisimpleRingSpec wedderburn_decompose(const MatrixRingPtr& R)
{
    const auto& D = R->ring();
    const auto& G = D->groupoid();
    auto classes = D->primality_classes();
    std::map<int, int> cls_of;
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int e : classes[c]) cls_of[e] = static_cast<int>(c);

    std::vector<int> order;  // classes in order of first use
    std::map<int, SpecBlock> by_class;
    for (int i = 0; i < R->size(); ++i)
        for (const auto& s : R->sigma(i)) {
            int c = cls_of.at(s.target);
            auto it = by_class.find(c);
            if (it == by_class.end()) {
                order.push_back(c);
                SpecBlock b;
                b.base = s.target;
                b.D = D->restrict_to_objects({s.target});
                it = by_class.emplace(c, b).first;
            }
            auto& b = it->second;
            Morphism gamma = s.target == b.base ? G.identity(b.base) : D->support_between(b.base, s.target).front();
            b.sigma.push_back(*G.compose(gamma, s));
            b.origin.push_back(i + 1);
        }
    std::vector<SpecBlock> blocks;
    for (int c : order) blocks.push_back(by_class.at(c));
    auto spec = SemisimpleRingSpec::make(std::move(blocks));
    if (auto bad = dimension_audit(R, spec)) throw std::logic_error("dimension audit failed at degree " + G.str(*bad));
    return spec;
}

std::optional<Morphism> dimension_audit(const MatrixRingPtr& R, const SemisimpleRingSpec& spec)
{
    for (const auto& g : R->ring()->groupoid().morphisms()) {
        std::size_t sum = 0;
        for (std::size_t j = 0; j < spec.blocks().size(); ++j) sum += spec.block_ring(static_cast<int>(j))->component_dimension(g);
        if (sum != R->component_dimension(g)) return g;
    }
    return std::nullopt;
}

std::string to_string(IsoStatus s)
{
    switch (s) {
    case IsoStatus::isomorphic:
        return "isomorphic";
    case IsoStatus::not_isomorphic:
        return "not isomorphic";
    case IsoStatus::inconclusive:
        return "inconclusive";
    }
    return "";
}

// Kuhn's augmenting paths; adj[i] lists admissible partners.
static std::optional<std::vector<int>> perfect_matching(const std::vector<std::vector<int>>& adj, int right)
{
    const int n = static_cast<int>(adj.size());
    if (n != right) return std::nullopt;
    std::vector<int> match_r(right, -1);
    std::function<bool(int, std::vector<char>&)> try_kuhn = [&](int v, std::vector<char>& used) {
        for (int w : adj[v]) {
            if (used[w]) continue;
            used[w] = 1;
            if (match_r[w] < 0 || try_kuhn(match_r[w], used)) {
                match_r[w] = v;
                return true;
            }
        }
        return false;
    };
    for (int v = 0; v < n; ++v) {
        std::vector<char> used(right, 0);
        if (!try_kuhn(v, used)) return std::nullopt;
    }
    std::vector<int> pi(n);
    for (int w = 0; w < right; ++w) pi[match_r[w]] = w;
    return pi;
}

static std::vector<Scalar> nth_roots(const Scalar& P, int n, const IsoOptions& opt, bool& inconclusive)
{
    const auto& f = P.field();
    std::vector<Scalar> out;
    if (f.is_rational()) {
        mpq_class q = P.rational();
        bool neg = q < 0;
        if (neg && n % 2 == 0) return out;
        mpz_class num = abs(q.get_num()), den = q.get_den(), rn, rd;
        if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return out;
        if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return out;
        mpq_class r(rn, rd);
        r.canonicalize();
        if (neg) r = -r;
        out.push_back(Scalar::from_rational(f, r));
        if (n % 2 == 0) out.push_back(Scalar::from_rational(f, -r));
        return out;
    }
    if (f.p > opt.max_prime_search) {
        inconclusive = true;
        return out;
    }
    for (long x = 1; x < f.p; ++x) {
        auto s = Scalar::from_int(f, x);
        if (s.pow(n) == P) out.push_back(s);
    }
    return out;
}

// c on supp(H) with beta(r,k) c(rk) = c(r) c(k) beta'(t r t^-1, t k t^-1).
static std::optional<std::map<Morphism, Scalar>> find_coboundary(const SpecBlock& a, const SpecBlock& b, const Morphism& tau,
                                                                  const IsoOptions& opt, bool& inconclusive)
{
    const auto& D = *a.D;
    const auto& Dp = *b.D;
    const auto& G = D.groupoid();
    const auto& H = D.support();
    const int n = static_cast<int>(H.size());
    auto conj = [&](const Morphism& r) { return *G.compose(*G.compose(tau, r), G.inverse(tau)); };
    std::map<std::pair<int, int>, Scalar> omega;
    std::map<Morphism, int> pos;
    for (int i = 0; i < n; ++i) pos[H[i]] = i;
    std::vector<std::vector<int>> prod(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            omega.emplace(std::make_pair(i, k), D.factor(H[i], H[k]) / Dp.factor(conj(H[i]), conj(H[k])));
            prod[i][k] = pos.at(*G.compose(H[i], H[k]));
        }
    std::vector<std::vector<Scalar>> cands(n);
    for (int i = 0; i < n; ++i) {
        Scalar P = Scalar::one(D.field());
        for (int k = 0; k < n; ++k) P *= omega.at({i, k});
        cands[i] = nth_roots(P, n, opt, inconclusive);
        if (cands[i].empty()) return std::nullopt;
    }

    std::vector<std::optional<Scalar>> c(n);
    // Closes the assignment under products; false on a contradiction.
    auto propagate = [&](std::vector<std::optional<Scalar>>& cur) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n; ++i) {
                if (!cur[i]) continue;
                for (int k = 0; k < n; ++k) {
                    if (!cur[k]) continue;
                    Scalar v = *cur[i] * *cur[k] / omega.at({i, k});
                    int t = prod[i][k];
                    if (!cur[t]) {
                        cur[t] = v;
                        changed = true;
                    } else if (*cur[t] != v) {
                        return false;
                    }
                }
            }
        }
        return true;
    };
    std::function<bool(std::vector<std::optional<Scalar>>)> search = [&](std::vector<std::optional<Scalar>> cur) {
        if (!propagate(cur)) return false;
        int next = -1;
        for (int i = 0; i < n; ++i)
            if (!cur[i]) {
                next = i;
                break;
            }
        if (next < 0) {
            c = cur;
            return true;
        }
        for (const auto& r : cands[next]) {
            auto nxt = cur;
            nxt[next] = r;
            if (search(nxt)) return true;
        }
        return false;
    };
    std::vector<std::optional<Scalar>> start(n);
    int id = pos.at(G.identity(a.base));
    start[id] = Scalar::one(D.field());
    if (!search(start)) return std::nullopt;
    std::map<Morphism, Scalar> out;
    for (int i = 0; i < n; ++i) out.emplace(H[i], *c[i]);
    return out;
}

HomogeneousMatrix apply_certificate(const SpecBlock& a, const MatrixRingPtr& Ra, const MatrixRingPtr& Rb, const IsoCertificate& cert,
                                    const HomogeneousMatrix& A)
{
    HomogeneousMatrix out(Rb);
    if (A.is_zero()) return out;
    const auto& D = *a.D;
    const auto& G = D.groupoid();
    for (const auto& [ij, coef] : A.entries()) {
        auto [i, j] = ij;
        auto rho = *Ra->slot(i, j, *A.degree());
        auto x = D.mul_hom(D.mul_hom(D.unit(cert.u[i]), D.unit(rho, coef)), D.invert_hom(D.unit(cert.u[j])));
        auto img = *G.compose(*G.compose(cert.tau, *x.degree), G.inverse(cert.tau));
        out = out + unit_matrix(Rb, cert.pi[i], cert.pi[j], img, x.coeff * cert.c.at(*x.degree));
    }
    return out;
}

bool verify_certificate(const SpecBlock& a, const SpecBlock& b, const IsoCertificate& cert)
{
    auto Ra = MatrixRing::build_singletons(a.D, a.sigma);
    auto Rb = MatrixRing::build_singletons(b.D, b.sigma);
    const int n = Ra->size();
    const auto& F = a.D->field();
    std::vector<HomogeneousMatrix> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& rho : a.D->support()) gens.push_back(unit_matrix(Ra, i, j, rho, Scalar::one(F)));
    std::vector<HomogeneousMatrix> imgs;
    for (const auto& g : gens) {
        auto im = apply_certificate(a, Ra, Rb, cert, g);
        if (im.degree() != g.degree()) return false;
        imgs.push_back(im);
    }
    for (std::size_t x = 0; x < gens.size(); ++x)
        for (std::size_t y = 0; y < gens.size(); ++y)
            if (apply_certificate(a, Ra, Rb, cert, mul(gens[x], gens[y])) != mul(imgs[x], imgs[y])) return false;
    for (int e : a.D->groupoid().objects())
        if (apply_certificate(a, Ra, Rb, cert, identity_element(Ra, e)) != identity_element(Rb, e)) return false;
    return true;
}

IsoResult iso_test(const SpecBlock& a, const SpecBlock& b, IsoOptions opt)
{
    IsoResult res;
    if (a.D->groupoid_ptr() != b.D->groupoid_ptr()) throw ArgumentError("iso_test needs both rings over the same groupoid");
    if (!a.D->is_gr_prime() || !b.D->is_gr_prime()) throw PreconditionError("iso_test needs gr-simple blocks");
    const auto& G = a.D->groupoid();
    if (!(a.D->field() == b.D->field())) {
        res.reason = "different base fields";
        return res;
    }
    if (a.sigma.size() != b.sigma.size()) {
        res.reason = "index sets differ in size";
        return res;
    }
    if (G.block_of(a.base) != G.block_of(b.base)) {
        res.reason = "base objects lie in different components";
        return res;
    }
    if (a.D->support().size() != b.D->support().size()) {
        res.reason = "supports differ in size";
        return res;
    }
    bool inconclusive = false;
    const int n = static_cast<int>(a.sigma.size());
    for (const auto& tau : G.hom(b.base, a.base)) {
        std::set<Morphism> img;
        for (const auto& r : a.D->support()) img.insert(*G.compose(*G.compose(tau, r), G.inverse(tau)));
        if (!std::equal(img.begin(), img.end(), b.D->support().begin(), b.D->support().end())) continue;

        std::vector<std::vector<int>> adj(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (b.sigma[k].source != a.sigma[i].source) continue;
                auto u = *G.compose(*G.compose(G.inverse(tau), b.sigma[k]), G.inverse(a.sigma[i]));
                if (!a.D->in_support(u)) continue;
                // k = i first, so equal signatures give pi = id
                if (k == i)
                    adj[i].insert(adj[i].begin(), k);
                else
                    adj[i].push_back(k);
            }
        auto pi = perfect_matching(adj, n);
        if (!pi) continue;

        if (static_cast<int>(a.D->support().size()) > opt.coboundary_bound) {
            inconclusive = true;
            continue;
        }
        auto c = find_coboundary(a, b, tau, opt, inconclusive);
        if (!c) continue;

        IsoCertificate cert{tau, *pi, {}, *c};
        for (int i = 0; i < n; ++i)
            cert.u.push_back(*G.compose(*G.compose(G.inverse(tau), b.sigma[(*pi)[i]]), G.inverse(a.sigma[i])));
        if (!verify_certificate(a, b, cert)) throw std::logic_error("constructed isomorphism failed verification");
        res.status = IsoStatus::isomorphic;
        res.cert = cert;
        return res;
    }
    if (inconclusive) {
        res.status = IsoStatus::inconclusive;
        res.reason = "factor-set equivalence not decided within the configured bounds";
    } else {
        res.reason = "no (tau, pi) satisfies the support and factor conditions";
    }
    return res;
}

SpecIsoResult iso_spec(const SemisimpleRingSpec& a, const SemisimpleRingSpec& b, IsoOptions opt)
{
    SpecIsoResult out;
    const int n = static_cast<int>(a.blocks().size());
    if (static_cast<int>(b.blocks().size()) != n) {
        out.reason = "different numbers of gr-simple blocks";
        return out;
    }
    std::vector<std::vector<IsoResult>> r(n, std::vector<IsoResult>(n));
    std::vector<std::vector<int>> sure(n), maybe(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            r[j][k] = iso_test(a.blocks()[j], b.blocks()[k], opt);
            if (r[j][k].status == IsoStatus::isomorphic) sure[j].push_back(k);
            if (r[j][k].status != IsoStatus::not_isomorphic) maybe[j].push_back(k);
        }
    if (auto pi = perfect_matching(sure, n)) {
        out.status = IsoStatus::isomorphic;
        out.block_map = *pi;
        for (int j = 0; j < n; ++j) out.certs.push_back(*r[j][(*pi)[j]].cert);
        return out;
    }
    if (perfect_matching(maybe, n)) {
        out.status = IsoStatus::inconclusive;
        out.reason = "some block pairs were inconclusive";
    } else {
        out.reason = "no bijection of blocks with pairwise isomorphic partners";
    }
    return out;
}

std::vector<int> corner_structure(const MatrixRingPtr& R, int e)
{
    if (!R->singleton()) throw ArgumentError("corner_structure needs a singleton signature");
    auto I = R->index_set(e);
    if (I.empty()) throw ArgumentError("object " + std::to_string(e) + " is not in Gamma'_0(R)");
    const auto& D = *R->ring();
    const auto& G = D.groupoid();
    std::vector<int> cls(I.size(), -1);
    std::vector<int> sizes;
    for (std::size_t a = 0; a < I.size(); ++a) {
        if (cls[a] >= 0) continue;
        cls[a] = static_cast<int>(sizes.size());
        int count = 1;
        for (std::size_t b = a + 1; b < I.size(); ++b) {
            if (cls[b] >= 0) continue;
            auto m = *G.compose(R->sigma(I[a])[0], G.inverse(R->sigma(I[b])[0]));
            if (D.in_support(m)) {
                cls[b] = cls[a];
                ++count;
            }
        }
        sizes.push_back(count);
    }
    return sizes;
}

SpecVector spec_standard_generator(const SemisimpleRingSpec& spec, const std::vector<Morphism>& shifts, int i)
{
    const auto& G = *spec.groupoid();
    SpecVector v{G.inverse(shifts.at(i)), {}};
    for (std::size_t j = 0; j < spec.blocks().size(); ++j) {
        auto I = identity_element(spec.block_ring(static_cast<int>(j)), shifts[i].target);
        if (!I.is_zero()) v.parts.emplace(std::make_pair(i, static_cast<int>(j)), I);
    }
    return v;
}

static void require_pfm(const SemisimpleRingSpec& spec)
{
    if (!classify(spec).pfm) throw PreconditionError("simple dimension needs a pfm ring");
}

static int sdim_unchecked(const SemisimpleRingSpec& spec, const std::vector<Morphism>& shifts, const std::vector<SpecVector>& gens)
{
    const auto& G = *spec.groupoid();
    int total = 0;
    for (std::size_t jj = 0; jj < spec.blocks().size(); ++jj) {
        const int j = static_cast<int>(jj);
        const auto& b = spec.blocks()[j];
        auto R = spec.block_ring(j);
        std::vector<Morphism> alpha;
        std::vector<std::pair<int, int>> rows;
        for (std::size_t i = 0; i < shifts.size(); ++i)
            for (int k : spec.K(j, shifts[i].target)) {
                alpha.push_back(*G.compose(b.sigma[k], shifts[i]));
                rows.emplace_back(static_cast<int>(i), k);
            }
        if (alpha.empty()) continue;
        std::optional<HomSpaceMatrix> big;
        for (const auto& x : gens) {
            auto cols = spec.K(j, x.degree.source);
            std::vector<Morphism> beta;
            for (int l : cols) beta.push_back(*G.compose(b.sigma[l], G.inverse(x.degree)));
            HomSpaceMatrix M(b.D, alpha, beta);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                auto it = x.parts.find({rows[r].first, j});
                if (it == x.parts.end()) continue;
                for (std::size_t c = 0; c < cols.size(); ++c)
                    M.set(static_cast<int>(r), static_cast<int>(c), it->second.coeff(rows[r].second, cols[c]));
            }
            big = big ? big->hstack(M) : M;
        }
        if (big && big->cols() > 0) total += rho_c(*big);
    }
    return total;
}

static void check_parts(const SemisimpleRingSpec& spec, const std::vector<Morphism>& shifts, const std::vector<SpecVector>& gens)
{
    const auto& G = *spec.groupoid();
    for (const auto& x : gens)
        for (const auto& [ij, A] : x.parts) {
            auto [i, j] = ij;
            if (i < 0 || i >= static_cast<int>(shifts.size()) || j < 0 || j >= static_cast<int>(spec.blocks().size()))
                throw ArgumentError("module element part out of range");
            if (A.is_zero()) continue;
            if (!A.ring()->same_data(*spec.block_ring(j))) throw ArgumentError("module element part is not in the block ring");
            auto want = G.compose(shifts[i], x.degree);
            if (!want || *want != *A.degree()) throw ArgumentError("module element part has the wrong degree");
        }
}

int simple_dimension(const SemisimpleRingSpec& spec, const std::vector<Morphism>& shifts, const std::vector<SpecVector>& gens)
{
    require_pfm(spec);
    check_parts(spec, shifts, gens);
    return sdim_unchecked(spec, shifts, gens);
}

int simple_dimension(const SemisimpleRingSpec& spec, const std::vector<Morphism>& shifts)
{
    std::vector<SpecVector> gens;
    for (std::size_t i = 0; i < shifts.size(); ++i) gens.push_back(spec_standard_generator(spec, shifts, static_cast<int>(i)));
    return simple_dimension(spec, shifts, gens);
}

bool is_pseudo_basis(const SemisimpleRingSpec& spec, const std::vector<Morphism>& shifts, const std::vector<SpecVector>& gens)
{
    const auto& G = *spec.groupoid();
    int span = simple_dimension(spec, shifts, gens);
    if (span != simple_dimension(spec, shifts)) return false;
    int free = 0;
    for (const auto& x : gens) free += simple_dimension(spec, {G.inverse(x.degree)});
    return free == span;
}

}  // namespace gradix
