#include "gradix/category.hpp"

#include "gradix/error.hpp"

#include <set>

namespace gradix {

void MatrixFormCategory::validate() const
{
    if (objects.empty()) throw ValidationError("category: no objects");
    if (static_cast<int>(objects.size()) > kMaxObjects) throw ValidationError("category: too many objects");
    if (dims.size() != objects.size()) throw ValidationError("category: dims must be given for every object");
    std::set<std::string> seen;
    for (std::size_t a = 0; a < objects.size(); ++a) {
        if (!seen.insert(objects[a]).second) throw ValidationError("category: object name '" + objects[a] + "' used twice");
        if (dims[a].size() != rings.size())
            throw ValidationError("category: object '" + objects[a] + "' needs one multiplicity per division ring");
        for (int v : dims[a])
            if (v < 0) throw ValidationError("category: negative multiplicity at object '" + objects[a] + "'");
    }
}

std::vector<int> MatrixFormCategory::effective_rings() const
{
    std::vector<int> out;
    for (std::size_t j = 0; j < rings.size(); ++j)
        for (const auto& d : dims)
            if (d[j] > 0) {
                out.push_back(static_cast<int>(j));
                break;
            }
    return out;
}

CategoryFlags classify_category(const MatrixFormCategory& C)
{
    C.validate();
    CategoryFlags fl;
    fl.rings = C.effective_rings();
    const int nobj = static_cast<int>(C.objects.size());

    fl.simple_artinian = fl.rings.size() == 1;
    if (!fl.simple_artinian) fl.simple_witness = std::to_string(fl.rings.size()) + " division rings occur";

    fl.all_functors_free = true;
    for (int j : fl.rings) {
        int found = -1;
        for (int A = 0; A < nobj && found < 0; ++A) {
            if (C.n(j, A) != 1) continue;
            bool alone = true;
            for (int k : fl.rings)
                if (k != j && C.n(k, A) != 0) alone = false;
            if (alone) found = A;
        }
        if (found >= 0) {
            fl.free_objects.push_back(found);
        } else if (fl.all_functors_free) {
            fl.all_functors_free = false;
            fl.free_witness = "no object A has n(" + std::to_string(j + 1) + ", A) = 1 and no other ring";
        }
    }
    if (!fl.all_functors_free) fl.free_objects.clear();

    fl.division = true;
    for (int A = 0; A < nobj; ++A) {
        int s = 0;
        for (int j : fl.rings) s += C.n(j, A);
        if (s > 1) {
            fl.division = false;
            fl.division_witness = "object '" + C.objects[A] + "' has total multiplicity " + std::to_string(s);
            break;
        }
    }
    fl.simple_division = fl.division && fl.simple_artinian;
    return fl;
}

SemisimpleRingSpec category_to_semisimple_spec(const MatrixFormCategory& C)
{
    C.validate();
    const int nobj = static_cast<int>(C.objects.size());
    auto G = FiniteGroupoid::pair_groupoid(nobj);
    std::vector<SpecBlock> blocks;
    for (int j : C.effective_rings()) {
        int Aj = -1;
        for (int A = 0; A < nobj && Aj < 0; ++A)
            if (C.n(j, A) > 0) Aj = A;
        SpecBlock b;
        b.base = Aj + 1;
        b.D = GradedDivisionRing::trivial_field(C.rings[j], G, b.base);
        for (int A = 0; A < nobj; ++A)
            for (int p = 0; p < C.n(j, A); ++p) b.sigma.push_back(G->make_morphism(b.base, 0, A + 1));
        blocks.push_back(std::move(b));
    }
    return SemisimpleRingSpec::make(std::move(blocks));
}

std::vector<std::vector<int>> division_components(const MatrixFormCategory& C)
{
    C.validate();
    const int nobj = static_cast<int>(C.objects.size());
    std::vector<int> parent(nobj);
    for (int i = 0; i < nobj; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> nonzero(nobj, 0);
    for (std::size_t j = 0; j < C.rings.size(); ++j) {
        int first = -1;
        for (int A = 0; A < nobj; ++A) {
            if (C.n(static_cast<int>(j), A) == 0) continue;
            nonzero[A] = 1;
            if (first < 0)
                first = A;
            else
                parent[find(A)] = find(first);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int A = 0; A < nobj; ++A)
        if (nonzero[A]) groups[find(A)].push_back(A);
    std::vector<std::vector<int>> out;
    for (auto& [r, g] : groups) out.push_back(g);
    return out;
}

static std::string hom_name(const RawCategory& C, int h)
{
    const auto& H = C.homs[h];
    return "Hom(" + C.objects[H.from] + ", " + C.objects[H.to] + ")";
}

CategoryRing CategoryRing::build(const RawCategory& C)
{
    CategoryRing R;
    R.field_ = C.field;
    R.names_ = C.objects;
    const int nobj = static_cast<int>(C.objects.size());
    if (nobj == 0) throw ValidationError("category: no objects");
    R.groupoid_ = FiniteGroupoid::pair_groupoid(nobj);

    std::map<std::pair<int, int>, int> hom_of;  // (from, to) -> hom index
    for (std::size_t h = 0; h < C.homs.size(); ++h) {
        const auto& H = C.homs[h];
        if (H.from < 0 || H.from >= nobj || H.to < 0 || H.to >= nobj) throw ValidationError("category: hom " + std::to_string(h + 1) + " names an unknown object");
        if (H.dim < 0) throw ValidationError("category: negative dimension for " + hom_name(C, static_cast<int>(h)));
        if (!hom_of.emplace(std::make_pair(H.from, H.to), static_cast<int>(h)).second)
            throw ValidationError("category: " + hom_name(C, static_cast<int>(h)) + " given twice");
        if (H.dim > 0) R.dim_[{H.to, H.from}] = H.dim;
    }
    auto zero_coords = [&](int A, int B) { return Coords(R.component_dimension(A, B), Scalar::zero(C.field)); };
    auto to_coords = [&](int A, int B, const std::vector<std::pair<int, Scalar>>& lin, const std::string& where) {
        auto v = zero_coords(A, B);
        for (const auto& [b, c] : lin) {
            if (b < 0 || b >= static_cast<int>(v.size())) throw ValidationError("category: basis index out of range in " + where);
            if (!(c.field() == C.field)) throw ValidationError("category: coefficient in the wrong field in " + where);
            v[b] += c;
        }
        return v;
    };

    for (std::size_t t = 0; t < C.compose.size(); ++t) {
        const auto& e = C.compose[t];
        const std::string where = "composition entry " + std::to_string(t + 1);
        auto check = [&](const std::array<int, 2>& x) {
            if (x[0] < 0 || x[0] >= static_cast<int>(C.homs.size()) || x[1] < 0 || x[1] >= C.homs[x[0]].dim)
                throw ValidationError("category: " + where + " refers to a missing basis element");
        };
        check(e.f);
        check(e.g);
        const auto& F = C.homs[e.f[0]];
        const auto& G = C.homs[e.g[0]];
        if (F.to != G.from) throw ValidationError("category: " + where + " composes non-composable morphisms");
        // g o f = (g in R_(C,B)) * (f in R_(B,A))
        std::array<int, 5> key{G.to, G.from, F.from, e.g[1], e.f[1]};
        if (R.table_.count(key)) throw ValidationError("category: " + where + " is given twice");
        R.table_.emplace(key, to_coords(G.to, F.from, e.result, where));
    }
    for (int A = 0; A < nobj; ++A) {
        bool given = A < static_cast<int>(C.identities.size()) && !C.identities[A].empty();
        if (!given && R.component_dimension(A, A) > 0)
            throw ValidationError("identity: object '" + C.objects[A] + "' has no identity morphism");
        R.units_.push_back(given ? to_coords(A, A, C.identities[A], "identity of '" + C.objects[A] + "'") : zero_coords(A, A));
    }

    auto basis = [&](int A, int B, int b) {
        auto v = R.zero_coords_helper(A, B);
        v[b] = Scalar::one(C.field);
        return v;
    };
    for (int A = 0; A < nobj; ++A)
        for (int B = 0; B < nobj; ++B)
            for (int b = 0; b < R.component_dimension(A, B); ++b) {
                auto x = basis(A, B, b);
                if (R.mul(A, A, B, R.units_[A], x) != x || R.mul(A, B, B, x, R.units_[B]) != x)
                    throw ValidationError("identity law fails at basis element " + std::to_string(b + 1) + " of Hom(" + C.objects[B] + ", " +
                                          C.objects[A] + ")");
            }
    for (int A = 0; A < nobj; ++A)
        for (int B = 0; B < nobj; ++B)
            for (int Cc = 0; Cc < nobj; ++Cc)
                for (int D = 0; D < nobj; ++D)
                    for (int x = 0; x < R.component_dimension(A, B); ++x)
                        for (int y = 0; y < R.component_dimension(B, Cc); ++y)
                            for (int z = 0; z < R.component_dimension(Cc, D); ++z) {
                                auto bx = basis(A, B, x), by = basis(B, Cc, y), bz = basis(Cc, D, z);
                                if (R.mul(A, Cc, D, R.mul(A, B, Cc, bx, by), bz) != R.mul(A, B, D, bx, R.mul(B, Cc, D, by, bz)))
                                    throw ValidationError("associativity fails at objects (" + C.objects[D] + ", " + C.objects[Cc] + ", " +
                                                          C.objects[B] + ", " + C.objects[A] + ")");
                            }
    return R;
}

Coords CategoryRing::zero_coords_helper(int A, int B) const
{
    return Coords(component_dimension(A, B), Scalar::zero(field_));
}

int CategoryRing::component_dimension(int A, int B) const
{
    auto it = dim_.find({A, B});
    return it == dim_.end() ? 0 : it->second;
}

std::vector<Morphism> CategoryRing::support() const
{
    std::vector<Morphism> out;
    for (const auto& [ab, d] : dim_) out.push_back(groupoid_->make_morphism(ab.first + 1, 0, ab.second + 1));
    return out;
}

Coords CategoryRing::basis_product(int A, int B, int C, int bx, int by) const
{
    auto it = table_.find({A, B, C, bx, by});
    if (it == table_.end()) return zero_coords_helper(A, C);
    return it->second;
}

Coords CategoryRing::mul(int A, int B, int C, const Coords& x, const Coords& y) const
{
    if (static_cast<int>(x.size()) != component_dimension(A, B) || static_cast<int>(y.size()) != component_dimension(B, C))
        throw ArgumentError("category ring: coordinate vector has the wrong length");
    auto out = zero_coords_helper(A, C);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t k = 0; k < y.size(); ++k) {
            if (y[k].is_zero()) continue;
            auto p = basis_product(A, B, C, static_cast<int>(i), static_cast<int>(k));
            for (std::size_t t = 0; t < p.size(); ++t) out[t] += x[i] * y[k] * p[t];
        }
    }
    return out;
}

CategoryRing ring_of_category(const RawCategory& C)
{
    return CategoryRing::build(C);
}

RawCategory to_raw_category(const MatrixFormCategory& C)
{
    C.validate();
    auto eff = C.effective_rings();
    if (eff.empty()) throw ArgumentError("category has no nonzero object");
    for (int j : eff)
        if (!(C.rings[j] == C.rings[eff[0]])) throw ArgumentError("realizing a category as an algebra needs a single base field");
    RawCategory raw;
    raw.field = C.rings[eff[0]];
    raw.objects = C.objects;
    const int nobj = static_cast<int>(C.objects.size());
    const auto one = Scalar::one(raw.field);
    // basis of Hom(A, B): (j, p, q) with p < n(j, B), q < n(j, A)
    auto index = [&](int A, int B, int j, int p, int q) {
        int b = 0;
        for (int k : eff) {
            if (k == j) return b + p * C.n(j, A) + q;
            b += C.n(k, B) * C.n(k, A);
        }
        return -1;
    };
    std::map<std::pair<int, int>, int> hom_of;
    for (int A = 0; A < nobj; ++A)
        for (int B = 0; B < nobj; ++B) {
            int d = 0;
            for (int j : eff) d += C.n(j, A) * C.n(j, B);
            if (d == 0) continue;
            hom_of[{A, B}] = static_cast<int>(raw.homs.size());
            raw.homs.push_back({A, B, d});
        }
    for (const auto& [fab, hf] : hom_of)
        for (const auto& [gbc, hg] : hom_of) {
            auto [A, B] = fab;
            if (gbc.first != B) continue;
            int Cc = gbc.second;
            for (int j : eff)
                for (int p = 0; p < C.n(j, B); ++p)
                    for (int q = 0; q < C.n(j, A); ++q)
                        for (int r = 0; r < C.n(j, Cc); ++r) {
                            // E_rp (B -> C) after E_pq (A -> B) is E_rq
                            raw.compose.push_back({{hf, index(A, B, j, p, q)}, {hg, index(B, Cc, j, r, p)}, {{index(A, Cc, j, r, q), one}}});
                        }
        }
    raw.identities.resize(nobj);
    for (int A = 0; A < nobj; ++A)
        for (int j : eff)
            for (int p = 0; p < C.n(j, A); ++p) raw.identities[A].push_back({index(A, A, j, p, p), one});
    return raw;
}

}  // namespace gradix
