#include "gen.hpp"
#include "oracle.hpp"

#include "gradix/error.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace gradix;

namespace {

using Signature = std::map<std::pair<int, Morphism>, int>;

void add_into(Signature& s, const Signature& t)
{
    for (const auto& [k, v] : t) s[k] += v;
}

// Multisets of at most three shifts; returns true when two of different sizes have the same simple signature.
bool bounded_ipbn_failure(const SemisimpleRingSpec& spec)
{
    std::vector<Signature> sig;
    auto summ = spec.summability();
    for (const auto& g : spec.groupoid()->morphisms())
        if (summ.count(g.target)) sig.push_back(simple_signature(spec, g));
    const int n = static_cast<int>(sig.size());
    std::set<Signature> one, two;
    for (int a = 0; a < n; ++a) {
        one.insert(sig[a]);
        for (int b = a; b < n; ++b) {
            Signature s = sig[a];
            add_into(s, sig[b]);
            if (one.count(s)) return true;
            two.insert(s);
        }
    }
    for (const auto& s : one)
        if (two.count(s)) return true;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) {
                Signature s = sig[a];
                add_into(s, sig[b]);
                add_into(s, sig[c]);
                if (one.count(s) || two.count(s)) return true;
            }
    return false;
}

Signature sum_signature(const SemisimpleRingSpec& spec, const std::vector<Morphism>& shifts)
{
    Signature s;
    for (const auto& g : shifts) add_into(s, simple_signature(spec, g));
    return s;
}

const GroupoidPtr& c2()
{
    static const auto G = FiniteGroupoid::group_as_groupoid(FiniteGroup::cyclic(2));
    return G;
}

RingPtr twisted_c2(const FieldSpec& f, long v)
{
    const auto& G = c2();
    auto e = G->identity(0), g = G->make_morphism(0, 1, 0);
    auto one = Scalar::one(f);
    return GradedDivisionRing::build(G, f, {e, g}, {{e, e, one}, {e, g, one}, {g, e, one}, {g, g, Scalar::from_int(f, v)}});
}

SpecBlock whole(const RingPtr& D)
{
    return SpecBlock{D, 0, {D->groupoid().identity(0)}, {1}};
}

}  // namespace

TEST(Structure, IpbnMatchesBoundedSearch)
{
    gen::Rng rng(51);
    int failing = 0, holding = 0;
    for (int t = 0; t < 20; ++t) {
        auto P = gen::random_product(rng);
        auto f = classify(P.blocks);
        bool found = bounded_ipbn_failure(P.blocks);
        if (found) EXPECT_FALSE(f.ipbn) << "product " << t;
        if (f.ipbn) {
            EXPECT_FALSE(found);
            ++holding;
        } else {
            ++failing;
            EXPECT_NE(f.ipbn_left.size(), f.ipbn_right.size());
            EXPECT_EQ(sum_signature(P.blocks, f.ipbn_left), sum_signature(P.blocks, f.ipbn_right)) << f.ipbn_witness;
            if (f.ipbn_left.size() + f.ipbn_right.size() <= 5) EXPECT_TRUE(found);
        }
        // gr-division iff pfm and IPBN
        EXPECT_EQ(f.gr_division, f.pfm && f.ipbn);
    }
    EXPECT_GT(failing, 0);
    EXPECT_GT(holding, 0);
}

TEST(Structure, WedderburnAuditOnRandomProducts)
{
    gen::Rng rng(52);
    for (int t = 0; t < 20; ++t) {
        auto P = gen::random_product(rng);
        auto spec = wedderburn_decompose(P.R);
        EXPECT_EQ(spec.blocks().size(), P.blocks.blocks().size());
        EXPECT_FALSE(dimension_audit(P.R, spec));
        std::size_t total = 0;
        for (const auto& b : spec.blocks()) total += b.sigma.size();
        EXPECT_EQ(total, static_cast<std::size_t>(P.R->size()));
    }
}

TEST(Structure, ClassifyKnownRings)
{
    auto f = classify(gen::f5_c2());
    EXPECT_TRUE(f.gr_division && f.pfm && f.ipbn && f.gr_simple);
    auto D = gen::q_trivial();
    const auto& G = D->groupoid();
    auto m2 = classify(MatrixRing::build_singletons(D, {G.identity(0), G.identity(0)}));
    EXPECT_FALSE(m2.pfm);
    EXPECT_FALSE(m2.gr_division);
    EXPECT_FALSE(m2.pfm_witness.empty());
}

TEST(Structure, SimpleDimensionNeedsPfm)
{
    auto D = gen::q_trivial();
    const auto& G = D->groupoid();
    auto spec = wedderburn_decompose(MatrixRing::build_singletons(D, {G.identity(0), G.identity(0)}));
    EXPECT_THROW(simple_dimension(spec, {G.identity(0)}), PreconditionError);
}

TEST(Structure, TwistIsomorphismNeedsRoots)
{
    auto Q = FieldSpec::rationals();
    // u_g^2 = 4 is u_g^2 = 1 after rescaling by 2; u_g^2 = 2 is not
    EXPECT_EQ(iso_test(whole(twisted_c2(Q, 4)), whole(twisted_c2(Q, 1))).status, IsoStatus::isomorphic);
    EXPECT_EQ(iso_test(whole(twisted_c2(Q, 2)), whole(twisted_c2(Q, 1))).status, IsoStatus::not_isomorphic);
    // 2 = 3^2 in F7 but 2 is not a square in F5
    auto F7 = FieldSpec::prime(7), F5 = FieldSpec::prime(5);
    auto r = iso_test(whole(twisted_c2(F7, 2)), whole(twisted_c2(F7, 1)));
    ASSERT_EQ(r.status, IsoStatus::isomorphic);
    EXPECT_TRUE(oracle::multiplicative(whole(twisted_c2(F7, 2)), whole(twisted_c2(F7, 1)), *r.cert));
    EXPECT_EQ(iso_test(whole(twisted_c2(F5, 2)), whole(twisted_c2(F5, 1))).status, IsoStatus::not_isomorphic);
}

TEST(Structure, IsoInconclusiveAboveBound)
{
    auto D = GradedDivisionRing::group_ring(FieldSpec::rationals(), FiniteGroup::cyclic(3));
    IsoOptions opt;
    opt.coboundary_bound = 2;
    auto r = iso_test(whole(D), whole(D), opt);
    EXPECT_EQ(r.status, IsoStatus::inconclusive);
    EXPECT_FALSE(r.cert);
    EXPECT_EQ(to_string(r.status), "inconclusive");
}

TEST(Structure, IsoRejectsFieldMismatch)
{
    EXPECT_EQ(iso_test(whole(twisted_c2(FieldSpec::prime(3), 1)), whole(twisted_c2(FieldSpec::prime(5), 1))).status, IsoStatus::not_isomorphic);
}

TEST(Structure, CornerStructureErrors)
{
    auto D = gen::f5_c2();
    const auto& G = D->groupoid();
    auto R = MatrixRing::build(D, {{G.identity(0)}});
    EXPECT_EQ(corner_structure(R, 0), (std::vector<int>{1}));
    auto P = FiniteGroupoid::pair_groupoid(2);
    auto E = GradedDivisionRing::build_untwisted(P, FieldSpec::rationals(), P->morphisms());
    auto R2 = MatrixRing::build(E, {{P->identity(1)}});
    EXPECT_THROW(corner_structure(R2, 2), ArgumentError);
}

TEST(Structure, SpecRejectsMalformedBlocks)
{
    auto D = gen::f5_c2();
    const auto& G = D->groupoid();
    EXPECT_THROW(SemisimpleRingSpec::make({SpecBlock{nullptr, 0, {G.identity(0)}, {}}}), ValidationError);
    EXPECT_THROW(SemisimpleRingSpec::make({SpecBlock{D, 0, {}, {}}}), ValidationError);
    auto other = gen::q_trivial();
    EXPECT_THROW(SemisimpleRingSpec::make({whole(D), whole(other)}), ValidationError);
}
