#include "gradix/error.hpp"
#include "gradix/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace gradix;
namespace fs = std::filesystem;

namespace {

io::Node inline_node(const std::string& text)
{
    return io::Node{io::json::parse(text), fs::path("fixtures"), io::json::object()};
}

}  // namespace

TEST(Io, FieldForms)
{
    io::Loader L;
    EXPECT_EQ(L.field(io::json("Q")), FieldSpec::rationals());
    EXPECT_EQ(L.field(io::json("F5")), FieldSpec::prime(5));
    EXPECT_EQ(L.field(io::json::parse(R"({"kind":"Fp","p":7})")), FieldSpec::prime(7));
}

TEST(Io, SharedGroupoidsAcrossFiles)
{
    io::Loader L;
    auto a = L.ring(L.load("fixtures/q_at_1.ring.json"));
    auto R = L.matrix_ring(L.load("fixtures/pfm_m3.ring.json"));
    EXPECT_EQ(a, R->ring());
    EXPECT_EQ(R->size(), 3);
}

TEST(Io, RingForms)
{
    io::Loader L;
    auto tw = L.ring(L.load("fixtures/f3c2_twisted.ring.json"));
    const auto& G = tw->groupoid();
    EXPECT_EQ(tw->factor(G.make_morphism(0, 1, 0), G.make_morphism(0, 1, 0)).residue(), 2);
    auto sum = L.ring(inline_node(R"({"direct_sum": [{"field": "Q", "groupoid": "pair4.groupoid.json", "support": [[1, 1]]}, {"field": "Q", "groupoid": {"pair": 4}, "support": [[3, 3]]}]})"));
    EXPECT_EQ(sum->support().size(), 2u);
    auto pb = L.ring(inline_node(R"({"prime_block": {"H": {"field": "Q", "groupoid": {"pair": 2}, "support": [[1, 1]]}, "sigma": [[1, [1, 1]], [2, [1, 2]]]}})"));
    EXPECT_EQ(pb->support().size(), 4u);
    EXPECT_TRUE(pb->is_gr_prime());
}

TEST(Io, FactorTablesMustBeComplete)
{
    io::Loader L;
    auto D = L.ring(inline_node(
        R"({"field": "Q", "groupoid": {"group": {"cyclic": 2}}, "support": "all", "factor": [[[0, 0, 0], [0, 0, 0], 1], [[0, 0, 0], [0, 1, 0], 1], [[0, 1, 0], [0, 0, 0], 1], [[0, 1, 0], [0, 1, 0], -1]]})"));
    const auto& G = D->groupoid();
    EXPECT_EQ(D->factor(G.make_morphism(0, 1, 0), G.make_morphism(0, 1, 0)).str(), "-1");
    EXPECT_THROW(L.ring(inline_node(R"({"field": "Q", "groupoid": {"group": {"cyclic": 2}}, "support": "all", "factor": [[[0, 1, 0], [0, 1, 0], -1]]})")),
                 ValidationError);
    EXPECT_NO_THROW(L.ring(inline_node(R"({"field": "Q", "groupoid": {"group": {"cyclic": 2}}, "support": "all", "factor": "ones"})")));
}

TEST(Io, MatricesAndVectors)
{
    io::Loader L;
    auto A = L.hom_matrix(L.load("fixtures/rank1.matrix.json"));
    EXPECT_EQ(A.rows(), 3);
    EXPECT_EQ(A.cols(), 2);
    auto M = L.module(L.load("fixtures/module.json"));
    auto v = L.vectors(L.load("fixtures/span.vectors.json"), M);
    EXPECT_FALSE(v.empty());
}

TEST(Io, RawGroupoidIndicesAreZeroBased)
{
    io::Loader L;
    auto G = L.groupoid(inline_node(R"({"raw": {"objects": [0], "morphisms": [[0, 0], [0, 0]], "compose": [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]}})"));
    EXPECT_EQ(G->size(), 2u);
    EXPECT_EQ(G->group_of(0).order(), 2);
}

TEST(Io, Categories)
{
    io::Loader L;
    auto n = L.load("fixtures/mixed.category.json");
    EXPECT_FALSE(L.is_raw_category(n));
    auto C = L.category(n);
    EXPECT_EQ(C.dims[1], (std::vector<int>{2}));
    auto t = L.load("fixtures/triangle.category.json");
    ASSERT_TRUE(L.is_raw_category(t));
    auto raw = L.raw_category(t);
    EXPECT_EQ(raw.homs.size(), 3u);
}

TEST(Io, Errors)
{
    io::Loader L;
    EXPECT_THROW(L.load("fixtures/does_not_exist.json"), InputError);
    auto dir = fs::temp_directory_path() / "gradix_io_test";
    fs::create_directories(dir);
    std::ofstream(dir / "bad.json") << "{ not json";
    EXPECT_THROW(L.load(dir / "bad.json"), InputError);
    EXPECT_THROW(L.ring(inline_node(R"({"field": "Q"})")), InputError);
    EXPECT_THROW(L.ring(inline_node(R"({"field": "Q", "groupoid": {"pair": 2}, "support": [[1, 3]]})")), ValidationError);
    EXPECT_THROW(io::as_int(io::json("x"), "thing"), InputError);
    fs::remove_all(dir);
}
