#include "gradix/cli.hpp"
#include "gradix/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Run {
    int rc;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "gradix");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int rc = gradix::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {rc, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& part)
{
    return s.find(part) != std::string::npos;
}

}  // namespace

TEST(Cli, Validate)
{
    auto r = run({"validate", "fixtures/pair3.groupoid.json"});
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r.out, "groupoid: 1 block, 3 objects")) << r.out;
    r = run({"validate", "fixtures/triangle.category.json"});
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r.out, "axioms hold"));
}

TEST(Cli, RankAndInvert)
{
    auto r = run({"rank", "fixtures/rank1.matrix.json"});
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r.out, "rho_r=rho_c=rho=rho_i=1")) << r.out;
    r = run({"invert", "fixtures/invertible.matrix.json"});
    EXPECT_EQ(r.rc, 0) << r.err;
    r = run({"invert", "fixtures/rank1.matrix.json"});
    EXPECT_NE(r.rc, 2);
}

TEST(Cli, SolveAndModule)
{
    auto r = run({"solve", "fixtures/invertible.matrix.json", "fixtures/rhs.vector.json"});
    EXPECT_EQ(r.rc, 0) << r.err;
    r = run({"module", "fixtures/module.json", "fixtures/span.vectors.json"});
    EXPECT_EQ(r.rc, 0) << r.err;
}

TEST(Cli, ClassifyPfmExample)
{
    auto r = run({"classify", "fixtures/pfm_m3.ring.json"});
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r.out, "pfm: true, gr-division: false (witness: E11 has no right inverse)")) << r.out;
    EXPECT_TRUE(has(r.out, "ipbn: false"));
}

TEST(Cli, DecomposeAndIso)
{
    auto r = run({"decompose", "fixtures/block4.ring.json"});
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r.out, "dimension audit: passed")) << r.out;
    r = run({"iso", "fixtures/pfm_m3.ring.json", "fixtures/pfm_m3.ring.json"});
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r.out, "pi = (1 2 3)")) << r.out;
}

TEST(Cli, JsonEnvelope)
{
    auto r = run({"--emit", "json", "--seed", "7", "classify", "fixtures/q.ring.json"});
    ASSERT_EQ(r.rc, 0) << r.err;
    auto j = gradix::io::json::parse(r.out);
    EXPECT_EQ(j["schema"], "gradix/1");
    EXPECT_EQ(j["command"], "classify");
    EXPECT_EQ(j["seed"], 7);
    EXPECT_TRUE(j["result"].is_object());
}

TEST(Cli, Category)
{
    auto r = run({"category", "classify", "fixtures/mixed.category.json"});
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r.out, "ring-side flags agree: true")) << r.out;
    r = run({"category", "to-ring", "fixtures/mixed.category.json"});
    EXPECT_EQ(r.rc, 0);
    EXPECT_TRUE(has(r.out, "Hom(")) << r.out;
    r = run({"category", "classify", "fixtures/triangle.category.json"});
    EXPECT_EQ(r.rc, 1);
    EXPECT_TRUE(has(r.err, "precondition"));
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({"validate", "fixtures/nope.json"}).rc, 2);
    EXPECT_EQ(run({"frobnicate"}).rc, 2);
    EXPECT_EQ(run({"--help"}).rc, 0);
    auto r = run({"validate", "fixtures/broken/cocycle_1.json"});
    EXPECT_EQ(r.rc, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_TRUE(has(r.err, "cocycle"));
}
