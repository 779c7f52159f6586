#include <doctest.h>

#include <map>

#include "mukai/sod.hpp"

using namespace mukai;

TEST_CASE("embedding conditions on the fixed examples") {
    GenusContext g27(27), g28(28);
    CHECK(embedding_condition(make_wall_pair(0, 5, g27), g27) == EmbeddingCondition::StrictGain);
    CHECK(embedding_condition(make_wall_pair(1, 2, g27), g27) == EmbeddingCondition::Equality);
    CHECK(embedding_condition(make_wall_pair(1, 3, g28), g28) == EmbeddingCondition::Loss);
}

TEST_CASE("verdicts") {
    GenusContext g28(28);
    WallSystem w28 = build_wall_system(g28);
    VisitorVerdict v28 = theorem_verdicts(g28, w28);
    CHECK(v28.verdict == Verdict::Fano);
    CHECK(v28.fano_model_index == 7);
    std::map<std::string, bool> labels28;
    for (const auto& vis : v28.visitors)
        labels28[vis.label] = vis.strict;
    for (long d = -1; d <= 6; ++d) {
        std::string label = "Hilb^" + std::to_string(d + 1) + "(X)";
        REQUIRE(labels28.count(label));
        CHECK(labels28[label]);
    }
    REQUIRE(labels28.count("M(3,-h,9)"));
    CHECK(labels28["M(3,-h,9)"]);
    CHECK_FALSE(labels28.count("M(3,-h,8)")); // slope 1/3, not a visitor

    GenusContext g27(27);
    WallSystem w27 = build_wall_system(g27);
    VisitorVerdict v27 = theorem_verdicts(g27, w27);
    CHECK(v27.verdict == Verdict::WeakFano);
    CHECK(v27.fano_model_index == 8);
    std::map<std::string, bool> labels27;
    for (const auto& vis : v27.visitors)
        labels27[vis.label] = vis.strict;
    for (long d = -1; d <= 5; ++d)
        CHECK(labels27.count("Hilb^" + std::to_string(d + 1) + "(X)"));
    REQUIRE(labels27.count("M(3,-h,9)"));
    CHECK(labels27["M(3,-h,9)"]);
    // the two slope-1 walls ride along without a strict gain
    REQUIRE(labels27.count("Hilb^7(X)"));
    CHECK_FALSE(labels27["Hilb^7(X)"]);
    REQUIRE(labels27.count("M(3,-h,8)"));
    CHECK_FALSE(labels27["M(3,-h,8)"]);

    GenusContext g5(5);
    VisitorVerdict v5 = theorem_verdicts(g5, build_wall_system(g5));
    CHECK(v5.verdict == Verdict::Fano);
}

TEST_CASE("block inventory at g = 28") {
    GenusContext ctx(28);
    WallSystem walls = build_wall_system(ctx);
    std::vector<SodBlock> blocks = block_inventory(ctx, walls);

    std::vector<std::pair<std::string, long>> expect = {
        {"D(pt)", 29},          {"D(X)", 25},           {"D(Hilb^2(X))", 21},
        {"D(Hilb^3(X))", 17},   {"D(Hilb^4(X))", 13},   {"D(Hilb^5(X))", 9},
        {"D(Hilb^6(X))", 5},    {"D(Hilb^7(X))", 1},    {"D(M(3,-h,9))", 3}};
    REQUIRE(blocks.size() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) {
        CHECK(blocks[k].label == expect[k].first);
        CHECK(blocks[k].multiplicity == expect[k].second);
    }
    CHECK(block_total(ctx, walls) == 29 + 25 + 21 + 17 + 13 + 9 + 5 + 1 + 3);
}

TEST_CASE("block inventory at g = 27 omits the equality walls") {
    GenusContext ctx(27);
    WallSystem walls = build_wall_system(ctx);
    std::vector<SodBlock> blocks = block_inventory(ctx, walls);
    std::vector<std::pair<std::string, long>> expect = {
        {"D(pt)", 28},        {"D(X)", 24},         {"D(Hilb^2(X))", 20},
        {"D(Hilb^3(X))", 16}, {"D(Hilb^4(X))", 12}, {"D(Hilb^5(X))", 8},
        {"D(Hilb^6(X))", 4},  {"D(M(3,-h,9))", 4}};
    REQUIRE(blocks.size() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) {
        CHECK(blocks[k].label == expect[k].first);
        CHECK(blocks[k].multiplicity == expect[k].second);
    }
    for (const auto& b : blocks) {
        CHECK(b.multiplicity >= 1);
        CHECK(b.label != "D(Hilb^7(X))");
        CHECK(b.label != "D(M(3,-h,8))");
    }
}

TEST_CASE("block dimensions") {
    GenusContext ctx(28);
    WallSystem walls = build_wall_system(ctx);
    for (const auto& b : block_inventory(ctx, walls)) {
        if (b.label == "D(pt)")
            CHECK(b.dimension == 0);
        else if (b.label == "D(X)")
            CHECK(b.dimension == 2);
        else
            CHECK(b.dimension % 2 == 0);
    }
}

TEST_CASE("verdict parity and ledger totals over a sweep") {
    for (long g = 4; g <= 80; ++g) {
        GenusContext ctx(g);
        WallSystem walls = build_wall_system(ctx);
        VisitorVerdict verdict = theorem_verdicts(ctx, walls);
        CHECK((verdict.verdict == Verdict::WeakFano) == (g % 4 == 3));
        Int listed(0);
        for (const auto& b : block_inventory(ctx, walls))
            listed += b.multiplicity;
        CHECK(listed == block_total(ctx, walls));
        for (const auto& vis : verdict.visitors) {
            Int q(2 * vis.pair.c + 1);
            Rat body(Int(g - 1) - Int(4) * vis.pair.d, 2 * q * q);
            body.canonicalize();
            CHECK(vis.strict == (body > 1));
        }
    }
}
