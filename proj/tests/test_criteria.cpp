#include "doctest.h"
#include "fixtures.hpp"
#include "stc/criteria.hpp"
#include "stc/errors.hpp"

using namespace stc;

namespace {

ChristmasDecomposition decompose(const SystemGraph& g) { return *classify(g).decomposition; }

CriterionVerdict theorem1(const StructuredSystem& sys) {
    const SystemGraph g(sys);
    const auto dec = decompose(g);
    return theorem1_check(dec, g, partition_targets(dec, g, sys.targets));
}

}  // namespace

TEST_CASE("two-cycle tree criteria") {
    const SystemGraph g(fixtures::two_cycle_tree());
    const std::vector<Node> t{1, 3, 4, 5};

    const auto kw = kwalk_check(g, t);
    CHECK(kw.verdict == Verdict::inconclusive);
    const auto& dc = std::get<DepthCollision>(kw.witness);
    CHECK(dc.first == 1);
    CHECK(dc.second == 3);
    CHECK(dc.depth == 1);

    CHECK(stem_cycle_cover_check(g, t).verdict == Verdict::inconclusive);

    const auto bl = bipartite_length_check(g, t, 4);
    CHECK(bl.verdict == Verdict::inconclusive);
    const auto& lm = std::get<LengthMatching>(bl.witness);
    CHECK(lm.max_length == 4);
    REQUIRE(lm.pairs.size() == 4);
    for (const auto& p : lm.pairs) {
        const auto lengths = path_length_set(g, p.target, 4);
        CHECK(std::find(lengths.begin(), lengths.end(), p.length) != lengths.end());
    }

    CHECK(theorem1(fixtures::two_cycle_tree()).verdict == Verdict::inconclusive);
}

TEST_CASE("twin tree criteria") {
    const auto sys = fixtures::twin_tree();
    const SystemGraph g(sys);
    const auto kw = kwalk_check(g, sys.targets);
    CHECK(kw.verdict == Verdict::inconclusive);
    const auto& dc = std::get<DepthCollision>(kw.witness);
    CHECK(dc.depth == 4);
    CHECK(dc.first == 4);
    CHECK(dc.second == 14);

    CHECK(stem_cycle_cover_check(g, sys.targets).verdict == Verdict::inconclusive);
    CHECK(theorem1(sys).verdict == Verdict::sufficient_pass);
    CHECK(corollary1_check(decompose(g), g, sys.targets).verdict == Verdict::inconclusive);
}

TEST_CASE("shared backward cycles defeat theorem1") {
    const auto v = theorem1(fixtures::twin_tree(fixtures::kSharedTargets));
    CHECK(v.verdict == Verdict::inconclusive);
    const auto& sc = std::get<SharedCycle>(v.witness);
    CHECK(sc.first < sc.second);
    CHECK(sc.cycle.size() == 2);
}

TEST_CASE("corollary1 and single targets") {
    const auto sys = fixtures::twin_tree({1, 5, 14});
    const SystemGraph g(sys);
    CHECK(corollary1_check(decompose(g), g, sys.targets).verdict == Verdict::sufficient_pass);
    CHECK(theorem1(sys).verdict == Verdict::sufficient_pass);
    for (Node x = 1; x <= 14; ++x) CHECK(theorem1(fixtures::twin_tree({x})).verdict == Verdict::sufficient_pass);
    for (Node x = 1; x <= 5; ++x) CHECK(theorem1(fixtures::two_cycle_tree({x})).verdict == Verdict::sufficient_pass);
}

TEST_CASE("k-walk passes on distinct depths") {
    const SystemGraph g(fixtures::twin_tree());
    CHECK(kwalk_check(g, {1, 2, 3, 4, 5, 6}).verdict == Verdict::sufficient_pass);
    CHECK_THROWS_AS(kwalk_check(g, {1, 1}), ValidationError);
    CHECK_THROWS_AS(kwalk_check(g, {15}), ValidationError);
}

TEST_CASE("stem-cycle cover witnesses are valid") {
    const SystemGraph g(fixtures::twin_tree());
    const auto v = stem_cycle_cover_check(g, {2, 3});
    REQUIRE(v.verdict == Verdict::sufficient_pass);
    CHECK(is_valid_stem_cycle_cover(g, {2, 3}, std::get<StemCycleCover>(v.witness)));

    const auto chain = stem_cycle_cover_check(g, {1, 2, 3, 4, 5, 6});
    REQUIRE(chain.verdict == Verdict::sufficient_pass);
    const auto& cover = std::get<StemCycleCover>(chain.witness);
    CHECK(is_valid_stem_cycle_cover(g, {1, 2, 3, 4, 5, 6}, cover));

    // 9 and 13 both need 8 as their predecessor.
    CHECK(stem_cycle_cover_check(g, {8, 9, 10}).verdict == Verdict::sufficient_pass);
    CHECK(stem_cycle_cover_check(g, {9, 10, 13}).verdict == Verdict::inconclusive);

    StemCycleCover bogus{{{1, {1, 2, 3}}}, {{2, 3}}};
    CHECK_FALSE(is_valid_stem_cycle_cover(g, {2}, bogus));
    StemCycleCover wrong_start{{{1, {2, 3}}}, {}};
    CHECK_FALSE(is_valid_stem_cycle_cover(g, {2}, wrong_start));
}

TEST_CASE("Hall violators refute controllability") {
    const SystemGraph g(make_system(3, {{1}}, {{1, 2}, {1, 3}}, {2, 3}));
    const auto v = bipartite_length_check(g, {2, 3}, 3);
    CHECK(v.verdict == Verdict::necessary_fail);
    const auto& h = std::get<HallViolator>(v.witness);
    CHECK(h.targets == std::vector<Node>{2, 3});
    CHECK(h.column_count == 1);
}

TEST_CASE("bipartite columns are (input, length) pairs") {
    const SystemGraph g(make_system(2, {{1}, {2}}, {}, {1, 2}));
    const auto v = bipartite_length_check(g, {1, 2}, 2);
    CHECK(v.verdict == Verdict::inconclusive);
    CHECK(std::get<LengthMatching>(v.witness).pairs.size() == 2);

    const SystemGraph shared(make_system(3, {{1}, {1}}, {{1, 2}, {1, 3}}, {2, 3}));
    CHECK(bipartite_length_check(shared, {2, 3}, 3).verdict == Verdict::inconclusive);
}
