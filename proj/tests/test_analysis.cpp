#include "doctest.h"
#include "fixtures.hpp"
#include "stc/analysis.hpp"
#include "stc/io.hpp"

using namespace stc;

namespace {

std::vector<CriterionId> ids(const Analysis& a) {
    std::vector<CriterionId> out;
    for (const auto& v : a.verdicts) out.push_back(v.id);
    return out;
}

AnalysisOptions no_oracle() {
    AnalysisOptions o;
    o.run_oracle = false;
    return o;
}

}  // namespace

TEST_CASE("two-cycle tree is refuted by the oracle") {
    const Analysis a = analyze(fixtures::two_cycle_tree());
    CHECK(a.conclusion == Conclusion::not_controllable);
    CHECK(a.certainty == Certainty::probabilistic);
    CHECK(a.basis == "oracle");
    CHECK(a.ctrb_dimension == 4);
    CHECK(a.bipartite_bound == 4);
    CHECK(a.oracle->certified_rank == 3);
    CHECK(a.classification.kind == GraphKind::elementary);
    CHECK(a.classification.period == 2);
    CHECK(ids(a) == std::vector<CriterionId>{CriterionId::kwalk, CriterionId::stem_cycle, CriterionId::theorem1,
                                             CriterionId::corollary1, CriterionId::theorem1_spanning,
                                             CriterionId::bipartite_length});
    CHECK(a.find(CriterionId::bipartite_length)->verdict == Verdict::inconclusive);
    CHECK(std::holds_alternative<LengthMatching>(a.find(CriterionId::bipartite_length)->witness));
}

TEST_CASE("twin tree is proved by theorem1") {
    const Analysis a = analyze(fixtures::twin_tree());
    CHECK(a.conclusion == Conclusion::controllable);
    CHECK(a.certainty == Certainty::proof);
    CHECK(a.basis == "theorem1");
    CHECK_FALSE(a.find(CriterionId::theorem1_spanning));
    CHECK(a.oracle->certified_rank == 8);
}

TEST_CASE("the sufficiency gap is closed only by the oracle") {
    const auto gap = fixtures::twin_tree(fixtures::kSharedTargets);
    const Analysis a = analyze(gap);
    CHECK(a.conclusion == Conclusion::controllable);
    CHECK(a.basis == "oracle");
    CHECK(a.find(CriterionId::theorem1)->verdict == Verdict::inconclusive);
    CHECK(a.spanning->status == SearchStatus::none);

    const Analysis b = analyze(gap, no_oracle());
    CHECK(b.conclusion == Conclusion::undetermined);
    CHECK(b.certainty == Certainty::none);
    CHECK(b.bipartite_bound == 14);
    CHECK_FALSE(b.oracle);
}

TEST_CASE("a Hall violator is a proof of failure") {
    const Analysis a = analyze(make_system(3, {{1}}, {{1, 2}, {1, 3}}, {2, 3}), no_oracle());
    CHECK(a.conclusion == Conclusion::not_controllable);
    CHECK(a.certainty == Certainty::proof);
    CHECK(a.basis == "bipartite_length");
}

TEST_CASE("non-elementary graphs go through the spanning search") {
    const auto sys = make_system(5, {{1, 3}}, {{1, 2}, {2, 1}, {3, 4}, {3, 5}, {5, 3}, {1, 4}}, {1, 4, 5});
    const Analysis a = analyze(sys);
    CHECK(a.classification.kind == GraphKind::neither);
    CHECK(a.find(CriterionId::theorem1)->verdict == Verdict::inconclusive);
    CHECK(std::holds_alternative<NotApplicable>(a.find(CriterionId::theorem1)->witness));
    const auto* span = a.find(CriterionId::theorem1_spanning);
    REQUIRE(span);
    CHECK(span->verdict == Verdict::sufficient_pass);
    CHECK(a.conclusion == Conclusion::controllable);
    CHECK(a.oracle->full_rank());

    const Analysis mixed = analyze(fixtures::mixed_cycles(), no_oracle());
    CHECK(mixed.classification.kind == GraphKind::christmas);
    CHECK(mixed.classification.violation->condition == Condition::C4);
}

TEST_CASE("multi-input and inaccessible systems") {
    const Analysis multi = analyze(make_system(4, {{1}, {3}}, {{1, 2}, {2, 1}, {3, 4}}, {1, 2, 4}));
    CHECK(multi.classification.kind == GraphKind::not_applicable);
    CHECK(std::holds_alternative<NotApplicable>(multi.find(CriterionId::kwalk)->witness));
    CHECK_FALSE(multi.find(CriterionId::theorem1_spanning));
    CHECK(multi.conclusion != Conclusion::undetermined);

    const Analysis cut = analyze(make_system(3, {{1}}, {{1, 2}}, {2, 3}));
    CHECK(std::holds_alternative<NotApplicable>(cut.find(CriterionId::stem_cycle)->witness));
    CHECK(cut.oracle->certified_rank == 1);
    CHECK(cut.conclusion == Conclusion::not_controllable);
}

TEST_CASE("reports are deterministic") {
    const auto sys = fixtures::twin_tree(fixtures::kSharedTargets);
    ReportSettings s{7, 3, kDefaultMaxWeight, std::nullopt, true, 1000};
    AnalysisOptions o;
    o.oracle.seed = 7;
    const auto first = report_json(sys, analyze(sys, o), s).dump(2);
    o.oracle.exec = Execution::serial;
    const auto second = report_json(sys, analyze(sys, o), s).dump(2);
    CHECK(first == second);
}
