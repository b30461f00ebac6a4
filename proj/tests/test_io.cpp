#include "brute.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "stc/errors.hpp"
#include "stc/io.hpp"

using namespace stc;

namespace {

bool same(const StructuredSystem& a, const StructuredSystem& b) {
    const auto x = canonical(a), y = canonical(b);
    return x.n == y.n && x.m == y.m && x.a_pattern == y.a_pattern && x.b_pattern == y.b_pattern &&
           x.targets == y.targets;
}

ParseError parse_failure(const std::string& text) {
    try {
        parse_system(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no parse error for " << text);
    return ParseError("", 0, 0, "");
}

}  // namespace

TEST_CASE("system documents") {
    const auto ex1 = parse_system(
        R"({"n": 5, "inputs": [[1, 3]], "edges": [[1, 2], [2, 1], [3, 4], [3, 5], [5, 3]], "targets": [1, 3, 4, 5]})");
    CHECK(same(ex1, fixtures::two_cycle_tree()));

    const auto one = parse_system(R"({"n": 1, "inputs": [[1]], "edges": [], "targets": [1]})");
    CHECK(one.n == 1);
    CHECK(one.m == 1);

    CHECK_THROWS_AS(parse_system(R"({"n": 2, "inputs": [[1]], "edges": [[0, 1]], "targets": [1]})"), ValidationError);
    CHECK_THROWS_AS(parse_system(R"({"n": 2, "inputs": [[1]], "edges": [[1, 2], [1, 2]], "targets": [1]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_system(R"({"n": 2, "inputs": [[1]], "edges": [], "targets": [3]})"), ValidationError);
    CHECK_THROWS_AS(parse_system(R"({"n": 2, "inputs": [[1]], "edges": [], "targets": [1, 1]})"), ValidationError);
}

TEST_CASE("parse errors carry a locus") {
    const auto syntax = parse_failure("{\n  \"n\": 5,\n  \"edges\": [[1, 2] [2, 1]]\n}");
    CHECK(syntax.line() == 3);
    CHECK(syntax.column() > 1);

    const auto type = parse_failure("{\n  \"n\": 2,\n  \"inputs\": [[1]],\n  \"edges\": [[1, \"x\"]],\n  \"targets\": [1]\n}");
    CHECK(type.field() == "edges[0][1]");
    CHECK(type.line() == 4);
    CHECK(type.column() == 3);

    CHECK(parse_failure(R"({"n": 2, "inputs": [[1]], "edges": [[1, 2, 3]], "targets": [1]})").field() == "edges[0]");
    CHECK(parse_failure(R"({"n": 2, "inputs": [[1]], "edges": []})").field() == "targets");
    CHECK(parse_failure(R"({"n": 2.5, "inputs": [], "edges": [], "targets": []})").field() == "n");
    CHECK(parse_failure(R"({"n": 2, "inputs": [], "edges": [], "targets": [], "extra": 1})").field() == "extra");
    CHECK(parse_failure("[1, 2]").line() == 1);
    CHECK_THROWS_AS(load_system("/nonexistent/system.json"), ParseError);
}

TEST_CASE("canonical emission round-trips") {
    const std::string text = emit_system(fixtures::twin_tree(fixtures::kSharedTargets));
    CHECK(text.find("\"edges\": [[1, 2], [2, 3], [3, 2], [3, 4]") != std::string::npos);
    const auto parsed = parse_system(text);
    CHECK(same(parsed, fixtures::twin_tree(fixtures::kSharedTargets)));
    CHECK(emit_system(parsed) == text);

    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        const auto sys = brute::random_system(rng.uniform_int(1, 8), rng.uniform_int(0, 3), 1, 3, rng);
        const auto once = parse_system(emit_system(sys));
        CHECK(same(once, sys));
        CHECK(emit_system(parse_system(emit_system(once))) == emit_system(once));
    }
}

TEST_CASE("report contents") {
    const auto sys = fixtures::two_cycle_tree();
    ReportSettings s{0, 3, kDefaultMaxWeight, std::nullopt, true, 100};
    const Analysis a = analyze(sys);
    const auto j = report_json(sys, a, s);
    CHECK(j["conclusion"] == "not structurally target controllable");
    CHECK(j["certainty"] == "probabilistic");
    CHECK(j["classification"]["kind"] == "elementary");
    CHECK(j["classification"]["r"] == 2);
    CHECK(j["oracle"]["certified_rank"] == 3);
    CHECK(j["oracle"]["per_trial_ranks"].size() == 3);
    CHECK(j["oracle"]["ctrb_dimension"] == 4);
    CHECK(j["settings"]["k"] == "auto");
    CHECK(j["criteria"][0]["criterion"] == "kwalk");
    CHECK(j["criteria"][0]["witness"]["type"] == "depth_collision");
    CHECK(j["error"].is_null());

    const std::string text = report_text(sys, a, s);
    CHECK(text.find("periodic class X_1 = {1, 3}") != std::string::npos);
    CHECK(text.find("conclusion: not structurally target controllable (probabilistic, via oracle)") !=
          std::string::npos);

    const std::string ex3 = report_text(fixtures::twin_tree(), analyze(fixtures::twin_tree()), s);
    CHECK(ex3.find("share shortest path length 4") != std::string::npos);

    const ParseError where("bad", 3, 7, "edges[1]");
    const auto err = error_report_json("parse", "bad", &where);
    CHECK(err["error"]["line"] == 3);
    CHECK(err["error"]["field"] == "edges[1]");
    CHECK(err["conclusion"].is_null());
}
