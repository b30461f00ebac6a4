#include "stc/analysis.hpp"

#include <algorithm>

#include "stc/errors.hpp"
#include "stc/graph.hpp"

namespace stc {

const char* to_string(Conclusion c) {
    switch (c) {
        case Conclusion::controllable: return "structurally target controllable";
        case Conclusion::not_controllable: return "not structurally target controllable";
        case Conclusion::undetermined: return "undetermined";
    }
    return "?";
}

const char* to_string(Certainty c) {
    switch (c) {
        case Certainty::proof: return "proof";
        case Certainty::probabilistic: return "probabilistic";
        case Certainty::none: return "none";
    }
    return "?";
}

const char* to_string(GraphKind k) {
    switch (k) {
        case GraphKind::elementary: return "elementary";
        case GraphKind::christmas: return "christmas";
        case GraphKind::neither: return "neither";
        case GraphKind::not_applicable: return "not_applicable";
    }
    return "?";
}

const CriterionVerdict* Analysis::find(CriterionId id) const {
    for (const auto& v : verdicts)
        if (v.id == id) return &v;
    return nullptr;
}

namespace {

CriterionVerdict not_applicable(CriterionId id, std::string reason) {
    return {id, Verdict::inconclusive, NotApplicable{std::move(reason)}, ""};
}

bool is_sufficient(CriterionId id) { return id != CriterionId::bipartite_length; }

}  // namespace

Analysis analyze(const StructuredSystem& sys, const AnalysisOptions& options) {
    sys.validate();
    const SystemGraph g(sys);
    const std::vector<Node>& targets = sys.targets;
    Analysis out;

    const bool single = sys.m == 1;
    const bool accessible = g.input_accessible();
    std::string why;
    if (!accessible) why = "graph is not input accessible";
    else if (!single) why = "criterion is stated for single-input systems (m = " + std::to_string(sys.m) + ")";

    std::optional<ChristmasDecomposition> dec;
    auto& cls = out.classification;
    if (!why.empty()) {
        cls.note = why;
    } else {
        try {
            ClassifyOutcome outcome = classify(g);
            if (outcome.passed()) {
                dec = std::move(outcome.decomposition);
                cls.kind = GraphKind::elementary;
                cls.period = dec->period;
                cls.classes = dec->classes;
            } else {
                const Condition c = outcome.violation->condition;
                cls.kind = (c == Condition::C4 || c == Condition::C5) ? GraphKind::christmas : GraphKind::neither;
                cls.violation = outcome.violation;
            }
        } catch (const EnumerationOverflow& e) {
            cls.note = e.what();
        }
    }

    // Sufficient conditions.
    if (why.empty()) out.verdicts.push_back(kwalk_check(g, targets));
    else out.verdicts.push_back(not_applicable(CriterionId::kwalk, why));

    if (accessible) out.verdicts.push_back(stem_cycle_cover_check(g, targets));
    else out.verdicts.push_back(not_applicable(CriterionId::stem_cycle, why));

    bool theorem1_passed = false;
    if (dec) {
        auto t1 = theorem1_check(*dec, g, partition_targets(*dec, g, targets));
        theorem1_passed = t1.verdict == Verdict::sufficient_pass;
        out.verdicts.push_back(std::move(t1));
        out.verdicts.push_back(corollary1_check(*dec, g, targets));
    } else {
        const std::string reason = why.empty() ? "graph is not an elementary Christmas tree" : why;
        out.verdicts.push_back(not_applicable(CriterionId::theorem1, reason));
        out.verdicts.push_back(not_applicable(CriterionId::corollary1, reason));
    }

    if (why.empty() && !theorem1_passed) {
        const SpanningResult sr = find_spanning_ect(g, targets, options.spanning);
        out.spanning = SpanningSummary{sr.status, sr.explored};
        CriterionVerdict v{CriterionId::theorem1_spanning, Verdict::inconclusive, NoWitness{}, ""};
        if (const SpanningCandidate* c = sr.first()) {
            v.verdict = Verdict::sufficient_pass;
            v.witness = c->witness();
        } else if (sr.status == SearchStatus::incomplete) {
            v.note = "search stopped before exhausting the candidates";
        } else {
            v.note = "no elementary Christmas tree covering the targets satisfies theorem1";
        }
        out.verdicts.push_back(std::move(v));
    }

    // Necessary condition, with d from the oracle when available.
    if (options.run_oracle) {
        OracleOptions dim = options.oracle;
        dim.k.reset();
        out.ctrb_dimension = generic_ctrb_dimension(sys, dim);
        out.bipartite_bound = std::max(1, *out.ctrb_dimension);
    } else {
        out.bipartite_bound = sys.n;
    }
    if (accessible) out.verdicts.push_back(bipartite_length_check(g, targets, out.bipartite_bound));
    else out.verdicts.push_back(not_applicable(CriterionId::bipartite_length, why));

    if (options.run_oracle) out.oracle = generic_target_rank(sys, targets, options.oracle);

    // Overall.
    const CriterionVerdict* proof = nullptr;
    const CriterionVerdict* refutation = nullptr;
    for (const auto& v : out.verdicts) {
        if (!proof && is_sufficient(v.id) && v.verdict == Verdict::sufficient_pass) proof = &v;
        if (!refutation && v.verdict == Verdict::necessary_fail) refutation = &v;
    }
    const bool oracle_full = out.oracle && out.oracle->full_rank();
    if ((proof || oracle_full) && refutation)
        throw VerificationError(std::string("controllability proof contradicts failed ") + to_string(refutation->id));

    if (proof) {
        out.conclusion = Conclusion::controllable;
        out.certainty = Certainty::proof;
        out.basis = to_string(proof->id);
    } else if (oracle_full) {
        out.conclusion = Conclusion::controllable;
        out.certainty = Certainty::proof;
        out.basis = "oracle";
    } else if (refutation) {
        out.conclusion = Conclusion::not_controllable;
        out.certainty = Certainty::proof;
        out.basis = to_string(refutation->id);
    } else if (out.oracle) {
        out.conclusion = Conclusion::not_controllable;
        out.certainty = Certainty::probabilistic;
        out.basis = "oracle";
        out.notes.push_back("rank deficit in every trial is strong evidence, not a proof");
    }
    if (!why.empty()) out.notes.push_back(why);
    if (out.oracle && proof && !oracle_full)
        out.notes.push_back("every oracle trial fell below |T|; the weights were unlucky");
    return out;
}

}  // namespace stc
