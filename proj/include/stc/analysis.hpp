#ifndef STC_ANALYSIS_HPP
#define STC_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stc/classify.hpp"
#include "stc/criteria.hpp"
#include "stc/oracle.hpp"
#include "stc/spanning.hpp"
#include "stc/system.hpp"

namespace stc {

enum class Conclusion { controllable, not_controllable, undetermined };
enum class Certainty { proof, probabilistic, none };

const char* to_string(Conclusion c);
const char* to_string(Certainty c);

enum class GraphKind { elementary, christmas, neither, not_applicable };

const char* to_string(GraphKind k);

struct ClassificationRecord {
    GraphKind kind = GraphKind::not_applicable;
    std::optional<int> period;                // r, nullopt when acyclic or not elementary
    std::vector<std::vector<Node>> classes;   // residue -> X_i
    std::optional<Violation> violation;
    std::string note;                         // why classification did not apply
};

struct AnalysisOptions {
    bool run_oracle = true;
    OracleOptions oracle;
    SpanningOptions spanning;
};

struct SpanningSummary {
    SearchStatus status = SearchStatus::none;
    std::uint64_t explored = 0;
};

struct Analysis {
    ClassificationRecord classification;
    std::vector<CriterionVerdict> verdicts;  // kwalk, stem_cycle, theorem1, corollary1, [theorem1_spanning], bipartite_length
    std::optional<SpanningSummary> spanning;
    int bipartite_bound = 0;                 // max walk length used by the matching
    std::optional<int> ctrb_dimension;       // generic dimension, when the oracle ran
    std::optional<OracleResult> oracle;
    Conclusion conclusion = Conclusion::undetermined;
    Certainty certainty = Certainty::none;
    std::string basis;                       // criterion or "oracle" that decided
    std::vector<std::string> notes;

    const CriterionVerdict* find(CriterionId id) const;
};

/// Runs every applicable criterion, the spanning search when the graph is not
/// itself decided by theorem1, and the oracle. Throws VerificationError if a
/// proof of controllability meets a failed necessary condition.
Analysis analyze(const StructuredSystem& sys, const AnalysisOptions& options = {});

}  // namespace stc

#endif  // STC_ANALYSIS_HPP
