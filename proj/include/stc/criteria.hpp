#ifndef STC_CRITERIA_HPP
#define STC_CRITERIA_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stc/classify.hpp"
#include "stc/graph.hpp"

namespace stc {

enum class CriterionId { kwalk, stem_cycle, bipartite_length, theorem1, corollary1, theorem1_spanning };
enum class Verdict { sufficient_pass, necessary_fail, inconclusive };

const char* to_string(CriterionId id);
const char* to_string(Verdict v);

struct NoWitness {
    bool operator==(const NoWitness&) const = default;
};

/// The criterion's preconditions do not hold for this system.
struct NotApplicable {
    std::string reason;
};

/// Two targets reached by shortest paths of the same length.
struct DepthCollision {
    Node first = 0;
    Node second = 0;
    int depth = 0;
    std::optional<int> residue;  // periodic class, for the Christmas-tree criteria
};

/// Two targets that must sit on different cycles but share one.
struct SharedCycle {
    Node first = 0;
    Node second = 0;
    std::vector<Node> cycle;
    int residue = 0;
};

struct Stem {
    int input = 0;
    std::vector<Node> nodes;  // state nodes in path order, after the input
};

struct StemCycleCover {
    std::vector<Stem> stems;
    std::vector<std::vector<Node>> cycles;
};

/// A column of R_k: walk length `length` (power length - 1) from input `input`.
struct MatchedColumn {
    Node target = 0;
    int input = 0;
    int length = 0;
};

struct LengthMatching {
    std::vector<MatchedColumn> pairs;
    int max_length = 0;
};

/// Targets whose reachable (input, length) columns are fewer than themselves.
struct HallViolator {
    std::vector<Node> targets;
    int column_count = 0;
    int max_length = 0;
};

/// Elementary Christmas tree inside a larger graph.
struct SpanningSubgraph {
    std::vector<Edge> edges;
    std::vector<Node> input_successors;
    std::vector<Node> covered;
};

using Witness = std::variant<NoWitness, NotApplicable, DepthCollision, SharedCycle, StemCycleCover, LengthMatching,
                             HallViolator, SpanningSubgraph>;

struct CriterionVerdict {
    CriterionId id;
    Verdict verdict;
    Witness witness;
    std::string note;
};

/// k-walk criterion checked over the target set: distinct ell_min among targets is sufficient.
/// Throws UnsupportedError for m != 1, PreconditionError when inaccessible.
CriterionVerdict kwalk_check(const SystemGraph& g, const std::vector<Node>& targets);

/// Stem-cycle criterion: targets covered by vertex-disjoint stems and cycles. Decided by a
/// circulation with lower bounds; the witness is the recovered cover.
CriterionVerdict stem_cycle_cover_check(const SystemGraph& g, const std::vector<Node>& targets);

/// Structural re-validation of a cover, independent of how it was found.
bool is_valid_stem_cycle_cover(const SystemGraph& g, const std::vector<Node>& targets, const StemCycleCover& cover);

/// Necessary condition: a target-saturating matching between targets and
/// reachable walk lengths 1..max_length. For m > 1 the right side holds
/// (input, length) pairs, one per column of R_k.
CriterionVerdict bipartite_length_check(const SystemGraph& g, const std::vector<Node>& targets, int max_length);

/// Periodic-class criterion (theorem1) on an elementary Christmas tree.
CriterionVerdict theorem1_check(const ChristmasDecomposition& dec, const SystemGraph& g,
                                const TargetPartition& part);

/// corollary1: theorem1 with every backward-connected target treated as T^c.
CriterionVerdict corollary1_check(const ChristmasDecomposition& dec, const SystemGraph& g,
                                  const std::vector<Node>& targets);

}  // namespace stc

#endif  // STC_CRITERIA_HPP
