#ifndef STC_SPANNING_HPP
#define STC_SPANNING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "stc/classify.hpp"
#include "stc/criteria.hpp"
#include "stc/graph.hpp"

namespace stc {

/// Elementary Christmas tree inside a larger graph, covering the targets.
///
/// The subsystem is relabelled 1..|covered| in ascending order of the original
/// labels; `labels[i-1]` maps local node i back to the original graph.
struct SpanningCandidate {
    std::vector<Edge> edges;              // original labels
    std::vector<Node> input_successors;   // original labels
    std::vector<Node> covered;            // sorted, original labels
    std::vector<Node> labels;             // local -> original
    StructuredSystem subsystem;           // local labels, targets mapped
    ChristmasDecomposition decomposition;  // of the subsystem
    CriterionVerdict theorem1;            // on the subsystem

    Node original(Node local) const { return labels[static_cast<std::size_t>(local - 1)]; }
    SpanningSubgraph witness() const { return {edges, input_successors, covered}; }
};

enum class SearchStatus { found, none, incomplete };

const char* to_string(SearchStatus s);

struct SpanningOptions {
    int node_cap = 20;
    std::uint64_t candidate_budget = 1'000'000;
    bool collect_all = false;  // keep searching and return every acceptor
};

struct SpanningResult {
    SearchStatus status = SearchStatus::none;
    std::vector<SpanningCandidate> candidates;  // first acceptor first
    std::uint64_t explored = 0;

    const SpanningCandidate* first() const { return candidates.empty() ? nullptr : &candidates.front(); }
};

/// Searches for an elementary Christmas tree covering `targets` on which
/// theorem1 passes. The full graph is tried first; then each required node
/// (targets and, transitively, their chosen parents) picks one incoming edge
/// (state in-neighbours in descending order, the input last), and every cycle
/// closed by parent choices picks one junction edge from outside the cycle.
///
/// Requires a single-input, input-accessible graph.
SpanningResult find_spanning_ect(const SystemGraph& g, const std::vector<Node>& targets,
                                 const SpanningOptions& options = {});

/// Builds a classified subsystem from chosen edges. Returns nullopt unless the
/// subgraph is an input-accessible elementary Christmas tree covering targets.
std::optional<SpanningCandidate> make_candidate(const std::vector<Edge>& edges,
                                                const std::vector<Node>& input_successors,
                                                const std::vector<Node>& targets);

/// Random elementary Christmas tree with n state nodes and `cycle_count`
/// disjoint cycles of length r. Targets are set to all state nodes.
/// Throws DomainError when r < 1, n < 1 or cycle_count * r > n.
StructuredSystem generate_random_ect(int n, int r, int cycle_count, std::uint64_t seed);

}  // namespace stc

#endif  // STC_SPANNING_HPP
