#ifndef STC_GRAPH_HPP
#define STC_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "stc/system.hpp"

namespace stc {

/// Directed graph G = (U ∪ X, E_x ∪ E_u) of a structured system.
///
/// Adjacency lists are sorted. In-degree counts input edges as well as state
/// edges. Shortest-path depths from the input are cached when the system has a
/// single input and every state node is reachable.
class SystemGraph {
public:
    explicit SystemGraph(const StructuredSystem& sys);

    int state_count() const { return n_; }
    int input_count() const { return m_; }

    std::span<const Node> successors(Node x) const { return out_[x]; }
    std::span<const Node> predecessors(Node x) const { return in_[x]; }
    /// State nodes fed by input k (1-based).
    std::span<const Node> input_successors(int k) const { return input_out_[static_cast<std::size_t>(k - 1)]; }
    /// Inputs feeding state node x.
    std::span<const int> input_predecessors(Node x) const { return input_in_[x]; }

    int in_degree(Node x) const { return static_cast<int>(in_[x].size() + input_in_[x].size()); }
    bool has_edge(Node from, Node to) const;
    std::size_t edge_count() const { return edge_count_; }

    bool input_accessible() const { return accessible_; }
    bool has_depths() const { return depth_.has_value(); }
    /// ell_min(x); throws unless has_depths().
    int depth(Node x) const;
    const NodeMap<int>& depths() const;

private:
    int n_;
    int m_;
    std::size_t edge_count_ = 0;
    NodeMap<std::vector<Node>> out_;
    NodeMap<std::vector<Node>> in_;
    std::vector<std::vector<Node>> input_out_;
    NodeMap<std::vector<int>> input_in_;
    bool accessible_ = false;
    std::optional<NodeMap<int>> depth_;
};

SystemGraph build_graph(const StructuredSystem& sys);

/// True iff every state node is reachable from some input.
bool is_input_accessible(const SystemGraph& g);

/// ell_min for a single-input, input-accessible graph.
/// Throws UnsupportedError when m != 1 and PreconditionError when inaccessible.
NodeMap<int> shortest_path_lengths(const SystemGraph& g);

/// reach[len][x] is true iff a walk of exactly len edges goes from input k to x.
/// Row 0 is unused (all false). Computed by length-indexed boolean propagation.
std::vector<NodeMap<char>> walk_length_table(const SystemGraph& g, int input, int bound);

/// Sorted walk lengths {l <= bound : a u -> x walk of length l exists}. Single input only.
std::vector<int> path_length_set(const SystemGraph& g, Node x, int bound);

/// Simple directed cycles over state nodes. Each cycle starts at its smallest node;
/// cycles are listed in the order Johnson's algorithm finds them (by smallest node).
struct CycleSet {
    std::vector<std::vector<Node>> cycles;
    NodeMap<std::vector<int>> membership;

    std::size_t size() const { return cycles.size(); }
    bool empty() const { return cycles.empty(); }
    int length(int id) const { return static_cast<int>(cycles[static_cast<std::size_t>(id)].size()); }
};

/// Enumerates all simple cycles; throws EnumerationOverflow when more than cap exist.
/// The default cap is n^2.
CycleSet simple_cycles(const SystemGraph& g, std::optional<std::size_t> cap = std::nullopt);

}  // namespace stc

#endif  // STC_GRAPH_HPP
