#ifndef STC_FLOW_HPP
#define STC_FLOW_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace stc::flow {

/// Dinic max-flow on a small integer-capacity network.
class MaxFlow {
public:
    explicit MaxFlow(int vertices);

    /// Returns the arc id; flow on it can be read back with flow_on().
    int add_arc(int from, int to, std::int64_t capacity);
    std::int64_t solve(int source, int sink);
    std::int64_t flow_on(int arc) const;
    int vertex_count() const { return static_cast<int>(adj_.size()); }

private:
    struct Arc {
        int to;
        std::int64_t cap;
    };

    bool build_levels(int source, int sink);
    std::int64_t push(int v, int sink, std::int64_t limit);

    std::vector<Arc> arcs_;  // arc 2k is forward, 2k+1 its residual twin
    std::vector<std::int64_t> original_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

/// Edge of a circulation problem with lower and upper bounds.
struct BoundedArc {
    int from;
    int to;
    std::int64_t lower;
    std::int64_t upper;
};

/// Feasible circulation via the standard reduction to one max-flow.
/// Returns the flow on every arc (in input order), or nullopt when infeasible.
std::optional<std::vector<std::int64_t>> feasible_circulation(int vertices, const std::vector<BoundedArc>& arcs);

}  // namespace stc::flow

#endif  // STC_FLOW_HPP
