#ifndef STC_SYSTEM_HPP
#define STC_SYSTEM_HPP

#include <compare>
#include <cstddef>
#include <vector>

namespace stc {

/// State node label, 1-based as in the usual figures (1..n).
using Node = int;

/// Directed state edge from -> to, meaning A[to][from] is a free parameter.
struct Edge {
    Node from = 0;
    Node to = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Input edge u_input -> to, meaning B[to][input] is a free parameter. Inputs are 1-based.
struct InputEdge {
    int input = 0;
    Node to = 0;
    auto operator<=>(const InputEdge&) const = default;
};

/// Sparsity patterns of (A, B) plus a target set.
struct StructuredSystem {
    int n = 0;
    int m = 0;
    std::vector<Edge> a_pattern;
    std::vector<InputEdge> b_pattern;
    std::vector<Node> targets;

    /// Throws ValidationError naming the first offending entry.
    void validate() const;

    std::size_t target_count() const { return targets.size(); }
};

/// Builds and validates a system. inputs[k] lists the state nodes fed by input k+1.
StructuredSystem make_system(int n, const std::vector<std::vector<Node>>& inputs,
                             const std::vector<Edge>& edges, const std::vector<Node>& targets);

/// Same system with sorted patterns and sorted targets.
StructuredSystem canonical(StructuredSystem sys);

/// Copy of sys with a different target set (validated).
StructuredSystem with_targets(const StructuredSystem& sys, std::vector<Node> targets);

/// Dense node-indexed storage addressed by 1-based labels.
template <class T>
class NodeMap {
public:
    NodeMap() = default;
    explicit NodeMap(int n, const T& init = T{}) : data_(static_cast<std::size_t>(n), init) {}

    T& operator[](Node x) { return data_[static_cast<std::size_t>(x - 1)]; }
    const T& operator[](Node x) const { return data_[static_cast<std::size_t>(x - 1)]; }

    int size() const { return static_cast<int>(data_.size()); }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    bool operator==(const NodeMap&) const = default;

private:
    std::vector<T> data_;
};

}  // namespace stc

#endif  // STC_SYSTEM_HPP
