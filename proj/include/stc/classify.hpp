#ifndef STC_CLASSIFY_HPP
#define STC_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "stc/graph.hpp"

namespace stc {

/// Christmas-tree conditions C1-C3 and the elementary conditions C4-C5.
enum class Condition { C1, C2, C3, C4, C5 };

const char* to_string(Condition c);

/// Failed condition plus the nodes (or cycle lengths, for C4) that witness it.
struct Violation {
    Condition condition;
    std::vector<int> witness;
    std::string message;
};

/// Classification evidence for a Christmas tree.
///
/// After check_christmas only `cycles`, `junctions` and `depth` are filled.
/// check_elementary fills the rest. Class labels are the literal residues
/// ell_min mod r; an acyclic tree has the single class 0 and period 1.
struct ChristmasDecomposition {
    CycleSet cycles;
    std::vector<Node> junctions;  // per cycle id
    NodeMap<int> depth;           // ell_min
    bool elementary = false;

    std::optional<int> period;                   // r, or nullopt when acyclic
    std::vector<std::vector<Node>> classes;      // residue -> X_i (sorted)
    NodeMap<int> reduced_depth;                  // ceil(ell_min / r)
    NodeMap<std::optional<int>> backward_cycle;  // cycle id or none

    int class_count() const { return static_cast<int>(classes.size()); }
    /// r when cyclic, 1 when acyclic.
    int effective_period() const { return period.value_or(1); }
    int class_of(Node x) const { return depth[x] % effective_period(); }
};

/// Either a decomposition or the first violated condition.
struct ClassifyOutcome {
    std::optional<ChristmasDecomposition> decomposition;
    std::optional<Violation> violation;

    bool passed() const { return decomposition.has_value(); }
};

/// Checks C1-C3. Requires a single-input, input-accessible graph
/// (UnsupportedError / PreconditionError otherwise).
ClassifyOutcome check_christmas(const SystemGraph& g, const CycleSet& cs);

/// Checks C4-C5 on a decomposition that passed check_christmas and fills
/// period, classes, reduced depths and backward cycles.
ClassifyOutcome check_elementary(const ChristmasDecomposition& dec, const SystemGraph& g);

/// Runs cycle enumeration, C1-C3 and C4-C5 in sequence.
ClassifyOutcome classify(const SystemGraph& g);

std::vector<std::vector<Node>> periodic_classes(const ChristmasDecomposition& dec);

std::optional<int> backward_cycle(const ChristmasDecomposition& dec, const SystemGraph& g, Node x);

/// Nodes v with ell_min(v) = ell_min(w) + r sharing w's backward cycle.
/// Throws DomainError when w is not backward-connected to a cycle.
std::vector<Node> children_of(const ChristmasDecomposition& dec, const SystemGraph& g, Node w);

/// Per-class split of a target set into T_i^a and T_i^c.
struct ClassTargets {
    int residue = 0;
    std::vector<Node> all;
    std::vector<Node> a;  // not backward-connected, or with a child in the class targets
    std::vector<Node> c;  // remaining, all backward-connected
};

struct TargetPartition {
    std::vector<ClassTargets> classes;  // indexed by residue
};

TargetPartition partition_targets(const ChristmasDecomposition& dec, const SystemGraph& g,
                                  const std::vector<Node>& targets);

}  // namespace stc

#endif  // STC_CLASSIFY_HPP
