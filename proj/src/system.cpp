#include "stc/system.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "stc/errors.hpp"

namespace stc {

namespace {

std::string edge_text(const Edge& e) {
    return "edge [" + std::to_string(e.from) + ", " + std::to_string(e.to) + "]";
}

std::string input_text(const InputEdge& e) {
    return "input edge (u" + std::to_string(e.input) + ", " + std::to_string(e.to) + ")";
}

}  // namespace

void StructuredSystem::validate() const {
    if (n < 1) throw ValidationError("n must be at least 1, got " + std::to_string(n));
    if (m < 0) throw ValidationError("m must be non-negative, got " + std::to_string(m));
    auto in_range = [this](Node x) { return x >= 1 && x <= n; };

    std::set<Edge> seen_edges;
    for (const Edge& e : a_pattern) {
        if (!in_range(e.from) || !in_range(e.to))
            throw ValidationError(edge_text(e) + ": node index outside 1.." + std::to_string(n));
        if (!seen_edges.insert(e).second) throw ValidationError("duplicate " + edge_text(e));
    }
    std::set<InputEdge> seen_inputs;
    for (const InputEdge& e : b_pattern) {
        if (e.input < 1 || e.input > m)
            throw ValidationError(input_text(e) + ": input index outside 1.." + std::to_string(m));
        if (!in_range(e.to))
            throw ValidationError(input_text(e) + ": node index outside 1.." + std::to_string(n));
        if (!seen_inputs.insert(e).second) throw ValidationError("duplicate " + input_text(e));
    }
    if (targets.empty()) throw ValidationError("target set is empty");
    std::set<Node> seen_targets;
    for (Node t : targets) {
        if (!in_range(t))
            throw ValidationError("target " + std::to_string(t) + " outside 1.." + std::to_string(n));
        if (!seen_targets.insert(t).second)
            throw ValidationError("duplicate target " + std::to_string(t));
    }
}

StructuredSystem make_system(int n, const std::vector<std::vector<Node>>& inputs,
                             const std::vector<Edge>& edges, const std::vector<Node>& targets) {
    StructuredSystem sys;
    sys.n = n;
    sys.m = static_cast<int>(inputs.size());
    sys.a_pattern = edges;
    for (std::size_t k = 0; k < inputs.size(); ++k)
        for (Node j : inputs[k]) sys.b_pattern.push_back({static_cast<int>(k) + 1, j});
    sys.targets = targets;
    sys.validate();
    return sys;
}

StructuredSystem canonical(StructuredSystem sys) {
    std::sort(sys.a_pattern.begin(), sys.a_pattern.end());
    std::sort(sys.b_pattern.begin(), sys.b_pattern.end());
    std::sort(sys.targets.begin(), sys.targets.end());
    return sys;
}

StructuredSystem with_targets(const StructuredSystem& sys, std::vector<Node> targets) {
    StructuredSystem out = sys;
    out.targets = std::move(targets);
    out.validate();
    return out;
}

}  // namespace stc
