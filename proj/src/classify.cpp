#include "stc/classify.hpp"

#include <algorithm>
#include <set>

#include "stc/errors.hpp"

namespace stc {

const char* to_string(Condition c) {
    switch (c) {
        case Condition::C1: return "C1";
        case Condition::C2: return "C2";
        case Condition::C3: return "C3";
        case Condition::C4: return "C4";
        case Condition::C5: return "C5";
    }
    return "?";
}

namespace {

std::string join(const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

void require_elementary(const ChristmasDecomposition& dec) {
    if (!dec.elementary)
        throw PreconditionError("operation requires a complete elementary Christmas-tree decomposition");
}

ClassifyOutcome fail(Condition c, std::vector<int> witness, std::string message) {
    ClassifyOutcome out;
    out.violation = Violation{c, std::move(witness), std::move(message)};
    return out;
}

}  // namespace

ClassifyOutcome check_christmas(const SystemGraph& g, const CycleSet& cs) {
    if (g.input_count() != 1)
        throw UnsupportedError("Christmas trees are single-input systems (m = " + std::to_string(g.input_count()) +
                               ")");
    if (!g.input_accessible()) throw PreconditionError("Christmas trees must be input accessible");
    const int n = g.state_count();

    std::vector<Node> junctions;
    for (std::size_t id = 0; id < cs.cycles.size(); ++id) {
        const auto& cycle = cs.cycles[id];
        std::vector<Node> degree_two;
        for (Node x : cycle)
            if (g.in_degree(x) == 2) degree_two.push_back(x);
        if (degree_two.size() != 1)
            return fail(Condition::C2, cycle,
                        "cycle " + join(cycle) + " has " + std::to_string(degree_two.size()) +
                            " nodes of in-degree 2 (expected exactly 1)");
        junctions.push_back(degree_two.front());
    }

    std::set<Node> junction_set(junctions.begin(), junctions.end());
    for (Node x = 1; x <= n; ++x)
        if (!junction_set.contains(x) && g.in_degree(x) != 1)
            return fail(Condition::C3, {x},
                        "node " + std::to_string(x) + " has in-degree " + std::to_string(g.in_degree(x)) +
                            " (expected 1)");

    for (Node x = 1; x <= n; ++x)
        if (cs.membership[x].size() > 1) {
            std::vector<int> ids = cs.membership[x];
            return fail(Condition::C1, {x},
                        "node " + std::to_string(x) + " lies on " + std::to_string(ids.size()) + " cycles");
        }

    ChristmasDecomposition dec;
    dec.cycles = cs;
    dec.junctions = std::move(junctions);
    dec.depth = g.depths();
    ClassifyOutcome out;
    out.decomposition = std::move(dec);
    return out;
}

ClassifyOutcome check_elementary(const ChristmasDecomposition& base, const SystemGraph& g) {
    const int n = g.state_count();
    const auto& cycles = base.cycles.cycles;

    std::vector<int> lengths;
    for (const auto& c : cycles) lengths.push_back(static_cast<int>(c.size()));
    if (std::adjacent_find(lengths.begin(), lengths.end(), std::not_equal_to<>()) != lengths.end())
        return fail(Condition::C4, lengths, "cycle lengths differ: " + join(lengths));

    // Forward sweep from each cycle; a node reached from two cycles violates C5.
    NodeMap<std::optional<int>> owner(n);
    for (std::size_t id = 0; id < cycles.size(); ++id) {
        NodeMap<char> seen(n, 0);
        std::vector<Node> stack(cycles[id].begin(), cycles[id].end());
        for (Node x : stack) seen[x] = 1;
        while (!stack.empty()) {
            Node x = stack.back();
            stack.pop_back();
            for (Node y : g.successors(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        for (Node x = 1; x <= n; ++x) {
            if (!seen[x]) continue;
            if (owner[x])
                return fail(Condition::C5, {x},
                            "node " + std::to_string(x) + " is backward-connected to cycles " +
                                join(cycles[static_cast<std::size_t>(*owner[x])]) + " and " + join(cycles[id]));
            owner[x] = static_cast<int>(id);
        }
    }

    ChristmasDecomposition dec = base;
    dec.elementary = true;
    dec.backward_cycle = std::move(owner);
    if (!lengths.empty()) dec.period = lengths.front();
    const int r = dec.effective_period();
    dec.classes.assign(static_cast<std::size_t>(r), {});
    dec.reduced_depth = NodeMap<int>(n, 0);
    for (Node x = 1; x <= n; ++x) {
        dec.classes[static_cast<std::size_t>(dec.depth[x] % r)].push_back(x);
        dec.reduced_depth[x] = (dec.depth[x] + r - 1) / r;
    }
    ClassifyOutcome out;
    out.decomposition = std::move(dec);
    return out;
}

ClassifyOutcome classify(const SystemGraph& g) {
    ClassifyOutcome christmas = check_christmas(g, simple_cycles(g));
    if (!christmas.passed()) return christmas;
    return check_elementary(*christmas.decomposition, g);
}

std::vector<std::vector<Node>> periodic_classes(const ChristmasDecomposition& dec) {
    require_elementary(dec);
    return dec.classes;
}

std::optional<int> backward_cycle(const ChristmasDecomposition& dec, const SystemGraph& g, Node x) {
    require_elementary(dec);
    if (x < 1 || x > g.state_count()) throw DomainError("node " + std::to_string(x) + " out of range");
    return dec.backward_cycle[x];
}

std::vector<Node> children_of(const ChristmasDecomposition& dec, const SystemGraph& g, Node w) {
    const auto cycle = backward_cycle(dec, g, w);
    if (!cycle)
        throw DomainError("node " + std::to_string(w) +
                          " is not backward-connected to a cycle; children are undefined");
    const int wanted = dec.depth[w] + dec.effective_period();
    std::vector<Node> kids;
    for (Node v = 1; v <= g.state_count(); ++v)
        if (dec.depth[v] == wanted && dec.backward_cycle[v] == cycle) kids.push_back(v);
    return kids;
}

TargetPartition partition_targets(const ChristmasDecomposition& dec, const SystemGraph& g,
                                  const std::vector<Node>& targets) {
    require_elementary(dec);
    const int n = g.state_count();
    TargetPartition part;
    part.classes.resize(static_cast<std::size_t>(dec.class_count()));
    for (std::size_t i = 0; i < part.classes.size(); ++i) part.classes[i].residue = static_cast<int>(i);

    std::vector<Node> sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    for (Node t : sorted) {
        if (t < 1 || t > n) throw DomainError("target " + std::to_string(t) + " out of range");
        part.classes[static_cast<std::size_t>(dec.class_of(t))].all.push_back(t);
    }

    for (auto& cls : part.classes) {
        std::set<Node> in_class(cls.all.begin(), cls.all.end());
        for (Node t : cls.all) {
            bool anchored = !dec.backward_cycle[t].has_value();
            if (!anchored) {
                auto kids = children_of(dec, g, t);
                anchored = std::any_of(kids.begin(), kids.end(), [&](Node v) { return in_class.contains(v); });
            }
            (anchored ? cls.a : cls.c).push_back(t);
        }
    }
    return part;
}

}  // namespace stc
