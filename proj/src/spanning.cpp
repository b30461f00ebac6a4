#include "stc/spanning.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stc/errors.hpp"
#include "stc/random.hpp"

namespace stc {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        case SearchStatus::incomplete: return "incomplete";
    }
    return "?";
}

std::optional<SpanningCandidate> make_candidate(const std::vector<Edge>& edges,
                                                const std::vector<Node>& input_successors,
                                                const std::vector<Node>& targets) {
    std::set<Node> nodes(input_successors.begin(), input_successors.end());
    for (const Edge& e : edges) {
        nodes.insert(e.from);
        nodes.insert(e.to);
    }
    for (Node t : targets)
        if (!nodes.contains(t)) return std::nullopt;

    SpanningCandidate c;
    c.labels.assign(nodes.begin(), nodes.end());
    c.covered = c.labels;
    std::map<Node, Node> local;
    for (std::size_t i = 0; i < c.labels.size(); ++i) local[c.labels[i]] = static_cast<Node>(i) + 1;

    c.subsystem.n = static_cast<int>(c.labels.size());
    c.subsystem.m = 1;
    for (const Edge& e : edges) c.subsystem.a_pattern.push_back({local[e.from], local[e.to]});
    for (Node x : input_successors) c.subsystem.b_pattern.push_back({1, local[x]});
    for (Node t : targets) c.subsystem.targets.push_back(local[t]);
    c.subsystem = canonical(std::move(c.subsystem));
    c.edges = edges;
    std::sort(c.edges.begin(), c.edges.end());
    c.input_successors = input_successors;
    std::sort(c.input_successors.begin(), c.input_successors.end());

    const SystemGraph sub(c.subsystem);
    if (!sub.input_accessible()) return std::nullopt;
    ClassifyOutcome outcome;
    try {
        outcome = classify(sub);
    } catch (const EnumerationOverflow&) {
        return std::nullopt;
    }
    if (!outcome.passed()) return std::nullopt;
    c.decomposition = std::move(*outcome.decomposition);
    c.theorem1 = theorem1_check(c.decomposition, sub, partition_targets(c.decomposition, sub, c.subsystem.targets));
    return c;
}

namespace {

constexpr int kUnassigned = -1;
constexpr int kInput = 0;

struct BudgetExhausted {};

class ParentSearch {
public:
    ParentSearch(const SystemGraph& g, const std::vector<Node>& targets, const SpanningOptions& options,
                 SpanningResult& result)
        : g_(g), targets_(targets), options_(options), result_(result),
          parent_(g.state_count(), kUnassigned), required_(g.state_count(), 0) {
        for (Node t : targets) required_[t] = 1;
    }

    // Returns true when the search should stop.
    bool explore() {
        Node x = 0;
        for (Node v = 1; v <= g_.state_count() && x == 0; ++v)
            if (required_[v] && parent_[v] == kUnassigned) x = v;
        if (x == 0) return evaluate();

        for (int p : parent_options(x)) {
            parent_[x] = p;
            const bool newly_required = p != kInput && !required_[p];
            if (newly_required) required_[p] = 1;
            bool stop = false;
            if (auto cycle = closed_cycle(x)) {
                if (cycle_lengths_.empty() || cycle_lengths_.back() == static_cast<int>(cycle->size()))
                    stop = choose_junction(*cycle);
            } else {
                stop = explore();
            }
            if (newly_required) required_[p] = 0;
            parent_[x] = kUnassigned;
            if (stop) return true;
        }
        return false;
    }

private:
    // State in-neighbours in descending order, then the input.
    std::vector<int> parent_options(Node x) const {
        std::vector<int> opts(g_.predecessors(x).rbegin(), g_.predecessors(x).rend());
        if (!g_.input_predecessors(x).empty()) opts.push_back(kInput);
        return opts;
    }

    // Cycle of parent pointers through x, in edge order starting at x.
    std::optional<std::vector<Node>> closed_cycle(Node x) const {
        std::vector<Node> chain{x};
        int y = parent_[x];
        for (int steps = 0; y > 0 && parent_[y] != kUnassigned && steps <= g_.state_count(); ++steps) {
            if (y == x) break;
            chain.push_back(y);
            y = parent_[y];
        }
        if (y != x) return std::nullopt;
        // chain is x, parent(x), parent(parent(x)), ...; edges run the other way.
        std::reverse(chain.begin() + 1, chain.end());
        return chain;
    }

    bool choose_junction(const std::vector<Node>& cycle) {
        std::vector<Node> sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        std::set<Node> on_cycle(cycle.begin(), cycle.end());
        cycle_lengths_.push_back(static_cast<int>(cycle.size()));
        for (Node c : sorted) {
            for (int q : parent_options(c)) {
                if (q != kInput && on_cycle.contains(q)) continue;
                junctions_.push_back({q, c});
                const bool newly_required = q != kInput && !required_[q];
                if (newly_required) required_[q] = 1;
                const bool stop = explore();
                if (newly_required) required_[q] = 0;
                junctions_.pop_back();
                if (stop) {
                    cycle_lengths_.pop_back();
                    return true;
                }
            }
        }
        cycle_lengths_.pop_back();
        return false;
    }

    bool evaluate() {
        if (result_.explored >= options_.candidate_budget) throw BudgetExhausted{};
        ++result_.explored;
        std::vector<Edge> edges;
        std::vector<Node> inputs;
        auto add = [&](int from, Node to) {
            if (from == kInput) inputs.push_back(to);
            else edges.push_back({from, to});
        };
        for (Node v = 1; v <= g_.state_count(); ++v)
            if (required_[v]) add(parent_[v], v);
        for (const auto& [q, c] : junctions_) add(q, c);
        auto candidate = make_candidate(edges, inputs, targets_);
        if (!candidate || candidate->theorem1.verdict != Verdict::sufficient_pass) return false;
        result_.candidates.push_back(std::move(*candidate));
        return !options_.collect_all;
    }

    const SystemGraph& g_;
    const std::vector<Node>& targets_;
    const SpanningOptions& options_;
    SpanningResult& result_;
    NodeMap<int> parent_;
    NodeMap<char> required_;
    std::vector<std::pair<int, Node>> junctions_;
    std::vector<int> cycle_lengths_;
};

}  // namespace

SpanningResult find_spanning_ect(const SystemGraph& g, const std::vector<Node>& targets,
                                 const SpanningOptions& options) {
    if (g.input_count() != 1) throw UnsupportedError("spanning search needs a single-input system");
    if (!g.input_accessible()) throw PreconditionError("spanning search needs an input-accessible system");
    for (Node t : targets)
        if (t < 1 || t > g.state_count()) throw DomainError("target " + std::to_string(t) + " out of range");

    SpanningResult result;
    if (g.state_count() > options.node_cap) {
        result.status = SearchStatus::incomplete;
        return result;
    }

    // The whole graph first.
    {
        std::vector<Edge> edges;
        for (Node x = 1; x <= g.state_count(); ++x)
            for (Node y : g.successors(x)) edges.push_back({x, y});
        std::vector<Node> inputs(g.input_successors(1).begin(), g.input_successors(1).end());
        ++result.explored;
        if (auto whole = make_candidate(edges, inputs, targets);
            whole && whole->theorem1.verdict == Verdict::sufficient_pass) {
            result.candidates.push_back(std::move(*whole));
            if (!options.collect_all) {
                result.status = SearchStatus::found;
                return result;
            }
        }
    }

    try {
        ParentSearch(g, targets, options, result).explore();
        result.status = result.candidates.empty() ? SearchStatus::none : SearchStatus::found;
    } catch (const BudgetExhausted&) {
        result.status = result.candidates.empty() ? SearchStatus::incomplete : SearchStatus::found;
    }
    return result;
}

StructuredSystem generate_random_ect(int n, int r, int cycle_count, std::uint64_t seed) {
    if (n < 1 || r < 1 || cycle_count < 0 || static_cast<long>(cycle_count) * r > n)
        throw DomainError("infeasible generator parameters: n=" + std::to_string(n) + " r=" + std::to_string(r) +
                          " cycles=" + std::to_string(cycle_count));
    Rng rng(seed, 0x5ec7);
    std::vector<Node> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    rng.shuffle(labels);

    const auto on_cycles = static_cast<std::size_t>(cycle_count * r);
    std::vector<Node> free(labels.begin() + static_cast<long>(on_cycles), labels.end());
    const auto clean_count = static_cast<std::size_t>(rng.uniform(0, free.size()));

    StructuredSystem sys;
    sys.n = n;
    sys.m = 1;
    auto attach = [&](int parent, Node child) {
        if (parent == kInput) sys.b_pattern.push_back({1, child});
        else sys.a_pattern.push_back({parent, child});
    };

    // Nodes upstream of every cycle; junction sources come from here so that no
    // node ends up backward-connected to two cycles.
    std::vector<int> clean{kInput};
    for (std::size_t i = 0; i < clean_count; ++i) {
        attach(rng.pick(clean), free[i]);
        clean.push_back(free[i]);
    }
    std::vector<int> placed = clean;
    for (int c = 0; c < cycle_count; ++c) {
        const auto base = static_cast<std::size_t>(c * r);
        for (int j = 0; j < r; ++j)
            sys.a_pattern.push_back({labels[base + static_cast<std::size_t>(j)],
                                     labels[base + static_cast<std::size_t>((j + 1) % r)]});
        attach(rng.pick(clean), labels[base]);
        for (int j = 0; j < r; ++j) placed.push_back(labels[base + static_cast<std::size_t>(j)]);
    }
    for (std::size_t i = clean_count; i < free.size(); ++i) {
        attach(rng.pick(placed), free[i]);
        placed.push_back(free[i]);
    }
    for (Node x = 1; x <= n; ++x) sys.targets.push_back(x);
    sys = canonical(std::move(sys));
    sys.validate();
    return sys;
}

}  // namespace stc
