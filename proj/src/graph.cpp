#include "stc/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "stc/errors.hpp"

namespace stc {

SystemGraph::SystemGraph(const StructuredSystem& sys)
    : n_(sys.n),
      m_(sys.m),
      out_(sys.n),
      in_(sys.n),
      input_out_(static_cast<std::size_t>(sys.m)),
      input_in_(sys.n) {
    sys.validate();
    for (const Edge& e : sys.a_pattern) {
        out_[e.from].push_back(e.to);
        in_[e.to].push_back(e.from);
    }
    for (const InputEdge& e : sys.b_pattern) {
        input_out_[static_cast<std::size_t>(e.input - 1)].push_back(e.to);
        input_in_[e.to].push_back(e.input);
    }
    edge_count_ = sys.a_pattern.size() + sys.b_pattern.size();
    for (Node x = 1; x <= n_; ++x) {
        std::sort(out_[x].begin(), out_[x].end());
        std::sort(in_[x].begin(), in_[x].end());
        std::sort(input_in_[x].begin(), input_in_[x].end());
    }
    for (auto& v : input_out_) std::sort(v.begin(), v.end());

    // Multi-source BFS from all inputs; depths are only kept for a single input.
    NodeMap<int> dist(n_, 0);
    std::deque<Node> queue;
    for (const auto& succ : input_out_)
        for (Node x : succ)
            if (dist[x] == 0) {
                dist[x] = 1;
                queue.push_back(x);
            }
    while (!queue.empty()) {
        Node x = queue.front();
        queue.pop_front();
        for (Node y : out_[x])
            if (dist[y] == 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    accessible_ = std::all_of(dist.begin(), dist.end(), [](int d) { return d > 0; });
    if (m_ == 1 && accessible_) depth_ = std::move(dist);
}

bool SystemGraph::has_edge(Node from, Node to) const {
    const auto& succ = out_[from];
    return std::binary_search(succ.begin(), succ.end(), to);
}

int SystemGraph::depth(Node x) const { return depths()[x]; }

const NodeMap<int>& SystemGraph::depths() const {
    if (!depth_) {
        if (m_ != 1)
            throw UnsupportedError("shortest path lengths are defined for single-input systems only (m = " +
                                   std::to_string(m_) + ")");
        throw PreconditionError("system is not input accessible");
    }
    return *depth_;
}

SystemGraph build_graph(const StructuredSystem& sys) { return SystemGraph(sys); }

bool is_input_accessible(const SystemGraph& g) { return g.input_accessible(); }

NodeMap<int> shortest_path_lengths(const SystemGraph& g) { return g.depths(); }

std::vector<NodeMap<char>> walk_length_table(const SystemGraph& g, int input, int bound) {
    const int n = g.state_count();
    std::vector<NodeMap<char>> reach(static_cast<std::size_t>(std::max(bound, 0)) + 1, NodeMap<char>(n, 0));
    if (bound < 1) return reach;
    for (Node x : g.input_successors(input)) reach[1][x] = 1;
    for (int len = 2; len <= bound; ++len) {
        const auto& prev = reach[static_cast<std::size_t>(len - 1)];
        auto& cur = reach[static_cast<std::size_t>(len)];
        for (Node x = 1; x <= n; ++x)
            if (prev[x])
                for (Node y : g.successors(x)) cur[y] = 1;
    }
    return reach;
}

std::vector<int> path_length_set(const SystemGraph& g, Node x, int bound) {
    if (g.input_count() != 1)
        throw UnsupportedError("path length sets are defined for single-input systems only");
    if (!g.input_accessible()) throw PreconditionError("system is not input accessible");
    if (x < 1 || x > g.state_count()) throw DomainError("node " + std::to_string(x) + " out of range");
    auto reach = walk_length_table(g, 1, bound);
    std::vector<int> lengths;
    for (int len = 1; len <= bound; ++len)
        if (reach[static_cast<std::size_t>(len)][x]) lengths.push_back(len);
    return lengths;
}

namespace {

// Johnson's circuit search restricted to the strongly connected component of
// `start` within the nodes >= start.
class JohnsonSearch {
public:
    JohnsonSearch(const SystemGraph& g, std::size_t cap, std::vector<std::vector<Node>>& out)
        : g_(g), cap_(cap), out_(out), blocked_(g.state_count(), 0), block_map_(g.state_count()),
          in_scc_(g.state_count(), 0) {}

    void run() {
        const int n = g_.state_count();
        for (Node s = 1; s <= n; ++s) {
            if (!component_of(s)) continue;
            for (Node v = s; v <= n; ++v) {
                blocked_[v] = 0;
                block_map_[v].clear();
            }
            start_ = s;
            circuit(s);
        }
    }

private:
    // Marks in_scc_ with the SCC of s in the subgraph induced by nodes >= s.
    // Returns false when that SCC carries no cycle.
    bool component_of(Node s) {
        const int n = g_.state_count();
        NodeMap<char> fwd(n, 0), bwd(n, 0);
        auto sweep = [&](NodeMap<char>& seen, bool forward) {
            std::vector<Node> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                Node x = stack.back();
                stack.pop_back();
                auto next = forward ? g_.successors(x) : g_.predecessors(x);
                for (Node y : next)
                    if (y >= s && !seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
            }
        };
        sweep(fwd, true);
        sweep(bwd, false);
        bool nontrivial = g_.has_edge(s, s);
        for (Node v = 1; v <= n; ++v) {
            in_scc_[v] = (v >= s && fwd[v] && bwd[v]) ? 1 : 0;
            if (v != s && in_scc_[v]) nontrivial = true;
        }
        return nontrivial;
    }

    void unblock(Node v) {
        blocked_[v] = 0;
        auto pending = std::move(block_map_[v]);
        block_map_[v].clear();
        for (Node w : pending)
            if (blocked_[w]) unblock(w);
    }

    bool circuit(Node v) {
        bool found = false;
        stack_.push_back(v);
        blocked_[v] = 1;
        for (Node w : g_.successors(v)) {
            if (!in_scc_[w]) continue;
            if (w == start_) {
                if (out_.size() >= cap_)
                    throw EnumerationOverflow("more than " + std::to_string(cap_) +
                                              " simple cycles; the graph is far from the Christmas-tree class");
                out_.push_back(stack_);
                found = true;
            } else if (!blocked_[w] && circuit(w)) {
                found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (Node w : g_.successors(v)) {
                if (!in_scc_[w]) continue;
                auto& list = block_map_[w];
                if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
            }
        }
        stack_.pop_back();
        return found;
    }

    const SystemGraph& g_;
    std::size_t cap_;
    std::vector<std::vector<Node>>& out_;
    NodeMap<char> blocked_;
    NodeMap<std::vector<Node>> block_map_;
    NodeMap<char> in_scc_;
    std::vector<Node> stack_;
    Node start_ = 0;
};

}  // namespace

CycleSet simple_cycles(const SystemGraph& g, std::optional<std::size_t> cap) {
    const int n = g.state_count();
    const std::size_t limit = cap.value_or(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    CycleSet cs;
    cs.membership = NodeMap<std::vector<int>>(n);
    JohnsonSearch(g, limit, cs.cycles).run();
    for (std::size_t id = 0; id < cs.cycles.size(); ++id)
        for (Node x : cs.cycles[id]) cs.membership[x].push_back(static_cast<int>(id));
    return cs;
}

}  // namespace stc
