#include "stc/oracle.hpp"

#include <algorithm>
#include <string>

#include "stc/errors.hpp"
#include "stc/random.hpp"

namespace stc {

namespace {

Rational draw_weight(Rng& rng, std::uint64_t bound) {
    const std::uint64_t w = rng.uniform(1, bound);
    Integer z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof w, 0, 0, &w);
    return Rational(z);
}

void check_targets(const std::vector<Node>& targets, int n) {
    for (Node t : targets)
        if (t < 1 || t > n) throw DomainError("target " + std::to_string(t) + " out of range");
}

}  // namespace

RealizedSystem realize(const StructuredSystem& sys, std::uint64_t seed, int trial, std::uint64_t max_weight) {
    if (max_weight < 2) throw DomainError("max weight must be at least 2");
    const StructuredSystem canon = canonical(sys);
    RealizedSystem rs;
    rs.a = RationalMatrix(static_cast<std::size_t>(sys.n), static_cast<std::size_t>(sys.n));
    rs.b = RationalMatrix(static_cast<std::size_t>(sys.n), static_cast<std::size_t>(sys.m));
    rs.seed = seed;
    rs.trial = trial;
    rs.max_weight = max_weight;
    Rng engine(seed, static_cast<std::uint64_t>(trial));
    for (const Edge& e : canon.a_pattern) {
        Rational w = draw_weight(engine, max_weight);
        rs.a(static_cast<std::size_t>(e.to - 1), static_cast<std::size_t>(e.from - 1)) = w;
        rs.a_edges.push_back(e);
        rs.a_weights.push_back(w);
    }
    for (const InputEdge& e : canon.b_pattern)
        rs.b(static_cast<std::size_t>(e.to - 1), static_cast<std::size_t>(e.input - 1)) =
            draw_weight(engine, max_weight);
    return rs;
}

RealizedSystem scaled(const RealizedSystem& rs, const Rational& factor) {
    RealizedSystem out = rs;
    for (std::size_t r = 0; r < out.a.rows(); ++r)
        for (std::size_t c = 0; c < out.a.cols(); ++c) out.a(r, c) *= factor;
    for (std::size_t r = 0; r < out.b.rows(); ++r)
        for (std::size_t c = 0; c < out.b.cols(); ++c) out.b(r, c) *= factor;
    for (auto& w : out.a_weights) w *= factor;
    return out;
}

RationalMatrix output_ctrb_matrix(const RealizedSystem& rs, const std::vector<Node>& targets, int k) {
    if (k < 1) throw DomainError("k must be at least 1");
    const int n = rs.n();
    const int m = rs.m();
    check_targets(targets, n);
    RationalMatrix out(targets.size(), static_cast<std::size_t>(k) * static_cast<std::size_t>(m));
    std::vector<Rational> v(static_cast<std::size_t>(n)), next(static_cast<std::size_t>(n));
    for (int input = 0; input < m; ++input) {
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = rs.b(static_cast<std::size_t>(i), static_cast<std::size_t>(input));
        for (int power = 0; power < k; ++power) {
            const std::size_t col = static_cast<std::size_t>(power) * static_cast<std::size_t>(m) + static_cast<std::size_t>(input);
            for (std::size_t r = 0; r < targets.size(); ++r) out(r, col) = v[static_cast<std::size_t>(targets[r] - 1)];
            if (power + 1 == k) break;
            std::fill(next.begin(), next.end(), Rational(0));
            for (std::size_t e = 0; e < rs.a_edges.size(); ++e) {
                const Edge& edge = rs.a_edges[e];
                const Rational& x = v[static_cast<std::size_t>(edge.from - 1)];
                if (sgn(x) != 0) next[static_cast<std::size_t>(edge.to - 1)] += rs.a_weights[e] * x;
            }
            v.swap(next);
        }
    }
    return out;
}

OracleResult generic_target_rank(const StructuredSystem& sys, const std::vector<Node>& targets,
                                 const OracleOptions& options) {
    if (options.trials < 1) throw DomainError("trials must be at least 1");
    const int k = options.k.value_or(sys.n);
    if (k < 1) throw DomainError("k must be at least 1");
    if (options.max_weight < 2) throw DomainError("max weight must be at least 2");
    check_targets(targets, sys.n);

    OracleResult result;
    result.k = k;
    result.trials = options.trials;
    result.seed = options.seed;
    result.max_weight = options.max_weight;
    result.target_count = static_cast<int>(targets.size());

    const auto trials = static_cast<std::size_t>(options.trials);
    std::vector<int> ranks(trials, -1);
    std::vector<RationalMatrix> matrices(trials);
    auto run_trial = [&](std::size_t t) {
        const RealizedSystem rs = realize(sys, options.seed, static_cast<int>(t), options.max_weight);
        matrices[t] = output_ctrb_matrix(rs, targets, k);
        ranks[t] = exact_row_rank(matrices[t], Execution::serial);
    };

    if (options.exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long t = 0; t < static_cast<long>(trials); ++t) run_trial(static_cast<std::size_t>(t));
    } else {
        for (std::size_t t = 0; t < trials; ++t) {
            run_trial(t);
            if (ranks[t] == result.target_count) break;
        }
    }

    // Report trials in order up to the first full-rank hit.
    for (std::size_t t = 0; t < trials && ranks[t] >= 0; ++t) {
        result.per_trial_ranks.push_back(ranks[t]);
        if (ranks[t] > result.certified_rank || t == 0) {
            result.certified_rank = ranks[t];
            result.best_trial = static_cast<int>(t);
        }
        if (ranks[t] == result.target_count) break;
    }
    result.matrix = std::move(matrices[static_cast<std::size_t>(result.best_trial)]);
    return result;
}

int generic_ctrb_dimension(const StructuredSystem& sys, const OracleOptions& options) {
    std::vector<Node> all(static_cast<std::size_t>(sys.n));
    for (int i = 0; i < sys.n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    OracleOptions opts = options;
    opts.k = sys.n;
    return generic_target_rank(sys, all, opts).certified_rank;
}

const char* to_string(RowType t) { return t == RowType::canonical ? "T1" : "T2"; }

RationalMatrix BlockDecomposition::assemble() const {
    RationalMatrix out(targets.size(), static_cast<std::size_t>(k));
    std::size_t row = 0;
    std::size_t offset = 0;
    for (const ClassBlock& block : blocks) {
        for (const BlockRow& br : block.rows) {
            for (std::size_t p = 0; p < br.normalized.size(); ++p) out(row, offset + p) = br.beta * br.normalized[p];
            ++row;
        }
        offset += block.columns.size();
    }
    return out;
}

IntegerMatrix BlockDecomposition::row_permutation() const {
    IntegerMatrix p(row_order.size(), row_order.size());
    for (std::size_t i = 0; i < row_order.size(); ++i) p(i, row_order[i]) = 1;
    return p;
}

IntegerMatrix BlockDecomposition::column_permutation() const {
    IntegerMatrix p(column_order.size(), column_order.size());
    for (std::size_t j = 0; j < column_order.size(); ++j) p(column_order[j], j) = 1;
    return p;
}

int default_block_k(const ChristmasDecomposition& dec, const std::vector<Node>& targets) {
    int deepest = 0;
    for (Node x = 1; x <= dec.depth.size(); ++x) deepest = std::max(deepest, dec.depth[x]);
    return std::max(dec.depth.size(), deepest + dec.effective_period() * static_cast<int>(targets.size()));
}

BlockDecomposition block_decompose(const ChristmasDecomposition& dec, const SystemGraph& g,
                                   const std::vector<Node>& targets, const RealizedSystem& rs, int k) {
    if (!dec.elementary) throw PreconditionError("block decomposition needs an elementary Christmas tree");
    const int n = g.state_count();
    if (rs.n() != n || rs.m() != 1) throw DomainError("realization does not match the graph");
    if (k < n) throw DomainError("k must be at least n");
    check_targets(targets, n);

    const int r = dec.effective_period();
    const RationalMatrix full = output_ctrb_matrix(rs, targets, k);

    // Shortest-path parent: the unique in-neighbour one step closer to the input.
    auto shortest_weight = [&](Node t) {
        Rational beta = 1;
        Node x = t;
        while (true) {
            if (dec.depth[x] == 1) {
                return Rational(beta * rs.input_weight({1, x}));
            }
            Node parent = 0;
            for (Node p : g.predecessors(x))
                if (dec.depth[p] == dec.depth[x] - 1) parent = p;
            beta *= rs.weight({parent, x});
            x = parent;
        }
    };
    auto cycle_weight = [&](int id) {
        const auto& cyc = dec.cycles.cycles[static_cast<std::size_t>(id)];
        Rational alpha = 1;
        for (std::size_t i = 0; i < cyc.size(); ++i) alpha *= rs.weight({cyc[i], cyc[(i + 1) % cyc.size()]});
        return alpha;
    };

    BlockDecomposition bd;
    bd.k = k;
    bd.period = r;
    bd.targets = targets;

    std::vector<std::vector<std::size_t>> rows_by_class(static_cast<std::size_t>(r));
    std::vector<std::size_t> order(targets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return targets[a] < targets[b]; });
    for (std::size_t i : order) rows_by_class[static_cast<std::size_t>(dec.class_of(targets[i]))].push_back(i);

    // Column c holds walks of length c + 1.
    std::vector<std::vector<std::size_t>> cols_by_class(static_cast<std::size_t>(r));
    for (std::size_t c = 0; c < static_cast<std::size_t>(k); ++c)
        cols_by_class[(c + 1) % static_cast<std::size_t>(r)].push_back(c);

    for (int residue = 0; residue < r; ++residue) {
        const auto& rows = rows_by_class[static_cast<std::size_t>(residue)];
        const auto& cols = cols_by_class[static_cast<std::size_t>(residue)];
        if (rows.empty()) {
            bd.zero_columns.insert(bd.zero_columns.end(), cols.begin(), cols.end());
            continue;
        }
        ClassBlock block;
        block.residue = residue;
        block.columns = cols;
        for (std::size_t i : rows) {
            const Node t = targets[i];
            BlockRow br;
            br.target = t;
            br.beta = shortest_weight(t);
            br.cycle = dec.backward_cycle[t];
            br.type = br.cycle ? RowType::geometric : RowType::canonical;
            if (br.cycle) br.alpha = cycle_weight(*br.cycle);
            br.first_position = dec.reduced_depth[t];
            Rational expected_next = 1;
            for (std::size_t p = 1; p <= cols.size(); ++p) {
                const Rational value = full(i, cols[p - 1]) / br.beta;
                Rational expected = 0;
                if (static_cast<int>(p) == br.first_position) {
                    expected = 1;
                    expected_next = br.alpha ? *br.alpha : Rational(0);
                } else if (static_cast<int>(p) > br.first_position && br.alpha) {
                    expected = expected_next;
                    expected_next *= *br.alpha;
                }
                if (value != expected)
                    throw VerificationError("row of node " + std::to_string(t) + " (" + to_string(br.type) +
                                            ") differs from its predicted form at block position " +
                                            std::to_string(p));
                br.normalized.push_back(value);
            }
            block.rows.push_back(std::move(br));
            bd.row_order.push_back(i);
        }
        bd.column_order.insert(bd.column_order.end(), cols.begin(), cols.end());
        bd.blocks.push_back(std::move(block));
    }
    for (std::size_t c : bd.zero_columns)
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (sgn(full(i, c)) != 0)
                throw VerificationError("column for walk length " + std::to_string(c + 1) +
                                        " should be zero on the target rows");
    bd.column_order.insert(bd.column_order.end(), bd.zero_columns.begin(), bd.zero_columns.end());

    bd.permuted = RationalMatrix(targets.size(), static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < bd.row_order.size(); ++i)
        for (std::size_t j = 0; j < bd.column_order.size(); ++j) bd.permuted(i, j) = full(bd.row_order[i], bd.column_order[j]);
    return bd;
}

}  // namespace stc
