#ifndef STC_ORACLE_HPP
#define STC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "stc/classify.hpp"
#include "stc/exact.hpp"
#include "stc/system.hpp"

namespace stc {

inline constexpr std::uint64_t kDefaultMaxWeight = std::uint64_t{1} << 20;
inline constexpr int kDefaultTrials = 3;

/// Numerical realization of a structured system: every pattern entry is a
/// positive integer in [1, max_weight], every other entry is exactly zero.
struct RealizedSystem {
    RationalMatrix a;  // n x n, a(to-1, from-1) is the weight of edge from -> to
    RationalMatrix b;  // n x m
    std::vector<Edge> a_edges;  // sorted pattern, parallel to a_weights
    std::vector<Rational> a_weights;
    std::uint64_t seed = 0;
    int trial = 0;
    std::uint64_t max_weight = 0;

    int n() const { return static_cast<int>(a.rows()); }
    int m() const { return static_cast<int>(b.cols()); }
    const Rational& weight(Edge e) const { return a(static_cast<std::size_t>(e.to - 1), static_cast<std::size_t>(e.from - 1)); }
    const Rational& input_weight(InputEdge e) const {
        return b(static_cast<std::size_t>(e.to - 1), static_cast<std::size_t>(e.input - 1));
    }
};

/// Draws weights from a stream determined only by (seed, trial). Pattern
/// entries are drawn in sorted order, A before B. Requires max_weight >= 2.
RealizedSystem realize(const StructuredSystem& sys, std::uint64_t seed, int trial,
                       std::uint64_t max_weight = kDefaultMaxWeight);

/// Every realized weight multiplied by `factor`.
RealizedSystem scaled(const RealizedSystem& rs, const Rational& factor);

/// Target rows of [B, AB, ..., A^{k-1}B]; column s*m + (input-1) holds power s.
/// Built by iterated sparse matrix-vector products.
RationalMatrix output_ctrb_matrix(const RealizedSystem& rs, const std::vector<Node>& targets, int k);

struct OracleOptions {
    int trials = kDefaultTrials;
    std::uint64_t seed = 0;
    std::uint64_t max_weight = kDefaultMaxWeight;
    std::optional<int> k;  // defaults to n
    Execution exec = Execution::parallel;
};

struct OracleResult {
    int k = 0;
    int trials = 0;  // requested
    std::uint64_t seed = 0;
    std::uint64_t max_weight = 0;
    std::vector<int> per_trial_ranks;  // stops at the first full-rank trial
    int certified_rank = 0;
    int target_count = 0;
    int best_trial = 0;
    RationalMatrix matrix;  // R_k of best_trial

    /// One full-rank realization proves structural target controllability.
    bool full_rank() const { return certified_rank == target_count; }
};

/// Max exact rank of R_k over independent realizations. Trials run
/// concurrently under Execution::parallel; the report is identical either way.
OracleResult generic_target_rank(const StructuredSystem& sys, const std::vector<Node>& targets,
                                 const OracleOptions& options = {});

/// Generic dimension of the controllable subspace: max rank of the full k = n
/// controllability matrix over trials.
int generic_ctrb_dimension(const StructuredSystem& sys, const OracleOptions& options = {});

enum class RowType { canonical, geometric };

const char* to_string(RowType t);

/// One target row of a class block, normalized by its shortest-path weight.
struct BlockRow {
    Node target = 0;
    RowType type = RowType::canonical;
    Rational beta;                 // weight of the shortest input -> target path
    std::optional<Rational> alpha;  // weight of the backward cycle
    std::optional<int> cycle;
    int first_position = 0;           // 1-based, equals ceil(ell_min / r)
    std::vector<Rational> normalized;  // block row divided by beta
};

struct ClassBlock {
    int residue = 0;
    std::vector<std::size_t> columns;  // R_k columns; position p is columns[p-1]
    std::vector<BlockRow> rows;
};

/// Block-diagonal form P1 R_k P2 of an elementary Christmas tree.
struct BlockDecomposition {
    int k = 0;
    int period = 1;
    std::vector<Node> targets;               // row order of R_k
    std::vector<std::size_t> row_order;      // P1: row i of the permuted matrix is R_k row row_order[i]
    std::vector<std::size_t> column_order;   // P2: column j of the permuted matrix is R_k column column_order[j]
    std::vector<ClassBlock> blocks;          // classes that contain targets
    std::vector<std::size_t> zero_columns;   // residues without targets
    RationalMatrix permuted;                 // P1 R_k P2, gathered from R_k directly

    /// Rebuilds P1 R_k P2 from D_i, the normalized blocks and the zero columns.
    RationalMatrix assemble() const;
    IntegerMatrix row_permutation() const;
    IntegerMatrix column_permutation() const;
};

/// Default k for block_decompose: max(n, largest ell_min + r |T|).
int default_block_k(const ChristmasDecomposition& dec, const std::vector<Node>& targets);

/// Builds the block form and verifies every row against its predicted type.
/// Throws VerificationError on any mismatch, DomainError when k < n.
BlockDecomposition block_decompose(const ChristmasDecomposition& dec, const SystemGraph& g,
                                   const std::vector<Node>& targets, const RealizedSystem& rs, int k);

}  // namespace stc

#endif  // STC_ORACLE_HPP
