#include "brute.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "stc/errors.hpp"
#include "stc/oracle.hpp"

using namespace stc;

namespace {

std::vector<Rational> row_of(const std::vector<Rational>& v) { return v; }

}  // namespace

TEST_CASE("two-cycle tree: target rank 3, generic dimension 4") {
    const auto sys = fixtures::two_cycle_tree();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        OracleOptions o;
        o.seed = seed;
        const OracleResult r = generic_target_rank(sys, sys.targets, o);
        CHECK(r.certified_rank == 3);
        CHECK(r.target_count == 4);
        CHECK_FALSE(r.full_rank());
        CHECK(r.per_trial_ranks == std::vector<int>{3, 3, 3});
        CHECK(r.k == 5);
    }
    CHECK(generic_ctrb_dimension(sys) == 4);
}

TEST_CASE("twin tree ranks") {
    const auto ex3 = fixtures::twin_tree();
    const OracleResult r = generic_target_rank(ex3, ex3.targets);
    CHECK(r.certified_rank == 8);
    CHECK(r.full_rank());
    CHECK(r.per_trial_ranks.size() == 1);  // stops at the first full-rank trial

    const auto gap = fixtures::twin_tree(fixtures::kSharedTargets);
    CHECK(generic_target_rank(gap, gap.targets).certified_rank == 4);
    CHECK(generic_ctrb_dimension(ex3) == 8);
}

TEST_CASE("sparse R_k matches dense powers") {
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        const auto sys = brute::random_system(rng.uniform_int(1, 6), rng.uniform_int(1, 2), 1, 3, rng);
        const auto rs = realize(sys, 17, i, 50);
        const int k = sys.n + 2;
        CHECK(output_ctrb_matrix(rs, sys.targets, k) == brute::dense_ctrb(rs, sys.targets, k));
    }
}

TEST_CASE("realizations are deterministic and respect the pattern") {
    const auto sys = fixtures::twin_tree();
    const auto a = realize(sys, 42, 1);
    const auto b = realize(sys, 42, 1);
    const auto c = realize(sys, 42, 2);
    CHECK(a.a == b.a);
    CHECK(a.b == b.b);
    CHECK_FALSE(a.a == c.a);
    for (int i = 1; i <= 14; ++i)
        for (int j = 1; j <= 14; ++j) {
            const Rational& w = a.weight({j, i});
            const bool edge = std::find(sys.a_pattern.begin(), sys.a_pattern.end(), Edge{j, i}) != sys.a_pattern.end();
            if (edge) CHECK((w >= 1 && w <= Rational(static_cast<long>(kDefaultMaxWeight))));
            else CHECK(w == 0);
        }
    CHECK_THROWS_AS(realize(sys, 0, 0, 1), DomainError);

    OracleOptions serial, parallel;
    serial.exec = Execution::serial;
    serial.trials = parallel.trials = 4;
    const auto gap = fixtures::twin_tree({1, 2, 3, 4, 5, 6, 7, 8});
    const auto rs = generic_target_rank(gap, gap.targets, serial);
    const auto rp = generic_target_rank(gap, gap.targets, parallel);
    CHECK(rs.per_trial_ranks == rp.per_trial_ranks);
    CHECK(rs.matrix == rp.matrix);
    CHECK(rs.best_trial == rp.best_trial);

    OracleOptions bad;
    bad.trials = 0;
    CHECK_THROWS_AS(generic_target_rank(gap, gap.targets, bad), DomainError);
}

TEST_CASE("two-cycle tree block decomposition") {
    const auto sys = fixtures::two_cycle_tree();
    const SystemGraph g(sys);
    const auto dec = *classify(g).decomposition;
    const auto rs = realize(sys, 5, 0);
    const BlockDecomposition bd = block_decompose(dec, g, sys.targets, rs, 5);

    const Rational b1 = rs.input_weight({1, 1}), b3 = rs.input_weight({1, 3});
    const Rational alpha1 = rs.weight({1, 2}) * rs.weight({2, 1});
    const Rational alpha2 = rs.weight({3, 5}) * rs.weight({5, 3});

    REQUIRE(bd.blocks.size() == 2);
    const ClassBlock& x0 = bd.blocks[0];
    const ClassBlock& x1 = bd.blocks[1];
    CHECK(x0.residue == 0);
    CHECK(x1.residue == 1);

    // D^(0) = diag(b3 a43, b3 a53), block [1 a2; 1 a2].
    REQUIRE(x0.rows.size() == 2);
    CHECK(x0.rows[0].target == 4);
    CHECK(x0.rows[1].target == 5);
    CHECK(x0.rows[0].beta == b3 * rs.weight({3, 4}));
    CHECK(x0.rows[1].beta == b3 * rs.weight({3, 5}));
    CHECK(x0.rows[0].normalized == row_of({1, alpha2}));
    CHECK(x0.rows[1].normalized == row_of({1, alpha2}));

    // D^(1) = diag(b1, b3), block [1 a1 a1^2; 1 a2 a2^2].
    REQUIRE(x1.rows.size() == 2);
    CHECK(x1.rows[0].target == 1);
    CHECK(x1.rows[1].target == 3);
    CHECK(x1.rows[0].beta == b1);
    CHECK(x1.rows[1].beta == b3);
    CHECK(x1.rows[0].normalized == row_of({1, alpha1, alpha1 * alpha1}));
    CHECK(x1.rows[1].normalized == row_of({1, alpha2, alpha2 * alpha2}));
    for (const auto& row : x0.rows) CHECK(row.type == RowType::geometric);

    CHECK(bd.zero_columns.empty());
    CHECK(bd.assemble() == bd.permuted);

    // P1 R_k P2 equals the gathered matrix.
    const RationalMatrix full = output_ctrb_matrix(rs, sys.targets, 5);
    const IntegerMatrix p1 = bd.row_permutation(), p2 = bd.column_permutation();
    RationalMatrix product(full.rows(), full.cols());
    for (std::size_t i = 0; i < full.rows(); ++i)
        for (std::size_t j = 0; j < full.cols(); ++j)
            for (std::size_t a = 0; a < full.rows(); ++a)
                for (std::size_t b = 0; b < full.cols(); ++b)
                    product(i, j) += Rational(p1(i, a) * p2(b, j)) * full(a, b);
    CHECK(product == bd.permuted);
}

TEST_CASE("block decomposition edge cases") {
    const auto sys = make_system(3, {{1}}, {{1, 2}, {2, 3}}, {1, 3});
    const SystemGraph g(sys);
    const auto dec = *classify(g).decomposition;
    const auto rs = realize(sys, 1, 0);
    const auto bd = block_decompose(dec, g, sys.targets, rs, 3);
    REQUIRE(bd.blocks.size() == 1);
    for (const auto& row : bd.blocks[0].rows) CHECK(row.type == RowType::canonical);
    CHECK_THROWS_AS(block_decompose(dec, g, sys.targets, rs, 2), DomainError);

    // Only class 1 holds targets: even walk lengths become zero columns.
    const auto ex1 = fixtures::two_cycle_tree({1, 3});
    const SystemGraph g1(ex1);
    const auto d1 = *classify(g1).decomposition;
    const auto bd1 = block_decompose(d1, g1, ex1.targets, realize(ex1, 2, 0), 6);
    CHECK(bd1.zero_columns == std::vector<std::size_t>{1, 3, 5});
    CHECK(default_block_k(d1, ex1.targets) == 6);

    const auto mixed = fixtures::mixed_cycles();
    const SystemGraph g2(mixed);
    auto ct = check_christmas(g2, simple_cycles(g2));
    CHECK_THROWS_AS(block_decompose(*ct.decomposition, g2, {1}, realize(mixed, 0, 0), 16), PreconditionError);
}
