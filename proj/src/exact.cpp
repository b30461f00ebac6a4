#include "stc/exact.hpp"

namespace stc {

IntegerMatrix clear_denominators(const RationalMatrix& m) {
    IntegerMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer scale = 1;
        for (const Rational& q : m.row(r)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& q = m(r, c);
            Integer v = scale / q.get_den();
            out(r, c) = v * q.get_num();
        }
    }
    return out;
}

namespace {

// One Bareiss step: eliminate column `col` below pivot row `p`, dividing by the
// previous pivot. Every entry after the update is a minor of the original
// matrix, so the division is exact.
void eliminate_row(IntegerMatrix& m, std::size_t p, std::size_t col, std::size_t i, const Integer& previous) {
    const Integer& pivot = m(p, col);
    const Integer factor = m(i, col);
    Integer tmp;
    for (std::size_t j = col + 1; j < m.cols(); ++j) {
        Integer& entry = m(i, j);
        entry *= pivot;
        tmp = factor * m(p, j);
        entry -= tmp;
        mpz_divexact(entry.get_mpz_t(), entry.get_mpz_t(), previous.get_mpz_t());
    }
    m(i, col) = 0;
}

}  // namespace

int bareiss_rank(IntegerMatrix m, Execution exec) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    Integer previous = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && sgn(m(pivot, col)) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(rank, pivot);

        const auto first = static_cast<long>(rank + 1);
        const auto last = static_cast<long>(rows);
        if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long i = first; i < last; ++i) eliminate_row(m, rank, col, static_cast<std::size_t>(i), previous);
        } else {
            for (long i = first; i < last; ++i) eliminate_row(m, rank, col, static_cast<std::size_t>(i), previous);
        }
        previous = m(rank, col);
        ++rank;
    }
    return static_cast<int>(rank);
}

int exact_row_rank(const RationalMatrix& m, Execution exec) { return bareiss_rank(clear_denominators(m), exec); }

}  // namespace stc
