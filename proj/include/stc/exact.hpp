#ifndef STC_EXACT_HPP
#define STC_EXACT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace stc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Selects the serial reference kernel or its OpenMP counterpart. Both give
/// identical results.
enum class Execution { serial, parallel };

/// Scales every row by the lcm of its denominators; row rank is unchanged.
IntegerMatrix clear_denominators(const RationalMatrix& m);

/// Rank by fraction-free (Bareiss) elimination. Pivot: first nonzero entry in
/// column order. The parallel variant distributes row updates of each step.
int bareiss_rank(IntegerMatrix m, Execution exec = Execution::serial);

/// Exact row rank over the rationals.
int exact_row_rank(const RationalMatrix& m, Execution exec = Execution::serial);

}  // namespace stc

#endif  // STC_EXACT_HPP
