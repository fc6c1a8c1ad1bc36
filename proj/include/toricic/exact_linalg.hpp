#pragma once

#include "toricic/rational.hpp"

#include <cstddef>
#include <vector>

namespace toricic {

enum class ExecutionPolicy { Serial, Parallel };

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    bool is_zero() const {
        for (const auto& x : data_) {
            if (x != 0) return false;
        }
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Scales every row by the lcm of its denominators. Row space (and rank) is unchanged.
IntMatrix clear_denominators(const RationalMatrix& m);

/// Fraction-free (Bareiss) elimination to row echelon form; returns the rank.
/// Reference implementation, one thread.
std::size_t rank_serial(IntMatrix m);

/// Same elimination with the row updates of each pivot step split across
/// OpenMP threads.
std::size_t rank_parallel(IntMatrix m);

std::size_t rank(const RationalMatrix& m, ExecutionPolicy policy = ExecutionPolicy::Serial);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// Basis of {x : A x = 0} read off the reduced row echelon form of A. Basis
/// vector i has a 1 in column free_columns[i] and 0 in every other free
/// column, so coordinates of a kernel vector are its entries at free_columns.
struct NullspaceBasis {
    std::vector<std::vector<Rational>> vectors;
    std::vector<std::size_t> free_columns;
};

NullspaceBasis nullspace(const RationalMatrix& a);

}  // namespace toricic
