#include "toricic/exact_linalg.hpp"

#include "toricic/error.hpp"

#include <omp.h>

namespace toricic {

IntMatrix clear_denominators(const RationalMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = m(r, c).get_num() * (scale / m(r, c).get_den());
        }
    }
    return out;
}

namespace {

// Pivot search shared by both eliminations: first nonzero entry at or below
// `row` in column `col`.
std::ptrdiff_t find_pivot(const IntMatrix& m, std::size_t row, std::size_t col) {
    for (std::size_t i = row; i < m.rows(); ++i) {
        if (m(i, col) != 0) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
}

// M(i, j) <- (M(r, c) M(i, j) - M(i, c) M(r, j)) / prev for j > c.
// The division is exact: every entry is a minor of the input. Rows with a
// zero in the pivot column still need the rescale.
void eliminate_row(IntMatrix& m, std::size_t i, std::size_t r, std::size_t c, const Integer& prev, Integer& tmp) {
    const Integer& pivot = m(r, c);
    const Integer factor = m(i, c);
    for (std::size_t j = c + 1; j < m.cols(); ++j) {
        tmp = pivot * m(i, j);
        tmp -= factor * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
    }
    m(i, c) = 0;
}

}  // namespace

std::size_t rank_serial(IntMatrix m) {
    std::size_t r = 0;
    Integer prev = 1;
    Integer tmp;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const auto p = find_pivot(m, r, c);
        if (p < 0) continue;
        m.swap_rows(static_cast<std::size_t>(p), r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            eliminate_row(m, i, r, c, prev, tmp);
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

std::size_t rank_parallel(IntMatrix m) {
    std::size_t r = 0;
    Integer prev = 1;
    const auto rows = static_cast<std::ptrdiff_t>(m.rows());
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const auto p = find_pivot(m, r, c);
        if (p < 0) continue;
        m.swap_rows(static_cast<std::size_t>(p), r);
        const auto first = static_cast<std::ptrdiff_t>(r + 1);
#pragma omp parallel for schedule(dynamic, 4) if (rows - first > 32)
        for (std::ptrdiff_t i = first; i < rows; ++i) {
            Integer tmp;
            eliminate_row(m, static_cast<std::size_t>(i), r, c, prev, tmp);
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

std::size_t rank(const RationalMatrix& m, ExecutionPolicy policy) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    IntMatrix scaled = clear_denominators(m);
    return policy == ExecutionPolicy::Parallel ? rank_parallel(std::move(scaled)) : rank_serial(std::move(scaled));
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::InvariantViolation, "matrix product dimension mismatch");
    }
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

NullspaceBasis nullspace(const RationalMatrix& a) {
    RationalMatrix m = a;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }

    NullspaceBasis basis;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m(k, f);
        basis.vectors.push_back(std::move(v));
        basis.free_columns.push_back(f);
    }
    return basis;
}

}  // namespace toricic
