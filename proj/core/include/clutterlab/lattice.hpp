#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "clutterlab/errors.hpp"

namespace clutterlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense arbitrary-precision integer matrix.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
    IntegerMatrix(int rows, int cols, std::vector<Int> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {}

    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);
    static IntegerMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    IntegerMatrix transpose() const;
    IntegerMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
    bool is_zero() const;

    bool operator==(const IntegerMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// Invariant factors d_1 | d_2 | ... | d_r, all positive.
struct SmithForm {
    std::vector<Int> invariant_factors;

    int rank() const { return static_cast<int>(invariant_factors.size()); }
    /// Delta_k = d_1 * ... * d_k, the gcd of all k x k minors.
    Int delta(int k) const;
    bool all_ones() const;
};

/// Rank over the rationals (fraction-free Bareiss elimination).
int rank_rational(const IntegerMatrix& m);

/// Exact integer elimination; pivots on the minimal |entry|, ties row-major.
SmithForm smith_normal_form(IntegerMatrix m);

/// gcd of all nonzero r x r subdeterminants, r = rank(m). Throws ZeroMatrixError on m = 0.
Int delta_r(const IntegerMatrix& m);

/// True iff Z^rows / (column lattice of m) is free, i.e. all invariant factors are 1.
bool group_is_free(const IntegerMatrix& m);

/// Determinant of a square matrix (Bareiss).
Int determinant(const IntegerMatrix& m);

}  // namespace clutterlab
