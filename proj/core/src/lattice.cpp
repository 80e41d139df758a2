#include "clutterlab/lattice.hpp"

#include <algorithm>
#include <utility>

namespace clutterlab {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntegerMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::submatrix(const std::vector<int>& row_idx,
                                       const std::vector<int>& col_idx) const {
    IntegerMatrix s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
    return s;
}

bool IntegerMatrix::is_zero() const {
    for (const Int& x : data_)
        if (x != 0) return false;
    return true;
}

Int SmithForm::delta(int k) const {
    Int d = 1;
    for (int i = 0; i < k; ++i) d *= invariant_factors[static_cast<std::size_t>(i)];
    return d;
}

bool SmithForm::all_ones() const {
    return std::all_of(invariant_factors.begin(), invariant_factors.end(),
                       [](const Int& d) { return d == 1; });
}

int rank_rational(const IntegerMatrix& m) {
    // Bareiss fraction-free elimination.
    IntegerMatrix a = m;
    int rows = a.rows(), cols = a.cols();
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = col + 1; j < cols; ++j)
                a.at(r, j) = (a.at(rank, col) * a.at(r, j) - a.at(r, col) * a.at(rank, j)) / prev;
            a.at(r, col) = 0;
        }
        prev = a.at(rank, col);
        ++rank;
    }
    return rank;
}

namespace {

// Position of the minimal nonzero |entry| in the active block, ties row-major.
std::pair<int, int> min_pivot(const IntegerMatrix& a, int from) {
    int pr = -1, pc = -1;
    Int best = 0;
    for (int r = from; r < a.rows(); ++r)
        for (int c = from; c < a.cols(); ++c) {
            if (a.at(r, c) == 0) continue;
            Int v = abs(a.at(r, c));
            if (pr < 0 || v < best) {
                best = v;
                pr = r;
                pc = c;
            }
        }
    return {pr, pc};
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix a) {
    std::vector<Int> factors;
    int k = 0;
    int limit = std::min(a.rows(), a.cols());
    while (k < limit) {
        auto [pr, pc] = min_pivot(a, k);
        if (pr < 0) break;
        if (pr != k)
            for (int j = k; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(k, j));
        if (pc != k)
            for (int i = k; i < a.rows(); ++i) std::swap(a.at(i, pc), a.at(i, k));

        bool reduced = true;
        for (int r = k + 1; r < a.rows(); ++r) {
            Int q = a.at(r, k) / a.at(k, k);
            if (q != 0)
                for (int j = k; j < a.cols(); ++j) a.at(r, j) -= q * a.at(k, j);
            if (a.at(r, k) != 0) reduced = false;
        }
        for (int c = k + 1; c < a.cols(); ++c) {
            Int q = a.at(k, c) / a.at(k, k);
            if (q != 0)
                for (int i = k; i < a.rows(); ++i) a.at(i, c) -= q * a.at(i, k);
            if (a.at(k, c) != 0) reduced = false;
        }
        if (!reduced) continue;  // smaller remainders appeared; re-pivot

        // Divisibility: fold any non-divisible entry into the pivot's row.
        bool divisible = true;
        for (int r = k + 1; r < a.rows() && divisible; ++r)
            for (int c = k + 1; c < a.cols() && divisible; ++c)
                if (a.at(r, c) % a.at(k, k) != 0) {
                    for (int j = k; j < a.cols(); ++j) a.at(k, j) += a.at(r, j);
                    divisible = false;
                }
        if (!divisible) continue;

        Int d = abs(a.at(k, k));
        factors.push_back(d);
        ++k;
    }
    return SmithForm{std::move(factors)};
}

Int delta_r(const IntegerMatrix& m) {
    if (m.is_zero()) throw ZeroMatrixError();
    SmithForm s = smith_normal_form(m);
    return s.delta(s.rank());
}

bool group_is_free(const IntegerMatrix& m) {
    return smith_normal_form(m).all_ones();
}

Int determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (a.at(r, k) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int j = k + 1; j < n; ++j)
                a.at(r, j) = (a.at(k, k) * a.at(r, j) - a.at(r, k) * a.at(k, j)) / prev;
            a.at(r, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

}  // namespace clutterlab
