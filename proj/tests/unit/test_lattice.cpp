#include "doctest.h"

#include "clutterlab/lattice.hpp"
#include "clutterlab/properties.hpp"
#include "clutterlab/qpq.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace clutterlab;

TEST_CASE("rank of identity and zero matrices") {
    CHECK(rank_rational(IntegerMatrix::identity(5)) == 5);
    CHECK(rank_rational(IntegerMatrix(3, 4)) == 0);
}

TEST_CASE("rank of the lifted incidence matrix of the (2,1) starred family") {
    Clutter c = generate_qpq_f(2, 1, FSpec::case_i_all()).clutter();
    CHECK(rank_rational(b_matrix(c)) == 5);
}

TEST_CASE("smith normal form on small diagonals") {
    IntegerMatrix d22 = IntegerMatrix::from_rows({{2, 0}, {0, 2}});
    SmithForm s = smith_normal_form(d22);
    CHECK(s.invariant_factors == std::vector<Int>{2, 2});
    CHECK(s.delta(2) == 4);

    SmithForm id = smith_normal_form(IntegerMatrix::identity(4));
    CHECK(id.all_ones());
    CHECK(id.rank() == 4);
}

TEST_CASE("smith form divisibility chain holds") {
    corpus::Rng rng(41);
    for (int t = 0; t < 30; ++t) {
        int rows = 2 + static_cast<int>(rng.bounded(4));
        int cols = 2 + static_cast<int>(rng.bounded(4));
        IntegerMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = static_cast<long long>(rng.bounded(9)) - 4;
        SmithForm s = smith_normal_form(m);
        CHECK(s.rank() == rank_rational(m));
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            CHECK(s.invariant_factors[i] > 0);
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        }
        for (int k = 1; k <= s.rank(); ++k)
            CHECK(s.delta(k) == oracle::minor_gcd_delta(m, k));
    }
}

TEST_CASE("delta_r on fixed matrices") {
    CHECK(delta_r(IntegerMatrix::from_rows({{2, 0}, {0, 4}})) == 8);
    CHECK_THROWS_AS(delta_r(IntegerMatrix(2, 2)), ZeroMatrixError);
}

TEST_CASE("delta_r is 1 on the augmented families") {
    for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
        Clutter c = generate_qpq_f(p, q, FSpec::case_i_all()).clutter();
        CHECK(delta_r(b_matrix(c)) == 1);
        CHECK(group_is_free(b_matrix(c)));
    }
}

TEST_CASE("freeness from invariant factors") {
    // a single column (2, 0) spans an index-2 sublattice
    CHECK_FALSE(group_is_free(IntegerMatrix::from_rows({{2}, {0}})));
    CHECK(group_is_free(IntegerMatrix::identity(3)));
}

TEST_CASE("determinant via fraction-free elimination") {
    CHECK(determinant(IntegerMatrix::from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(determinant(IntegerMatrix::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == 30);
    CHECK(determinant(IntegerMatrix::from_rows({{1, 1}, {1, 1}})) == 0);
    CHECK(determinant(IntegerMatrix::identity(0)) == 1);

    corpus::Rng rng(43);
    for (int t = 0; t < 20; ++t) {
        IntegerMatrix m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = static_cast<long long>(rng.bounded(11)) - 5;
        // cofactor expansion as an independent route
        auto minor2 = [&](int r0, int c0) -> Int {
            std::vector<int> rows, cols;
            for (int i = 0; i < 3; ++i)
                if (i != r0) rows.push_back(i);
            for (int j = 0; j < 3; ++j)
                if (j != c0) cols.push_back(j);
            IntegerMatrix s = m.submatrix(rows, cols);
            return Int(s.at(0, 0) * s.at(1, 1) - s.at(0, 1) * s.at(1, 0));
        };
        Int expected = m.at(0, 0) * minor2(0, 0) - m.at(0, 1) * minor2(0, 1) +
                       m.at(0, 2) * minor2(0, 2);
        CHECK(determinant(m) == expected);
    }
}

TEST_CASE("transpose and submatrix") {
    IntegerMatrix m = IntegerMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
    IntegerMatrix t = m.transpose();
    CHECK(t.rows() == 3);
    CHECK(t.at(2, 1) == 6);
    IntegerMatrix s = m.submatrix({1}, {0, 2});
    CHECK(s.at(0, 0) == 4);
    CHECK(s.at(0, 1) == 6);
}
