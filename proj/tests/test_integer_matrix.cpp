#include "fintop/integer_matrix.hpp"

#include "fintop/errors.hpp"

#include "doctest.h"

#include <numeric>
#include <random>

using namespace fintop;

namespace {

IntMat from_rows(const std::vector<std::vector<long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    return m;
}

Integer gcd_of_entries(const IntMat& m) {
    Integer g = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) g = boost::multiprecision::gcd(g, m(i, j));
    return g;
}

Integer det2(const IntMat& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

IntMat random_matrix(std::mt19937_64& rng, int rows, int cols, int span) {
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(rng() % (2 * span + 1)) - span;
    return m;
}

void random_unimodular_ops(std::mt19937_64& rng, IntMat& m, int count) {
    for (int k = 0; k < count; ++k) {
        const int what = static_cast<int>(rng() % 4);
        const Integer t = static_cast<long>(rng() % 5) - 2;
        if (m.rows() >= 2 && what == 0)
            m.swap_rows(static_cast<int>(rng() % m.rows()), static_cast<int>(rng() % m.rows()));
        else if (m.cols() >= 2 && what == 1)
            m.swap_cols(static_cast<int>(rng() % m.cols()), static_cast<int>(rng() % m.cols()));
        else if (m.rows() >= 2 && what == 2) {
            int i = static_cast<int>(rng() % m.rows()), j = static_cast<int>(rng() % m.rows());
            if (i != j) m.add_row(i, j, t);
        } else if (m.cols() >= 2) {
            int i = static_cast<int>(rng() % m.cols()), j = static_cast<int>(rng() % m.cols());
            if (i != j) m.add_col(i, j, t);
        }
    }
}

} // namespace

TEST_CASE("smith normal form of the identity") {
    auto snf = smith_normal_form(IntMat::identity(2));
    CHECK(snf.factors == std::vector<Integer>{1, 1});
    CHECK(snf.rank == 2);
}

TEST_CASE("smith normal form of diag(2,3) against the gcd/det oracle") {
    IntMat m = from_rows({{2, 0}, {0, 3}});
    auto snf = smith_normal_form(m);
    REQUIRE(snf.factors.size() == 2);
    // d1 = gcd of all entries; d1*d2 = |det|.
    CHECK(snf.factors[0] == gcd_of_entries(m));
    CHECK(snf.factors[0] * snf.factors[1] == boost::multiprecision::abs(det2(m)));
    CHECK(snf.factors == std::vector<Integer>{1, 6});
}

TEST_CASE("smith normal form of the zero matrix") {
    auto snf = smith_normal_form(IntMat(3, 2));
    CHECK(snf.factors.empty());
    CHECK(snf.rank == 0);
}

TEST_CASE("smith transforms reconstruct the diagonal and invert exactly") {
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 5);
        const int c = 1 + static_cast<int>(rng() % 5);
        IntMat a = random_matrix(rng, r, c, 6);
        auto snf = smith_normal_form(a);
        CHECK(snf.U * a * snf.V == snf.D);
        CHECK(snf.U * snf.Uinv == IntMat::identity(r));
        CHECK(snf.V * snf.Vinv == IntMat::identity(c));
        for (std::size_t i = 0; i + 1 < snf.factors.size(); ++i)
            CHECK(snf.factors[i + 1] % snf.factors[i] == 0);
    }
}

TEST_CASE("invariant factors survive random unimodular operations") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 4);
        const int c = 1 + static_cast<int>(rng() % 4);
        IntMat a = random_matrix(rng, r, c, 4);
        auto before = invariant_factors(a);
        IntMat b = a;
        random_unimodular_ops(rng, b, 12);
        auto after = invariant_factors(b);
        CHECK(before.factors == after.factors);
        CHECK(before.rank == after.rank);
    }
}

TEST_CASE("kernel basis spans the kernel") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 4);
        const int c = 1 + static_cast<int>(rng() % 5);
        IntMat a = random_matrix(rng, r, c, 3);
        IntMat k = kernel_basis(a);
        CHECK((a * k).is_zero());
        CHECK(integer_rank(a) + k.cols() == a.cols());
        // Basis columns are independent: full column rank.
        CHECK(integer_rank(k) == k.cols());
    }
}

TEST_CASE("solve_exact round-trips independent-column systems") {
    std::mt19937_64 rng(4242);
    int done = 0;
    while (done < 25) {
        const int r = 2 + static_cast<int>(rng() % 4);
        const int c = 1 + static_cast<int>(rng() % r);
        IntMat a = random_matrix(rng, r, c, 4);
        if (integer_rank(a) != c) continue;
        IntMat x = random_matrix(rng, c, 2, 5);
        IntMat solved = solve_exact(a, a * x);
        CHECK(solved == x);
        ++done;
    }
}

TEST_CASE("solve_exact rejects systems without integral solutions") {
    IntMat a = from_rows({{2}, {0}});
    CHECK_THROWS_AS(solve_exact(a, from_rows({{1}, {0}})), InvalidInput);
    CHECK_THROWS_AS(solve_exact(a, from_rows({{0}, {1}})), InvalidInput);
}

TEST_CASE("column span membership") {
    IntMat a = from_rows({{2, 0}, {0, 1}});
    CHECK(in_column_span(a, {4, 3}));
    CHECK_FALSE(in_column_span(a, {1, 0}));
}
