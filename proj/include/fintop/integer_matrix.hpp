#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace fintop {

// Exact arithmetic throughout; no silent wraparound anywhere.
using Integer = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major. Sizes here are tiny (boundary matrices of
// order complexes of desk-scale posets), so no sparsity machinery.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Integer& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Integer& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const IntMat&) const = default;

    IntMat operator*(const IntMat& other) const;
    bool is_zero() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row i += t * row j
    void add_row(int i, int j, const Integer& t);
    // col i += t * col j
    void add_col(int i, int j, const Integer& t);
    void negate_row(int i);
    void negate_col(int i);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> data_;
};

// U * A * V == D with U, V unimodular and D diagonal; `factors` are the
// nonzero diagonal entries d_1 | d_2 | ... and `rank` their count.
struct SmithForm {
    std::vector<Integer> factors;
    int rank = 0;
    IntMat U, V, Uinv, Vinv;
    IntMat D;
};

SmithForm smith_normal_form(const IntMat& A);

// Factors and rank only, without transform bookkeeping. Cheaper; used by the
// homology computations where only ranks and torsion are needed.
struct InvariantFactors {
    std::vector<Integer> factors;
    int rank = 0;
};

InvariantFactors invariant_factors(const IntMat& A);

int integer_rank(const IntMat& A);

// Columns form a basis of { x : A x = 0 }. The kernel of an integer matrix
// is saturated, so this is a genuine lattice basis.
IntMat kernel_basis(const IntMat& A);

// Solve A X = B exactly over the integers; throws InvalidInput when no
// integral solution exists. When A has nontrivial kernel, returns the
// particular solution with zero free coordinates.
IntMat solve_exact(const IntMat& A, const IntMat& B);

// Is b contained in the integer column span of A?
bool in_column_span(const IntMat& A, const std::vector<Integer>& b);

} // namespace fintop
