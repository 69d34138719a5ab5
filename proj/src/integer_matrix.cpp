#include "fintop/integer_matrix.hpp"

#include "fintop/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace fintop {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& other) const {
    if (cols_ != other.rows_) throw std::logic_error("IntMat: dimension mismatch in product");
    IntMat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Integer& b = other(k, j);
                if (b != 0) out(i, j) += a * b;
            }
        }
    return out;
}

bool IntMat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMat::add_row(int i, int j, const Integer& t) {
    if (t == 0) return;
    for (int c = 0; c < cols_; ++c) (*this)(i, c) += t * (*this)(j, c);
}

void IntMat::add_col(int i, int j, const Integer& t) {
    if (t == 0) return;
    for (int r = 0; r < rows_; ++r) (*this)(r, i) += t * (*this)(r, j);
}

void IntMat::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMat::negate_col(int i) {
    for (int r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
}

namespace {

Integer abs_val(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// Shared diagonalization loop. When `transforms` is non-null, every
// elementary operation is mirrored into U/V and their inverses, maintaining
// D == U*A*V, Uinv == U^-1, Vinv == V^-1.
struct Transforms {
    IntMat U, V, Uinv, Vinv;
};

void diagonalize(IntMat& D, Transforms* t) {
    const int m = D.rows();
    const int n = D.cols();
    const int steps = std::min(m, n);

    auto row_swap = [&](int i, int j) {
        D.swap_rows(i, j);
        if (t) {
            t->U.swap_rows(i, j);
            t->Uinv.swap_cols(i, j);
        }
    };
    auto col_swap = [&](int i, int j) {
        D.swap_cols(i, j);
        if (t) {
            t->V.swap_cols(i, j);
            t->Vinv.swap_rows(i, j);
        }
    };
    auto row_add = [&](int i, int j, const Integer& f) { // row i += f * row j
        D.add_row(i, j, f);
        if (t) {
            t->U.add_row(i, j, f);
            t->Uinv.add_col(j, i, -f);
        }
    };
    auto col_add = [&](int i, int j, const Integer& f) { // col i += f * col j
        D.add_col(i, j, f);
        if (t) {
            t->V.add_col(i, j, f);
            t->Vinv.add_row(j, i, -f);
        }
    };
    auto row_negate = [&](int i) {
        D.negate_row(i);
        if (t) {
            t->U.negate_row(i);
            t->Uinv.negate_col(i);
        }
    };

    for (int s = 0; s < steps; ++s) {
        for (;;) {
            // Smallest-magnitude nonzero pivot in the trailing submatrix.
            int pi = -1, pj = -1;
            Integer best;
            for (int i = s; i < m; ++i)
                for (int j = s; j < n; ++j) {
                    const Integer& v = D(i, j);
                    if (v == 0) continue;
                    Integer a = abs_val(v);
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) return; // trailing submatrix is zero
            row_swap(s, pi);
            col_swap(s, pj);

            bool dirty = false;
            for (int i = s + 1; i < m; ++i) {
                if (D(i, s) == 0) continue;
                Integer q = D(i, s) / D(s, s);
                row_add(i, s, -q);
                if (D(i, s) != 0) dirty = true;
            }
            for (int j = s + 1; j < n; ++j) {
                if (D(s, j) == 0) continue;
                Integer q = D(s, j) / D(s, s);
                col_add(j, s, -q);
                if (D(s, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot row/column clear; enforce divisibility on the rest.
            bool divides = true;
            for (int i = s + 1; i < m && divides; ++i)
                for (int j = s + 1; j < n; ++j)
                    if (D(i, j) % D(s, s) != 0) {
                        row_add(s, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D(s, s) < 0) row_negate(s);
    }
}

} // namespace

SmithForm smith_normal_form(const IntMat& A) {
    SmithForm out;
    out.D = A;
    Transforms t{IntMat::identity(A.rows()), IntMat::identity(A.cols()),
                 IntMat::identity(A.rows()), IntMat::identity(A.cols())};
    diagonalize(out.D, &t);
    out.U = std::move(t.U);
    out.V = std::move(t.V);
    out.Uinv = std::move(t.Uinv);
    out.Vinv = std::move(t.Vinv);
    const int steps = std::min(A.rows(), A.cols());
    for (int s = 0; s < steps; ++s)
        if (out.D(s, s) != 0) out.factors.push_back(out.D(s, s));
    out.rank = static_cast<int>(out.factors.size());
    return out;
}

InvariantFactors invariant_factors(const IntMat& A) {
    IntMat D = A;
    diagonalize(D, nullptr);
    InvariantFactors out;
    const int steps = std::min(A.rows(), A.cols());
    for (int s = 0; s < steps; ++s)
        if (D(s, s) != 0) out.factors.push_back(D(s, s));
    out.rank = static_cast<int>(out.factors.size());
    return out;
}

int integer_rank(const IntMat& A) { return invariant_factors(A).rank; }

IntMat kernel_basis(const IntMat& A) {
    SmithForm snf = smith_normal_form(A);
    const int n = A.cols();
    IntMat K(n, n - snf.rank);
    for (int j = snf.rank; j < n; ++j)
        for (int i = 0; i < n; ++i) K(i, j - snf.rank) = snf.V(i, j);
    return K;
}

IntMat solve_exact(const IntMat& A, const IntMat& B) {
    if (A.rows() != B.rows()) throw std::logic_error("solve_exact: row mismatch");
    SmithForm snf = smith_normal_form(A);
    IntMat C = snf.U * B;
    IntMat Y(A.cols(), B.cols());
    for (int j = 0; j < B.cols(); ++j) {
        for (int i = 0; i < A.rows(); ++i) {
            if (i < snf.rank) {
                if (C(i, j) % snf.factors[i] != 0)
                    throw InvalidInput("solve_exact: no integral solution");
                if (i < A.cols()) Y(i, j) = C(i, j) / snf.factors[i];
            } else if (C(i, j) != 0) {
                throw InvalidInput("solve_exact: inconsistent system");
            }
        }
    }
    return snf.V * Y;
}

bool in_column_span(const IntMat& A, const std::vector<Integer>& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw std::logic_error("in_column_span: size mismatch");
    SmithForm snf = smith_normal_form(A);
    std::vector<Integer> c(A.rows());
    for (int i = 0; i < A.rows(); ++i)
        for (int k = 0; k < A.rows(); ++k)
            if (snf.U(i, k) != 0 && b[k] != 0) c[i] += snf.U(i, k) * b[k];
    for (int i = 0; i < A.rows(); ++i) {
        if (i < snf.rank) {
            if (c[i] % snf.factors[i] != 0) return false;
        } else if (c[i] != 0) {
            return false;
        }
    }
    return true;
}

} // namespace fintop
