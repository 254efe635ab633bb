#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "harmcont/matrix.hpp"

namespace harmcont {

namespace detail {

template <class T>
int pick_pivot(const Matrix<T>& a, int col, int from_row) {
    if constexpr (is_exact_backend<T>) {
        for (int i = from_row; i < a.rows(); ++i)
            if (a(i, col) != T(0)) return i;
        return -1;
    } else {
        int best = -1;
        double best_abs = 0.0;
        for (int i = from_row; i < a.rows(); ++i) {
            double v = std::fabs(a(i, col));
            if (v > best_abs) {
                best_abs = v;
                best = i;
            }
        }
        return best;
    }
}

}  // namespace detail

// Solves A X = B by Gaussian elimination (exact pivots on the rational
// backend, partial pivoting on the floating one).
template <class T>
Matrix<T> solve_dense(Matrix<T> a, Matrix<T> b) {
    require(a.square(), Err::InvalidArgument, "solve_dense needs a square system");
    require(a.rows() == b.rows(), Err::InvalidArgument, "solve_dense shape mismatch");
    const int n = a.rows();
    const int m = b.cols();

    for (int col = 0; col < n; ++col) {
        int piv = detail::pick_pivot(a, col, col);
        require(piv >= 0, Err::SingularSystem, "singular system matrix");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            for (int j = 0; j < m; ++j) std::swap(b(piv, j), b(col, j));
        }
        const T inv_head = T(1) / a(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a(i, col) == T(0)) continue;
            T factor = a(i, col) * inv_head;
            a(i, col) = T(0);
            for (int j = col + 1; j < n; ++j) a(i, j) -= factor * a(col, j);
            for (int j = 0; j < m; ++j) b(i, j) -= factor * b(col, j);
        }
    }

    Matrix<T> x(n, m);
    for (int i = n - 1; i >= 0; --i) {
        for (int j = 0; j < m; ++j) {
            T acc = b(i, j);
            for (int k = i + 1; k < n; ++k) acc -= a(i, k) * x(k, j);
            x(i, j) = acc / a(i, i);
        }
    }
    return x;
}

// Exact determinant via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
Rational det_exact(const MatQ& m);

int rank_exact(MatQ m);

Rational minor_det(const MatQ& m, std::span<const int> rows, std::span<const int> cols);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

// Integer Bareiss determinant of the square mpz matrix `a` (row-major,
// dim x dim). `a` is clobbered.
mpz_class bareiss_det_inplace(std::vector<mpz_class>& a, int dim);

}  // namespace harmcont
