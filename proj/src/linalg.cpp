#include "harmcont/linalg.hpp"

namespace harmcont {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

mpz_class bareiss_det_inplace(std::vector<mpz_class>& a, int dim) {
    if (dim == 0) return 1;
    auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * dim + j]; };

    int sign = 1;
    mpz_class prev = 1;
    for (int col = 0; col < dim - 1; ++col) {
        if (sgn(at(col, col)) == 0) {
            int piv = -1;
            for (int i = col + 1; i < dim; ++i)
                if (sgn(at(i, col)) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = col; j < dim; ++j) swap(at(col, j), at(piv, j));
            sign = -sign;
        }
        for (int i = col + 1; i < dim; ++i) {
            for (int j = col + 1; j < dim; ++j) {
                mpz_class num = at(i, j) * at(col, col) - at(i, col) * at(col, j);
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, col) = 0;
        }
        prev = at(col, col);
    }
    mpz_class det = at(dim - 1, dim - 1);
    return sign > 0 ? det : mpz_class(-det);
}

namespace {

// Clears each row of m to integers; factors[i] holds the positive multiplier
// applied to row i, so det(m) = bareiss(z) / prod(factors).
void clear_rows(const MatQ& m, std::vector<mpz_class>& z, std::vector<mpz_class>& factors) {
    const int n = m.rows();
    const int c = m.cols();
    z.assign(static_cast<std::size_t>(n) * c, mpz_class(0));
    factors.assign(n, mpz_class(1));
    for (int i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < c; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        factors[i] = l;
        for (int j = 0; j < c; ++j) {
            mpz_class scaled = m(i, j).get_num() * (l / m(i, j).get_den());
            z[static_cast<std::size_t>(i) * c + j] = scaled;
        }
    }
}

}  // namespace

Rational det_exact(const MatQ& m) {
    require(m.square(), Err::InvalidArgument, "determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<mpz_class> z, factors;
    clear_rows(m, z, factors);
    mpz_class det = bareiss_det_inplace(z, n);
    mpz_class denom = 1;
    for (const auto& f : factors) denom *= f;
    return make_rational(det, denom);
}

int rank_exact(MatQ m) {
    const int rows = m.rows();
    const int cols = m.cols();
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int i = row; i < rows; ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = col; j < cols; ++j) swap(m(piv, j), m(row, j));
        const Rational inv_head = Rational(1) / m(row, col);
        for (int i = row + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            Rational factor = m(i, col) * inv_head;
            for (int j = col; j < cols; ++j) m(i, j) -= factor * m(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

Rational minor_det(const MatQ& m, std::span<const int> rows, std::span<const int> cols) {
    require(rows.size() == cols.size(), Err::InvalidArgument, "minor index sets differ in size");
    return det_exact(m.submatrix(rows, cols));
}

}  // namespace harmcont
