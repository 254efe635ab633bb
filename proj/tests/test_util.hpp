#pragma once

// Shared helpers for the unit tests, including small independent oracles
// that deliberately avoid the library's production code paths.

#include <vector>

#include "harmcont/linalg.hpp"
#include "harmcont/matrix.hpp"
#include "harmcont/polynomial.hpp"
#include "harmcont/scalar.hpp"
#include "harmcont/strip_network.hpp"

namespace hctest {

using harmcont::MatQ;
using harmcont::Polynomial;
using harmcont::Rational;

inline Rational Q(const std::string& text) { return harmcont::parse_rational(text); }

inline MatQ mat(int rows, int cols, const std::vector<std::string>& entries) {
    MatQ m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Q(entries[i * cols + j]);
    return m;
}

// Cofactor-expansion determinant: an independent check on the fraction-free
// elimination path.
inline Rational naive_det(const MatQ& m) {
    const int n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);
    Rational acc(0);
    std::vector<int> rows, cols;
    for (int i = 1; i < n; ++i) rows.push_back(i);
    for (int p = 0; p < n; ++p) {
        if (m(0, p) == 0) continue;
        cols.clear();
        for (int j = 0; j < n; ++j)
            if (j != p) cols.push_back(j);
        Rational term = m(0, p) * naive_det(m.submatrix(rows, cols));
        acc += (p % 2 == 0) ? term : Rational(-term);
    }
    return acc;
}

// Characteristic polynomial by Lagrange interpolation of det(xI - M) at
// x = 0..n: independent of the Faddeev-LeVerrier recurrence.
inline Polynomial charpoly_by_interpolation(const MatQ& m) {
    const int n = m.rows();
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= n; ++t) {
        MatQ shifted = m;
        for (int i = 0; i < n; ++i) shifted(i, i) -= Rational(t);
        // det(tI - M) = (-1)^n det(M - tI)
        Rational d = naive_det(shifted);
        if (n % 2 != 0) d = -d;
        xs.push_back(Rational(t));
        ys.push_back(d);
    }
    Polynomial acc;
    for (int i = 0; i <= n; ++i) {
        Polynomial term = Polynomial::constant(ys[i]);
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            term = term * Polynomial({-xs[j], Rational(1)}).scaled(Rational(1) / (xs[i] - xs[j]));
        }
        acc = acc + term;
    }
    return acc;
}

inline MatQ random_matrix(harmcont::SeededRng& rng, int n, int max_den = 8) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = harmcont::random_rational_in(rng, Q("1/8"), Q("8"), max_den);
            m(i, j) = rng.next_bool() ? v : Rational(-v);
        }
    return m;
}

inline harmcont::StripNetwork<Rational> random_net(int rows, int cols, std::uint64_t seed) {
    return harmcont::build_random<Rational>(rows, cols, seed, Q("1/8"), Q("8"));
}

}  // namespace hctest
