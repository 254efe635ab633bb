#include "harmcont/spectral.hpp"

#include <algorithm>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "harmcont/errors.hpp"

namespace harmcont {

Polynomial charpoly_exact(const MatQ& m) {
    require(m.square(), Err::InvalidArgument, "characteristic polynomial of non-square matrix");
    const int n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    MatQ mk = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            MatQ shifted = mk;
            for (int i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
            mk = m * shifted;
        }
        c[n - k] = -mk.trace() / Rational(k);
    }
    return Polynomial(std::move(c));
}

namespace {

const Rational& report_width() {
    static const Rational w(mpz_class(1), mpz_class("1000000000000"));  // 1e-12
    return w;
}

}  // namespace

RootIsolation isolate_positive_roots(const Polynomial& p) {
    require(!p.is_zero(), Err::InvalidArgument, "zero polynomial");
    RootIsolation out;
    const int degree = p.degree();
    if (degree == 0) {
        out.verdict = SpectrumVerdict::AllPositive;  // vacuously: no roots demanded
        out.diagnostic = "constant polynomial";
        return out;
    }

    // roots at zero come off as a plain power of x
    int zero_mult = 0;
    while (p.coeff(zero_mult) == 0) ++zero_mult;
    Polynomial reduced = p;
    if (zero_mult > 0) {
        out.zero_is_root = true;
        std::vector<Rational> shifted(p.coeffs().begin() + zero_mult, p.coeffs().end());
        reduced = Polynomial(std::move(shifted));
        for (int i = 0; i < zero_mult; ++i) out.intervals.push_back({Rational(0), Rational(0), 1});
        out.real_count += zero_mult;
    }

    if (reduced.degree() > 0) {
        for (const auto& sf : squarefree_decomposition(reduced)) {
            for (const RootInterval& iv : isolate_real_roots(sf.factor, report_width())) {
                bool positive;
                if (iv.exact()) {
                    positive = sgn(iv.lo) > 0;
                } else {
                    // squarefree factor has no root at 0 here, so bisection
                    // settles the sign of the bracket
                    RootInterval t = iv;
                    const Polynomial& q = sf.factor;
                    while (sgn(t.lo) <= 0 && sgn(t.hi) >= 0) {
                        Rational mid = t.midpoint();
                        int sm = q.sign_at(mid);
                        if (sm == 0) {
                            t.lo = t.hi = mid;
                            break;
                        }
                        if (sm == q.sign_at(t.lo))
                            t.lo = mid;
                        else
                            t.hi = mid;
                    }
                    positive = sgn(t.lo) > 0;
                }
                for (int i = 0; i < sf.multiplicity; ++i) {
                    out.intervals.push_back({iv.lo, iv.hi, 1});
                    out.real_count += 1;
                    if (positive) out.positive_count += 1;
                }
            }
        }
    }

    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const RootInterval& a, const RootInterval& b) {
                  return a.midpoint() < b.midpoint();
              });

    if (out.real_count < degree) {
        out.verdict = SpectrumVerdict::NotAllPositive;
        out.diagnostic = "only " + std::to_string(out.real_count) + " of " +
                         std::to_string(degree) + " roots are real";
    } else if (out.zero_is_root) {
        out.verdict = SpectrumVerdict::NotAllPositive;
        out.diagnostic = "zero is a root";
    } else if (out.positive_count < degree) {
        out.verdict = SpectrumVerdict::NotAllPositive;
        out.diagnostic = "negative real root present";
    } else {
        out.verdict = SpectrumVerdict::AllPositive;
    }
    return out;
}

std::vector<std::complex<double>> float_eigenvalues(const MatD& m) {
    require(m.square(), Err::InvalidArgument, "eigenvalues of non-square matrix");
    const int n = m.rows();
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
    require(solver.info() == Eigen::Success, Err::NumericFailure,
            "dense eigensolver did not converge");
    std::vector<std::complex<double>> out(n);
    for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return out;
}

SpectrumReport certify_spectrum(const MatQ& m) {
    require(m.square(), Err::InvalidArgument, "spectrum of non-square matrix");
    SpectrumReport report;
    report.dim = m.rows();
    report.charpoly = charpoly_exact(m);
    report.roots = isolate_positive_roots(report.charpoly);
    report.float_eigenvalues = float_eigenvalues(matrix_to_double(m));
    report.verdict = report.roots.verdict;
    report.positive_count = report.roots.positive_count;
    return report;
}

}  // namespace harmcont
