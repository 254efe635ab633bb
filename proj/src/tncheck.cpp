#include "harmcont/tncheck.hpp"

#include "harmcont/linalg.hpp"

namespace harmcont {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

// Minor evaluator over a denominator-cleared integer copy. The minor over
// rows I equals the integer determinant divided by the product of the row
// clearing factors, which keeps the inner loop in mpz arithmetic.
class MinorEvaluator {
public:
    explicit MinorEvaluator(const MatQ& m) : n_(m.rows()) {
        z_.resize(static_cast<std::size_t>(n_) * n_);
        row_factor_.resize(n_);
        for (int i = 0; i < n_; ++i) {
            mpz_class l = 1;
            for (int j = 0; j < n_; ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
            row_factor_[i] = l;
            for (int j = 0; j < n_; ++j)
                z_[static_cast<std::size_t>(i) * n_ + j] = m(i, j).get_num() * (l / m(i, j).get_den());
        }
        work_.resize(static_cast<std::size_t>(n_) * n_);
    }

    // determinant numerator and the positive denominator it is scaled by
    void minor(std::span<const int> rows, std::span<const int> cols, mpz_class& num,
               mpz_class& den) {
        const int k = static_cast<int>(rows.size());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                work_[static_cast<std::size_t>(i) * k + j] =
                    z_[static_cast<std::size_t>(rows[i]) * n_ + cols[j]];
        num = bareiss_det_inplace(work_, k);
        den = 1;
        for (int i = 0; i < k; ++i) den *= row_factor_[rows[i]];
    }

private:
    int n_;
    std::vector<mpz_class> z_;
    std::vector<mpz_class> row_factor_;
    std::vector<mpz_class> work_;
};

}  // namespace

MinorCertificate all_minors_nonneg(const MatQ& m) {
    require(m.square(), Err::InvalidArgument, "minor certificate needs a square matrix");
    const int n = m.rows();
    require(n >= 1, Err::InvalidArgument, "empty matrix");
    require(n <= 10, Err::BudgetExceeded, "minor enumeration is limited to dim <= 10");

    MinorCertificate cert;
    cert.dim = n;

    MinorEvaluator eval(m);
    mpz_class num, den;
    // running minimum as an unreduced fraction min_num/min_den, min_den > 0
    mpz_class min_num = 0, min_den = 1;
    bool have_min = false;

    for (int k = 1; k <= n; ++k) {
        const auto idx = combinations(n, k);
        for (const auto& rows : idx) {
            for (const auto& cols : idx) {
                eval.minor(rows, cols, num, den);
                ++cert.minors_checked;
                // num/den < min_num/min_den  <=>  num*min_den < min_num*den
                if (!have_min || num * min_den < min_num * den) {
                    min_num = num;
                    min_den = den;
                    have_min = true;
                }
                if (sgn(num) < 0 && !cert.witness) {
                    cert.witness = MinorWitness{rows, cols, make_rational(num, den)};
                }
            }
        }
    }

    cert.min_minor = make_rational(min_num, min_den);
    cert.verdict = cert.witness ? TnnVerdict::NOT_TNN : TnnVerdict::TNN;

    const long long expected = binomial(2 * n, n) - 1;
    require(cert.minors_checked == expected, Err::InternalError, "minor enumeration miscount");
    return cert;
}

bool is_elementary_nonneg(const StepMatrix<Rational>& step) {
    if (!step.shape_ok()) return false;
    return all_minors_nonneg(step.dense()).verdict == TnnVerdict::TNN;
}

bool cauchy_binet_check(const MatQ& a, const MatQ& b, int samples, std::uint64_t seed) {
    require(a.square() && b.square() && a.rows() == b.rows(), Err::InvalidArgument,
            "Cauchy-Binet check needs square matrices of equal dimension");
    const int n = a.rows();
    const MatQ ab = a * b;

    if (det_exact(ab) != det_exact(a) * det_exact(b)) return false;

    SeededRng rng(seed);
    for (int s = 0; s < samples; ++s) {
        const int k = 1 + static_cast<int>(rng.next_below(n));
        const auto subsets = combinations(n, k);
        const auto& rows = subsets[rng.next_below(subsets.size())];
        const auto& cols = subsets[rng.next_below(subsets.size())];

        Rational lhs = minor_det(ab, rows, cols);
        Rational rhs(0);
        for (const auto& mid : subsets) rhs += minor_det(a, rows, mid) * minor_det(b, mid, cols);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace harmcont
