#pragma once

#include <optional>
#include <vector>

#include "harmcont/matrix.hpp"
#include "harmcont/transfer.hpp"

namespace harmcont {

enum class TnnVerdict { TNN, NOT_TNN };

inline const char* verdict_name(TnnVerdict v) { return v == TnnVerdict::TNN ? "TNN" : "NOT_TNN"; }

struct MinorWitness {
    std::vector<int> rows;  // 0-based, ascending
    std::vector<int> cols;
    Rational value;         // negative
};

struct MinorCertificate {
    int dim = 0;
    long long minors_checked = 0;  // C(2n, n) - 1 for an n x n matrix
    Rational min_minor;
    TnnVerdict verdict = TnnVerdict::NOT_TNN;
    std::optional<MinorWitness> witness;  // lexicographically first negative minor
};

// Exhaustive exact total-nonnegativity check over every square submatrix
// with order-preserving index sets. dim <= 10.
MinorCertificate all_minors_nonneg(const MatQ& m);
MinorCertificate all_minors_nonneg(const MatD&) = delete;  // certificates are exact-only

// True iff the step satisfies the elementary-shape invariants and its dense
// form passes all_minors_nonneg. The dense check is the definition; the
// shape check is the fast path, and the two must agree on steps produced by
// advance().
bool is_elementary_nonneg(const StepMatrix<Rational>& step);

// Exact spot-check of the minor product expansion: det(AB) = det(A)det(B),
// plus `samples` random index-set pairs of
//   minor_{I,J}(AB) = sum_K minor_{I,K}(A) * minor_{K,J}(B).
bool cauchy_binet_check(const MatQ& a, const MatQ& b, int samples, std::uint64_t seed);

}  // namespace harmcont
