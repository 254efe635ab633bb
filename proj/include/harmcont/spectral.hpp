#pragma once

#include <complex>
#include <vector>

#include "harmcont/matrix.hpp"
#include "harmcont/polynomial.hpp"

namespace harmcont {

enum class SpectrumVerdict { AllPositive, NotAllPositive };

inline const char* verdict_name(SpectrumVerdict v) {
    return v == SpectrumVerdict::AllPositive ? "ALL_POSITIVE" : "NOT_ALL_POSITIVE";
}

struct RootIsolation {
    std::vector<RootInterval> intervals;  // one entry per root, multiplicities expanded
    int real_count = 0;                   // real roots counted with multiplicity
    int positive_count = 0;               // certified strictly positive, with multiplicity
    bool zero_is_root = false;
    SpectrumVerdict verdict = SpectrumVerdict::NotAllPositive;
    std::string diagnostic;
};

struct SpectrumReport {
    int dim = 0;
    Polynomial charpoly;  // monic, det(xI - M)
    RootIsolation roots;
    std::vector<std::complex<double>> float_eigenvalues;  // advisory only
    SpectrumVerdict verdict = SpectrumVerdict::NotAllPositive;
    int positive_count = 0;
};

// Monic characteristic polynomial det(xI - M) by the exact
// Faddeev-LeVerrier recurrence.
Polynomial charpoly_exact(const MatQ& m);

// Sturm-based certification that every root is real and strictly positive.
// Intervals are refined to width <= 1e-12 before reporting. The verdict
// never consults floating point.
RootIsolation isolate_positive_roots(const Polynomial& p);

// Dense nonsymmetric eigenvalues, sorted by (real, imag). Advisory output;
// throws on solver non-convergence.
std::vector<std::complex<double>> float_eigenvalues(const MatD& m);

SpectrumReport certify_spectrum(const MatQ& m);

}  // namespace harmcont
