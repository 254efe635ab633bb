#pragma once

#include <vector>

#include "harmcont/linalg.hpp"
#include "harmcont/strip_network.hpp"

namespace harmcont {

// Values on the first two columns; they determine a harmonic field on the
// whole strip.
template <class T>
struct CauchyData {
    std::vector<T> col1;
    std::vector<T> col2;

    CauchyData(int rows) : col1(rows, T(0)), col2(rows, T(0)) {}
    CauchyData(std::vector<T> c1, std::vector<T> c2) : col1(std::move(c1)), col2(std::move(c2)) {
        require(col1.size() == col2.size(), Err::InvalidArgument,
                "Cauchy columns differ in length");
    }

    int rows() const { return static_cast<int>(col1.size()); }
    bool operator==(const CauchyData&) const = default;
};

// Solves the harmonicity balance at v for its single undefined neighbor and
// returns that value. Exactly one neighbor of v may be undefined.
template <class T>
T continue_vertex(const StripNetwork<T>& net, const PotentialField<T>& u, const Vertex& v) {
    require(u.defined(v), Err::MissingData, "center vertex value undefined");
    Vertex unknown{0, 0};
    int unknown_count = 0;
    for (const Vertex& w : net.neighbors(v)) {
        if (!u.defined(w)) {
            unknown = w;
            ++unknown_count;
        }
    }
    require(unknown_count == 1, Err::IllPosedStep,
            "expected exactly one undefined neighbor, found " + std::to_string(unknown_count));

    const T& uv = u.at(v);
    T acc(0);
    for (const Vertex& w : net.neighbors(v)) {
        if (w == unknown) continue;
        acc += net.edge_conductivity(v, w) * (uv - u.at(w));
    }
    return uv + acc / net.edge_conductivity(v, unknown);
}

// Harmonic continuation by single-vertex elimination: column k+1 is produced
// from the balances at column k, bottom row first.
template <class T>
PotentialField<T> march(const StripNetwork<T>& net, const CauchyData<T>& data) {
    require(data.rows() == net.rows(), Err::InvalidArgument, "Cauchy data rows mismatch");
    PotentialField<T> u(net.rows(), net.cols());
    for (int r = 1; r <= net.rows(); ++r) {
        u.set({1, r}, data.col1[r - 1]);
        u.set({2, r}, data.col2[r - 1]);
    }
    for (int k = 2; k <= net.cols() - 1; ++k)
        for (int r = 1; r <= net.rows(); ++r) u.set({k + 1, r}, continue_vertex(net, u, {k, r}));
    return u;
}

// Independent oracle: assembles "residual = 0 at every vertex of columns
// 2..C-1 with columns 1..2 pinned" as one dense system and solves it by
// generic elimination, with no knowledge of the marching order.
template <class T>
PotentialField<T> oracle_march(const StripNetwork<T>& net, const CauchyData<T>& data) {
    require(data.rows() == net.rows(), Err::InvalidArgument, "Cauchy data rows mismatch");
    const int rows = net.rows();
    const int cols = net.cols();
    const int unknowns = rows * (cols - 2);

    PotentialField<T> u(rows, cols);
    for (int r = 1; r <= rows; ++r) {
        u.set({1, r}, data.col1[r - 1]);
        u.set({2, r}, data.col2[r - 1]);
    }
    if (unknowns == 0) return u;

    auto unknown_index = [rows](const Vertex& v) { return (v.c - 3) * rows + (v.r - 1); };

    Matrix<T> a(unknowns, unknowns);
    Matrix<T> b(unknowns, 1);
    int eq = 0;
    for (int k = 2; k <= cols - 1; ++k) {
        for (int r = 1; r <= rows; ++r, ++eq) {
            const Vertex v{k, r};
            T diag(0);
            for (const Vertex& w : net.neighbors(v)) {
                const T g = net.edge_conductivity(v, w);
                diag += g;
                if (w.c >= 3) {
                    a(eq, unknown_index(w)) -= g;
                } else {
                    b(eq, 0) += g * u.at(w);
                }
            }
            if (v.c >= 3) {
                a(eq, unknown_index(v)) += diag;
            } else {
                b(eq, 0) -= diag * u.at(v);
            }
        }
    }

    Matrix<T> x;
    try {
        x = solve_dense(a, b);
    } catch (const Error& e) {
        if (e.kind() == Err::SingularSystem)
            fail(Err::InternalError, "continuation system unexpectedly singular");
        throw;
    }
    for (int k = 3; k <= cols; ++k)
        for (int r = 1; r <= rows; ++r) u.set({k, r}, x(unknown_index({k, r}), 0));
    return u;
}

// Random Cauchy data with entries of either sign, magnitudes in [lo, hi].
template <class T>
CauchyData<T> random_cauchy(int rows, SeededRng& rng, const Rational& lo, const Rational& hi) {
    auto draw = [&rng, &lo, &hi] {
        Rational v = random_rational_in(rng, lo, hi);
        return rng.next_bool() ? v : Rational(-v);
    };
    CauchyData<T> d(rows);
    for (int r = 0; r < rows; ++r) {
        d.col1[r] = scalar_from_rational<T>(draw());
        d.col2[r] = scalar_from_rational<T>(draw());
    }
    return d;
}

}  // namespace harmcont
