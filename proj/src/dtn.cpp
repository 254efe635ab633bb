#include "harmcont/dtn.hpp"

#include <algorithm>

#include "harmcont/linalg.hpp"
#include "harmcont/transfer.hpp"

namespace harmcont {

void KirchhoffMatrix::validate() const {
    require(k.square(), Err::InvalidArgument, "Kirchhoff matrix must be square");
    for (int i = 0; i < k.rows(); ++i) {
        Rational row_sum(0);
        for (int j = 0; j < k.cols(); ++j) {
            require(k(i, j) == k(j, i), Err::InvalidArgument, "Kirchhoff matrix not symmetric");
            if (i != j)
                require(sgn(k(i, j)) <= 0, Err::InvalidArgument,
                        "positive off-diagonal in Kirchhoff matrix");
            row_sum += k(i, j);
        }
        require(row_sum == 0, Err::InvalidArgument, "Kirchhoff row sum not zero");
    }
}

KirchhoffMatrix kirchhoff(const StripNetwork<Rational>& net) {
    const int n = net.rows() * net.cols();
    KirchhoffMatrix out{MatQ(n, n)};
    auto add_edge = [&](const Vertex& a, const Vertex& b, const Rational& g) {
        const int ia = strip_vertex_index(net.cols(), a);
        const int ib = strip_vertex_index(net.cols(), b);
        out.k(ia, ia) += g;
        out.k(ib, ib) += g;
        out.k(ia, ib) -= g;
        out.k(ib, ia) -= g;
    };
    for (int r = 1; r <= net.rows(); ++r)
        for (int c = 1; c <= net.cols() - 1; ++c) add_edge({c, r}, {c + 1, r}, net.horiz(c, r));
    for (int r = 1; r <= net.rows() - 1; ++r)
        for (int c = 1; c <= net.cols(); ++c) add_edge({c, r}, {c, r + 1}, net.vert(c, r));
    return out;
}

std::vector<int> default_boundary(int rows, int cols) {
    std::vector<int> out;
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            if (r == 1 || r == rows || c == 1 || c == cols)
                out.push_back(strip_vertex_index(cols, {c, r}));
    std::sort(out.begin(), out.end());
    return out;
}

DtNMap dtn_map(const KirchhoffMatrix& k, std::vector<int> boundary) {
    const int n = k.vertex_count();
    std::sort(boundary.begin(), boundary.end());
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
    require(!boundary.empty(), Err::InvalidArgument, "boundary set is empty");
    for (int b : boundary)
        require(b >= 0 && b < n, Err::InvalidArgument, "boundary vertex out of range");

    std::vector<int> interior;
    {
        std::vector<char> is_boundary(n, 0);
        for (int b : boundary) is_boundary[b] = 1;
        for (int v = 0; v < n; ++v)
            if (!is_boundary[v]) interior.push_back(v);
    }

    const int ni = static_cast<int>(interior.size());

    MatQ k_bb = k.k.submatrix(boundary, boundary);
    if (ni == 0) return {std::move(k_bb), std::move(boundary)};

    MatQ k_ii = k.k.submatrix(interior, interior);
    MatQ k_ib = k.k.submatrix(interior, boundary);
    MatQ k_bi = k.k.submatrix(boundary, interior);

    MatQ x;
    try {
        x = solve_dense(std::move(k_ii), std::move(k_ib));
    } catch (const Error& e) {
        if (e.kind() == Err::SingularSystem)
            fail(Err::SingularInterior,
                 "interior block is singular (interior component not touching the boundary)");
        throw;
    }

    MatQ lambda = k_bb - k_bi * x;
    return {std::move(lambda), std::move(boundary)};
}

DtNMap dtn_map(const StripNetwork<Rational>& net, std::vector<int> boundary) {
    return dtn_map(kirchhoff(net), std::move(boundary));
}

DtNMap dtn_map(const StripNetwork<Rational>& net) {
    return dtn_map(kirchhoff(net), default_boundary(net.rows(), net.cols()));
}

DtnSpectrumProbe dtn_spectrum_probe(const StripNetwork<Rational>& net, int s) {
    DtnSpectrumProbe probe;
    probe.rows = net.rows();
    probe.cols = net.cols();
    probe.shift = s;
    probe.continuation = certify_spectrum(chart_transfer(net, s).matrix);
    probe.dtn = dtn_map(net);
    return probe;
}

}  // namespace harmcont
