#pragma once

#include <vector>

#include "harmcont/matrix.hpp"
#include "harmcont/spectral.hpp"
#include "harmcont/strip_network.hpp"

namespace harmcont {

// Weighted graph Laplacian: K_vv = sum of incident conductivities,
// K_vw = -gamma_vw on edges. Symmetric with zero row sums.
struct KirchhoffMatrix {
    MatQ k;

    int vertex_count() const { return k.rows(); }
    void validate() const;
};

// Flattened vertex index for strips, row-major over the grid.
inline int strip_vertex_index(int cols, const Vertex& v) { return (v.r - 1) * cols + (v.c - 1); }

KirchhoffMatrix kirchhoff(const StripNetwork<Rational>& net);

// Outer boundary of a strip: both end columns plus top and bottom rows,
// ascending flattened indices.
std::vector<int> default_boundary(int rows, int cols);

struct DtNMap {
    MatQ lambda;                 // |boundary| x |boundary|
    std::vector<int> boundary;   // flattened vertex ids, ascending
};

// Schur complement of the Kirchhoff matrix onto the boundary block, by
// exact elimination of the interior.
DtNMap dtn_map(const KirchhoffMatrix& k, std::vector<int> boundary);
DtNMap dtn_map(const StripNetwork<Rational>& net, std::vector<int> boundary);
DtNMap dtn_map(const StripNetwork<Rational>& net);  // default boundary

// Side-by-side data product: the certified continuation spectrum next to
// the full boundary map of the same strip. No relation between the two is
// asserted; the report exists to collect data.
struct DtnSpectrumProbe {
    int rows = 0;
    int cols = 0;
    int shift = 0;
    SpectrumReport continuation;
    DtNMap dtn;
};

DtnSpectrumProbe dtn_spectrum_probe(const StripNetwork<Rational>& net, int s);

}  // namespace harmcont
