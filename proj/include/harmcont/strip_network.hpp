#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "harmcont/errors.hpp"
#include "harmcont/scalar.hpp"

namespace harmcont {

// Grid coordinates are 1-based, column first: (c, r) with 1 <= c <= cols,
// 1 <= r <= rows. Row 1 is the bottom of the strip and columns increase in
// the continuation direction.
struct Vertex {
    int c = 0;
    int r = 0;
    bool operator==(const Vertex&) const = default;
};

// Rectangular conductivity strip: rows x cols vertices, 4-neighbor edges,
// strictly positive conductivity on every edge.
template <class T>
class StripNetwork {
public:
    StripNetwork(int rows, int cols)
        : rows_(rows), cols_(cols),
          horiz_(static_cast<std::size_t>(rows) * (cols - 1), T(0)),
          vert_(static_cast<std::size_t>(rows - 1) * cols, T(0)) {
        require(rows >= 2 && cols >= 2, Err::InvalidArgument,
                "strip needs at least 2 rows and 2 columns");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // conductivity of edge (c,r)-(c+1,r), 1 <= c <= cols-1
    T& horiz(int c, int r) {
        check_horiz(c, r);
        return horiz_[static_cast<std::size_t>(r - 1) * (cols_ - 1) + (c - 1)];
    }
    const T& horiz(int c, int r) const {
        check_horiz(c, r);
        return horiz_[static_cast<std::size_t>(r - 1) * (cols_ - 1) + (c - 1)];
    }

    // conductivity of edge (c,r)-(c,r+1), 1 <= r <= rows-1
    T& vert(int c, int r) {
        check_vert(c, r);
        return vert_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)];
    }
    const T& vert(int c, int r) const {
        check_vert(c, r);
        return vert_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)];
    }

    bool in_grid(const Vertex& v) const {
        return v.c >= 1 && v.c <= cols_ && v.r >= 1 && v.r <= rows_;
    }

    std::vector<Vertex> neighbors(const Vertex& v) const {
        require(in_grid(v), Err::InvalidArgument, "vertex outside grid");
        std::vector<Vertex> out;
        if (v.c > 1) out.push_back({v.c - 1, v.r});
        if (v.c < cols_) out.push_back({v.c + 1, v.r});
        if (v.r > 1) out.push_back({v.c, v.r - 1});
        if (v.r < rows_) out.push_back({v.c, v.r + 1});
        return out;
    }

    T edge_conductivity(const Vertex& a, const Vertex& b) const {
        if (a.r == b.r && b.c == a.c + 1) return horiz(a.c, a.r);
        if (a.r == b.r && b.c == a.c - 1) return horiz(b.c, a.r);
        if (a.c == b.c && b.r == a.r + 1) return vert(a.c, a.r);
        if (a.c == b.c && b.r == a.r - 1) return vert(a.c, b.r);
        fail(Err::InvalidArgument, "vertices are not adjacent");
    }

    void check_positive() const {
        for (const auto& g : horiz_)
            require(g > T(0), Err::InvalidArgument, "nonpositive conductivity");
        for (const auto& g : vert_)
            require(g > T(0), Err::InvalidArgument, "nonpositive conductivity");
    }

    // Same strip with the first `shift` columns dropped and the rest
    // renumbered from 1.
    StripNetwork shifted(int shift) const {
        require(shift >= 0 && shift <= cols_ - 2, Err::InvalidArgument,
                "column shift out of range");
        StripNetwork out(rows_, cols_ - shift);
        for (int r = 1; r <= rows_; ++r)
            for (int c = 1; c <= cols_ - shift - 1; ++c) out.horiz(c, r) = horiz(c + shift, r);
        for (int r = 1; r <= rows_ - 1; ++r)
            for (int c = 1; c <= cols_ - shift; ++c) out.vert(c, r) = vert(c + shift, r);
        return out;
    }

    bool operator==(const StripNetwork&) const = default;

private:
    void check_horiz(int c, int r) const {
        require(c >= 1 && c <= cols_ - 1 && r >= 1 && r <= rows_, Err::InvalidArgument,
                "horizontal edge index out of range");
    }
    void check_vert(int c, int r) const {
        require(c >= 1 && c <= cols_ && r >= 1 && r <= rows_ - 1, Err::InvalidArgument,
                "vertical edge index out of range");
    }

    int rows_, cols_;
    std::vector<T> horiz_;
    std::vector<T> vert_;
};

// Vertex-indexed potential values with an explicit defined-vertex mask, so
// partially continued fields are representable.
template <class T>
class PotentialField {
public:
    PotentialField(int rows, int cols)
        : rows_(rows), cols_(cols),
          values_(static_cast<std::size_t>(rows) * cols, T(0)),
          defined_(static_cast<std::size_t>(rows) * cols, 0) {}

    template <class U>
    static PotentialField constant(int rows, int cols, const U& k) {
        PotentialField f(rows, cols);
        for (int r = 1; r <= rows; ++r)
            for (int c = 1; c <= cols; ++c) f.set({c, r}, T(k));
        return f;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool defined(const Vertex& v) const { return defined_[index(v)] != 0; }

    const T& at(const Vertex& v) const {
        require(defined(v), Err::MissingData,
                "undefined potential at (" + std::to_string(v.c) + "," + std::to_string(v.r) + ")");
        return values_[index(v)];
    }

    void set(const Vertex& v, const T& value) {
        values_[index(v)] = value;
        defined_[index(v)] = 1;
    }

    bool fully_defined() const {
        for (auto d : defined_)
            if (!d) return false;
        return true;
    }

    bool operator==(const PotentialField&) const = default;

private:
    std::size_t index(const Vertex& v) const {
        require(v.c >= 1 && v.c <= cols_ && v.r >= 1 && v.r <= rows_, Err::InvalidArgument,
                "vertex outside grid");
        return static_cast<std::size_t>(v.r - 1) * cols_ + (v.c - 1);
    }

    int rows_, cols_;
    std::vector<T> values_;
    std::vector<std::uint8_t> defined_;
};

template <class T>
StripNetwork<T> build_uniform(int rows, int cols, const T& g) {
    require(rows >= 2 && cols >= 2, Err::InvalidArgument, "strip needs rows, cols >= 2");
    require(g > T(0), Err::InvalidArgument, "conductivity must be positive");
    StripNetwork<T> net(rows, cols);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols - 1; ++c) net.horiz(c, r) = g;
    for (int r = 1; r <= rows - 1; ++r)
        for (int c = 1; c <= cols; ++c) net.vert(c, r) = g;
    return net;
}

// Deterministic per seed. Conductivities are rationals with denominator at
// most 64 drawn from [lo, hi]; the floating backend gets their double values.
template <class T>
StripNetwork<T> build_random(int rows, int cols, std::uint64_t seed, const Rational& lo,
                             const Rational& hi) {
    require(rows >= 2 && cols >= 2, Err::InvalidArgument, "strip needs rows, cols >= 2");
    require(sgn(lo) > 0 && lo <= hi, Err::InvalidArgument, "need 0 < lo <= hi");
    StripNetwork<T> net(rows, cols);
    SeededRng rng(seed);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols - 1; ++c)
            net.horiz(c, r) = scalar_from_rational<T>(random_rational_in(rng, lo, hi));
    for (int r = 1; r <= rows - 1; ++r)
        for (int c = 1; c <= cols; ++c)
            net.vert(c, r) = scalar_from_rational<T>(random_rational_in(rng, lo, hi));
    return net;
}

// Left-hand side of the harmonicity balance at v: sum over neighbors j of
// gamma_vj * (u_v - u_j). Zero exactly when u is gamma-harmonic at v.
template <class T>
T residual(const StripNetwork<T>& net, const PotentialField<T>& u, const Vertex& v) {
    const T& uv = u.at(v);
    T acc(0);
    for (const Vertex& w : net.neighbors(v)) acc += net.edge_conductivity(v, w) * (uv - u.at(w));
    return acc;
}

template <class T>
T max_defect(const StripNetwork<T>& net, const PotentialField<T>& u,
             std::span<const Vertex> vertices) {
    T worst(0);
    for (const Vertex& v : vertices) {
        T d = scalar_abs(residual(net, u, v));
        if (d > worst) worst = d;
    }
    return worst;
}

template <class T>
std::vector<Vertex> interior_vertices(const StripNetwork<T>& net) {
    std::vector<Vertex> out;
    for (int c = 2; c <= net.cols() - 1; ++c)
        for (int r = 1; r <= net.rows(); ++r) out.push_back({c, r});
    return out;
}

template <class T>
std::vector<Vertex> all_vertices(const StripNetwork<T>& net) {
    std::vector<Vertex> out;
    for (int c = 1; c <= net.cols(); ++c)
        for (int r = 1; r <= net.rows(); ++r) out.push_back({c, r});
    return out;
}

// --- plain-text serialization -------------------------------------------
//
//   harmcont-network
//   rows R
//   cols C
//   horiz      (R lines of C-1 entries, bottom row first)
//   ...
//   vert       (R-1 lines of C entries)
//   ...
//   end

template <class T>
void write_network(std::ostream& os, const StripNetwork<T>& net) {
    os << "harmcont-network\n";
    os << "rows " << net.rows() << "\n";
    os << "cols " << net.cols() << "\n";
    os << "horiz\n";
    for (int r = 1; r <= net.rows(); ++r) {
        for (int c = 1; c <= net.cols() - 1; ++c)
            os << (c > 1 ? " " : "") << scalar_to_text(net.horiz(c, r));
        os << "\n";
    }
    os << "vert\n";
    for (int r = 1; r <= net.rows() - 1; ++r) {
        for (int c = 1; c <= net.cols(); ++c)
            os << (c > 1 ? " " : "") << scalar_to_text(net.vert(c, r));
        os << "\n";
    }
    os << "end\n";
}

template <class T>
std::string network_to_text(const StripNetwork<T>& net) {
    std::ostringstream os;
    write_network(os, net);
    return os.str();
}

template <class T>
StripNetwork<T> read_network(std::istream& is) {
    auto next_token = [&is]() {
        std::string tok;
        require(static_cast<bool>(is >> tok), Err::ParseError, "truncated network document");
        return tok;
    };
    require(next_token() == "harmcont-network", Err::ParseError, "missing network header");
    require(next_token() == "rows", Err::ParseError, "expected 'rows'");
    int rows = std::stoi(next_token());
    require(next_token() == "cols", Err::ParseError, "expected 'cols'");
    int cols = std::stoi(next_token());
    StripNetwork<T> net(rows, cols);
    require(next_token() == "horiz", Err::ParseError, "expected 'horiz'");
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols - 1; ++c) net.horiz(c, r) = scalar_parse<T>(next_token());
    require(next_token() == "vert", Err::ParseError, "expected 'vert'");
    for (int r = 1; r <= rows - 1; ++r)
        for (int c = 1; c <= cols; ++c) net.vert(c, r) = scalar_parse<T>(next_token());
    require(next_token() == "end", Err::ParseError, "expected 'end'");
    net.check_positive();
    return net;
}

template <class T>
StripNetwork<T> network_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_network<T>(is);
}

// Dense column-major field table in the same document style.
template <class T>
std::string field_to_text(const PotentialField<T>& u) {
    std::ostringstream os;
    os << "harmcont-field\n";
    os << "rows " << u.rows() << "\n";
    os << "cols " << u.cols() << "\n";
    os << "values\n";
    for (int c = 1; c <= u.cols(); ++c) {
        for (int r = 1; r <= u.rows(); ++r)
            os << (r > 1 ? " " : "") << scalar_to_text(u.at({c, r}));
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

}  // namespace harmcont
