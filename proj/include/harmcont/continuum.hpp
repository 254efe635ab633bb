#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "harmcont/spectral.hpp"
#include "harmcont/strip_network.hpp"

namespace harmcont {

// Conductivity presets for the rectangle [0, length] x [0, height]. Kept to
// a closed list so every sample stays an exact rational at rational points.
struct GammaPreset {
    enum class Kind { Uniform, Linear, Bump };

    Kind kind = Kind::Uniform;
    Rational a, b, c;  // uniform: a; linear: a + b*x + c*y; bump: a + b*x^2*y^2

    Rational eval(const Rational& x, const Rational& y) const;
    std::string to_text() const;
    static GammaPreset parse(const std::string& text);  // "uniform:1", "linear:1:1:0", "bump:1:1"
};

struct ContinuumConfig {
    Rational height;
    Rational length;
    Rational shift;
    GammaPreset gamma;
    std::vector<Rational> levels;  // cell sizes, strictly decreasing (coarse to fine)

    void validate() const;

    static ContinuumConfig from_file(const std::string& path);
    static ContinuumConfig from_text(const std::string& text);
    std::string to_text() const;
};

// Five-point finite-volume network: each edge takes gamma at its midpoint.
// Unit-aspect cells make the cell-size factors cancel in the harmonicity
// balance.
template <class T>
StripNetwork<T> discretize(const ContinuumConfig& cfg, int level_index);

struct LevelResult {
    Rational h;
    int rows = 0;       // height/h + 1
    int chart_dim = 0;  // 2*rows - 1
    int shift_steps = 0;
    std::vector<std::complex<double>> eigenvalues;
    double min_real = 0.0;
    double max_imag_abs = 0.0;
    double spectral_radius = 0.0;
    bool positive = false;  // min_real > 1e-10 and max_imag_abs <= 1e-9 * radius
};

struct RefinementStudy {
    ContinuumConfig config;
    std::vector<LevelResult> levels;
    bool all_positive = false;
    // coarsest level re-run on the exact backend
    std::optional<SpectrumReport> coarsest_exact;
    bool coarsest_exact_all_positive = false;
    bool coarsest_float_matches_exact = false;  // 1e-9 relative against interval midpoints
};

RefinementStudy refinement_study(const ContinuumConfig& cfg);

}  // namespace harmcont
