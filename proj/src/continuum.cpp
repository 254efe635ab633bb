#include "harmcont/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "harmcont/transfer.hpp"

namespace harmcont {

Rational GammaPreset::eval(const Rational& x, const Rational& y) const {
    switch (kind) {
        case Kind::Uniform: return a;
        case Kind::Linear:  return a + b * x + c * y;
        case Kind::Bump:    return a + b * x * x * y * y;
    }
    fail(Err::InternalError, "unknown gamma preset");
}

std::string GammaPreset::to_text() const {
    switch (kind) {
        case Kind::Uniform: return "uniform:" + rational_to_text(a);
        case Kind::Linear:
            return "linear:" + rational_to_text(a) + ":" + rational_to_text(b) + ":" +
                   rational_to_text(c);
        case Kind::Bump:    return "bump:" + rational_to_text(a) + ":" + rational_to_text(b);
    }
    fail(Err::InternalError, "unknown gamma preset");
}

GammaPreset GammaPreset::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    require(!parts.empty(), Err::ParseError, "empty gamma preset");

    GammaPreset g;
    if (parts[0] == "uniform") {
        require(parts.size() == 2, Err::ParseError, "uniform preset takes one parameter");
        g.kind = Kind::Uniform;
        g.a = parse_rational(parts[1]);
    } else if (parts[0] == "linear") {
        require(parts.size() == 4, Err::ParseError, "linear preset takes three parameters");
        g.kind = Kind::Linear;
        g.a = parse_rational(parts[1]);
        g.b = parse_rational(parts[2]);
        g.c = parse_rational(parts[3]);
    } else if (parts[0] == "bump") {
        require(parts.size() == 3, Err::ParseError, "bump preset takes two parameters");
        g.kind = Kind::Bump;
        g.a = parse_rational(parts[1]);
        g.b = parse_rational(parts[2]);
    } else {
        fail(Err::ParseError, "unknown gamma preset '" + parts[0] + "'");
    }
    return g;
}

namespace {

bool divides_exactly(const Rational& h, const Rational& total) {
    Rational q = total / h;
    return q.get_den() == 1;
}

int exact_quotient(const Rational& total, const Rational& h) {
    Rational q = total / h;
    require(q.get_den() == 1, Err::InternalError, "non-integral quotient");
    require(q.get_num().fits_sint_p(), Err::InvalidConfig, "grid too large");
    return static_cast<int>(q.get_num().get_si());
}

}  // namespace

void ContinuumConfig::validate() const {
    require(sgn(height) > 0 && sgn(length) > 0, Err::InvalidConfig,
            "strip dimensions must be positive");
    // shift 0 is admitted: every level's operator is then the identity
    require(sgn(shift) >= 0, Err::InvalidConfig, "shift must be nonnegative");
    require(!levels.empty(), Err::InvalidConfig, "at least one refinement level required");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const Rational& h = levels[i];
        require(sgn(h) > 0, Err::InvalidConfig, "cell size must be positive");
        require(divides_exactly(h, height), Err::InvalidConfig, "cell size must divide height");
        require(divides_exactly(h, length), Err::InvalidConfig, "cell size must divide length");
        require(divides_exactly(h, shift), Err::InvalidConfig, "cell size must divide shift");
        if (i > 0)
            require(h < levels[i - 1], Err::InvalidConfig,
                    "levels must be sorted coarse to fine");
    }
    require(shift <= length - levels.front(), Err::InvalidConfig,
            "shift leaves no room for the Cauchy band");
    // the presets attain their minimum over the rectangle at a corner
    for (const Rational& x : {Rational(0), length})
        for (const Rational& y : {Rational(0), height})
            require(sgn(gamma.eval(x, y)) > 0, Err::InvalidConfig,
                    "gamma is not positive on the rectangle");
}

ContinuumConfig ContinuumConfig::from_text(const std::string& text) {
    ContinuumConfig cfg;
    std::istringstream is(text);
    std::string line;
    bool saw_height = false, saw_length = false, saw_shift = false, saw_gamma = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        if (key == "height") {
            std::string v;
            require(static_cast<bool>(ls >> v), Err::ParseError, "height needs a value");
            cfg.height = parse_rational(v);
            saw_height = true;
        } else if (key == "length") {
            std::string v;
            require(static_cast<bool>(ls >> v), Err::ParseError, "length needs a value");
            cfg.length = parse_rational(v);
            saw_length = true;
        } else if (key == "shift") {
            std::string v;
            require(static_cast<bool>(ls >> v), Err::ParseError, "shift needs a value");
            cfg.shift = parse_rational(v);
            saw_shift = true;
        } else if (key == "gamma") {
            std::string v;
            require(static_cast<bool>(ls >> v), Err::ParseError, "gamma needs a preset");
            cfg.gamma = GammaPreset::parse(v);
            saw_gamma = true;
        } else if (key == "levels") {
            std::string v;
            while (ls >> v) cfg.levels.push_back(parse_rational(v));
        } else {
            fail(Err::ParseError, "unknown config key '" + key + "'");
        }
    }
    require(saw_height && saw_length && saw_shift && saw_gamma && !cfg.levels.empty(),
            Err::ParseError, "config needs height, length, shift, gamma and levels");
    cfg.validate();
    return cfg;
}

ContinuumConfig ContinuumConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), Err::InvalidConfig, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

std::string ContinuumConfig::to_text() const {
    std::ostringstream os;
    os << "height " << rational_to_text(height) << "\n";
    os << "length " << rational_to_text(length) << "\n";
    os << "shift " << rational_to_text(shift) << "\n";
    os << "gamma " << gamma.to_text() << "\n";
    os << "levels";
    for (const Rational& h : levels) os << " " << rational_to_text(h);
    os << "\n";
    return os.str();
}

template <class T>
StripNetwork<T> discretize(const ContinuumConfig& cfg, int level_index) {
    cfg.validate();
    require(level_index >= 0 && level_index < static_cast<int>(cfg.levels.size()),
            Err::InvalidArgument, "level index out of range");
    const Rational& h = cfg.levels[level_index];
    const int rows = exact_quotient(cfg.height, h) + 1;
    const int cols = exact_quotient(cfg.length, h) + 1;

    // vertex (c, r) sits at ((c-1)h, (r-1)h)
    StripNetwork<T> net(rows, cols);
    const Rational half = Rational(1, 2);
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= cols - 1; ++c) {
            Rational g = cfg.gamma.eval((Rational(c - 1) + half) * h, Rational(r - 1) * h);
            require(sgn(g) > 0, Err::InvalidConfig, "gamma not positive at an edge midpoint");
            net.horiz(c, r) = scalar_from_rational<T>(g);
        }
    }
    for (int r = 1; r <= rows - 1; ++r) {
        for (int c = 1; c <= cols; ++c) {
            Rational g = cfg.gamma.eval(Rational(c - 1) * h, (Rational(r - 1) + half) * h);
            require(sgn(g) > 0, Err::InvalidConfig, "gamma not positive at an edge midpoint");
            net.vert(c, r) = scalar_from_rational<T>(g);
        }
    }
    return net;
}

template StripNetwork<Rational> discretize<Rational>(const ContinuumConfig&, int);
template StripNetwork<double> discretize<double>(const ContinuumConfig&, int);

RefinementStudy refinement_study(const ContinuumConfig& cfg) {
    cfg.validate();
    RefinementStudy study;
    study.config = cfg;
    study.all_positive = true;

    for (int li = 0; li < static_cast<int>(cfg.levels.size()); ++li) {
        const Rational& h = cfg.levels[li];
        LevelResult level;
        level.h = h;
        level.rows = exact_quotient(cfg.height, h) + 1;
        level.chart_dim = 2 * level.rows - 1;
        level.shift_steps = exact_quotient(cfg.shift, h);

        StripNetwork<double> net = discretize<double>(cfg, li);
        TransferOperator<double> op = chart_transfer(net, level.shift_steps);
        require(op.matrix.rows() == level.chart_dim, Err::InternalError, "chart dimension drift");

        level.eigenvalues = float_eigenvalues(op.matrix);
        level.min_real = std::numeric_limits<double>::infinity();
        for (const auto& ev : level.eigenvalues) {
            level.min_real = std::min(level.min_real, ev.real());
            level.max_imag_abs = std::max(level.max_imag_abs, std::fabs(ev.imag()));
            level.spectral_radius = std::max(level.spectral_radius, std::abs(ev));
        }
        level.positive =
            level.max_imag_abs <= 1e-9 * level.spectral_radius && level.min_real > 1e-10;
        study.all_positive = study.all_positive && level.positive;
        study.levels.push_back(std::move(level));
    }

    // exact certification of the coarsest level (gamma samples are rational
    // for every preset)
    {
        StripNetwork<Rational> net = discretize<Rational>(cfg, 0);
        const int s = study.levels.front().shift_steps;
        SpectrumReport report = certify_spectrum(chart_transfer(net, s).matrix);
        study.coarsest_exact_all_positive = report.verdict == SpectrumVerdict::AllPositive;

        bool matches = report.dim == static_cast<int>(study.levels.front().eigenvalues.size());
        if (matches) {
            for (const auto& ev : study.levels.front().eigenvalues) {
                bool near_some = false;
                for (const RootInterval& iv : report.roots.intervals) {
                    const double mid = to_double(iv.midpoint());
                    const double scale = std::max(1.0, std::fabs(mid));
                    if (std::abs(ev - std::complex<double>(mid, 0.0)) <= 1e-9 * scale) {
                        near_some = true;
                        break;
                    }
                }
                if (!near_some) {
                    matches = false;
                    break;
                }
            }
        }
        study.coarsest_float_matches_exact = matches;
        study.coarsest_exact = std::move(report);
    }

    return study;
}

}  // namespace harmcont
