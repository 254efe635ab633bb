#include "harmcont/report.hpp"

#include <sstream>

namespace harmcont {

namespace {

template <class T>
void write_matrix_body(std::ostream& os, const Matrix<T>& m) {
    os << "matrix " << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << scalar_to_text(m(i, j));
        os << "\n";
    }
}

class TokenReader {
public:
    explicit TokenReader(const std::string& text) : is_(text) {}

    std::string next() {
        std::string tok;
        require(static_cast<bool>(is_ >> tok), Err::ParseError, "truncated report");
        return tok;
    }

    void expect(const std::string& want) {
        std::string got = next();
        require(got == want, Err::ParseError, "expected '" + want + "', got '" + got + "'");
    }

    int next_int() { return std::stoi(next()); }
    Rational next_rational() { return parse_rational(next()); }
    double next_double() { return std::stod(next()); }

    std::string rest_of_line() {
        std::string line;
        std::getline(is_, line);
        if (!line.empty() && line.front() == ' ') line.erase(line.begin());
        return line;
    }

private:
    std::istringstream is_;
};

MatQ read_matrix_body(TokenReader& in) {
    in.expect("matrix");
    const int rows = in.next_int();
    const int cols = in.next_int();
    MatQ m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = in.next_rational();
    return m;
}

void write_spectrum_block(std::ostream& os, const SpectrumReport& r) {
    os << "spectrum\n";
    os << "dim " << r.dim << "\n";
    os << "charpoly";
    for (const Rational& ci : r.charpoly.coeffs()) os << " " << rational_to_text(ci);
    os << "\n";
    os << "real-count " << r.roots.real_count << "\n";
    os << "positive-count " << r.positive_count << "\n";
    os << "zero-root " << (r.roots.zero_is_root ? 1 : 0) << "\n";
    os << "roots " << r.roots.intervals.size() << "\n";
    for (const RootInterval& iv : r.roots.intervals)
        os << "root " << rational_to_text(iv.lo) << " " << rational_to_text(iv.hi) << "\n";
    os << "float-eigenvalues " << r.float_eigenvalues.size() << "\n";
    for (const auto& ev : r.float_eigenvalues)
        os << "eig " << double_to_text(ev.real()) << " " << double_to_text(ev.imag()) << "\n";
    os << "verdict " << verdict_name(r.verdict) << "\n";
    os << "diagnostic " << r.roots.diagnostic << "\n";
    os << "end-spectrum\n";
}

SpectrumReport read_spectrum_block(TokenReader& in) {
    SpectrumReport r;
    in.expect("spectrum");
    in.expect("dim");
    r.dim = in.next_int();
    in.expect("charpoly");
    std::vector<Rational> coeffs;
    for (int i = 0; i <= r.dim; ++i) coeffs.push_back(in.next_rational());
    r.charpoly = Polynomial(std::move(coeffs));
    in.expect("real-count");
    r.roots.real_count = in.next_int();
    in.expect("positive-count");
    r.positive_count = in.next_int();
    r.roots.positive_count = r.positive_count;
    in.expect("zero-root");
    r.roots.zero_is_root = in.next_int() != 0;
    in.expect("roots");
    const int nroots = in.next_int();
    for (int i = 0; i < nroots; ++i) {
        in.expect("root");
        RootInterval iv;
        iv.lo = in.next_rational();
        iv.hi = in.next_rational();
        r.roots.intervals.push_back(std::move(iv));
    }
    in.expect("float-eigenvalues");
    const int neigs = in.next_int();
    for (int i = 0; i < neigs; ++i) {
        in.expect("eig");
        double re = in.next_double();
        double im = in.next_double();
        r.float_eigenvalues.emplace_back(re, im);
    }
    in.expect("verdict");
    r.verdict = in.next() == "ALL_POSITIVE" ? SpectrumVerdict::AllPositive
                                            : SpectrumVerdict::NotAllPositive;
    r.roots.verdict = r.verdict;
    in.expect("diagnostic");
    r.roots.diagnostic = in.rest_of_line();
    in.expect("end-spectrum");
    return r;
}

}  // namespace

std::string matrix_to_text(const MatQ& m) {
    std::ostringstream os;
    write_matrix_body(os, m);
    return os.str();
}

std::string matrix_to_text(const MatD& m) {
    std::ostringstream os;
    write_matrix_body(os, m);
    return os.str();
}

MatQ matrix_q_from_text(const std::string& text) {
    TokenReader in(text);
    return read_matrix_body(in);
}

namespace {

template <class T>
std::string transfer_report_impl(const TransferOperator<T>& op, int rows, int cols) {
    std::ostringstream os;
    os << "harmcont-report\n";
    os << "kind transfer-operator\n";
    os << "rows " << rows << "\n";
    os << "cols " << cols << "\n";
    os << "shift " << op.shift << "\n";
    os << "dim " << op.matrix.rows() << "\n";
    write_matrix_body(os, op.matrix);
    os << "steps " << op.steps.size() << "\n";
    for (const StepMatrix<T>& s : op.steps) {
        os << "step row " << s.row + 1 << " cols " << s.first_col + 1 << ".."
           << s.first_col + s.entries.size() << " entries";
        for (const T& e : s.entries) os << " " << scalar_to_text(e);
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

}  // namespace

std::string transfer_report(const TransferOperator<Rational>& op, int rows, int cols) {
    return transfer_report_impl(op, rows, cols);
}

std::string transfer_report(const TransferOperator<double>& op, int rows, int cols) {
    return transfer_report_impl(op, rows, cols);
}

TransferOperator<Rational> transfer_from_report(const std::string& text) {
    TokenReader in(text);
    in.expect("harmcont-report");
    in.expect("kind");
    in.expect("transfer-operator");
    in.expect("rows");
    const int rows = in.next_int();
    in.expect("cols");
    in.next_int();
    in.expect("shift");
    const int shift = in.next_int();
    in.expect("dim");
    const int dim = in.next_int();

    TransferOperator<Rational> op{shift, MatQ(), {}, Chart::herringbone(rows, 2),
                                  Chart::herringbone(rows, 2 + shift)};
    op.matrix = read_matrix_body(in);
    require(op.matrix.rows() == dim && op.matrix.cols() == dim, Err::ParseError,
            "operator dimension mismatch");
    in.expect("steps");
    const int nsteps = in.next_int();
    for (int i = 0; i < nsteps; ++i) {
        in.expect("step");
        in.expect("row");
        StepMatrix<Rational> s;
        s.dim = dim;
        s.row = in.next_int() - 1;
        in.expect("cols");
        std::string range = in.next();  // "a..b"
        auto dots = range.find("..");
        require(dots != std::string::npos, Err::ParseError, "bad step column range");
        s.first_col = std::stoi(range.substr(0, dots)) - 1;
        const int last = std::stoi(range.substr(dots + 2)) - 1;
        in.expect("entries");
        for (int j = s.first_col; j <= last; ++j) s.entries.push_back(in.next_rational());
        op.steps.push_back(std::move(s));
    }
    in.expect("end");
    return op;
}

std::string minor_certificate_report(const MinorCertificate& cert, const Rational& determinant) {
    std::ostringstream os;
    os << "harmcont-report\n";
    os << "kind minor-certificate\n";
    os << "dim " << cert.dim << "\n";
    os << "minors-checked " << cert.minors_checked << "\n";
    os << "min-minor " << rational_to_text(cert.min_minor) << "\n";
    os << "determinant " << rational_to_text(determinant) << "\n";
    os << "verdict " << verdict_name(cert.verdict) << "\n";
    if (cert.witness) {
        os << "witness rows";
        for (int r : cert.witness->rows) os << " " << r + 1;
        os << " cols";
        for (int c : cert.witness->cols) os << " " << c + 1;
        os << " value " << rational_to_text(cert.witness->value) << "\n";
    } else {
        os << "witness none\n";
    }
    os << "end\n";
    return os.str();
}

std::string spectrum_report_text(const SpectrumReport& report) {
    std::ostringstream os;
    os << "harmcont-report\n";
    os << "kind spectrum\n";
    write_spectrum_block(os, report);
    os << "end\n";
    return os.str();
}

std::string spectrum_csv_row(const std::string& descriptor, int rows, int s,
                             const SpectrumReport& report) {
    // min root lower bound: smallest interval left endpoint (exact)
    std::string min_root = "none";
    if (!report.roots.intervals.empty())
        min_root = rational_to_text(report.roots.intervals.front().lo);
    std::ostringstream os;
    os << descriptor << "," << rows << "," << s << "," << min_root << ","
       << verdict_name(report.verdict);
    return os.str();
}

std::string dtn_report(const DtNMap& map, int rows, int cols) {
    std::ostringstream os;
    os << "harmcont-report\n";
    os << "kind dtn-map\n";
    os << "rows " << rows << "\n";
    os << "cols " << cols << "\n";
    os << "boundary";
    for (int b : map.boundary) os << " " << b + 1;
    os << "\n";
    write_matrix_body(os, map.lambda);
    os << "end\n";
    return os.str();
}

namespace {

void write_dtn_block(std::ostream& os, const DtNMap& map) {
    os << "dtn\n";
    os << "boundary";
    for (int b : map.boundary) os << " " << b + 1;
    os << "\n";
    write_matrix_body(os, map.lambda);
    os << "end-dtn\n";
}

DtNMap read_dtn_block(TokenReader& in) {
    DtNMap map;
    in.expect("dtn");
    in.expect("boundary");
    // boundary ids until the "matrix" keyword
    std::string tok = in.next();
    while (tok != "matrix") {
        map.boundary.push_back(std::stoi(tok) - 1);
        tok = in.next();
    }
    const int rows = in.next_int();
    const int cols = in.next_int();
    map.lambda = MatQ(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) map.lambda(i, j) = in.next_rational();
    in.expect("end-dtn");
    return map;
}

}  // namespace

std::string probe_report(const DtnSpectrumProbe& probe) {
    std::ostringstream os;
    os << "harmcont-report\n";
    os << "kind dtn-probe\n";
    os << "rows " << probe.rows << "\n";
    os << "cols " << probe.cols << "\n";
    os << "shift " << probe.shift << "\n";
    os << "note no relation between the continuation spectrum and the boundary map is asserted;"
          " the two blocks are reported side by side as data\n";
    write_spectrum_block(os, probe.continuation);
    write_dtn_block(os, probe.dtn);
    os << "end\n";
    return os.str();
}

DtnSpectrumProbe probe_from_report(const std::string& text) {
    TokenReader in(text);
    in.expect("harmcont-report");
    in.expect("kind");
    in.expect("dtn-probe");
    DtnSpectrumProbe probe;
    in.expect("rows");
    probe.rows = in.next_int();
    in.expect("cols");
    probe.cols = in.next_int();
    in.expect("shift");
    probe.shift = in.next_int();
    in.expect("note");
    in.rest_of_line();
    probe.continuation = read_spectrum_block(in);
    probe.dtn = read_dtn_block(in);
    in.expect("end");
    return probe;
}

std::string study_report(const RefinementStudy& study) {
    std::ostringstream os;
    os << "harmcont-report\n";
    os << "kind refinement-study\n";
    os << "height " << rational_to_text(study.config.height) << "\n";
    os << "length " << rational_to_text(study.config.length) << "\n";
    os << "shift " << rational_to_text(study.config.shift) << "\n";
    os << "gamma " << study.config.gamma.to_text() << "\n";
    os << "levels " << study.levels.size() << "\n";
    for (std::size_t i = 0; i < study.levels.size(); ++i) {
        const LevelResult& lv = study.levels[i];
        os << "level " << i << " h " << rational_to_text(lv.h) << " rows " << lv.rows
           << " chart-dim " << lv.chart_dim << " steps " << lv.shift_steps << " min-real "
           << double_to_text(lv.min_real) << " max-imag " << double_to_text(lv.max_imag_abs)
           << " radius " << double_to_text(lv.spectral_radius) << " verdict "
           << (lv.positive ? "positive" : "not-positive") << "\n";
    }
    os << "coarsest-exact-verdict "
       << (study.coarsest_exact ? verdict_name(study.coarsest_exact->verdict) : "none") << "\n";
    os << "coarsest-float-consistent " << (study.coarsest_float_matches_exact ? "yes" : "no")
       << "\n";
    os << "overall " << (study.all_positive ? "positive" : "not-positive") << "\n";
    os << "note refinement results are empirical support for positivity under grid refinement,"
          " not a proof of the continuum statement\n";
    os << "end\n";
    return os.str();
}

std::string study_csv(const RefinementStudy& study) {
    std::ostringstream os;
    os << "level,h,rows,shift_steps,min_real,max_imag,verdict\n";
    for (std::size_t i = 0; i < study.levels.size(); ++i) {
        const LevelResult& lv = study.levels[i];
        os << i << "," << rational_to_text(lv.h) << "," << lv.rows << "," << lv.shift_steps << ","
           << double_to_text(lv.min_real) << "," << double_to_text(lv.max_imag_abs) << ","
           << (lv.positive ? "positive" : "not-positive") << "\n";
    }
    return os.str();
}

}  // namespace harmcont
