#pragma once

#include <vector>

#include "harmcont/marching.hpp"
#include "harmcont/matrix.hpp"
#include "harmcont/strip_network.hpp"

namespace harmcont {

// Oriented edge-difference basis at a column. Slot s (0-based, dim = 2R-1):
//   even s = 2(r-1): sign sigma_r times the horizontal difference
//                    u(k,r) - u(k-1,r)
//   odd  s = 2r-1:   sign tau_r times the vertical difference
//                    u(k,r+1) - u(k,r)
// The herringbone orientation sigma_1 = +1, tau_r = -sigma_r,
// sigma_{r+1} = -sigma_r is the one that makes every elimination step's
// coefficients positive; it is unique up to global negation (see
// sign_pattern_search).
class Chart {
public:
    static Chart herringbone(int rows, int column) {
        std::vector<int> signs(2 * rows - 1);
        int sigma = 1;
        for (int r = 1; r <= rows; ++r) {
            signs[2 * r - 2] = sigma;
            if (r < rows) signs[2 * r - 1] = -sigma;
            sigma = -sigma;
        }
        return Chart(rows, column, std::move(signs));
    }

    static Chart with_signs(int rows, int column, std::vector<int> signs) {
        return Chart(rows, column, std::move(signs));
    }

    int rows() const { return rows_; }
    int column() const { return column_; }
    int dim() const { return 2 * rows_ - 1; }
    const std::vector<int>& signs() const { return signs_; }

    int sigma(int r) const { return signs_[2 * r - 2]; }            // 1 <= r <= rows
    int tau(int r) const { return signs_[2 * r - 1]; }              // 1 <= r <= rows-1

    Chart at_column(int column) const { return Chart(rows_, column, signs_); }

    bool operator==(const Chart&) const = default;

    template <class T>
    std::vector<T> evaluate(const PotentialField<T>& u) const {
        std::vector<T> slots(dim());
        const int k = column_;
        for (int r = 1; r <= rows_; ++r) {
            slots[2 * r - 2] = T(sigma(r)) * (u.at({k, r}) - u.at({k - 1, r}));
            if (r < rows_) slots[2 * r - 1] = T(tau(r)) * (u.at({k, r + 1}) - u.at({k, r}));
        }
        return slots;
    }

    // Inverts the slot map at column 2: reconstructs Cauchy data with the
    // given slot values, pinning u(1,1). Charts are defined modulo constants,
    // so any pin yields the same chart images downstream.
    template <class T>
    CauchyData<T> representative(std::span<const T> slots, const T& pin) const {
        require(column_ == 2, Err::InvalidArgument,
                "representative Cauchy data requires the chart at column 2");
        require(static_cast<int>(slots.size()) == dim(), Err::InvalidArgument,
                "slot vector has wrong length");
        CauchyData<T> data(rows_);
        data.col1[0] = pin;
        data.col2[0] = pin + T(sigma(1)) * slots[0];
        for (int r = 1; r <= rows_ - 1; ++r)
            data.col2[r] = data.col2[r - 1] + T(tau(r)) * slots[2 * r - 1];
        for (int r = 1; r <= rows_; ++r)
            data.col1[r - 1] = data.col2[r - 1] - T(sigma(r)) * slots[2 * r - 2];
        return data;
    }

private:
    Chart(int rows, int column, std::vector<int> signs)
        : rows_(rows), column_(column), signs_(std::move(signs)) {
        require(rows_ >= 2, Err::InvalidArgument, "chart needs at least 2 rows");
        require(column_ >= 2, Err::InvalidArgument, "chart column must be >= 2");
        require(static_cast<int>(signs_.size()) == 2 * rows_ - 1, Err::InvalidArgument,
                "chart needs 2R-1 slot signs");
        for (int s : signs_)
            require(s == 1 || s == -1, Err::InvalidArgument, "slot signs must be +1 or -1");
    }

    int rows_;
    int column_;
    std::vector<int> signs_;
};

// Identity matrix except one rewritten row whose entries occupy consecutive
// slots containing the diagonal (width <= 3).
template <class T>
struct StepMatrix {
    int dim = 0;
    int row = 0;              // 0-based rewritten slot
    int first_col = 0;        // 0-based slot of entries.front()
    std::vector<T> entries;   // consecutive; at most 3

    bool operator==(const StepMatrix&) const = default;

    bool shape_ok() const {
        if (dim < 1 || row < 0 || row >= dim) return false;
        if (entries.empty() || entries.size() > 3) return false;
        if (first_col < 0 || first_col + static_cast<int>(entries.size()) > dim) return false;
        if (row < first_col || row >= first_col + static_cast<int>(entries.size())) return false;
        for (const T& e : entries)
            if (!(e > T(0))) return false;
        return true;
    }

    bool entries_nonneg() const {
        for (const T& e : entries)
            if (e < T(0)) return false;
        return true;
    }

    const T& diagonal_entry() const { return entries[row - first_col]; }

    Matrix<T> dense() const {
        Matrix<T> m = Matrix<T>::identity(dim);
        for (int j = 0; j < dim; ++j) m(row, j) = T(0);
        for (std::size_t i = 0; i < entries.size(); ++i) m(row, first_col + i) = entries[i];
        return m;
    }

    // x := S x
    void apply(std::vector<T>& x) const {
        T acc(0);
        for (std::size_t i = 0; i < entries.size(); ++i) acc += entries[i] * x[first_col + i];
        x[row] = acc;
    }

    // M := S M
    void apply_left(Matrix<T>& m) const {
        std::vector<T> new_row(m.cols(), T(0));
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (int j = 0; j < m.cols(); ++j) new_row[j] += entries[i] * m(first_col + i, j);
        for (int j = 0; j < m.cols(); ++j) m(row, j) = new_row[j];
    }
};

// Rewrites the row-r H-slot (0-based index 2r-2) through the harmonicity
// balance at vertex (k, r). With the chart's signs attached the
// coefficients are the conductivity ratios
//   gamma_down/gamma_right, gamma_left/gamma_right, gamma_up/gamma_right
// on slots 2r-2, 2r-1, 2r; boundary rows drop the missing vertical term.
template <class T>
StepMatrix<T> horizontal_step(const StripNetwork<T>& net, int k, int r, const Chart& chart) {
    require(k >= 2 && k <= net.cols() - 1, Err::InvalidArgument, "step column out of range");
    require(r >= 1 && r <= net.rows(), Err::InvalidArgument, "step row out of range");
    require(chart.rows() == net.rows(), Err::InvalidArgument, "chart rows mismatch");

    const int rows = net.rows();
    const T g_right = net.horiz(k, r);
    const T g_left = net.horiz(k - 1, r);

    StepMatrix<T> step;
    step.dim = chart.dim();
    step.row = 2 * r - 2;

    const bool has_down = r > 1;
    const bool has_up = r < rows;
    step.first_col = has_down ? 2 * r - 3 : 2 * r - 2;

    if (has_down) {
        const T g_down = net.vert(k, r - 1);
        step.entries.push_back(T(chart.sigma(r) * chart.tau(r - 1)) * g_down / g_right);
    }
    step.entries.push_back(g_left / g_right);
    if (has_up) {
        const T g_up = net.vert(k, r);
        step.entries.push_back(T(-chart.sigma(r) * chart.tau(r)) * g_up / g_right);
    }
    return step;
}

// Rewrites V-slot 2r (0-based index 2r-1) as the telescoping of the new
// horizontal differences with the old vertical one; the herringbone signs
// turn all three coefficients into +1.
template <class T>
StepMatrix<T> vertical_update_step(int r, const Chart& chart) {
    require(r >= 1 && r <= chart.rows() - 1, Err::InvalidArgument, "update row out of range");
    StepMatrix<T> step;
    step.dim = chart.dim();
    step.row = 2 * r - 1;
    step.first_col = 2 * r - 2;
    step.entries = {T(-chart.tau(r) * chart.sigma(r)), T(1), T(chart.tau(r) * chart.sigma(r + 1))};
    return step;
}

// Ordered step list advancing the chart from column k to column k+1:
// horizontal rewrites bottom to top, then vertical updates bottom to top.
// Horizontal steps read only old V-slots and write disjoint H-slots, and
// vertical updates read only new H-slots, so each phase's internal order
// does not change the product; the fixed order keeps reports byte-stable.
template <class T>
std::vector<StepMatrix<T>> advance(const StripNetwork<T>& net, int k, const Chart& chart) {
    std::vector<StepMatrix<T>> steps;
    steps.reserve(2 * net.rows() - 1);
    for (int r = 1; r <= net.rows(); ++r) steps.push_back(horizontal_step(net, k, r, chart));
    for (int r = 1; r <= net.rows() - 1; ++r)
        steps.push_back(vertical_update_step<T>(r, chart));
    return steps;
}

template <class T>
std::vector<StepMatrix<T>> advance(const StripNetwork<T>& net, int k) {
    return advance(net, k, Chart::herringbone(net.rows(), k));
}

// The continuation operator on charts: chart at column 2 -> chart at
// column 2+shift, factored into elementary steps (last applied = leftmost
// factor of `matrix`).
template <class T>
struct TransferOperator {
    int shift = 0;
    Matrix<T> matrix;
    std::vector<StepMatrix<T>> steps;
    Chart from_chart;
    Chart to_chart;
};

template <class T>
TransferOperator<T> chart_transfer(const StripNetwork<T>& net, int s) {
    require(s >= 0 && s <= net.cols() - 2, Err::InvalidArgument,
            "shift must satisfy 0 <= s <= cols-2");
    const Chart from = Chart::herringbone(net.rows(), 2);
    TransferOperator<T> op{s, Matrix<T>::identity(from.dim()), {}, from, from.at_column(2 + s)};
    for (int k = 2; k <= s + 1; ++k) {
        for (auto& step : advance(net, k, from.at_column(k))) {
            step.apply_left(op.matrix);
            op.steps.push_back(std::move(step));
        }
    }
    return op;
}

// Independent oracle for chart_transfer: pushes each chart basis vector
// through the dense-solve continuation and reads the target chart. No step
// matrices are involved.
template <class T>
Matrix<T> oracle_chart_transfer(const StripNetwork<T>& net, int s) {
    require(s >= 0 && s <= net.cols() - 2, Err::InvalidArgument,
            "shift must satisfy 0 <= s <= cols-2");
    const Chart from = Chart::herringbone(net.rows(), 2);
    const Chart to = from.at_column(2 + s);
    const int n = from.dim();
    Matrix<T> out(n, n);
    std::vector<T> slots(n, T(0));
    for (int j = 0; j < n; ++j) {
        slots.assign(n, T(0));
        slots[j] = T(1);
        CauchyData<T> data = from.representative<T>(slots, T(0));
        PotentialField<T> field = oracle_march(net, data);
        std::vector<T> image = to.evaluate(field);
        for (int i = 0; i < n; ++i) out(i, j) = image[i];
    }
    return out;
}

// Raw-value continuation: maps values on columns (1,2) to values on columns
// (1+s, 2+s). Coordinates are column 1 rows 1..R then column 2 rows 1..R.
// Constants are harmonic, so the all-ones vector is fixed.
template <class T>
Matrix<T> value_transfer(const StripNetwork<T>& net, int s) {
    require(s >= 0 && s <= net.cols() - 2, Err::InvalidArgument,
            "shift must satisfy 0 <= s <= cols-2");
    const int rows = net.rows();
    const int n = 2 * rows;
    Matrix<T> out(n, n);
    for (int j = 0; j < n; ++j) {
        CauchyData<T> data(rows);
        if (j < rows)
            data.col1[j] = T(1);
        else
            data.col2[j - rows] = T(1);
        PotentialField<T> field = march(net, data);
        for (int r = 1; r <= rows; ++r) {
            out(r - 1, j) = field.at({1 + s, r});
            out(rows + r - 1, j) = field.at({2 + s, r});
        }
    }
    return out;
}

// Exhaustive search over the 2^(2R-1) slot orientations: keeps those for
// which every rewritten row in every advance of the s-step continuation has
// nonnegative entries. Patterns are emitted in enumeration order (slot 0 is
// the low bit; bit set means +1).
template <class T>
std::vector<std::vector<int>> sign_pattern_search(const StripNetwork<T>& net, int s) {
    require(net.rows() <= 6, Err::BudgetExceeded, "sign search is limited to 6 rows");
    require(s >= 0 && s <= net.cols() - 2, Err::InvalidArgument,
            "shift must satisfy 0 <= s <= cols-2");
    const int n = 2 * net.rows() - 1;
    std::vector<std::vector<int>> found;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> signs(n);
        for (int i = 0; i < n; ++i) signs[i] = (mask >> i) & 1u ? 1 : -1;
        const Chart chart = Chart::with_signs(net.rows(), 2, signs);
        bool ok = true;
        for (int k = 2; k <= s + 1 && ok; ++k)
            for (const auto& step : advance(net, k, chart.at_column(k)))
                if (!step.entries_nonneg()) {
                    ok = false;
                    break;
                }
        if (ok) found.push_back(std::move(signs));
    }
    return found;
}

}  // namespace harmcont
