#pragma once

#include <span>
#include <vector>

#include "harmcont/errors.hpp"
#include "harmcont/scalar.hpp"

namespace harmcont {

// Dense row-major matrix over either scalar backend. Indices are 0-based.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& init = T(0))
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, init) {
        require(rows >= 0 && cols >= 0, Err::InvalidArgument, "negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const Matrix& other) const = default;

    Matrix operator*(const Matrix& rhs) const {
        require(cols_ == rhs.rows_, Err::InvalidArgument, "matrix product shape mismatch");
        Matrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& rhs) const {
        require(rows_ == rhs.rows_ && cols_ == rhs.cols_, Err::InvalidArgument,
                "matrix sum shape mismatch");
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
        return out;
    }

    Matrix operator-(const Matrix& rhs) const {
        require(rows_ == rhs.rows_ && cols_ == rhs.cols_, Err::InvalidArgument,
                "matrix difference shape mismatch");
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
        return out;
    }

    std::vector<T> apply(std::span<const T> x) const {
        require(static_cast<int>(x.size()) == cols_, Err::InvalidArgument,
                "matrix-vector shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    T trace() const {
        require(square(), Err::InvalidArgument, "trace of non-square matrix");
        T t(0);
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix submatrix(std::span<const int> row_idx, std::span<const int> col_idx) const {
        Matrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                out(static_cast<int>(i), static_cast<int>(j)) = (*this)(row_idx[i], col_idx[j]);
        return out;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using MatQ = Matrix<Rational>;
using MatD = Matrix<double>;

inline MatD matrix_to_double(const MatQ& m) {
    MatD out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

}  // namespace harmcont
