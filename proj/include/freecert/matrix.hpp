#pragma once

#include <string>
#include <vector>

#include "freecert/errors.hpp"
#include "freecert/laurent.hpp"
#include "freecert/rational.hpp"

namespace freecert {

/// Square matrix over an exact ring (Rational or LaurentPoly).
template <typename Ring>
class Matrix {
public:
    explicit Matrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {
        if (dim < 1) throw DimensionMismatch("matrix dimension must be >= 1");
    }

    static Matrix identity(int dim) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = Ring(1);
        return m;
    }

    int dim() const { return dim_; }

    Ring& at(int row, int col) { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
    const Ring& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }

    Matrix transpose() const {
        Matrix m(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    std::vector<Ring> apply(const std::vector<Ring>& vec) const {
        if (static_cast<int>(vec.size()) != dim_)
            throw DimensionMismatch("matrix/vector dimension mismatch");
        std::vector<Ring> out(vec.size());
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) out[i] += at(i, j) * vec[j];
        return out;
    }

    /// Row covector times matrix.
    std::vector<Ring> apply_left(const std::vector<Ring>& row) const {
        if (static_cast<int>(row.size()) != dim_)
            throw DimensionMismatch("matrix/vector dimension mismatch");
        std::vector<Ring> out(row.size());
        for (int j = 0; j < dim_; ++j)
            for (int i = 0; i < dim_; ++i) out[j] += row[i] * at(i, j);
        return out;
    }

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
        if (lhs.dim_ != rhs.dim_) throw DimensionMismatch("matrix product dimension mismatch");
        Matrix out(lhs.dim_);
        for (int i = 0; i < lhs.dim_; ++i)
            for (int k = 0; k < lhs.dim_; ++k) {
                const Ring& l = lhs.at(i, k);
                if (l == Ring{}) continue;
                for (int j = 0; j < lhs.dim_; ++j) out.at(i, j) += l * rhs.at(k, j);
            }
        return out;
    }

    friend Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
        if (lhs.dim_ != rhs.dim_) throw DimensionMismatch("matrix sum dimension mismatch");
        Matrix out(lhs.dim_);
        for (std::size_t i = 0; i < lhs.entries_.size(); ++i)
            out.entries_[i] = lhs.entries_[i] + rhs.entries_[i];
        return out;
    }

    friend Matrix operator-(const Matrix& lhs, const Matrix& rhs) {
        if (lhs.dim_ != rhs.dim_) throw DimensionMismatch("matrix difference dimension mismatch");
        Matrix out(lhs.dim_);
        for (std::size_t i = 0; i < lhs.entries_.size(); ++i)
            out.entries_[i] = lhs.entries_[i] - rhs.entries_[i];
        return out;
    }

    bool operator==(const Matrix& other) const {
        return dim_ == other.dim_ && entries_ == other.entries_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    bool is_identity() const { return *this == identity(dim_); }

    /// Scalar multiple of the identity (includes the zero matrix).
    bool is_scalar() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                if (i == j) {
                    if (!(at(i, i) == at(0, 0))) return false;
                } else if (!(at(i, j) == Ring{})) {
                    return false;
                }
            }
        return true;
    }

private:
    int dim_;
    std::vector<Ring> entries_;
};

using MatQ = Matrix<Rational>;
using MatL = Matrix<LaurentPoly>;

/// Exact determinant by Gaussian elimination.
Rational determinant(const MatQ& m);

/// Exact inverse; throws SingularMatrix when the determinant vanishes.
MatQ inverse(const MatQ& m);

/// Constant embedding of a rational matrix into the Laurent ring.
MatL to_laurent(const MatQ& m);

std::string matrix_str(const MatQ& m);

}  // namespace freecert
