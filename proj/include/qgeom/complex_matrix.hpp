#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qgeom {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Immutable by convention once built.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("ComplexMatrix: dimensions must be >= 1");
    }

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("ComplexMatrix: dimensions must be >= 1");
        if (data_.size() != rows * cols)
            throw std::invalid_argument("ComplexMatrix: entry count does not match shape");
        for (const cplx& z : data_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<cplx>& data() const { return data_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> data_;
};

inline ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: inner dimensions do not match");
    ComplexMatrix out(a.rows(), b.cols());
    // ikj order keeps the inner loop contiguous in b and out
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a.at(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

inline ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("mat_add: shape mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

inline ComplexMatrix mat_sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("mat_sub: shape mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

inline ComplexMatrix scalar_mul(cplx s, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = s * a.at(i, j);
    return out;
}

/// Conjugate transpose.
inline ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(j, i) = std::conj(a.at(i, j));
    return out;
}

inline double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cplx& z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("frobenius_distance: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        s += std::norm(a.data()[i] - b.data()[i]);
    return std::sqrt(s);
}

/// True iff ||A^dag A - I||_F <= tol.
inline bool is_unitary(const ComplexMatrix& a, double tol) {
    if (!a.is_square())
        throw std::invalid_argument("is_unitary: matrix must be square");
    ComplexMatrix prod = mat_mul(dagger(a), a);
    return frobenius_distance(prod, ComplexMatrix::identity(a.rows())) <= tol;
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

inline double max_abs_entry(const ComplexMatrix& a) {
    double m = 0.0;
    for (const cplx& z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

/// Max entry deviation from Hermiticity, max |A_ij - conj(A_ji)|.
inline double hermiticity_deviation(const ComplexMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("hermiticity_deviation: matrix must be square");
    return max_abs_entry(mat_sub(a, dagger(a)));
}

}  // namespace qgeom
