// matrix.hpp — dense square complex matrices, tensor products, partial traces

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ergoflow/errors.hpp"

namespace ergoflow {

using Complex = std::complex<double>;

// Row-major square complex matrix. Deliberately minimal: the toolkit works at
// two-qubit scale (dim <= ~16), so clarity and determinism beat BLAS-level speed.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex{}) {}

    ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
        : dim_(dim), entries_(std::move(entries)) {
        if (entries_.size() != dim_ * dim_) {
            throw DimensionMismatchError("ComplexMatrix: entries length " +
                                         std::to_string(entries_.size()) +
                                         " does not equal dim^2 = " +
                                         std::to_string(dim_ * dim_));
        }
    }

    ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries)
        : ComplexMatrix(dim, std::vector<Complex>(entries)) {}

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return entries_.size(); }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }

    Complex trace() const {
        Complex t{};
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix a(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) a(j, i) = std::conj((*this)(i, j));
        return a;
    }

    ComplexMatrix conjugate() const {
        ComplexMatrix c(dim_);
        for (std::size_t i = 0; i < entries_.size(); ++i) c.entries_[i] = std::conj(entries_[i]);
        return c;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& e : entries_) m = std::max(m, std::abs(e));
        return m;
    }

    // max-abs entry of M - M^dagger; 0 for exactly Hermitian input
    double hermiticity_defect() const {
        double d = 0.0;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j)
                d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return d;
    }

    bool is_hermitian(double tol = 1e-10) const { return hermiticity_defect() <= tol; }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        check_same_dim(o, "operator+=");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        check_same_dim(o, "operator-=");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }

    ComplexMatrix& operator*=(Complex s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }

private:
    void check_same_dim(const ComplexMatrix& o, const char* op) const {
        if (o.dim_ != dim_)
            throw DimensionMismatchError(std::string("ComplexMatrix::") + op +
                                         ": dimensions " + std::to_string(dim_) + " vs " +
                                         std::to_string(o.dim_));
    }

    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

inline ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
inline ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
inline ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
inline ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
inline ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s, 0.0); }
inline ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s, 0.0); }
inline ComplexMatrix operator-(ComplexMatrix a) { return a *= Complex(-1.0, 0.0); }

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError("ComplexMatrix::operator*: dimensions " +
                                     std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

// ----------------------------- fixed 2x2 operators --------------------------

inline ComplexMatrix pauli_x() { return {2, {0.0, 1.0, 1.0, 0.0}}; }

inline ComplexMatrix pauli_y() {
    return {2, {Complex{}, Complex(0.0, -1.0), Complex(0.0, 1.0), Complex{}}};
}

// basis order (up, down) with sigma_z |up> = +|up>
inline ComplexMatrix pauli_z() { return {2, {1.0, 0.0, 0.0, -1.0}}; }

// ----------------------------- composition ----------------------------------

/// Kronecker product; result dim = dim(A)*dim(B).
inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

/// Trace out one factor of a bipartite operator; keep = 0 keeps the first
/// subsystem, keep = 1 the second. Total trace is preserved.
inline ComplexMatrix partial_trace(const ComplexMatrix& m,
                                   std::pair<std::size_t, std::size_t> dims,
                                   std::size_t keep) {
    const auto [da, db] = dims;
    if (da == 0 || db == 0 || m.dim() != da * db)
        throw DimensionMismatchError("partial_trace: matrix dim " + std::to_string(m.dim()) +
                                     " does not factor as " + std::to_string(da) + "*" +
                                     std::to_string(db));
    if (keep > 1) throw OutOfRangeError("partial_trace: keep index must be 0 or 1");
    if (keep == 0) {
        ComplexMatrix out(da);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j) {
                Complex s{};
                for (std::size_t b = 0; b < db; ++b) s += m(i * db + b, j * db + b);
                out(i, j) = s;
            }
        return out;
    }
    ComplexMatrix out(db);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            Complex s{};
            for (std::size_t a = 0; a < da; ++a) s += m(a * db + i, a * db + j);
            out(i, j) = s;
        }
    return out;
}

/// Hilbert-Schmidt (Frobenius) norm, (tr A A^dagger)^{1/2}.
inline double hilbert_schmidt_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& e : a.entries()) s += std::norm(e);
    return std::sqrt(s);
}

} // namespace ergoflow
