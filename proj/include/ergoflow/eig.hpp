// eig.hpp — deterministic Hermitian eigensolver (cyclic complex Jacobi) and
// spectral calculus

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "ergoflow/errors.hpp"
#include "ergoflow/matrix.hpp"

namespace ergoflow {

// Eigenvalues ascending; vectors holds the matching orthonormal eigenvectors
// as columns. Reconstruction V diag(values) V^dagger matches the input to 1e-10.
struct EigenDecomposition {
    std::vector<double> values;
    ComplexMatrix vectors;

    ComplexMatrix reconstruct() const {
        const std::size_t n = values.size();
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Complex s{};
                for (std::size_t k = 0; k < n; ++k)
                    s += values[k] * vectors(i, k) * std::conj(vectors(j, k));
                m(i, j) = s;
            }
        return m;
    }
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < a.dim(); ++p)
        for (std::size_t q = p + 1; q < a.dim(); ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
}

} // namespace detail

/// Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Determinism contract: fixed sweep order (p<q, row-major), off-diagonal
/// Frobenius threshold 1e-13, sweep cap 100. Eigenvalues sorted ascending with
/// a stable tie-break (degenerate values keep the order their eigenvectors
/// emerged from the sweep schedule), then each eigenvector is canonicalized by
/// making its largest-magnitude component real and positive (first maximal
/// component on ties). Identical input produces identical output.
inline EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol = 1e-10) {
    const std::size_t n = m.dim();
    if (n == 0) throw DimensionMismatchError("hermitian_eig: empty matrix");
    const double defect = m.hermiticity_defect();
    if (defect > tol)
        throw NotHermitianError("hermitian_eig: max|M - M^dagger| = " + std::to_string(defect) +
                                " exceeds tolerance " + std::to_string(tol));

    // symmetrize to absorb round-off from operator construction
    ComplexMatrix a = (m + m.adjoint()) * 0.5;
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr double kOffThreshold = 1e-13;
    constexpr int kMaxSweeps = 100;

    int sweep = 0;
    while (detail::off_diagonal_norm(a) > kOffThreshold) {
        if (++sweep > kMaxSweeps)
            throw NoConvergenceError("hermitian_eig: no convergence after " +
                                     std::to_string(kMaxSweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-290) {
                    a(p, q) = a(q, p) = Complex{};
                    continue;
                }
                const Complex phase = apq / mag; // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A <- U^dagger A U with the plane unitary
                //   U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * std::conj(phase) * aiq;
                    a(i, q) = s * aip + c * std::conj(phase) * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * phase * aqj;
                    a(q, j) = s * apj + c * phase * aqj;
                }
                a(p, q) = a(q, p) = Complex{};
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);

                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * std::conj(phase) * viq;
                    v(i, q) = s * vip + c * std::conj(phase) * viq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.values[k] = a(src, src).real();

        // canonical phase: largest-magnitude component (first on ties) real-positive
        std::size_t imax = 0;
        double amax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ai = std::abs(v(i, src));
            if (ai > amax) {
                amax = ai;
                imax = i;
            }
        }
        const Complex pivot = v(imax, src);
        const Complex rot = (std::abs(pivot) > 0.0) ? std::conj(pivot) / std::abs(pivot)
                                                    : Complex(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = rot * v(i, src);
    }
    return out;
}

/// Apply a real scalar function through the spectral decomposition:
/// f(M) = V f(Lambda) V^dagger. The caller owns edge conventions (e.g. map
/// x <= 0 to 0 before sqrt/log); a NaN or infinite f(lambda) is a DomainError.
inline ComplexMatrix hermitian_function(const ComplexMatrix& m,
                                        const std::function<double(double)>& f,
                                        double tol = 1e-10) {
    const EigenDecomposition eig = hermitian_eig(m, tol);
    const std::size_t n = m.dim();
    std::vector<double> fv(n);
    for (std::size_t k = 0; k < n; ++k) {
        fv[k] = f(eig.values[k]);
        if (!std::isfinite(fv[k]))
            throw DomainError("hermitian_function: f undefined at eigenvalue " +
                              std::to_string(eig.values[k]));
    }
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex s{};
            for (std::size_t k = 0; k < n; ++k)
                s += fv[k] * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
            out(i, j) = s;
        }
    return out;
}

} // namespace ergoflow
