// states.hpp — validated density matrices, pure states, Werner/Bell/basis
// constructors
//
// Fixed two-qubit basis order: {uu, ud, du, dd} with u the excited state
// (sigma_z |u> = +|u>). The first qubit is the most significant index.

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ergoflow/eig.hpp"
#include "ergoflow/errors.hpp"
#include "ergoflow/matrix.hpp"

namespace ergoflow {

enum class BellKind { phi_plus, psi_minus };

enum class Spin { up, down };

inline BellKind bell_kind_from_string(std::string_view s) {
    if (s == "phi_plus") return BellKind::phi_plus;
    if (s == "psi_minus") return BellKind::psi_minus;
    throw UnknownLabelError("unknown Bell state label: " + std::string(s));
}

inline std::string to_string(BellKind k) {
    return k == BellKind::phi_plus ? "phi_plus" : "psi_minus";
}

// ----------------------------- pure states -----------------------------------

class PureState {
public:
    explicit PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
        double n2 = 0.0;
        for (const auto& a : amplitudes_) n2 += std::norm(a);
        if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
            throw OutOfRangeError("PureState: norm " + std::to_string(std::sqrt(n2)) +
                                  " deviates from 1 beyond 1e-12");
    }

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }

    ComplexMatrix projector() const {
        ComplexMatrix p(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                p(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
        return p;
    }

private:
    std::vector<Complex> amplitudes_;
};

inline PureState bell_state(BellKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    if (kind == BellKind::phi_plus) return PureState({r, 0.0, 0.0, r});
    return PureState({0.0, r, -r, 0.0});
}

inline PureState bell_state(std::string_view label) {
    return bell_state(bell_kind_from_string(label));
}

inline PureState basis_state(const std::vector<Spin>& pattern) {
    if (pattern.empty()) throw UnknownLabelError("basis_state: empty spin pattern");
    std::size_t dim = 1, index = 0;
    for (const Spin s : pattern) {
        dim *= 2;
        index = 2 * index + (s == Spin::down ? 1 : 0);
    }
    std::vector<Complex> amps(dim, Complex{});
    amps[index] = 1.0;
    return PureState(std::move(amps));
}

/// Pattern string of 'u'/'d' characters, e.g. "dd" -> (0,0,0,1).
inline PureState basis_state(std::string_view pattern) {
    std::vector<Spin> spins;
    spins.reserve(pattern.size());
    for (const char c : pattern) {
        if (c == 'u')
            spins.push_back(Spin::up);
        else if (c == 'd')
            spins.push_back(Spin::down);
        else
            throw UnknownLabelError(std::string("basis_state: unknown spin character '") + c +
                                    "' (expected 'u' or 'd')");
    }
    return basis_state(spins);
}

// ----------------------------- density matrices ------------------------------

// Validated quantum state: Hermitian to 1e-10, unit trace to 1e-10, eigenvalues
// >= -1e-10 with the [-1e-10, 0) window clamped to 0 in the cached spectrum.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims = {})
        : matrix_(std::move(matrix)), dims_(std::move(dims)) {
        if (dims_.empty()) dims_ = matrix_.dim() == 4 ? std::vector<std::size_t>{2, 2}
                                                      : std::vector<std::size_t>{matrix_.dim()};
        std::size_t prod = 1;
        for (const std::size_t d : dims_) prod *= d;
        if (prod != matrix_.dim())
            throw DimensionMismatchError("DensityMatrix: subsystem dims do not multiply to " +
                                         std::to_string(matrix_.dim()));

        const double defect = matrix_.hermiticity_defect();
        if (defect > 1e-10)
            throw NotHermitianError("DensityMatrix: hermiticity defect " + std::to_string(defect));
        const double tr = matrix_.trace().real();
        if (std::abs(tr - 1.0) > 1e-10)
            throw OutOfRangeError("DensityMatrix: trace " + std::to_string(tr) +
                                  " deviates from 1 beyond 1e-10");

        eig_ = hermitian_eig(matrix_);
        for (double& v : eig_.values) {
            if (v < -1e-10)
                throw OutOfRangeError("DensityMatrix: negative eigenvalue " + std::to_string(v));
            if (v < 0.0) v = 0.0;
        }
    }

    static DensityMatrix from_pure(const PureState& psi, std::vector<std::size_t> dims = {}) {
        return DensityMatrix(psi.projector(), std::move(dims));
    }

    std::size_t dim() const { return matrix_.dim(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<std::size_t>& dims() const { return dims_; }

    // cached ascending spectrum, populations clamped to be nonnegative
    const EigenDecomposition& spectrum() const { return eig_; }

private:
    ComplexMatrix matrix_;
    std::vector<std::size_t> dims_;
    EigenDecomposition eig_;
};

/// Werner state (1-eps)/4 * identity + eps |bell><bell| with eigenvalues
/// {(1+3 eps)/4, (1-eps)/4 x3}.
inline DensityMatrix werner_state(double epsilon, BellKind kind = BellKind::phi_plus) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw OutOfRangeError("werner_state: epsilon " + std::to_string(epsilon) +
                              " outside [0, 1]");
    ComplexMatrix m = bell_state(kind).projector() * epsilon;
    const double mix = (1.0 - epsilon) / 4.0;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) += mix;
    return DensityMatrix(std::move(m), {2, 2});
}

} // namespace ergoflow
