// hamiltonians.hpp — reference two-qubit Hamiltonians with cached spectra
//
// Both models share the free part hbar*omega*(sigma_z x 1 + 1 x sigma_z).
// The Heisenberg interaction carries a 1/sqrt(2) factor so that its
// Hilbert-Schmidt norm equals the Ising one for every (J, hbar).

#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "ergoflow/eig.hpp"
#include "ergoflow/errors.hpp"
#include "ergoflow/matrix.hpp"

namespace ergoflow {

enum class ModelKind { ising, heisenberg, custom };

inline ModelKind model_kind_from_string(std::string_view s) {
    if (s == "ising") return ModelKind::ising;
    if (s == "heisenberg") return ModelKind::heisenberg;
    if (s == "custom") return ModelKind::custom;
    throw UnknownLabelError("unknown model label: " + std::string(s));
}

inline std::string to_string(ModelKind k) {
    switch (k) {
        case ModelKind::ising: return "ising";
        case ModelKind::heisenberg: return "heisenberg";
        default: return "custom";
    }
}

struct HamiltonianParams {
    double omega = 0.0;
    double coupling = 0.0;
    double hbar = 1.0;
};

// Hermitian observable in energy units plus its ascending spectral decomposition.
class HamiltonianModel {
public:
    HamiltonianModel(ComplexMatrix matrix, ModelKind kind, HamiltonianParams params)
        : matrix_(std::move(matrix)), kind_(kind), params_(params) {
        const double defect = matrix_.hermiticity_defect();
        if (defect > 1e-10)
            throw NotHermitianError("HamiltonianModel: hermiticity defect " +
                                    std::to_string(defect));
        spectrum_ = hermitian_eig(matrix_);
    }

    static HamiltonianModel custom(ComplexMatrix matrix) {
        return HamiltonianModel(std::move(matrix), ModelKind::custom, {});
    }

    std::size_t dim() const { return matrix_.dim(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    const EigenDecomposition& spectrum() const { return spectrum_; }
    ModelKind kind() const { return kind_; }
    const HamiltonianParams& params() const { return params_; }

    double ground_energy() const { return spectrum_.values.front(); }
    double max_abs_energy() const {
        return std::max(std::abs(spectrum_.values.front()), std::abs(spectrum_.values.back()));
    }

private:
    ComplexMatrix matrix_;
    EigenDecomposition spectrum_;
    ModelKind kind_;
    HamiltonianParams params_;
};

namespace detail {

inline void check_model_params(const char* who, double coupling, double hbar) {
    if (coupling < 0.0)
        throw OutOfRangeError(std::string(who) + ": coupling J must be >= 0, got " +
                              std::to_string(coupling));
    if (!(hbar > 0.0))
        throw OutOfRangeError(std::string(who) + ": hbar must be > 0, got " +
                              std::to_string(hbar));
}

} // namespace detail

/// hbar*omega*(sigma_z^1 + sigma_z^2)
inline ComplexMatrix free_hamiltonian(double omega, double hbar = 1.0) {
    const ComplexMatrix sz = pauli_z(), id = ComplexMatrix::identity(2);
    return (tensor_product(sz, id) + tensor_product(id, sz)) * (hbar * omega);
}

/// J*hbar*sigma_z^1 sigma_z^2
inline ComplexMatrix ising_interaction(double coupling, double hbar = 1.0) {
    const ComplexMatrix sz = pauli_z();
    return tensor_product(sz, sz) * (coupling * hbar);
}

/// (J*hbar/sqrt(2))*(sigma_x^1 sigma_x^2 + sigma_y^1 sigma_y^2)
inline ComplexMatrix heisenberg_interaction(double coupling, double hbar = 1.0) {
    const ComplexMatrix sx = pauli_x(), sy = pauli_y();
    return (tensor_product(sx, sx) + tensor_product(sy, sy)) *
           (coupling * hbar / std::sqrt(2.0));
}

/// Eigenvalues {-J hbar, -J hbar, (J-2 omega) hbar, (J+2 omega) hbar}; all
/// eigenstates are product basis states.
inline HamiltonianModel ising_hamiltonian(double omega, double coupling, double hbar = 1.0) {
    detail::check_model_params("ising_hamiltonian", coupling, hbar);
    return HamiltonianModel(free_hamiltonian(omega, hbar) + ising_interaction(coupling, hbar),
                            ModelKind::ising, {omega, coupling, hbar});
}

/// Eigenvalues {-sqrt(2) J hbar, -2 omega hbar, sqrt(2) J hbar, 2 omega hbar}
/// with eigenstates singlet, |dd>, triplet, |uu>.
inline HamiltonianModel heisenberg_hamiltonian(double omega, double coupling, double hbar = 1.0) {
    detail::check_model_params("heisenberg_hamiltonian", coupling, hbar);
    return HamiltonianModel(free_hamiltonian(omega, hbar) + heisenberg_interaction(coupling, hbar),
                            ModelKind::heisenberg, {omega, coupling, hbar});
}

} // namespace ergoflow
