// reproduction.hpp — closed-form Werner-state results for the Ising and
// Heisenberg reference models, plus a regression harness comparing them
// against the generic numeric pipeline
//
// Regime boundaries (omega = J for Ising, omega = J/sqrt(2) for Heisenberg)
// resolve to the ">=" branch; both branches coincide there analytically.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ergoflow/errors.hpp"
#include "ergoflow/hamiltonians.hpp"
#include "ergoflow/states.hpp"
#include "ergoflow/thermo.hpp"

namespace ergoflow {

namespace detail {

inline void check_closed_form_params(const char* who, ModelKind model, double coupling,
                                     double hbar, double epsilon) {
    if (model == ModelKind::custom)
        throw OutOfRangeError(std::string(who) + ": closed forms exist only for the ising and "
                                                 "heisenberg models");
    check_model_params(who, coupling, hbar);
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw OutOfRangeError(std::string(who) + ": epsilon " + std::to_string(epsilon) +
                              " outside [0, 1]");
}

inline bool upper_regime(ModelKind model, double omega, double coupling) {
    return model == ModelKind::ising ? omega >= coupling : omega >= coupling / std::sqrt(2.0);
}

} // namespace detail

inline std::string regime_label(ModelKind model, double omega, double coupling) {
    const bool upper = detail::upper_regime(model, omega, coupling);
    if (model == ModelKind::ising) return upper ? "omega>=J" : "omega<J";
    return upper ? "omega>=J/sqrt2" : "omega<J/sqrt2";
}

/// Werner-state ergotropy E0 * epsilon with
///   E0 = 2 omega hbar (upper regime) or 2 J hbar (Ising) / sqrt(2) J hbar
///   (Heisenberg) in the lower regime.
inline double closed_form_ergotropy(ModelKind model, double omega, double coupling, double hbar,
                                    double epsilon) {
    detail::check_closed_form_params("closed_form_ergotropy", model, coupling, hbar, epsilon);
    const bool upper = detail::upper_regime(model, omega, coupling);
    double e0;
    if (upper)
        e0 = 2.0 * omega * hbar;
    else
        e0 = model == ModelKind::ising ? 2.0 * coupling * hbar
                                       : std::sqrt(2.0) * coupling * hbar;
    return e0 * epsilon;
}

/// Entropy of the Werner passive state (identical for both models):
/// 2 ln 2 - [3(1-e)/4 ln(1-e) + (1+3e)/4 ln(1+3e)], 0 ln 0 = 0.
inline double closed_form_passive_entropy(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw OutOfRangeError("closed_form_passive_entropy: epsilon " + std::to_string(epsilon) +
                              " outside [0, 1]");
    const auto xlnx = [](double c, double arg) { return arg > 0.0 ? c * std::log(arg) : 0.0; };
    return 2.0 * std::log(2.0) - xlnx(3.0 * (1.0 - epsilon) / 4.0, 1.0 - epsilon) -
           xlnx((1.0 + 3.0 * epsilon) / 4.0, 1.0 + 3.0 * epsilon);
}

/// Z_Is = 2(e^{beta J hbar} + e^{-beta J hbar} cosh[2 beta omega hbar]);
/// Z_H  = 2(cosh[sqrt(2) beta J hbar] + cosh[2 beta omega hbar]).
inline double closed_form_partition(ModelKind model, double omega, double coupling, double hbar,
                                    double beta) {
    detail::check_closed_form_params("closed_form_partition", model, coupling, hbar, 0.0);
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw OutOfRangeError("closed_form_partition: beta must be positive and finite");
    const double max_e = std::max(2.0 * std::abs(omega), std::sqrt(2.0) * coupling) * hbar +
                         coupling * hbar;
    if (beta * max_e > 700.0)
        throw OverflowError("closed_form_partition: beta * max|E| exceeds the exponential "
                            "range guard (700)");
    const double bjh = beta * coupling * hbar;
    const double bwh = 2.0 * beta * omega * hbar;
    if (model == ModelKind::ising) return 2.0 * (std::exp(bjh) + std::exp(-bjh) * std::cosh(bwh));
    return 2.0 * (std::cosh(std::sqrt(2.0) * bjh) + std::cosh(bwh));
}

/// Exergy stored in the Werner passive state: Sigma0 * epsilon +
/// (ln Z - S_passive)/beta, with Sigma0 the ground-level energy of the model.
inline double closed_form_exergy_passive(ModelKind model, double omega, double coupling,
                                         double hbar, double epsilon, double beta) {
    detail::check_closed_form_params("closed_form_exergy_passive", model, coupling, hbar, epsilon);
    const bool upper = detail::upper_regime(model, omega, coupling);
    double sigma0;
    if (model == ModelKind::ising)
        sigma0 = upper ? (coupling - 2.0 * omega) * hbar : -coupling * hbar;
    else
        sigma0 = upper ? -2.0 * omega * hbar : -std::sqrt(2.0) * coupling * hbar;
    const double z = closed_form_partition(model, omega, coupling, hbar, beta);
    return sigma0 * epsilon + (std::log(z) - closed_form_passive_entropy(epsilon)) / beta;
}

/// The ergotropy rewritten through the trace-distance discord D = epsilon/2:
/// returns (E0 * epsilon, 2 D E0); the two components are equal by identity.
inline std::pair<double, double> discord_ergotropy_relation(ModelKind model, double omega,
                                                            double coupling, double hbar,
                                                            double epsilon) {
    const double direct = closed_form_ergotropy(model, omega, coupling, hbar, epsilon);
    const double e0 = epsilon > 0.0
                          ? direct / epsilon
                          : closed_form_ergotropy(model, omega, coupling, hbar, 1.0);
    const double discord = epsilon / 2.0;
    return {direct, 2.0 * discord * e0};
}

// ----------------------------- regression harness ----------------------------

// One grid point of the closed-form vs numeric comparison. The *_num columns
// come exclusively from the generic pipeline (werner_state -> passive_state /
// exergy_decomposition / partition_function), never from the closed forms.
struct ClosedFormRow {
    ModelKind model = ModelKind::ising;
    std::string regime;
    double epsilon = 0.0, omega = 0.0, coupling = 0.0, hbar = 1.0, beta = 1.0;
    double ergotropy_cf = 0.0, ergotropy_num = 0.0;
    double exergy_passive_cf = 0.0, exergy_passive_num = 0.0;
    double s_passive_cf = 0.0, s_passive_num = 0.0;
    double z_cf = 0.0, z_num = 0.0;
    double max_abs_err = 0.0;
};

struct ReproductionGrid {
    std::vector<double> epsilons;
    std::vector<std::pair<double, double>> omega_coupling; // (omega, J)
    std::vector<double> betas;
    std::vector<ModelKind> models;
    double hbar = 1.0;

    bool empty() const {
        return epsilons.empty() || omega_coupling.empty() || betas.empty() || models.empty();
    }
    std::size_t size() const {
        return epsilons.size() * omega_coupling.size() * betas.size() * models.size();
    }
};

/// Both regimes of both models plus the exact level crossings omega = J and
/// omega = J/sqrt(2) (the latter built so 2*omega*hbar == sqrt(2)*J*hbar
/// bit-exactly).
inline ReproductionGrid default_grid() {
    ReproductionGrid g;
    for (int i = 0; i <= 10; ++i) g.epsilons.push_back(0.1 * i);
    g.omega_coupling = {{1.0, 0.5},
                        {0.5, 1.0},
                        {1.0, 0.6},
                        {0.5, 0.9},
                        {0.7, 0.7},
                        {0.5 * std::sqrt(2.0), 1.0}};
    g.betas = {0.5, 1.0, 2.0};
    g.models = {ModelKind::ising, ModelKind::heisenberg};
    return g;
}

inline ClosedFormRow reproduce_point(ModelKind model, double omega, double coupling, double hbar,
                                     double epsilon, double beta) {
    ClosedFormRow row;
    row.model = model;
    row.regime = regime_label(model, omega, coupling);
    row.epsilon = epsilon;
    row.omega = omega;
    row.coupling = coupling;
    row.hbar = hbar;
    row.beta = beta;

    row.ergotropy_cf = closed_form_ergotropy(model, omega, coupling, hbar, epsilon);
    row.s_passive_cf = closed_form_passive_entropy(epsilon);
    row.z_cf = closed_form_partition(model, omega, coupling, hbar, beta);
    row.exergy_passive_cf = closed_form_exergy_passive(model, omega, coupling, hbar, epsilon, beta);

    const HamiltonianModel h = model == ModelKind::ising
                                   ? ising_hamiltonian(omega, coupling, hbar)
                                   : heisenberg_hamiltonian(omega, coupling, hbar);
    const DensityMatrix rho = werner_state(epsilon);
    const ThermoReport report = exergy_decomposition(rho, h, beta);
    row.ergotropy_num = report.ergotropy;
    row.s_passive_num = report.entropy_passive;
    row.exergy_passive_num = report.exergy_passive;
    row.z_num = partition_function(h, beta);

    row.max_abs_err = std::max({std::abs(row.ergotropy_cf - row.ergotropy_num),
                                std::abs(row.exergy_passive_cf - row.exergy_passive_num),
                                std::abs(row.s_passive_cf - row.s_passive_num),
                                std::abs(row.z_cf - row.z_num)});
    return row;
}

/// Evaluate every grid point in deterministic order (model, (omega, J), beta,
/// epsilon; row-major). Errors are rethrown with the offending point attached.
inline std::vector<ClosedFormRow> reproduce_all(const ReproductionGrid& grid) {
    if (grid.empty()) throw OutOfRangeError("reproduce_all: empty grid");
    std::vector<ClosedFormRow> rows;
    rows.reserve(grid.size());
    for (const ModelKind model : grid.models)
        for (const auto& [omega, coupling] : grid.omega_coupling)
            for (const double beta : grid.betas)
                for (const double epsilon : grid.epsilons) {
                    const std::string where = " at grid point (" + to_string(model) +
                                              ", omega=" + std::to_string(omega) +
                                              ", J=" + std::to_string(coupling) +
                                              ", beta=" + std::to_string(beta) +
                                              ", epsilon=" + std::to_string(epsilon) + ")";
                    try {
                        rows.push_back(
                            reproduce_point(model, omega, coupling, grid.hbar, epsilon, beta));
                    } catch (const OverflowError& e) {
                        throw OverflowError(e.what() + where);
                    } catch (const OutOfRangeError& e) {
                        throw OutOfRangeError(e.what() + where);
                    } catch (const std::exception& e) {
                        throw std::runtime_error(e.what() + where);
                    }
                }
    return rows;
}

} // namespace ergoflow
