// thermo.hpp — passive states, ergotropy, Gibbs states, free energy, and the
// exergy balance
//
// Entropies are in nats throughout. The exergy of a state relative to the
// thermal state rho_beta = e^{-beta H}/Z is the free-energy drop
// F(rho) - F(rho_beta); it splits exactly into the ergotropy (unitary part)
// plus the exergy left in the passive state.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "ergoflow/eig.hpp"
#include "ergoflow/errors.hpp"
#include "ergoflow/hamiltonians.hpp"
#include "ergoflow/matrix.hpp"
#include "ergoflow/states.hpp"

namespace ergoflow {

/// Re tr(H rho)
inline double energy_expectation(const HamiltonianModel& h, const DensityMatrix& rho) {
    if (h.dim() != rho.dim())
        throw DimensionMismatchError("energy_expectation: H dim " + std::to_string(h.dim()) +
                                     " vs state dim " + std::to_string(rho.dim()));
    Complex s{};
    const std::size_t n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) s += h.matrix()(i, k) * rho.matrix()(k, i);
    return s.real();
}

/// S(rho) = -tr(rho ln rho) in nats, with 0 ln 0 = 0.
inline double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (const double p : rho.spectrum().values)
        if (p > 0.0) s -= p * std::log(p);
    return std::max(0.0, s);
}

// ----------------------------- passive states --------------------------------

// Passive state of rho under H, the extracted ergotropy, and the
// population-to-level pairing that realizes the optimum.
struct PassiveResult {
    DensityMatrix passive;
    double ergotropy = 0.0;
    // pairing[k] = index into rho's ascending eigenbasis whose population sits
    // on the k-th ascending energy level
    std::vector<std::size_t> pairing;
    // maps rho's eigenvectors onto H's eigenvectors per pairing; U rho U^dagger
    // equals the passive state
    ComplexMatrix optimal_unitary;
};

/// Sorted-pairing construction: descending populations of rho onto ascending
/// energy levels. Degenerate populations and degenerate levels keep stable
/// order, which makes the result (and the optimal unitary) reproducible.
inline PassiveResult passive_state(const DensityMatrix& rho, const HamiltonianModel& h) {
    if (h.dim() != rho.dim())
        throw DimensionMismatchError("passive_state: H dim " + std::to_string(h.dim()) +
                                     " vs state dim " + std::to_string(rho.dim()));
    const std::size_t n = rho.dim();
    const EigenDecomposition& rs = rho.spectrum(); // ascending populations
    const EigenDecomposition& hs = h.spectrum();   // ascending energies

    // stable descending-population order
    std::vector<std::size_t> desc(n);
    std::iota(desc.begin(), desc.end(), std::size_t{0});
    std::stable_sort(desc.begin(), desc.end(),
                     [&](std::size_t i, std::size_t j) { return rs.values[i] > rs.values[j]; });

    ComplexMatrix passive(n);
    double passive_energy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double p = rs.values[desc[k]];
        passive_energy += p * hs.values[k];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                passive(i, j) += p * hs.vectors(i, k) * std::conj(hs.vectors(j, k));
    }
    // U = sum_k |h_k><r_{pairing[k]}|
    ComplexMatrix unitary(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                unitary(i, j) += hs.vectors(i, k) * std::conj(rs.vectors(j, desc[k]));

    PassiveResult out{DensityMatrix(std::move(passive), rho.dims()), 0.0, std::move(desc),
                      std::move(unitary)};
    out.ergotropy = energy_expectation(h, rho) - passive_energy;
    return out;
}

/// Maximum work extractable by a cyclic unitary: tr(H rho) - tr(H passive).
inline double ergotropy(const DensityMatrix& rho, const HamiltonianModel& h) {
    return passive_state(rho, h).ergotropy;
}

// ----------------------------- thermal reference -----------------------------

namespace detail {

inline void check_beta(const HamiltonianModel& h, double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw OutOfRangeError("beta must be positive and finite, got " + std::to_string(beta));
    if (beta * h.max_abs_energy() > 700.0)
        throw OverflowError("beta * max|E| = " + std::to_string(beta * h.max_abs_energy()) +
                            " exceeds the exponential range guard (700)");
}

// ln Z via spectrum-shifted exponentials; safe for any admissible beta
inline double log_partition_function(const HamiltonianModel& h, double beta) {
    check_beta(h, beta);
    const double e0 = h.ground_energy();
    double s = 0.0;
    for (const double e : h.spectrum().values) s += std::exp(-beta * (e - e0));
    return -beta * e0 + std::log(s);
}

} // namespace detail

/// Z = tr e^{-beta H}
inline double partition_function(const HamiltonianModel& h, double beta) {
    return std::exp(detail::log_partition_function(h, beta));
}

/// rho_beta = e^{-beta H}/Z, built from shifted exponentials in the eigenbasis.
inline DensityMatrix gibbs_state(const HamiltonianModel& h, double beta) {
    detail::check_beta(h, beta);
    const EigenDecomposition& hs = h.spectrum();
    const std::size_t n = h.dim();
    const double e0 = h.ground_energy();
    std::vector<double> w(n);
    double z = 0.0;
    for (std::size_t k = 0; k < n; ++k) z += w[k] = std::exp(-beta * (hs.values[k] - e0));
    ComplexMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double p = w[k] / z;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) += p * hs.vectors(i, k) * std::conj(hs.vectors(j, k));
    }
    return DensityMatrix(std::move(m),
                         n == 4 ? std::vector<std::size_t>{2, 2} : std::vector<std::size_t>{n});
}

/// Nonequilibrium free energy F(rho) = tr(H rho) - S(rho)/beta.
inline double free_energy(const DensityMatrix& rho, const HamiltonianModel& h, double beta) {
    detail::check_beta(h, beta);
    return energy_expectation(h, rho) - von_neumann_entropy(rho) / beta;
}

/// Exergy F(rho) - F(rho_beta): work extractable by thermalizing against the
/// beta reservoir. Nonnegative; zero exactly at rho = rho_beta.
inline double exergy(const DensityMatrix& rho, const HamiltonianModel& h, double beta) {
    return free_energy(rho, h, beta) + detail::log_partition_function(h, beta) / beta;
}

// ----------------------------- energy ledger ---------------------------------

// Full energy ledger for one (state, Hamiltonian, beta) triple. All quantities
// are computed independently of one another; balance_residual records how well
// exergy_total = ergotropy + exergy_passive closes numerically.
struct ThermoReport {
    double ergotropy = 0.0;
    double exergy_total = 0.0;
    double exergy_passive = 0.0;
    double entropy_initial = 0.0;
    double entropy_passive = 0.0;
    double entropy_thermal = 0.0;
    double heat = 0.0; // Q = tr(H rho_beta) - tr(H passive)
    double balance_residual = 0.0;
    double beta = 0.0;
};

inline ThermoReport exergy_decomposition(const DensityMatrix& rho, const HamiltonianModel& h,
                                         double beta) {
    detail::check_beta(h, beta);
    const PassiveResult pr = passive_state(rho, h);
    const DensityMatrix rho_beta = gibbs_state(h, beta);
    const double f_thermal = -detail::log_partition_function(h, beta) / beta;

    ThermoReport r;
    r.beta = beta;
    r.ergotropy = pr.ergotropy;
    r.entropy_initial = von_neumann_entropy(rho);
    r.entropy_passive = von_neumann_entropy(pr.passive);
    r.entropy_thermal = von_neumann_entropy(rho_beta);
    r.exergy_total = energy_expectation(h, rho) - r.entropy_initial / beta - f_thermal;
    r.exergy_passive = energy_expectation(h, pr.passive) - r.entropy_passive / beta - f_thermal;
    r.heat = energy_expectation(h, rho_beta) - energy_expectation(h, pr.passive);
    r.balance_residual = r.exergy_total - r.ergotropy - r.exergy_passive;
    return r;
}

// Second-law check for the thermalization leg: the entropy produced while the
// passive state relaxes must cover beta times the heat drawn from the bath.
struct EntropyProductionCheck {
    double margin = 0.0; // Delta S_ex - beta Q
    bool satisfied = false;
};

inline EntropyProductionCheck entropy_production_check(const ThermoReport& r) {
    EntropyProductionCheck c;
    c.margin = (r.entropy_thermal - r.entropy_passive) - r.beta * r.heat;
    c.satisfied = (r.exergy_passive <= 1e-9) || (c.margin >= -1e-9);
    return c;
}

} // namespace ergoflow
