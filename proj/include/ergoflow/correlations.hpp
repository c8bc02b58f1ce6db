// correlations.hpp — two-qubit correlation quantifiers: Wootters concurrence,
// trace-distance discord for X-states, and measurement-optimized discord

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ergoflow/eig.hpp"
#include "ergoflow/errors.hpp"
#include "ergoflow/matrix.hpp"
#include "ergoflow/states.hpp"
#include "ergoflow/thermo.hpp"

namespace ergoflow {

namespace detail {

inline void require_two_qubits(const DensityMatrix& rho, const char* who) {
    if (rho.dim() != 4)
        throw DimensionMismatchError(std::string(who) + ": requires a two-qubit state, dim = " +
                                     std::to_string(rho.dim()));
}

// entropy of a 2x2 Hermitian PSD matrix from its closed-form spectrum
inline double qubit_entropy(const ComplexMatrix& m) {
    const double a = m(0, 0).real(), d = m(1, 1).real();
    const double mid = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
    double s = 0.0;
    for (const double lam : {mid + rad, mid - rad})
        if (lam > 0.0) s -= lam * std::log(lam);
    return std::max(0.0, s);
}

} // namespace detail

// ----------------------------- concurrence -----------------------------------

/// Wootters concurrence C = max{0, l1 - l2 - l3 - l4}, l_n the descending
/// eigenvalues of sqrt(sqrt(rho) rho_tilde sqrt(rho)) with the spin-flipped
/// rho_tilde = (sy x sy) conj(rho) (sy x sy) in the computational basis.
inline double concurrence(const DensityMatrix& rho) {
    detail::require_two_qubits(rho, "concurrence");
    const auto clamp_sqrt = [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; };
    const ComplexMatrix sqrt_rho = hermitian_function(rho.matrix(), clamp_sqrt);
    const ComplexMatrix yy = tensor_product(pauli_y(), pauli_y());
    const ComplexMatrix rho_tilde = yy * rho.matrix().conjugate() * yy;
    const EigenDecomposition eig = hermitian_eig(sqrt_rho * rho_tilde * sqrt_rho);
    // eigenvalues ascending; lambdas descending
    std::array<double, 4> lam{};
    for (std::size_t k = 0; k < 4; ++k) lam[k] = clamp_sqrt(eig.values[3 - k]);
    const double c = lam[0] - lam[1] - lam[2] - lam[3];
    return std::clamp(c, 0.0, 1.0);
}

// ----------------------------- X-state parameters ----------------------------

// Real parametrization of an X-shaped two-qubit state (1-based entry labels
// rho_ij refer to the {uu, ud, du, dd} basis):
//   gamma1 = 2(rho_32 + rho_41), gamma2 = 2(rho_32 - rho_41),
//   gamma3 = 1 - 2(rho_22 + rho_33), x = 2(rho_11 + rho_22) - 1.
struct XStateParams {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0;
    double x = 0.0;
    std::array<double, 4> diag{};  // populations
    std::array<Complex, 2> anti{}; // coherences rho_14, rho_23
};

inline XStateParams extract_x_params(const DensityMatrix& rho) {
    detail::require_two_qubits(rho, "extract_x_params");
    const ComplexMatrix& m = rho.matrix();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool x_slot = (i == j) || (i + j == 3);
            if (!x_slot && std::abs(m(i, j)) >= 1e-10)
                throw NotXStateError("extract_x_params: entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") has magnitude " +
                                     std::to_string(std::abs(m(i, j))) +
                                     ", not an X-shaped state");
        }

    const Complex g1 = 2.0 * (m(2, 1) + m(3, 0));
    const Complex g2 = 2.0 * (m(2, 1) - m(3, 0));
    if (std::abs(g1.imag()) > 1e-10 || std::abs(g2.imag()) > 1e-10)
        throw NotXStateError("extract_x_params: anti-diagonal coherences carry an imaginary "
                             "part beyond 1e-10; gamma parameters must be real");

    XStateParams p;
    p.gamma1 = g1.real();
    p.gamma2 = g2.real();
    p.gamma3 = 1.0 - 2.0 * (m(1, 1).real() + m(2, 2).real());
    p.x = 2.0 * (m(0, 0).real() + m(1, 1).real()) - 1.0;
    for (std::size_t i = 0; i < 4; ++i) p.diag[i] = m(i, i).real();
    p.anti = {m(0, 3), m(1, 2)};
    return p;
}

// ----------------------------- trace-distance discord ------------------------

/// One-sided trace-distance discord of an X-state (measurement side A).
/// Bell-diagonal inputs (x = 0 to 1e-9) take the degenerate-limit fallback:
/// half the median of {|gamma1|, |gamma2|, |gamma3|}.
inline double trace_distance_discord(const DensityMatrix& rho) {
    const XStateParams p = extract_x_params(rho);
    if (std::abs(p.x) <= 1e-9) {
        std::array<double, 3> g{std::abs(p.gamma1), std::abs(p.gamma2), std::abs(p.gamma3)};
        std::sort(g.begin(), g.end());
        return 0.5 * g[1];
    }
    const double g1 = p.gamma1 * p.gamma1;
    const double g2 = p.gamma2 * p.gamma2;
    const double g3 = p.gamma3 * p.gamma3;
    const double xx = p.x * p.x;
    const double hi = std::max(g3, g2 + xx);
    const double num = g1 * hi - g2 * std::max(g3, g1);
    const double den = hi - std::min(g3, g1) + g1 - g2;
    if (std::abs(den) <= 1e-9)
        throw IndeterminateError("trace_distance_discord: denominator " + std::to_string(den) +
                                 " vanishes while x = " + std::to_string(p.x) + " is nonzero");
    double ratio = num / den;
    if (ratio < 0.0 && ratio > -1e-12) ratio = 0.0;
    if (ratio < 0.0)
        throw IndeterminateError("trace_distance_discord: negative radicand " +
                                 std::to_string(ratio));
    return 0.5 * std::sqrt(ratio);
}

// ----------------------------- mutual information ----------------------------

/// I(rho) = S(rho_A) + S(rho_B) - S(rho_AB) for a bipartite state.
inline double mutual_information(const DensityMatrix& rho) {
    const auto& dims = rho.dims();
    if (dims.size() != 2)
        throw DimensionMismatchError("mutual_information: state is not bipartite");
    const std::pair<std::size_t, std::size_t> d{dims[0], dims[1]};
    const DensityMatrix rho_a(partial_trace(rho.matrix(), d, 0), {dims[0]});
    const DensityMatrix rho_b(partial_trace(rho.matrix(), d, 1), {dims[1]});
    return von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) - von_neumann_entropy(rho);
}

// ----------------------------- measured discord ------------------------------

// Rank-1 projective measurement direction on qubit A.
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;

    // (1 + n.sigma)/2 for n = (sin t cos p, sin t sin p, cos t)
    ComplexMatrix projector0() const {
        const double st = std::sin(theta), ct = std::cos(theta);
        ComplexMatrix m(2);
        m(0, 0) = 0.5 * (1.0 + ct);
        m(1, 1) = 0.5 * (1.0 - ct);
        m(0, 1) = 0.5 * st * Complex(std::cos(phi), -std::sin(phi));
        m(1, 0) = std::conj(m(0, 1));
        return m;
    }

    ComplexMatrix projector1() const { return ComplexMatrix::identity(2) - projector0(); }
};

struct GridSpec {
    std::size_t n_theta = 181; // points on [0, pi]
    std::size_t n_phi = 361;   // points on [0, 2 pi]
};

struct OzDiscordResult {
    double value = 0.0;
    MeasurementBasis minimizer;
};

namespace detail {

// average conditional entropy of B after measuring A along (theta, phi)
inline double conditional_entropy(const ComplexMatrix& rho, double theta, double phi) {
    const MeasurementBasis basis{theta, phi};
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    double s = 0.0;
    for (int k = 0; k < 2; ++k) {
        const ComplexMatrix proj = tensor_product(k == 0 ? basis.projector0() : basis.projector1(),
                                                  id2);
        const ComplexMatrix reduced = partial_trace(proj * rho * proj, {2, 2}, 1);
        const double pk = reduced.trace().real();
        if (pk < 1e-14) continue;
        s += pk * qubit_entropy(reduced * (1.0 / pk));
    }
    return s;
}

// bounded golden-section minimization; deterministic fixed iteration count
template <typename F>
inline std::pair<double, double> golden_minimize(F f, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 80 && (b - a) > 1e-12; ++it) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return fc <= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

} // namespace detail

/// Olliver–Zurek discord by brute-force minimization over rank-1 projective
/// measurements on A: a deterministic (theta, phi) grid scan (ties keep the
/// smallest theta, then phi) followed by one coordinate-descent refinement
/// pass. Returns the discord and the minimizing direction.
inline OzDiscordResult oz_discord_numeric(const DensityMatrix& rho, const GridSpec& grid = {}) {
    detail::require_two_qubits(rho, "oz_discord_numeric");
    if (grid.n_theta < 64 || grid.n_phi < 64)
        throw OutOfRangeError("oz_discord_numeric: grid resolution must be >= 64 per angle");

    constexpr double kPi = 3.14159265358979323846;
    const ComplexMatrix& m = rho.matrix();

    double best = 0.0, best_theta = 0.0, best_phi = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < grid.n_theta; ++i) {
        const double theta = kPi * static_cast<double>(i) / static_cast<double>(grid.n_theta - 1);
        for (std::size_t j = 0; j < grid.n_phi; ++j) {
            const double phi =
                2.0 * kPi * static_cast<double>(j) / static_cast<double>(grid.n_phi - 1);
            const double val = detail::conditional_entropy(m, theta, phi);
            if (first || val < best) {
                first = false;
                best = val;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    // one refinement pass: theta then phi, each within one grid cell
    const double h_theta = kPi / static_cast<double>(grid.n_theta - 1);
    const double h_phi = 2.0 * kPi / static_cast<double>(grid.n_phi - 1);
    const auto [theta_ref, val_theta] = detail::golden_minimize(
        [&](double t) { return detail::conditional_entropy(m, t, best_phi); },
        std::max(0.0, best_theta - h_theta), std::min(kPi, best_theta + h_theta));
    if (val_theta < best) {
        best = val_theta;
        best_theta = theta_ref;
    }
    const auto [phi_ref, val_phi] = detail::golden_minimize(
        [&](double p) { return detail::conditional_entropy(m, best_theta, p); },
        best_phi - h_phi, best_phi + h_phi);
    if (val_phi < best) {
        best = val_phi;
        best_phi = phi_ref;
    }

    const DensityMatrix rho_a(partial_trace(m, {2, 2}, 0), {2});
    double value = von_neumann_entropy(rho_a) - von_neumann_entropy(rho) + best;
    if (value < 0.0 && value > -1e-9) value = 0.0;
    return {value, {best_theta, best_phi}};
}

/// Closed-form Olliver–Zurek discord of the Werner state (optimal measurement
/// is the z direction):
///   (1-e)/4 ln(1-e) + (1+3e)/4 ln(1+3e) - (1+e)/2 ln(1+e), with 0 ln 0 = 0.
inline double oz_discord_closed_werner(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw OutOfRangeError("oz_discord_closed_werner: epsilon " + std::to_string(epsilon) +
                              " outside [0, 1]");
    const auto xlnx = [](double c, double arg) { return arg > 0.0 ? c * std::log(arg) : 0.0; };
    return xlnx((1.0 - epsilon) / 4.0, 1.0 - epsilon) +
           xlnx((1.0 + 3.0 * epsilon) / 4.0, 1.0 + 3.0 * epsilon) -
           xlnx((1.0 + epsilon) / 2.0, 1.0 + epsilon);
}

} // namespace ergoflow
