// random.hpp — seeded sampling of random density matrices
//
// The uniform and normal mappings are spelled out on top of the raw
// mt19937_64 stream so a given seed produces the same states on every
// standard library implementation.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "ergoflow/matrix.hpp"
#include "ergoflow/states.hpp"

namespace ergoflow {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // uniform on [0, 1) with 53-bit resolution
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller; generates pairs, caches the second
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = 1.0 - uniform(); // (0, 1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// Ginibre-ensemble density matrix: G G^dagger / tr(G G^dagger) with G a
/// complex standard-normal matrix. Full rank with probability one.
inline DensityMatrix ginibre_state(Rng& rng, std::size_t dim = 4,
                                   std::vector<std::size_t> dims = {}) {
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
    ComplexMatrix m = g * g.adjoint();
    const double tr = m.trace().real();
    m *= Complex(1.0 / tr, 0.0);
    return DensityMatrix(std::move(m), std::move(dims));
}

} // namespace ergoflow
