#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "ergoflow/eig.hpp"
#include "ergoflow/matrix.hpp"
#include "ergoflow/random.hpp"
#include "test_helpers.hpp"

using namespace ergoflow;
using testing::max_abs_diff;
using testing::random_hermitian;
using testing::random_unitary;

namespace {

ComplexMatrix diag4(double a, double b, double c, double d) {
    ComplexMatrix m(4);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
}

} // namespace

TEST_CASE("tensor product entry layout", "[linalg]") {
    SECTION("sigma_z x identity is diagonal (1,1,-1,-1)") {
        const ComplexMatrix got = tensor_product(pauli_z(), ComplexMatrix::identity(2));
        REQUIRE(max_abs_diff(got, diag4(1, 1, -1, -1)) == 0.0);
    }
    SECTION("identity x identity") {
        const ComplexMatrix got = tensor_product(ComplexMatrix::identity(2),
                                                 ComplexMatrix::identity(2));
        REQUIRE(max_abs_diff(got, ComplexMatrix::identity(4)) == 0.0);
    }
    SECTION("sigma_y x sigma_y matches the hand-expanded anti-diagonal fixture") {
        // (-1, +1, +1, -1) along the anti-diagonal, everything else zero
        ComplexMatrix expected(4);
        expected(0, 3) = -1.0;
        expected(1, 2) = 1.0;
        expected(2, 1) = 1.0;
        expected(3, 0) = -1.0;
        REQUIRE(max_abs_diff(tensor_product(pauli_y(), pauli_y()), expected) == 0.0);
    }
}

TEST_CASE("hermitian_eig fixtures", "[linalg]") {
    SECTION("pauli z spectrum") {
        const auto eig = hermitian_eig(pauli_z());
        REQUIRE(eig.values == std::vector<double>{-1.0, 1.0});
    }
    SECTION("two-qubit Ising diagonal, omega=1 J=0.5") {
        // basis-ordered diagonal {2.5, -0.5, -0.5, -1.5} sorts ascending
        const auto eig = hermitian_eig(diag4(2.5, -0.5, -0.5, -1.5));
        REQUIRE(eig.values == std::vector<double>{-1.5, -0.5, -0.5, 2.5});
    }
    SECTION("identity keeps identity eigenvectors under the tie-break") {
        const auto eig = hermitian_eig(ComplexMatrix::identity(4));
        REQUIRE(eig.values == std::vector<double>{1.0, 1.0, 1.0, 1.0});
        REQUIRE(max_abs_diff(eig.vectors, ComplexMatrix::identity(4)) == 0.0);
    }
    SECTION("non-Hermitian input is rejected") {
        ComplexMatrix m(2);
        m(0, 1) = 1.0; // missing conjugate partner
        REQUIRE_THROWS_AS(hermitian_eig(m), NotHermitianError);
    }
}

TEST_CASE("hermitian_eig properties on random matrices", "[linalg]") {
    Rng rng(20240817);
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            const ComplexMatrix m = random_hermitian(rng, n, 2.0);
            const auto eig = hermitian_eig(m);

            // ascending values
            for (std::size_t k = 1; k < n; ++k) REQUIRE(eig.values[k - 1] <= eig.values[k]);

            // reconstruction and unitarity
            REQUIRE(max_abs_diff(eig.reconstruct(), m) < 1e-9);
            REQUIRE(max_abs_diff(eig.vectors.adjoint() * eig.vectors,
                                 ComplexMatrix::identity(n)) < 1e-10);

            // eigenvalue sum equals the trace
            double sum = 0.0;
            for (const double v : eig.values) sum += v;
            REQUIRE(std::abs(sum - m.trace().real()) < 1e-9);
        }
    }
}

TEST_CASE("hermitian_eig is deterministic", "[linalg]") {
    Rng rng(7);
    const ComplexMatrix m = random_hermitian(rng, 6);
    const auto a = hermitian_eig(m);
    const auto b = hermitian_eig(m);
    REQUIRE(a.values == b.values);
    REQUIRE(a.vectors.entries() == b.vectors.entries());
}

TEST_CASE("partial trace", "[linalg]") {
    SECTION("Bell projector traces to the maximally mixed qubit") {
        ComplexMatrix bell(4);
        bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
        for (const std::size_t keep : {0, 1}) {
            const ComplexMatrix red = partial_trace(bell, {2, 2}, keep);
            REQUIRE(max_abs_diff(red, ComplexMatrix::identity(2) * 0.5) < 1e-15);
        }
    }
    SECTION("product operator: tracing A leaves tr(A) * B") {
        Rng rng(11);
        const ComplexMatrix a = random_hermitian(rng, 2), b = random_hermitian(rng, 3);
        const ComplexMatrix red = partial_trace(tensor_product(a, b), {2, 3}, 1);
        REQUIRE(max_abs_diff(red, b * a.trace()) < 1e-12);
    }
    SECTION("Werner epsilon=0.7 marginal, checked against explicit index summation") {
        const double eps = 0.7;
        ComplexMatrix w = diag4((1 - eps) / 4, (1 - eps) / 4, (1 - eps) / 4, (1 - eps) / 4);
        w(0, 0) += eps / 2;
        w(3, 3) += eps / 2;
        w(0, 3) = w(3, 0) = eps / 2;

        ComplexMatrix expected(2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t a = 0; a < 2; ++a) expected(i, j) += w(a * 2 + i, a * 2 + j);

        const ComplexMatrix red = partial_trace(w, {2, 2}, 1);
        REQUIRE(max_abs_diff(red, expected) == 0.0);
        REQUIRE(max_abs_diff(red, ComplexMatrix::identity(2) * 0.5) < 1e-15);
    }
    SECTION("dimension mismatch is rejected") {
        REQUIRE_THROWS_AS(partial_trace(ComplexMatrix::identity(4), {2, 3}, 0),
                          DimensionMismatchError);
    }
    SECTION("total trace is preserved") {
        Rng rng(12);
        for (int rep = 0; rep < 25; ++rep) {
            const ComplexMatrix m = random_hermitian(rng, 6);
            for (const std::size_t keep : {0, 1}) {
                const Complex t = partial_trace(m, {2, 3}, keep).trace();
                REQUIRE(std::abs(t - m.trace()) < 1e-12);
            }
        }
    }
}

TEST_CASE("hermitian_function", "[linalg]") {
    Rng rng(13);
    SECTION("identity map returns the input") {
        const ComplexMatrix m = random_hermitian(rng, 5);
        REQUIRE(max_abs_diff(hermitian_function(m, [](double x) { return x; }), m) < 1e-10);
    }
    SECTION("sqrt on diag(4, 9)") {
        ComplexMatrix m(2);
        m(0, 0) = 4.0;
        m(1, 1) = 9.0;
        ComplexMatrix expected(2);
        expected(0, 0) = 2.0;
        expected(1, 1) = 3.0;
        REQUIRE(max_abs_diff(hermitian_function(m, [](double x) { return std::sqrt(x); }),
                             expected) < 1e-12);
    }
    SECTION("entropy integrand on Werner epsilon=0.5") {
        const double eps = 0.5;
        ComplexMatrix w = diag4((1 + eps) / 4, (1 - eps) / 4, (1 - eps) / 4, (1 + eps) / 4);
        w(0, 3) = w(3, 0) = eps / 2;
        const auto xlnx = [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; };
        const double got = hermitian_function(w, xlnx).trace().real();

        // oracle: eigenvalues are {0.625, 0.125 x3}
        const double expected = -(0.625 * std::log(0.625) + 3 * 0.125 * std::log(0.125));
        REQUIRE(std::abs(got - expected) < 1e-12);
        REQUIRE_THAT(got, Catch::Matchers::WithinAbs(1.07354, 1e-4));
    }
    SECTION("f undefined at an eigenvalue raises DomainError") {
        REQUIRE_THROWS_AS(hermitian_function(pauli_z(), [](double x) { return std::sqrt(x); }),
                          DomainError);
    }
    SECTION("polynomial composition") {
        const auto f = [](double x) { return x * x; };
        const auto g = [](double x) { return 2.0 * x + 1.0; };
        const auto fg = [&](double x) { return f(g(x)); };
        const ComplexMatrix m = random_hermitian(rng, 4);
        const ComplexMatrix composed = hermitian_function(hermitian_function(m, g), f);
        REQUIRE(max_abs_diff(composed, hermitian_function(m, fg)) < 1e-9);
    }
}

TEST_CASE("hilbert_schmidt_norm", "[linalg]") {
    REQUIRE(hilbert_schmidt_norm(ComplexMatrix::identity(4)) == 2.0);

    // (sigma_z sigma_z)^2 = identity, so the J=1 Ising interaction has norm 2
    const ComplexMatrix zz = tensor_product(pauli_z(), pauli_z());
    REQUIRE_THAT(hilbert_schmidt_norm(zz), Catch::Matchers::WithinAbs(2.0, 1e-14));

    // J=1 flip-flop interaction: two off-diagonal entries of size sqrt(2)
    ComplexMatrix flip(4);
    flip(1, 2) = flip(2, 1) = std::sqrt(2.0);
    REQUIRE_THAT(hilbert_schmidt_norm(flip), Catch::Matchers::WithinAbs(2.0, 1e-14));

    SECTION("unitary invariance") {
        Rng rng(14);
        for (int rep = 0; rep < 20; ++rep) {
            const ComplexMatrix m = random_hermitian(rng, 4);
            const ComplexMatrix u = random_unitary(rng, 4);
            REQUIRE(std::abs(hilbert_schmidt_norm(u * m * u.adjoint()) -
                             hilbert_schmidt_norm(m)) < 1e-9);
        }
    }
}
