// errors.hpp — exception types shared across the toolkit

#pragma once

#include <stdexcept>
#include <string>

namespace ergoflow {

// Matrix fails the max|M - M^dagger| hermiticity tolerance.
struct NotHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Iterative eigensolver hit its sweep cap before reaching the off-diagonal threshold.
struct NoConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Scalar function undefined (NaN/Inf) at an eigenvalue of its operand.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Parameter outside its admissible range (epsilon, beta, coupling, ...).
struct OutOfRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// beta * max|E| beyond the safe range for exponentials.
struct OverflowError : std::range_error {
    using std::range_error::range_error;
};

// Input matrix has support outside the diagonal + anti-diagonal X pattern,
// or its X parameters carry a non-negligible imaginary part.
struct NotXStateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Closed-form expression degenerates (vanishing denominator) for this input.
struct IndeterminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownLabelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace ergoflow
