#pragma once
#include <stdexcept>
#include <string>

namespace dunklsym {

// Base type for everything thrown by this library, so the CLI boundary can
// catch one type and map it to an exit code.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic: division by a value that reduces to zero.
struct division_by_zero : error {
    using error::error;
};

// sign_of_real / comparisons applied to a value with conj(a) != a.
struct not_real : error {
    using error::error;
};

// to_rat() applied to a value outside Q.
struct not_rational : error {
    using error::error;
};

// Exact polynomial division left a nonzero remainder.
struct not_divisible : error {
    using error::error;
};

// Arithmetic mixing two cyclotomic orders where neither side is rational.
struct order_mismatch : error {
    using error::error;
};

// Two independent constructions of the same object disagreed.
struct construction_mismatch : error {
    using error::error;
};

// A checked algebra identity failed to hold.
struct relation_violated : error {
    using error::error;
};

// Representation parameters fail the admissibility conditions for the
// requested case.
struct incompatible_case : error {
    using error::error;
};

// The requested representation does not exist for any parameter choice
// (for example the half-integer ladder obstruction).
struct no_representation : error {
    using error::error;
};

// Bad user input (CLI flags, malformed rationals, invalid kappa choices).
struct usage_error : error {
    using error::error;
};

// Invariant the implementation relies on failed; indicates a bug here,
// not bad input.
struct internal_error : error {
    using error::error;
};

} // namespace dunklsym
