#pragma once

#include <stdexcept>
#include <string>

namespace floerstair {

// Base class for all domain errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inputs to a torus-knot or cable construction are not coprime (or not positive).
class not_coprime_error : public error {
public:
    using error::error;
};

// exact_div was asked for a quotient that leaves a nonzero remainder.
class not_divisible_error : public error {
public:
    using error::error;
};

// A polynomial fails the alternating-coefficient / symmetry shape required of
// an L-space knot Alexander polynomial.
class not_lspace_form_error : public error {
public:
    using error::error;
};

// A complex whose C{i=0} homology is not one-dimensional was passed to an
// invariant that requires it.
class not_knot_like_error : public error {
public:
    using error::error;
};

// The (from, to, kind) triple is not one of the catalog pairings.
class incompatible_regions_error : public error {
public:
    using error::error;
};

// The basis simplification search did not converge.
class simplification_failed_error : public error {
public:
    using error::error;
};

// A configured resource cap (generator count, depth, time) was exceeded.
class resource_limit_error : public error {
public:
    using error::error;
};

// No registered claim covers the requested knot family.
class no_claim_error : public error {
public:
    using error::error;
};

// An iteration that is guaranteed to terminate exceeded its cap.
class non_termination_error : public error {
public:
    using error::error;
};

// Internal consistency violation; indicates a bug, never a bad input.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_invariant(bool cond, const char* msg) {
    if (!cond)
        throw invariant_violation(msg);
}

}  // namespace floerstair
