#pragma once

#include <stdexcept>
#include <string>

namespace eflab {

// Pole of an evaluated function hit (or approached within the guard radius).
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// A quadrature failed to reach its target accuracy within its node budget.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// A zero list was required to be complete (certified) but is not, or does not
// reach the required height.
class IncompleteZeroListError : public std::runtime_error {
public:
    explicit IncompleteZeroListError(const std::string& what) : std::runtime_error(what) {}
};

// A scan could not certify completeness; carries the offending subinterval.
class CompletenessError : public std::runtime_error {
public:
    CompletenessError(const std::string& what, double lo, double hi)
        : std::runtime_error(what), t_lo(lo), t_hi(hi) {}
    double t_lo;
    double t_hi;
};

// Masked integration rejected (mask covers too much of the range, or the zero
// lists do not cover the required window).
class MaskError : public std::runtime_error {
public:
    explicit MaskError(const std::string& what) : std::runtime_error(what) {}
};

// Rotated real form failed its realness check: the functional-equation data
// (omega, Q, gamma factors) are inconsistent.
class PhaseError : public std::runtime_error {
public:
    explicit PhaseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace eflab
