#ifndef IEPS_TYPES_HPP
#define IEPS_TYPES_HPP

#include <stdexcept>
#include <string>

namespace ieps {

// Bad arguments, violated preconditions, malformed files.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The requested spectral data is provably not realizable in the target class.
struct realizability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Eigensolver trouble, non-convergence, tolerance artifacts.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Tolerances {
    double eig_gap = 1e-8;     // relative eigenvalue grouping threshold
    double residual = 1e-8;    // max accepted ||Av - lambda v|| and spectrum deviation
    double rank_rel = 1e-10;   // relative singular-value cutoff for rank decisions
    double sign_floor = 1e-10; // smallest magnitude counted as a nonzero entry

    void validate() const {
        if (eig_gap <= 0 || residual <= 0 || rank_rel <= 0 || sign_floor <= 0)
            throw input_error("tolerances must be strictly positive");
    }
};

} // namespace ieps

#endif
