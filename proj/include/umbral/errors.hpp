#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

/// Base class of every error thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A constructor argument violates a documented type invariant.
struct invariant_violation : error {
    using error::error;
};

/// Malformed textual input (series literals, JSON files, umbral expressions).
struct parse_error : error {
    using error::error;
};

// -- series ---------------------------------------------------------------
struct flavor_mismatch : error {
    using error::error;
};
struct non_unit_constant_term : error {
    using error::error;
};
struct nonzero_inner_constant : error {
    using error::error;
};

// -- c-semigroup functions ------------------------------------------------
struct semigroup_mismatch : error {
    using error::error;
};
struct element_out_of_bounds : error {
    using error::error;
};
struct support_too_large : error {
    using error::error;
};

// -- tokens ----------------------------------------------------------------
struct reproducing_check_failed : error {
    using error::error;
};

// -- operators --------------------------------------------------------------
struct not_a_delta_operator : error {
    using error::error;
};
struct not_shift_invariant : error {
    using error::error;
};
struct reconstruction_failed : error {
    using error::error;
};
struct degree_overflow : error {
    using error::error;
};

// -- recurrences -------------------------------------------------------------
struct zero_diagonal : error {
    using error::error;
};
struct unsupported_kernel_shape : error {
    using error::error;
};

// -- incidence algebra --------------------------------------------------------
struct poset_mismatch : error {
    using error::error;
};

// -- umbrae ---------------------------------------------------------------
struct unknown_umbra : error {
    using error::error;
};
struct insufficient_moments : error {
    using error::error;
};

// -- continuous kernels -----------------------------------------------------
struct nonpositive_scale : error {
    using error::error;
};

} // namespace umbral
