#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace umbral {

/// The two continuous tokens verified by this module, in one dimension:
/// the Poisson kernel (1/pi)·t/((u-v)^2 + t^2) on the upper half plane and
/// the Gauss-Weierstrass kernel exp(-(z-w)^2/(2 tau))/sqrt(2 pi tau).
/// Everything here is binary64; the rest of the library stays exact.
enum class kernel_kind { poisson, weierstrass };

kernel_kind kernel_kind_from_name(const std::string& name);
const char* kernel_kind_name(kernel_kind k);

struct kernel_params {
    kernel_kind kind = kernel_kind::poisson;
    std::size_t panels = 2000;   // composite Gauss-Legendre panels over [-L, L]
    double half_width = 200.0;   // L
    double tolerance = 1e-6;     // absolute error bound for verdicts
    double norm_scale = 1.0;     // multiplier on the normalizing constant;
                                 // anything but 1 breaks the semigroup law,
                                 // which makes FAIL verdicts demonstrable
};

/// Pointwise kernel value K(u; v, t); throws nonpositive_scale for t <= 0.
double eval_kernel(const kernel_params& kp, double u, double v, double t);

// -- SIMD selection ---------------------------------------------------------
//
// The quadrature inner loops (weighted sums of kernel products over the
// flattened node array) have a scalar reference implementation and an AVX2
// variant; the fastest available one is picked at runtime.  Tests pin the
// mode to cross-check the two paths against each other.

enum class simd_mode { auto_detect, scalar, avx2 };

bool simd_mode_available(simd_mode mode);
void set_simd_mode(simd_mode mode); // throws invariant_violation if unavailable
simd_mode active_simd_mode();       // resolved mode (never auto_detect)

/// Precomputed per-factor constants for the product quadrature
/// sum_i w_i · F2(x_i) · F1(u - x_i) where
///   poisson:      F(d) = c / (d^2 + s)        with s = t^2,  c = scale·t/pi
///   weierstrass:  F(d) = c · exp(-d^2 · s)    with s = 1/(2 tau), c = scale/sqrt(2 pi tau)
struct pair_sum_inputs {
    double u;
    double v1, s1, c1;
    double v2, s2, c2;
};

pair_sum_inputs make_pair_inputs(const kernel_params& kp, double u, double v1, double t1,
                                 double v2, double t2);

/// The dispatched inner loop; `mode` exists so the equivalence tests can run
/// every implementation on identical data.
double kernel_pair_sum(kernel_kind kind, std::span<const double> nodes,
                       std::span<const double> weights, const pair_sum_inputs& in,
                       simd_mode mode = simd_mode::auto_detect);

// -- verification reports -----------------------------------------------------

struct sample_grid {
    std::size_t count = 21; // u samples, evenly spaced over [-extent, extent]
    double extent = 5.0;
};

struct semigroup_report {
    bool pass = false;
    double max_discrepancy = 0.0; // max |quadrature - closed form| over the grid
    double worst_u = 0.0;
    double tail_bound = 0.0; // analytic bound on the truncated tail mass
    double tolerance = 0.0;
    std::size_t evaluations = 0;
};

/// Verifies K(u; v1+v2, t1+t2) = integral of K(x; v2, t2) K(u-x; v1, t1) dx
/// over the truncated domain, on a grid of u samples.  PASS means the worst
/// discrepancy plus the tail bound stays within tolerance.
semigroup_report check_semigroup(const kernel_params& kp, double v1, double t1, double v2,
                                 double t2, const sample_grid& grid = {});

struct normalization_report {
    bool pass = false;
    double integral = 0.0;
    double tail_bound = 0.0;
    double tolerance = 0.0;
};

/// The kernel must integrate to 1 over the line, up to tolerance plus the
/// analytic tail bound for the truncated domain.
normalization_report check_normalization(const kernel_params& kp, double v, double t);

struct shift_report {
    bool pass = false;
    double composition_discrepancy = 0.0; // Q(x1)Q(x2) versus Q(x1+x2)
    double commutation_discrepancy = 0.0; // extension of shifted data versus shifted extension
    double tolerance = 0.0;
};

/// Euclidean shifts on Poisson extensions: shifts compose additively, and
/// shifting the boundary data commutes with taking the extension.  Boundary
/// data is exp(-u^2); Poisson kind only.
shift_report check_shift_delta(const kernel_params& kp, double x1, double x2);

} // namespace umbral
