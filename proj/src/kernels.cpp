#include "umbral/kernels.hpp"

#include "umbral/errors.hpp"
#include "umbral/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <vector>

namespace umbral {

#if defined(UMBRAL_BUILD_AVX2)
// Defined in kernels_avx2.cpp, compiled with -mavx2 -mfma.
double poisson_pair_sum_avx2(const double* nodes, const double* weights, std::size_t n,
                             const pair_sum_inputs& in);
double weierstrass_pair_sum_avx2(const double* nodes, const double* weights, std::size_t n,
                                 const pair_sum_inputs& in);
#endif

namespace {

bool cpu_has_avx2() {
#if defined(UMBRAL_BUILD_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<simd_mode> g_requested{simd_mode::auto_detect};

double poisson_pair_sum_scalar(const double* x, const double* w, std::size_t n,
                               const pair_sum_inputs& in) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d2 = x[i] - in.v2;
        double d1 = (in.u - x[i]) - in.v1;
        double f2 = in.c2 / (d2 * d2 + in.s2);
        double f1 = in.c1 / (d1 * d1 + in.s1);
        acc += w[i] * f1 * f2;
    }
    return acc;
}

double weierstrass_pair_sum_scalar(const double* x, const double* w, std::size_t n,
                                   const pair_sum_inputs& in) {
    const double c = in.c1 * in.c2;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d2 = x[i] - in.v2;
        double d1 = (in.u - x[i]) - in.v1;
        double e = -(d2 * d2) * in.s2 - (d1 * d1) * in.s1;
        acc += w[i] * c * std::exp(e);
    }
    return acc;
}

void require_positive_scale(double t) {
    if (!(t > 0.0))
        throw nonpositive_scale("kernel scale parameter must be positive");
}

// Mass of the kernel outside [-L, L].
double tail_mass(const kernel_params& kp, double v, double t, double half_width) {
    if (kp.kind == kernel_kind::poisson) {
        double m = 1.0 - (std::atan((half_width - v) / t) + std::atan((half_width + v) / t)) /
                             std::numbers::pi;
        return kp.norm_scale * std::max(m, 0.0);
    }
    double r = std::sqrt(2.0 * t);
    double m = 0.5 * (std::erfc((half_width - v) / r) + std::erfc((half_width + v) / r));
    return kp.norm_scale * std::max(m, 0.0);
}

// Upper bound for K(u - x; v, t) over |x| >= L, |u| <= extent.
double tail_sup(const kernel_params& kp, double extent, double v, double t, double half_width) {
    double d = half_width - extent - std::abs(v);
    if (kp.kind == kernel_kind::poisson) {
        double peak = kp.norm_scale / (std::numbers::pi * t);
        if (d <= 0.0)
            return peak;
        return kp.norm_scale * t / (std::numbers::pi * (d * d + t * t));
    }
    double peak = kp.norm_scale / std::sqrt(2.0 * std::numbers::pi * t);
    if (d <= 0.0)
        return peak;
    return peak * std::exp(-d * d / (2.0 * t));
}

std::vector<double> grid_points(const sample_grid& grid) {
    std::vector<double> u(grid.count == 0 ? 1 : grid.count);
    if (u.size() == 1) {
        u[0] = 0.0;
        return u;
    }
    double step = 2.0 * grid.extent / static_cast<double>(u.size() - 1);
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = -grid.extent + step * static_cast<double>(i);
    return u;
}

} // namespace

kernel_kind kernel_kind_from_name(const std::string& name) {
    if (name == "poisson")
        return kernel_kind::poisson;
    if (name == "weierstrass")
        return kernel_kind::weierstrass;
    throw parse_error("unknown kernel kind: '" + name + "'");
}

const char* kernel_kind_name(kernel_kind k) {
    return k == kernel_kind::poisson ? "poisson" : "weierstrass";
}

double eval_kernel(const kernel_params& kp, double u, double v, double t) {
    require_positive_scale(t);
    double d = u - v;
    if (kp.kind == kernel_kind::poisson)
        return kp.norm_scale * t / (std::numbers::pi * (d * d + t * t));
    return kp.norm_scale * std::exp(-d * d / (2.0 * t)) / std::sqrt(2.0 * std::numbers::pi * t);
}

bool simd_mode_available(simd_mode mode) {
    switch (mode) {
    case simd_mode::auto_detect:
    case simd_mode::scalar:
        return true;
    case simd_mode::avx2:
        return cpu_has_avx2();
    }
    return false;
}

void set_simd_mode(simd_mode mode) {
    if (!simd_mode_available(mode))
        throw invariant_violation("requested SIMD mode is not available on this machine");
    g_requested.store(mode);
}

simd_mode active_simd_mode() {
    simd_mode m = g_requested.load();
    if (m == simd_mode::auto_detect)
        return cpu_has_avx2() ? simd_mode::avx2 : simd_mode::scalar;
    return m;
}

pair_sum_inputs make_pair_inputs(const kernel_params& kp, double u, double v1, double t1,
                                 double v2, double t2) {
    require_positive_scale(t1);
    require_positive_scale(t2);
    pair_sum_inputs in{};
    in.u = u;
    in.v1 = v1;
    in.v2 = v2;
    if (kp.kind == kernel_kind::poisson) {
        in.s1 = t1 * t1;
        in.s2 = t2 * t2;
        in.c1 = kp.norm_scale * t1 / std::numbers::pi;
        in.c2 = kp.norm_scale * t2 / std::numbers::pi;
    } else {
        in.s1 = 1.0 / (2.0 * t1);
        in.s2 = 1.0 / (2.0 * t2);
        in.c1 = kp.norm_scale / std::sqrt(2.0 * std::numbers::pi * t1);
        in.c2 = kp.norm_scale / std::sqrt(2.0 * std::numbers::pi * t2);
    }
    return in;
}

double kernel_pair_sum(kernel_kind kind, std::span<const double> nodes,
                       std::span<const double> weights, const pair_sum_inputs& in,
                       simd_mode mode) {
    if (nodes.size() != weights.size())
        throw invariant_violation("node and weight arrays must match");
    simd_mode m = mode == simd_mode::auto_detect ? active_simd_mode() : mode;
    if (!simd_mode_available(m))
        throw invariant_violation("requested SIMD mode is not available on this machine");
#if defined(UMBRAL_BUILD_AVX2)
    if (m == simd_mode::avx2) {
        return kind == kernel_kind::poisson
                   ? poisson_pair_sum_avx2(nodes.data(), weights.data(), nodes.size(), in)
                   : weierstrass_pair_sum_avx2(nodes.data(), weights.data(), nodes.size(), in);
    }
#endif
    return kind == kernel_kind::poisson
               ? poisson_pair_sum_scalar(nodes.data(), weights.data(), nodes.size(), in)
               : weierstrass_pair_sum_scalar(nodes.data(), weights.data(), nodes.size(), in);
}

semigroup_report check_semigroup(const kernel_params& kp, double v1, double t1, double v2,
                                 double t2, const sample_grid& grid) {
    require_positive_scale(t1);
    require_positive_scale(t2);
    composite_rule rule = composite_gauss_legendre(kp.panels, -kp.half_width, kp.half_width);
    std::vector<double> samples = grid_points(grid);

    semigroup_report rep;
    rep.tolerance = kp.tolerance;
    for (double u : samples) {
        pair_sum_inputs in = make_pair_inputs(kp, u, v1, t1, v2, t2);
        double quad = kernel_pair_sum(kp.kind, rule.nodes, rule.weights, in);
        double closed = eval_kernel(kp, u, v1 + v2, t1 + t2);
        double disc = std::abs(quad - closed);
        if (disc >= rep.max_discrepancy) {
            rep.max_discrepancy = disc;
            rep.worst_u = u;
        }
    }
    rep.evaluations = rule.nodes.size() * samples.size();
    // The dropped tails of the product integral, bounded factor by factor.
    double tail2 = tail_mass(kp, v2, t2, kp.half_width) * tail_sup(kp, grid.extent, v1, t1, kp.half_width);
    rep.tail_bound = tail2;
    rep.pass = rep.max_discrepancy + rep.tail_bound <= kp.tolerance;
    return rep;
}

normalization_report check_normalization(const kernel_params& kp, double v, double t) {
    require_positive_scale(t);
    composite_rule rule = composite_gauss_legendre(kp.panels, -kp.half_width, kp.half_width);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * eval_kernel(kp, rule.nodes[i], v, t);
    normalization_report rep;
    rep.integral = acc;
    rep.tail_bound = tail_mass(kp, v, t, kp.half_width);
    rep.tolerance = kp.tolerance;
    rep.pass = std::abs(acc - 1.0) <= kp.tolerance + rep.tail_bound;
    return rep;
}

shift_report check_shift_delta(const kernel_params& kp, double x1, double x2) {
    if (kp.kind != kernel_kind::poisson)
        throw invariant_violation("shift-delta check applies to the poisson kernel");
    composite_rule rule = composite_gauss_legendre(kp.panels, -kp.half_width, kp.half_width);
    auto boundary = [](double u) { return std::exp(-u * u); };
    // Poisson extension of the boundary data.
    auto extend = [&](double v, double t) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * eval_kernel(kp, rule.nodes[i], v, t) * boundary(rule.nodes[i]);
        return acc;
    };
    // Extension of the shifted boundary data u -> f(u + x).
    auto extend_shifted = [&](double x, double v, double t) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * eval_kernel(kp, rule.nodes[i], v, t) *
                   boundary(rule.nodes[i] + x);
        return acc;
    };

    const double sample_points[][2] = {{0.0, 1.0}, {0.7, 0.4}, {-1.3, 2.0}};
    shift_report rep;
    rep.tolerance = kp.tolerance;
    for (const auto& vt : sample_points) {
        double v = vt[0], t = vt[1];
        // Shifts of the extension compose additively in the argument.
        double a = extend(v + (x1 + x2), t);
        double b = extend((v + x1) + x2, t);
        rep.composition_discrepancy = std::max(rep.composition_discrepancy, std::abs(a - b));
        // Extending shifted data equals shifting the extension.
        double c = extend_shifted(x1, v, t);
        double d = extend(v + x1, t);
        rep.commutation_discrepancy = std::max(rep.commutation_discrepancy, std::abs(c - d));
    }
    rep.pass = rep.composition_discrepancy <= kp.tolerance &&
               rep.commutation_discrepancy <= kp.tolerance;
    return rep;
}

} // namespace umbral
