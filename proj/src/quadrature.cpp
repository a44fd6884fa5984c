#include "umbral/quadrature.hpp"

#include "umbral/errors.hpp"

#include <cmath>
#include <numbers>

namespace umbral {

namespace {

// Legendre P_n and its derivative at x via the three-term recurrence.
struct legendre_eval {
    double value;
    double slope;
};

legendre_eval legendre(std::size_t n, double x) {
    double p0 = 1.0;
    double p1 = x;
    if (n == 0)
        return {p0, 0.0};
    for (std::size_t k = 2; k <= n; ++k) {
        double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    double slope = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, slope};
}

} // namespace

gl_rule gauss_legendre(std::size_t n) {
    if (n == 0)
        throw invariant_violation("quadrature rule needs at least one node");
    gl_rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = 2.0;
        return rule;
    }
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 64; ++it) {
            legendre_eval e = legendre(n, x);
            double dx = -e.value / e.slope;
            x += dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        legendre_eval e = legendre(n, x);
        double w = 2.0 / ((1.0 - x * x) * e.slope * e.slope);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
        legendre_eval e = legendre(n, 0.0);
        rule.weights[n / 2] = 2.0 / (e.slope * e.slope);
    }
    return rule;
}

composite_rule composite_gauss_legendre(std::size_t panels, double a, double b,
                                        std::size_t points_per_panel) {
    if (panels == 0)
        throw invariant_violation("composite rule needs at least one panel");
    if (!(b > a))
        throw invariant_violation("composite rule needs b > a");
    gl_rule base = gauss_legendre(points_per_panel);
    composite_rule out;
    out.nodes.reserve(panels * points_per_panel);
    out.weights.reserve(panels * points_per_panel);
    double h = (b - a) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        double left = a + h * static_cast<double>(p);
        double mid = left + 0.5 * h;
        for (std::size_t i = 0; i < points_per_panel; ++i) {
            out.nodes.push_back(mid + 0.5 * h * base.nodes[i]);
            out.weights.push_back(0.5 * h * base.weights[i]);
        }
    }
    return out;
}

} // namespace umbral
