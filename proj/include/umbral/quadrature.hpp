#pragma once

#include <cstddef>
#include <vector>

namespace umbral {

/// Gauss-Legendre rule on [-1, 1]: `n` nodes, exact for polynomials of degree
/// 2n-1.  Nodes are the Legendre roots found by Newton iteration.
struct gl_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

gl_rule gauss_legendre(std::size_t n);

/// Composite rule over [a, b]: `panels` equal panels with a fixed-size
/// Gauss-Legendre rule on each, flattened into plain node/weight arrays.
struct composite_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

composite_rule composite_gauss_legendre(std::size_t panels, double a, double b,
                                        std::size_t points_per_panel = 8);

} // namespace umbral
