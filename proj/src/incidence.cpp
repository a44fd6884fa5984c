#include "umbral/incidence.hpp"

#include "umbral/errors.hpp"

#include <string>

namespace umbral {

poset::poset(std::size_t n, std::vector<bool> relation) : n_(n), le_(std::move(relation)) {
    if (n_ == 0)
        throw invariant_violation("poset needs at least one element");
    if (le_.size() != n_ * n_)
        throw invariant_violation("relation matrix must be n x n");
    for (std::size_t a = 0; a < n_; ++a) {
        if (!le(a, a))
            throw invariant_violation("relation is not reflexive at " + std::to_string(a));
        for (std::size_t b = 0; b < n_; ++b) {
            if (a != b && le(a, b) && le(b, a))
                throw invariant_violation("relation is not antisymmetric on (" +
                                          std::to_string(a) + ", " + std::to_string(b) + ")");
            if (!le(a, b))
                continue;
            for (std::size_t c = 0; c < n_; ++c)
                if (le(b, c) && !le(a, c))
                    throw invariant_violation("relation is not transitive through " +
                                              std::to_string(b));
        }
    }
}

poset poset::from_pairs(std::size_t n,
                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<bool> le(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
        le[a * n + a] = true;
    for (const auto& [a, b] : pairs) {
        if (a >= n || b >= n)
            throw invariant_violation("pair references an element outside 0..n-1");
        le[a * n + b] = true;
    }
    // Floyd-Warshall style transitive closure.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            if (le[a * n + k])
                for (std::size_t b = 0; b < n; ++b)
                    if (le[k * n + b])
                        le[a * n + b] = true;
    return poset(n, std::move(le));
}

poset poset::chain(std::size_t n) {
    std::vector<bool> le(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            le[a * n + b] = true;
    return poset(n, std::move(le));
}

poset poset::antichain(std::size_t n) {
    std::vector<bool> le(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
        le[a * n + a] = true;
    return poset(n, std::move(le));
}

poset poset::boolean_lattice(std::size_t k) {
    std::size_t n = std::size_t{1} << k;
    std::vector<bool> le(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            le[a * n + b] = (a & ~b) == 0; // subset inclusion on bitmasks
    return poset(n, std::move(le));
}

poset poset::divisor_lattice(unsigned long m) {
    if (m == 0)
        throw invariant_violation("divisor lattice needs m >= 1");
    std::vector<unsigned long> divs;
    for (unsigned long d = 1; d <= m; ++d)
        if (m % d == 0)
            divs.push_back(d);
    std::size_t n = divs.size();
    std::vector<bool> le(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            le[a * n + b] = divs[b] % divs[a] == 0;
    poset p(n, std::move(le));
    p.labels_ = std::move(divs);
    return p;
}

incidence_fn::incidence_fn(poset p) : p_(std::move(p)), vals_(p_.size() * p_.size()) {}

rat incidence_fn::at(std::size_t a, std::size_t b) const {
    if (a >= p_.size() || b >= p_.size())
        throw element_out_of_bounds("interval endpoint outside the poset");
    return vals_[a * p_.size() + b];
}

void incidence_fn::set(std::size_t a, std::size_t b, const rat& v) {
    if (a >= p_.size() || b >= p_.size())
        throw element_out_of_bounds("interval endpoint outside the poset");
    if (!p_.le(a, b)) {
        if (!v.is_zero())
            throw invariant_violation("incidence functions live on intervals a <= b only");
        return;
    }
    vals_[a * p_.size() + b] = v;
}

incidence_fn iconvolve(const incidence_fn& f, const incidence_fn& g) {
    if (!(f.base() == g.base()))
        throw poset_mismatch("convolution of functions over different posets");
    const poset& p = f.base();
    incidence_fn h(p);
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b) {
            if (!p.le(a, b))
                continue;
            rat acc;
            for (std::size_t z = 0; z < p.size(); ++z)
                if (p.le(a, z) && p.le(z, b))
                    acc += f.at(a, z) * g.at(z, b);
            h.set(a, b, acc);
        }
    return h;
}

incidence_fn zeta(const poset& p) {
    incidence_fn f(p);
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.le(a, b))
                f.set(a, b, rat(1));
    return f;
}

incidence_fn delta_fn(const poset& p) {
    incidence_fn f(p);
    for (std::size_t a = 0; a < p.size(); ++a)
        f.set(a, a, rat(1));
    return f;
}

incidence_fn mobius(const poset& p) {
    incidence_fn mu(p);
    // Recursion on the interval: mu(a,a) = 1, mu(a,b) = -sum_{a<=z<b} mu(a,z).
    // Values are filled in order of interval cardinality so every needed
    // mu(a,z) is ready.
    std::vector<std::size_t> card(p.size() * p.size(), 0);
    std::size_t max_card = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.le(a, b)) {
                std::size_t c = 0;
                for (std::size_t z = 0; z < p.size(); ++z)
                    if (p.le(a, z) && p.le(z, b))
                        ++c;
                card[a * p.size() + b] = c;
                max_card = std::max(max_card, c);
            }
    for (std::size_t want = 1; want <= max_card; ++want)
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < p.size(); ++b) {
                if (!p.le(a, b) || card[a * p.size() + b] != want)
                    continue;
                if (a == b) {
                    mu.set(a, b, rat(1));
                    continue;
                }
                rat acc;
                for (std::size_t z = 0; z < p.size(); ++z)
                    if (p.le(a, z) && p.le(z, b) && z != b)
                        acc += mu.at(a, z);
                mu.set(a, b, -acc);
            }
    return mu;
}

std::optional<cfunction<n_plus>> chain_contraction(const incidence_fn& f) {
    const poset& p = f.base();
    if (!(p == poset::chain(p.size())))
        return std::nullopt;
    std::size_t n = p.size();
    // Translation invariance: f(a,b) may depend on b-a only.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            if (f.at(a, b) != f.at(0, b - a))
                return std::nullopt;
    std::vector<rat> g(n);
    for (std::size_t k = 0; k < n; ++k)
        g[k] = f.at(0, k);
    return cfunction_from_values(n - 1, g);
}

} // namespace umbral
