#pragma once

#include "umbral/csemigroup.hpp"
#include "umbral/rat.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace umbral {

/// Finite poset on elements 0..n-1; the order relation is verified to be
/// reflexive, antisymmetric and transitive on construction.
class poset {
public:
    poset(std::size_t n, std::vector<bool> le);

    /// Builds the reflexive-transitive closure of the given pairs, then
    /// validates; handy for JSON input listing covers.
    static poset from_pairs(std::size_t n,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    static poset chain(std::size_t n);
    static poset antichain(std::size_t n);
    /// Subsets of {0..k-1} ordered by inclusion (2^k elements).
    static poset boolean_lattice(std::size_t k);
    /// Divisors of m ordered by divisibility; labels() gives the divisor per
    /// element index.
    static poset divisor_lattice(unsigned long m);

    std::size_t size() const { return n_; }
    bool le(std::size_t a, std::size_t b) const { return le_[a * n_ + b]; }
    const std::vector<unsigned long>& labels() const { return labels_; }

    /// Structural equality; display labels do not participate.
    friend bool operator==(const poset& a, const poset& b) {
        return a.n_ == b.n_ && a.le_ == b.le_;
    }

private:
    std::size_t n_;
    std::vector<bool> le_;
    std::vector<unsigned long> labels_; // optional display names (divisor lattice)
};

/// Rational function on the intervals of a poset; entries outside the order
/// relation are identically zero (the incidence-algebra convention).
class incidence_fn {
public:
    explicit incidence_fn(poset p);

    const poset& base() const { return p_; }
    rat at(std::size_t a, std::size_t b) const;
    void set(std::size_t a, std::size_t b, const rat& v);

    friend bool operator==(const incidence_fn& f, const incidence_fn& g) = default;

private:
    poset p_;
    std::vector<rat> vals_;
};

/// Convolution h(a,b) = sum_{a<=z<=b} f(a,z) g(z,b).
incidence_fn iconvolve(const incidence_fn& f, const incidence_fn& g);

incidence_fn zeta(const poset& p);
incidence_fn delta_fn(const poset& p);

/// Convolution inverse of zeta: mu(a,a) = 1, mu(a,b) = -sum_{a<=z<b} mu(a,z).
incidence_fn mobius(const poset& p);

/// On a chain, functions depending only on b-a contract to functions on the
/// non-negative integers, and the contraction is an algebra homomorphism.
/// Returns nullopt when the function is not translation invariant (or the
/// poset is not the chain).
std::optional<cfunction<n_plus>> chain_contraction(const incidence_fn& f);

} // namespace umbral
