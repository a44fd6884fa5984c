#pragma once

#include "umbral/rat.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace umbral {

/// An umbra: a named letter whose powers evaluate to a prescribed moment
/// sequence, moments[i] = eval(alpha^i), with moments[0] = 1.
class umbra {
public:
    umbra(std::string name, std::vector<rat> moments);

    /// The distinguished umbra with eval(eps^i) = delta_{i,0}.
    static umbra augmentation(std::string name, std::size_t count);

    const std::string& name() const { return name_; }
    const std::vector<rat>& moments() const { return moments_; }

    /// eval(alpha^k); throws insufficient_moments past the stored list.
    const rat& moment(std::size_t k) const;

private:
    std::string name_;
    std::vector<rat> moments_;
};

/// Exponent map of a single monomial alpha^i beta^j ...; distinct umbra names
/// only, zero exponents dropped.
using umbral_monomial = std::map<std::string, unsigned>;

/// Polynomial in the alphabet of umbrae with rational coefficients.
class umbral_poly {
public:
    umbral_poly() = default;
    static umbral_poly constant(const rat& c);
    static umbral_poly variable(const std::string& name, unsigned exponent = 1);

    /// Minimal expression grammar used by the CLI: rational coefficients,
    /// '^' powers, '*', '+', '-', parentheses.
    static umbral_poly parse(std::string_view text);

    const std::map<umbral_monomial, rat>& terms() const { return terms_; }

    umbral_poly& operator+=(const umbral_poly& o);
    umbral_poly& operator-=(const umbral_poly& o);
    umbral_poly& operator*=(const umbral_poly& o);
    friend umbral_poly operator+(umbral_poly a, const umbral_poly& b) { return a += b; }
    friend umbral_poly operator-(umbral_poly a, const umbral_poly& b) { return a -= b; }
    friend umbral_poly operator*(umbral_poly a, const umbral_poly& b) { return a *= b; }

    friend bool operator==(const umbral_poly& a, const umbral_poly& b) = default;

    std::string str() const;

private:
    void add_term(const umbral_monomial& m, const rat& c);
    std::map<umbral_monomial, rat> terms_; // zero coefficients dropped
};

/// The alphabet in scope for an evaluation.
class umbra_env {
public:
    void add(umbra u);
    bool has(const std::string& name) const;
    const umbra& get(const std::string& name) const; // throws unknown_umbra

private:
    std::map<std::string, umbra> umbrae_;
};

/// Linear functional fixed by eval(alpha^i beta^j ...) = prod of moments
/// across the distinct umbrae.
rat eval(const umbral_poly& p, const umbra_env& env);

/// f ~ g iff eval(f) = eval(g).
bool umbrally_equivalent(const umbral_poly& f, const umbral_poly& g, const umbra_env& env);

/// Moment lists agree up to index `bound` (a decidable surrogate for the
/// all-powers definition; the bound is the caller's statement of scope).
bool exchangeable(const umbra& a, const umbra& b, std::size_t bound);

/// Moments of the n-fold independent sum n.alpha up to index `bound`,
/// computed by iterated binomial convolution of the moment list.
std::vector<rat> dot_power_moments(const umbra& a, std::size_t n, std::size_t bound);

} // namespace umbral
