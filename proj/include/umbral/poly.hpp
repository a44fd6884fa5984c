#pragma once

#include "umbral/rat.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace umbral {

/// Dense univariate polynomial over rat, normalized (no trailing zero
/// coefficients; the zero polynomial stores nothing and has degree -1).
class poly {
public:
    poly() = default;
    explicit poly(std::vector<rat> coeffs);
    static poly constant(const rat& c);
    static poly monomial(const rat& c, std::size_t k); // c·x^k

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : rat(0); }
    const std::vector<rat>& coeffs() const { return coeffs_; }

    rat eval(const rat& x) const;

    friend bool operator==(const poly& a, const poly& b) = default;

private:
    void normalize();
    std::vector<rat> coeffs_;
};

poly add(const poly& a, const poly& b);
poly sub(const poly& a, const poly& b);
poly mul(const poly& a, const poly& b);
poly scale(const rat& c, const poly& a);
poly derive(const poly& a);

/// p(x + h) by exact binomial expansion.
poly translate(const poly& p, const rat& h);

std::string to_string(const poly& p);
std::ostream& operator<<(std::ostream& os, const poly& p);

} // namespace umbral
