#pragma once

#include "umbral/rat.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace umbral {

/// Interpretation tag for a coefficient sequence.  `ordinary` reads coeff[n]
/// as the plain x^n coefficient; `exponential` marks a sequence whose
/// combinatorial value at n is n!·coeff[n].  Arithmetic is identical for both
/// (the stored coefficients already carry any 1/n!); the tag exists so that
/// values from the two dual pairings are never mixed silently.
enum class flavor { ordinary, exponential };

std::string_view flavor_name(flavor f);
flavor flavor_from_name(std::string_view name);

/// Truncated formal power series with exact rational coefficients: the
/// concrete convolution algebra over the non-negative integers.  A series of
/// order N carries exactly N+1 coefficients; binary operations return the
/// minimum order of their operands, never padding with zeros.
class series {
public:
    /// Default cap applied by integrate() when it would grow past this order.
    static constexpr std::size_t max_default_order = 64;

    series(flavor f, std::vector<rat> coeffs);

    static series zero(flavor f, std::size_t order);
    /// The convolution identity (1, 0, ..., 0).
    static series delta0(flavor f, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    flavor flav() const { return flav_; }
    const rat& coeff(std::size_t n) const { return coeffs_.at(n); }
    const std::vector<rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    friend bool operator==(const series& a, const series& b) = default;

private:
    flavor flav_;
    std::vector<rat> coeffs_; // size = order + 1
};

/// Coefficientwise sum; operands must share a flavor.
series add(const series& a, const series& b);
series sub(const series& a, const series& b);

/// Cauchy convolution c_n = sum_{k<=n} a_k b_{n-k}, truncated at min order.
series mul(const series& a, const series& b);

series scale(const rat& c, const series& a);

/// Multiplicative inverse up to the truncation order; requires a nonzero
/// constant term.
series inverse(const series& a);

/// Composition a(b(x)); the inner series must have zero constant term.
series compose(const series& a, const series& b);

/// Formal derivative; the order drops by one (a constant maps to the zero
/// series of order 0).
series derive(const series& a);

/// Antiderivative with zero constant term; the order grows by one, capped at
/// `max_order`.
series integrate(const series& a, std::size_t max_order = series::max_default_order);

/// The truncated exponential series: coeff[n] = 1/n!.
series exp_series(std::size_t order, flavor f);

/// Binomial convolution c_n = sum_k C(n,k) a_k b_{n-k} of two coefficient
/// lists, truncated at the shorter input.  This is what plain convolution
/// becomes under the ordinary<->exponential reinterpretation, and is also the
/// moment rule for independent sums.
std::vector<rat> binomial_convolve(std::span<const rat> a, std::span<const rat> b);

/// Text form used by the CLI and fixtures:
///   flavor:ordinary order:6 coeffs:1,-1,-1,0,0,0,0
std::string to_literal(const series& s);
series series_from_literal(std::string_view text);

std::ostream& operator<<(std::ostream& os, const series& s);

} // namespace umbral
