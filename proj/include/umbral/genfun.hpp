#pragma once

#include "umbral/csemigroup.hpp"
#include "umbral/series.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace umbral {

/// A recurrence R f = rhs on combinatorial functions over the non-negative
/// integers.  The kernel r(n, i) is either shift invariant (a finite tap list
/// rho with r(n, i) = rho[n-i]) or a general lower-triangular rational
/// matrix; the diagonal must be nonzero so the solution is unique.  rhs
/// defaults to the point mass at 0, the reproducing right-hand side.
class recurrence {
public:
    using tap_list = std::vector<rat>;
    using tri_matrix = std::vector<std::vector<rat>>;

    static recurrence from_taps(tap_list taps, std::optional<std::vector<rat>> rhs = {});
    static recurrence from_matrix(tri_matrix rows, std::optional<std::vector<rat>> rhs = {});

    bool shift_invariant() const { return std::holds_alternative<tap_list>(kernel_); }
    const tap_list& taps() const { return std::get<tap_list>(kernel_); }
    const tri_matrix& matrix() const { return std::get<tri_matrix>(kernel_); }

    /// r(n, i) with the agreement rule: zero outside the band/triangle.
    rat kernel_entry(std::size_t n, std::size_t i) const;
    rat rhs_at(std::size_t n) const;
    const std::optional<std::vector<rat>>& rhs() const { return rhs_; }

    /// Largest n for which the kernel row is defined (unbounded for taps).
    std::optional<std::size_t> row_limit() const;

private:
    recurrence(std::variant<tap_list, tri_matrix> kernel, std::optional<std::vector<rat>> rhs);
    std::variant<tap_list, tri_matrix> kernel_;
    std::optional<std::vector<rat>> rhs_;
};

/// Which of the two dual token pairs the generating function uses: the
/// ordinary token x^n or the exponential token x^n/n!.
struct genfun_spec {
    flavor token = flavor::ordinary;
    std::size_t order = 12;
};

/// Unique solution of sum_i r(n,i) f(i) = rhs(n) for n up to the bound, by
/// exact forward substitution.
cfunction<n_plus> solve_recurrence(const recurrence& rec, std::size_t bound);

/// The t-transform of a combinatorial function against the chosen token:
/// coeff n = f(n) for the ordinary token, f(n)/n! for the exponential one.
series generating_function(const cfunction<n_plus>& f, const genfun_spec& spec);

/// Verifies that the generating function satisfies the transformed equation.
/// Ordinary token + tap kernel: the transform is multiplication by the tap
/// polynomial, so rho(x)·f_hat must equal the transformed rhs.  Exponential
/// token + the Bell-shaped kernel r(n,i) = delta_{n,i} - C(n-1,i): the
/// transform is I - antiderivative∘(e^x ·), checked in differential form
/// D f_hat - e^x f_hat = D g_hat with matching constant term.  Other kernel
/// shapes have no exact finite transform here and are rejected.
bool transformed_operator_check(const recurrence& rec, const genfun_spec& spec, std::size_t bound);

/// Reads a generating function back as the combinatorial function it
/// generates (the discrete umbral-functional pairing); inverse of
/// generating_function for either token.
cfunction<n_plus> umbral_moment_recover(const series& gf, std::size_t bound);

} // namespace umbral
