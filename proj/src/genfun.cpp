#include "umbral/genfun.hpp"

#include "umbral/errors.hpp"

#include <string>

namespace umbral {

recurrence::recurrence(std::variant<tap_list, tri_matrix> kernel,
                       std::optional<std::vector<rat>> rhs)
    : kernel_(std::move(kernel)), rhs_(std::move(rhs)) {}

recurrence recurrence::from_taps(tap_list taps, std::optional<std::vector<rat>> rhs) {
    if (taps.empty() || taps[0].is_zero())
        throw zero_diagonal("tap list needs a nonzero leading tap");
    return recurrence(std::move(taps), std::move(rhs));
}

recurrence recurrence::from_matrix(tri_matrix rows, std::optional<std::vector<rat>> rhs) {
    if (rows.empty())
        throw zero_diagonal("empty recurrence matrix");
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (rows[n].size() != n + 1)
            throw invariant_violation("recurrence matrix row " + std::to_string(n) +
                                      " must hold exactly " + std::to_string(n + 1) + " entries");
        if (rows[n][n].is_zero())
            throw zero_diagonal("zero diagonal entry at row " + std::to_string(n));
    }
    return recurrence(std::move(rows), std::move(rhs));
}

rat recurrence::kernel_entry(std::size_t n, std::size_t i) const {
    if (i > n)
        return rat(0);
    if (shift_invariant()) {
        std::size_t lag = n - i;
        const auto& t = taps();
        return lag < t.size() ? t[lag] : rat(0);
    }
    const auto& m = matrix();
    if (n >= m.size())
        throw degree_overflow("recurrence matrix has no row " + std::to_string(n));
    return m[n][i];
}

rat recurrence::rhs_at(std::size_t n) const {
    if (!rhs_)
        return n == 0 ? rat(1) : rat(0);
    return n < rhs_->size() ? (*rhs_)[n] : rat(0);
}

std::optional<std::size_t> recurrence::row_limit() const {
    if (shift_invariant())
        return std::nullopt;
    return matrix().size() - 1;
}

cfunction<n_plus> solve_recurrence(const recurrence& rec, std::size_t bound) {
    if (auto limit = rec.row_limit(); limit && *limit < bound)
        throw degree_overflow("recurrence matrix covers rows up to " + std::to_string(*limit) +
                              ", bound " + std::to_string(bound) + " requested");
    std::vector<rat> f(bound + 1);
    for (std::size_t n = 0; n <= bound; ++n) {
        rat acc = rec.rhs_at(n);
        for (std::size_t i = 0; i < n; ++i)
            acc -= rec.kernel_entry(n, i) * f[i];
        f[n] = acc / rec.kernel_entry(n, n);
    }
    return cfunction_from_values(bound, f);
}

series generating_function(const cfunction<n_plus>& f, const genfun_spec& spec) {
    if (f.semigroup().bound < spec.order)
        throw support_too_large("function truncated below the requested series order");
    for (const auto& [e, v] : f.support()) {
        (void)v;
        if (e > spec.order)
            throw support_too_large("function supported past the requested series order");
    }
    std::vector<rat> c(spec.order + 1);
    for (std::size_t n = 0; n <= spec.order; ++n) {
        c[n] = f.at(n);
        if (spec.token == flavor::exponential)
            c[n] /= factorial(n);
    }
    return series(spec.token, std::move(c));
}

namespace {

bool is_bell_shape(const recurrence& rec, std::size_t bound) {
    if (rec.shift_invariant())
        return false;
    for (std::size_t n = 0; n <= bound; ++n) {
        if (!rec.kernel_entry(n, n).is_one())
            return false;
        for (std::size_t i = 0; i < n; ++i)
            if (rec.kernel_entry(n, i) != -binomial(n - 1, i))
                return false;
    }
    return true;
}

} // namespace

bool transformed_operator_check(const recurrence& rec, const genfun_spec& spec,
                                std::size_t bound) {
    genfun_spec at{spec.token, bound};
    cfunction<n_plus> f = solve_recurrence(rec, bound);
    series fhat = generating_function(f, at);
    std::vector<rat> rhs_values(bound + 1);
    for (std::size_t n = 0; n <= bound; ++n)
        rhs_values[n] = rec.rhs_at(n);
    series ghat = generating_function(cfunction_from_values(bound, rhs_values), at);

    if (spec.token == flavor::ordinary) {
        if (!rec.shift_invariant())
            throw unsupported_kernel_shape(
                "ordinary-token transform is only defined for shift-invariant kernels");
        std::vector<rat> taps(bound + 1);
        for (std::size_t k = 0; k <= bound && k < rec.taps().size(); ++k)
            taps[k] = rec.taps()[k];
        series rho(flavor::ordinary, std::move(taps));
        return mul(rho, fhat) == ghat;
    }

    if (!is_bell_shape(rec, bound))
        throw unsupported_kernel_shape(
            "exponential-token transform is only defined for the Bell-shaped kernel");
    // The transformed operator is I - antiderivative(e^x ·): in differential
    // form D f_hat - e^x f_hat = D g_hat with f_hat(0) = g_hat(0).
    if (fhat.coeff(0) != ghat.coeff(0))
        return false;
    series lhs = sub(derive(fhat), mul(exp_series(bound, spec.token), fhat));
    series rhs = derive(ghat);
    for (std::size_t n = 0; n + 1 <= bound; ++n)
        if (lhs.coeff(n) != rhs.coeff(n))
            return false;
    return true;
}

cfunction<n_plus> umbral_moment_recover(const series& gf, std::size_t bound) {
    std::size_t n = std::min(bound, gf.order());
    std::vector<rat> f(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        f[i] = gf.coeff(i);
        if (gf.flav() == flavor::exponential)
            f[i] *= factorial(i);
    }
    return cfunction_from_values(n, f);
}

} // namespace umbral
