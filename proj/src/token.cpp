#include "umbral/token.hpp"

#include "umbral/errors.hpp"

#include <functional>
#include <string>

namespace umbral {

poly_seq::poly_seq(std::vector<std::vector<rat>> rows) : rows_(std::move(rows)) {
    if (rows_.empty())
        throw invariant_violation("polynomial sequence needs at least p_0");
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != n + 1)
            throw invariant_violation("row " + std::to_string(n) + " must hold exactly " +
                                      std::to_string(n + 1) + " coefficients");
        if (rows_[n][n].is_zero())
            throw invariant_violation("p_" + std::to_string(n) +
                                      " must have degree exactly its index");
    }
}

bool is_token(const poly_seq& p, token_witness* witness) {
    const std::size_t bound = p.max_index();
    for (std::size_t n = 0; n <= bound; ++n) {
        // Left side: p_n(x+y) expanded over x^a y^b.
        std::vector<std::vector<rat>> lhs(n + 1, std::vector<rat>(n + 1));
        for (std::size_t j = 0; j <= n; ++j) {
            const rat& c = p.coeff(n, j);
            if (c.is_zero())
                continue;
            for (std::size_t a = 0; a <= j; ++a)
                lhs[a][j - a] += c * binomial(j, a);
        }
        // Right side: sum_k p_k(x) p_{n-k}(y).
        std::vector<std::vector<rat>> rhs(n + 1, std::vector<rat>(n + 1));
        for (std::size_t k = 0; k <= n; ++k)
            for (std::size_t a = 0; a <= k; ++a) {
                const rat& ca = p.coeff(k, a);
                if (ca.is_zero())
                    continue;
                for (std::size_t b = 0; b <= n - k; ++b)
                    rhs[a][b] += ca * p.coeff(n - k, b);
            }
        for (std::size_t a = 0; a <= n; ++a)
            for (std::size_t b = 0; a + b <= n; ++b)
                if (lhs[a][b] != rhs[a][b]) {
                    if (witness)
                        *witness = {n, a, b, lhs[a][b], rhs[a][b]};
                    return false;
                }
    }
    return true;
}

discrete_token::discrete_token(std::vector<std::vector<rat>> values) : values_(std::move(values)) {
    if (values_.empty() || values_.front().empty())
        throw invariant_violation("discrete token needs a nonempty value matrix");
    for (const auto& row : values_)
        if (row.size() != values_.front().size())
            throw invariant_violation("discrete token matrix must be rectangular");
}

bool is_discrete_token(const discrete_token& t, discrete_token_witness* witness) {
    const std::size_t nb = t.row_bound();
    const std::size_t mb = t.col_bound();
    for (std::size_t n = 0; n <= nb; ++n)
        for (std::size_t m1 = 0; m1 <= mb; ++m1)
            for (std::size_t m2 = 0; m1 + m2 <= mb; ++m2) {
                rat lhs;
                for (std::size_t k = 0; k <= n; ++k)
                    lhs += t.value(k, m1) * t.value(n - k, m2);
                const rat& rhs = t.value(n, m1 + m2);
                if (lhs != rhs) {
                    if (witness)
                        *witness = {n, m1, m2, lhs, rhs};
                    return false;
                }
            }
    return true;
}

cfunction<n_plus> reproducing_kernel(const poly_seq& p) {
    const std::size_t bound = p.max_index();
    std::vector<rat> k(bound + 1);
    for (std::size_t n = 0; n <= bound; ++n)
        k[n] = p.coeff(n, 0); // p_n(0)
    // Reproduction along the first argument: p_n must equal the convolution
    // of k with the shifted rows, exactly, for every n.
    for (std::size_t n = 0; n <= bound; ++n) {
        poly acc;
        for (std::size_t j = 0; j <= n; ++j) {
            if (k[j].is_zero())
                continue;
            acc = add(acc, scale(k[j], p.row_poly(n - j)));
        }
        if (!(acc == p.row_poly(n)))
            throw reproducing_check_failed("kernel fails to reproduce p_" + std::to_string(n));
    }
    return cfunction_from_values(bound, k);
}

cfunction<n_plus> t_transform(const discrete_token& t, const cfunction<n_plus>& k) {
    const std::size_t mb = t.col_bound();
    for (const auto& [m, v] : k.support()) {
        (void)v;
        if (m > mb)
            throw support_too_large("kernel support exceeds the token's column bound");
    }
    cfunction<n_plus> out(n_plus{t.row_bound()});
    for (std::size_t n = 0; n <= t.row_bound(); ++n) {
        rat acc;
        for (const auto& [m, v] : k.support())
            acc += t.value(n, m) * v;
        if (!acc.is_zero())
            out.set(n, acc);
    }
    return out;
}

cfunction<n_plus> umbral_apply(const poly_seq& p, std::span<const rat> moments) {
    const std::size_t bound = p.max_index();
    if (moments.size() < bound + 1)
        throw insufficient_moments("need l(x^k) for every k up to " + std::to_string(bound));
    cfunction<n_plus> out(n_plus{bound});
    for (std::size_t n = 0; n <= bound; ++n) {
        rat acc;
        for (std::size_t k = 0; k <= n; ++k)
            acc += p.coeff(n, k) * moments[k];
        if (!acc.is_zero())
            out.set(n, acc);
    }
    return out;
}

poly_seq monomial_sequence(std::size_t n) {
    std::vector<std::vector<rat>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].assign(i + 1, rat(0));
        rows[i][i] = rat(1) / factorial(i);
    }
    return poly_seq(std::move(rows));
}

namespace {

// Rows built as products of linear factors, then divided by n!.
poly_seq factor_product_sequence(std::size_t n, const std::function<poly(std::size_t)>& factor) {
    std::vector<std::vector<rat>> rows(n + 1);
    poly acc = poly::constant(rat(1));
    rows[0] = acc.coeffs();
    for (std::size_t i = 1; i <= n; ++i) {
        acc = mul(acc, factor(i));
        poly row = scale(rat(1) / factorial(i), acc);
        std::vector<rat> c = row.coeffs();
        c.resize(i + 1, rat(0));
        rows[i] = std::move(c);
    }
    return poly_seq(std::move(rows));
}

} // namespace

poly_seq binomial_sequence(std::size_t n) {
    // C(x, n) = x (x-1) ... (x-n+1) / n!
    return factor_product_sequence(
        n, [](std::size_t i) { return poly({rat(-(static_cast<long long>(i) - 1)), rat(1)}); });
}

poly_seq rising_binomial_sequence(std::size_t n) {
    // C(x+n-1, n) = x (x+1) ... (x+n-1) / n!
    return factor_product_sequence(
        n, [](std::size_t i) { return poly({rat(static_cast<long long>(i) - 1), rat(1)}); });
}

poly_seq abel_sequence(std::size_t n, const rat& a) {
    // x (x - a n)^{n-1} / n!
    std::vector<std::vector<rat>> rows(n + 1);
    rows[0] = {rat(1)};
    for (std::size_t i = 1; i <= n; ++i) {
        poly shifted = poly({-a * rat(static_cast<long long>(i)), rat(1)});
        poly acc = poly::constant(rat(1));
        for (std::size_t j = 1; j < i; ++j)
            acc = mul(acc, shifted);
        acc = mul(acc, poly({rat(0), rat(1)}));
        acc = scale(rat(1) / factorial(i), acc);
        std::vector<rat> c = acc.coeffs();
        c.resize(i + 1, rat(0));
        rows[i] = std::move(c);
    }
    return poly_seq(std::move(rows));
}

discrete_token binomial_discrete_token(std::size_t n, std::size_t m) {
    std::vector<std::vector<rat>> values(n + 1, std::vector<rat>(m + 1));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= m; ++j)
            values[i][j] = binomial(j, i);
    return discrete_token(std::move(values));
}

} // namespace umbral
