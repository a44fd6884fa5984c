#include "umbral/operators.hpp"

#include "umbral/errors.hpp"

#include <random>
#include <string>

namespace umbral {

delta_op::delta_op(series symbol) : sym_(std::move(symbol)) {
    if (sym_.flav() != flavor::ordinary)
        throw not_a_delta_operator("delta symbols are ordinary series");
    if (!sym_.coeff(0).is_zero())
        throw not_a_delta_operator("delta operator must kill constants (zero constant term)");
    if (sym_.order() < 1 || sym_.coeff(1).is_zero())
        throw not_a_delta_operator("delta operator must lower degree by exactly one (q_1 != 0)");
}

delta_op delta_op::derivative(std::size_t order) {
    std::vector<rat> c(std::max<std::size_t>(order, 1) + 1);
    c[1] = rat(1);
    return delta_op(series(flavor::ordinary, std::move(c)));
}

delta_op delta_op::forward_difference(std::size_t order) {
    std::size_t n = std::max<std::size_t>(order, 1);
    std::vector<rat> c(n + 1);
    for (std::size_t k = 1; k <= n; ++k)
        c[k] = rat(1) / factorial(k);
    return delta_op(series(flavor::ordinary, std::move(c)));
}

delta_op delta_op::backward_difference(std::size_t order) {
    std::size_t n = std::max<std::size_t>(order, 1);
    std::vector<rat> c(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        c[k] = rat(1) / factorial(k);
        if (k % 2 == 0)
            c[k] = -c[k];
    }
    return delta_op(series(flavor::ordinary, std::move(c)));
}

delta_op delta_op::abel(std::size_t order, const rat& a) {
    // D e^{aD}: q_k = a^{k-1} / (k-1)!
    std::size_t n = std::max<std::size_t>(order, 1);
    std::vector<rat> c(n + 1);
    for (std::size_t k = 1; k <= n; ++k)
        c[k] = pow(a, k - 1) / factorial(k - 1);
    return delta_op(series(flavor::ordinary, std::move(c)));
}

poly apply_series_operator(const series& symbol, const poly& p) {
    if (p.degree() > static_cast<int>(symbol.order()))
        throw degree_overflow("polynomial degree exceeds the operator's truncation order");
    poly out = scale(symbol.coeff(0), p);
    poly d = p;
    for (std::size_t k = 1; k <= symbol.order(); ++k) {
        d = derive(d);
        if (d.is_zero())
            break;
        if (!symbol.coeff(k).is_zero())
            out = add(out, scale(symbol.coeff(k), d));
    }
    return out;
}

poly apply_delta(const delta_op& q, const poly& p) { return apply_series_operator(q.symbol(), p); }

poly_seq basic_sequence(const delta_op& q, std::size_t bound) {
    if (q.order() < bound)
        throw degree_overflow("delta symbol carries fewer taps than the requested bound");
    const series& sym = q.symbol();
    std::vector<std::vector<rat>> rows(bound + 1);
    rows[0] = {rat(1)};
    for (std::size_t m = 1; m <= bound; ++m) {
        const std::vector<rat>& target = rows[m - 1]; // coefficients of p_{m-1}
        std::vector<rat> c(m + 1);                    // c[j] = coefficient of x^j in p_m
        // Match coefficients of x^t in Q p_m top-down; the system is
        // triangular with pivot q_1 · j on c[j].
        for (std::size_t j = m; j >= 1; --j) {
            std::size_t t = j - 1;
            rat acc; // contribution of already-solved c[i], i > j, to x^t
            for (std::size_t i = j + 1; i <= m; ++i)
                acc += c[i] * sym.coeff(i - t) * falling_factorial(i, i - t);
            rat rhs = (t < target.size() ? target[t] : rat(0)) - acc;
            c[j] = rhs / (sym.coeff(1) * rat(static_cast<long long>(j)));
        }
        // p_m(0) = 0 pins the constant term.
        c[0] = rat(0);
        rows[m] = std::move(c);
    }
    return poly_seq(std::move(rows));
}

shift_inv_op::shift_inv_op(series coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.flav() != flavor::ordinary)
        throw invariant_violation("expansion coefficients are an ordinary series");
}

namespace {

rat random_rat(std::mt19937& gen) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    long long n = num(gen);
    if (n == 0)
        n = 1;
    return rat(n, den(gen));
}

} // namespace

shift_inv_op expand_operator(const poly_operator& op, const delta_op& q, std::size_t bound,
                             unsigned spot_check_seed) {
    poly_seq basic = basic_sequence(q, bound);

    // Shift-invariance spot check: S must commute with translations.
    std::mt19937 gen(spot_check_seed);
    for (int trial = 0; trial < 5; ++trial) {
        rat h = random_rat(gen);
        for (std::size_t n = 0; n <= bound; ++n) {
            poly pn = basic.row_poly(n);
            if (!(translate(op(pn), h) == op(translate(pn, h))))
                throw not_shift_invariant("operator does not commute with translation by " +
                                          h.str());
        }
    }

    std::vector<rat> a(bound + 1);
    for (std::size_t k = 0; k <= bound; ++k)
        a[k] = op(basic.row_poly(k)).eval(rat(0));

    // Verify the expansion reproduces the operator on the whole basis.
    for (std::size_t n = 0; n <= bound; ++n) {
        poly expect;
        for (std::size_t k = 0; k <= n; ++k)
            if (!a[k].is_zero())
                expect = add(expect, scale(a[k], basic.row_poly(n - k)));
        if (!(expect == op(basic.row_poly(n))))
            throw reconstruction_failed("expansion does not reproduce the operator on p_" +
                                        std::to_string(n));
    }
    return shift_inv_op(series(flavor::ordinary, std::move(a)));
}

poly apply_expansion(const shift_inv_op& s, const delta_op& q, const poly& p) {
    poly out = scale(s.coefficients().coeff(0), p);
    poly qk = p;
    for (std::size_t k = 1; k <= s.coefficients().order(); ++k) {
        qk = apply_delta(q, qk);
        if (qk.is_zero())
            break;
        if (!s.coefficients().coeff(k).is_zero())
            out = add(out, scale(s.coefficients().coeff(k), qk));
    }
    return out;
}

cfunction<n_plus> operator_to_convolution(const shift_inv_op& s, const delta_op& q) {
    // In basic-sequence coordinates S p_n = sum_k a_k p_{n-k}; the expansion
    // coefficients themselves are the convolution kernel.  The delta operator
    // fixes the coordinate system and its truncation must cover the kernel.
    if (q.order() < s.coefficients().order())
        throw degree_overflow("delta symbol truncated below the operator's expansion order");
    return cfunction_from_series(s.coefficients());
}

cfunction<n_plus> hopf_product(const cfunction<n_plus>& l1, const cfunction<n_plus>& l2) {
    if (l1.semigroup() != l2.semigroup())
        throw semigroup_mismatch("functionals must share a truncation bound");
    return convolve(l1, l2);
}

bool degree_lowering_check(const series& q_symbol, const poly_seq& p2) {
    const std::size_t bound = p2.max_index();
    if (q_symbol.order() < bound)
        throw degree_overflow("symbol carries fewer taps than the sequence bound");
    for (std::size_t n = 0; n <= bound; ++n) {
        poly r = p2.row_poly(n);
        for (std::size_t k = 1; k <= bound; ++k) {
            r = apply_series_operator(q_symbol, r);
            if (k <= n) {
                if (r.degree() != static_cast<int>(n - k))
                    return false;
            } else if (!r.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

delta_op associated_delta(const poly_seq& p) {
    const std::size_t bound = p.max_index();
    if (bound < 1)
        throw not_a_delta_operator("need at least p_0, p_1 to recover a delta operator");
    // Solve sum_k q_k D^k p_N = p_{N-1} for the taps, top coefficient first.
    poly top = p.row_poly(bound);
    std::vector<poly> derivs(bound + 1);
    derivs[0] = top;
    for (std::size_t k = 1; k <= bound; ++k)
        derivs[k] = derive(derivs[k - 1]);
    std::vector<rat> q(bound + 1);
    poly residue = p.row_poly(bound - 1);
    for (std::size_t k = 1; k <= bound; ++k) {
        std::size_t t = bound - k; // x^t is the leading monomial of D^k p_N
        rat pivot = derivs[k].coeff(t);
        rat qk = residue.coeff(t) / pivot;
        q[k] = qk;
        if (!qk.is_zero())
            residue = sub(residue, scale(qk, derivs[k]));
    }
    delta_op out{series(flavor::ordinary, std::move(q))};
    // The symbol was fitted on the top row only; it must work on all of them.
    for (std::size_t n = 1; n <= bound; ++n)
        if (!(apply_delta(out, p.row_poly(n)) == p.row_poly(n - 1)))
            throw not_a_delta_operator("sequence is not basic for any shift-invariant operator");
    return out;
}

} // namespace umbral
