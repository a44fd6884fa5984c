#include "umbral/errors.hpp"
#include "umbral/operators.hpp"
#include "umbral/token.hpp"

#include "../support.hpp"

#include <doctest.h>

#include <random>

using namespace umbral;

namespace {

// Independent check of p_n(x+y) = sum p_k(x) p_{n-k}(y): evaluate both sides
// on an (N+1) x (N+1) rational grid, which pins down bivariate polynomials of
// this degree uniquely.
bool binomial_identity_by_evaluation(const poly_seq& p) {
    std::size_t bound = p.max_index();
    for (std::size_t n = 0; n <= bound; ++n) {
        for (std::size_t ix = 0; ix <= bound; ++ix)
            for (std::size_t iy = 0; iy <= bound; ++iy) {
                rat x = rat(static_cast<long long>(ix)) / rat(2);
                rat y = rat(static_cast<long long>(iy)) / rat(3);
                rat lhs = p.row_poly(n).eval(x + y);
                rat rhs;
                for (std::size_t k = 0; k <= n; ++k)
                    rhs += p.row_poly(k).eval(x) * p.row_poly(n - k).eval(y);
                if (lhs != rhs)
                    return false;
            }
    }
    return true;
}

poly_seq plain_monomials(std::size_t n) {
    std::vector<std::vector<rat>> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].assign(i + 1, rat(0));
        rows[i][i] = rat(1);
    }
    return poly_seq(std::move(rows));
}

} // namespace

TEST_CASE("poly_seq invariants") {
    CHECK_THROWS_AS(poly_seq({}), invariant_violation);
    CHECK_THROWS_AS(poly_seq({{rat(1)}, {rat(1), rat(0)}}), invariant_violation);
    CHECK_THROWS_AS(poly_seq({{rat(1)}, {rat(1)}}), invariant_violation);
}

TEST_CASE("the built-in catalog consists of tokens") {
    CHECK(is_token(monomial_sequence(8)));
    CHECK(is_token(binomial_sequence(8)));
    CHECK(is_token(rising_binomial_sequence(8)));
    CHECK(is_token(abel_sequence(8, rat(1, 2))));
    // cross-check the coefficient expansion against plain evaluation
    CHECK(binomial_identity_by_evaluation(monomial_sequence(5)));
    CHECK(binomial_identity_by_evaluation(binomial_sequence(5)));
    CHECK(binomial_identity_by_evaluation(abel_sequence(5, rat(1, 2))));
}

TEST_CASE("monomials without the factorial are not a token") {
    token_witness w;
    CHECK(is_token(plain_monomials(1))); // degree 1 cannot see the defect
    CHECK_FALSE(is_token(plain_monomials(2), &w));
    CHECK(w.n == 2);
    // the witness must identify a genuinely failing monomial
    CHECK(w.lhs != w.rhs);
    CHECK(w.x_deg + w.y_deg <= w.n);
    // (x+y)^2 expands with cross coefficient 2; the product side gives 1
    CHECK_FALSE(is_token(plain_monomials(6)));
}

TEST_CASE("discrete token identity") {
    CHECK(is_discrete_token(binomial_discrete_token(8, 8)));

    // the constant-one token delta_{n,0}
    std::vector<std::vector<rat>> constant(5, std::vector<rat>(5, rat(0)));
    for (std::size_t m = 0; m < 5; ++m)
        constant[0][m] = rat(1);
    CHECK(is_discrete_token(discrete_token(constant)));

    // perturbing one row of C(m, n) breaks it, with a verifiable witness
    std::vector<std::vector<rat>> values(7, std::vector<rat>(7));
    for (std::size_t n = 0; n < 7; ++n)
        for (std::size_t m = 0; m < 7; ++m)
            values[n][m] = binomial(m, n) + (n == 2 ? rat(1) : rat(0));
    discrete_token perturbed(values);
    discrete_token_witness w;
    CHECK_FALSE(is_discrete_token(perturbed, &w));
    rat recomputed;
    for (std::size_t k = 0; k <= w.n; ++k)
        recomputed += perturbed.value(k, w.m1) * perturbed.value(w.n - k, w.m2);
    CHECK(recomputed == w.lhs);
    CHECK(recomputed != perturbed.value(w.n, w.m1 + w.m2));
}

TEST_CASE("reproducing kernels of catalog tokens are the point mass at 0") {
    CHECK(reproducing_kernel(monomial_sequence(8)) == point_mass(n_plus{8}, 0));
    CHECK(reproducing_kernel(binomial_sequence(8)) == point_mass(n_plus{8}, 0));
    CHECK(reproducing_kernel(rising_binomial_sequence(8)) == point_mass(n_plus{8}, 0));
    CHECK(reproducing_kernel(abel_sequence(8, rat(1, 2))) == point_mass(n_plus{8}, 0));
}

TEST_CASE("translated monomials fail the reproducing check") {
    // p_n = (x+1)^n/n! has p_n(0) = 1/n!, but convolving that kernel with the
    // shifted rows yields (x+2)^n/n!, not p_n; the identity only holds for
    // genuine tokens, so the constructor of the kernel must refuse.
    std::size_t bound = 6;
    std::vector<std::vector<rat>> rows(bound + 1);
    for (std::size_t n = 0; n <= bound; ++n) {
        poly pn = poly::constant(rat(1));
        for (std::size_t i = 0; i < n; ++i)
            pn = mul(pn, poly({rat(1), rat(1)}));
        pn = scale(rat(1) / factorial(n), pn);
        std::vector<rat> c = pn.coeffs();
        c.resize(n + 1, rat(0));
        rows[n] = c;
    }
    poly_seq translated(rows);
    CHECK_FALSE(is_token(translated));
    // direct convolution oracle at n = 1: sum_k p_k(0) p_{1-k}(x) = x + 2
    poly direct = add(scale(translated.coeff(0, 0), translated.row_poly(1)),
                      scale(translated.coeff(1, 0), translated.row_poly(0)));
    CHECK(direct == poly({rat(2), rat(1)}));
    CHECK_FALSE(direct == translated.row_poly(1));
    CHECK_THROWS_AS((void)reproducing_kernel(translated), reproducing_check_failed);
}

TEST_CASE("t-transform of point masses through the binomial token") {
    discrete_token tok = binomial_discrete_token(8, 8);
    n_plus sg{8};
    CHECK(t_transform(tok, point_mass(sg, 0)) == point_mass(n_plus{8}, 0));

    cfunction<n_plus> expect(n_plus{8});
    expect.set(0, rat(1));
    expect.set(1, rat(2));
    expect.set(2, rat(1));
    CHECK(t_transform(tok, point_mass(sg, 2)) == expect);

    // homomorphism instance: both routes give the fifth Pascal row
    cfunction<n_plus> lhs = t_transform(tok, convolve(point_mass(sg, 2), point_mass(sg, 3)));
    cfunction<n_plus> rhs =
        convolve(t_transform(tok, point_mass(sg, 2)), t_transform(tok, point_mass(sg, 3)));
    CHECK(lhs == rhs);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(lhs.at(n) == binomial(5, n));

    cfunction<n_plus> wide(n_plus{12});
    wide.set(12, rat(1));
    CHECK_THROWS_AS((void)t_transform(tok, wide), support_too_large);
}

TEST_CASE("t-transform is an algebra homomorphism") {
    std::mt19937 gen(314);
    discrete_token tok = binomial_discrete_token(14, 14);
    n_plus sg{14};
    std::uniform_int_distribution<std::size_t> where(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
        cfunction<n_plus> k1(sg), k2(sg);
        for (int i = 0; i < 4; ++i) {
            k1.set(where(gen), testsupport::random_rat(gen));
            k2.set(where(gen), testsupport::random_rat(gen));
        }
        CHECK(t_transform(tok, convolve(k1, k2)) ==
              convolve(t_transform(tok, k1), t_transform(tok, k2)));
    }
}

TEST_CASE("umbral functionals applied to the monomial token") {
    poly_seq p = monomial_sequence(6);
    std::vector<rat> at_zero(7, rat(0));
    at_zero[0] = rat(1);
    CHECK(umbral_apply(p, at_zero) == point_mass(n_plus{6}, 0));

    std::vector<rat> at_one(7, rat(1));
    cfunction<n_plus> f = umbral_apply(p, at_one);
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(f.at(n) == rat(1) / factorial(n));

    auto bell = testsupport::bell_oracle(7);
    std::vector<rat> bell_moments(bell.begin(), bell.end());
    cfunction<n_plus> g = umbral_apply(p, bell_moments);
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(g.at(n) == rat(bell[n]) / factorial(n));

    std::vector<rat> short_list(3, rat(1));
    CHECK_THROWS_AS((void)umbral_apply(p, short_list), insufficient_moments);
}

TEST_CASE("every catalog token is basic for a recoverable delta operator") {
    for (const poly_seq& p : {monomial_sequence(7), binomial_sequence(7),
                              rising_binomial_sequence(7), abel_sequence(7, rat(1, 2))}) {
        REQUIRE(is_token(p));
        delta_op q = associated_delta(p);
        CHECK(basic_sequence(q, 7) == p);
    }
}
