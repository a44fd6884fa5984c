#include "umbral/errors.hpp"
#include "umbral/operators.hpp"

#include "../support.hpp"

#include <doctest.h>

#include <random>

using namespace umbral;
using testsupport::ord;

TEST_CASE("delta operator invariants") {
    CHECK_THROWS_AS(delta_op(ord({1, 1})), not_a_delta_operator);   // constant term
    CHECK_THROWS_AS(delta_op(ord({0, 0, 1})), not_a_delta_operator); // q_1 = 0
    CHECK_THROWS_AS(delta_op(exp_series(3, flavor::exponential)), not_a_delta_operator);
    CHECK(delta_op::derivative(5).symbol() == ord({0, 1, 0, 0, 0, 0}));
}

TEST_CASE("applying delta operators") {
    delta_op d = delta_op::derivative(6);
    poly x3 = poly::monomial(rat(1) / factorial(3), 3);
    poly x2 = poly::monomial(rat(1) / factorial(2), 2);
    CHECK(apply_delta(d, x3) == x2);

    // forward difference on C(x,3) equals C(x,2); oracle is p(x+1) - p(x)
    delta_op fwd = delta_op::forward_difference(6);
    poly c3 = binomial_sequence(3).row_poly(3);
    poly c2 = binomial_sequence(2).row_poly(2);
    CHECK(apply_delta(fwd, c3) == c2);
    CHECK(sub(translate(c3, rat(1)), c3) == c2);

    CHECK(apply_delta(fwd, poly::constant(rat(9))).is_zero());
    CHECK_THROWS_AS((void)apply_delta(delta_op::derivative(2), poly::monomial(rat(1), 5)),
                    degree_overflow);
}

TEST_CASE("basic sequences of the catalog operators") {
    CHECK(basic_sequence(delta_op::derivative(12), 12) == monomial_sequence(12));
    CHECK(basic_sequence(delta_op::forward_difference(12), 12) == binomial_sequence(12));
    CHECK(basic_sequence(delta_op::backward_difference(12), 12) == rising_binomial_sequence(12));
    CHECK(basic_sequence(delta_op::abel(12, rat(1, 2)), 12) == abel_sequence(12, rat(1, 2)));
    CHECK_THROWS_AS((void)basic_sequence(delta_op::derivative(3), 9), degree_overflow);
}

TEST_CASE("basic sequences of random delta operators are tokens") {
    std::mt19937 gen(555);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<rat> taps(8, rat(0));
        taps[1] = testsupport::random_nonzero_rat(gen);
        for (std::size_t k = 2; k < 8; ++k)
            taps[k] = testsupport::random_rat(gen);
        delta_op q{series(flavor::ordinary, taps)};
        poly_seq p = basic_sequence(q, 7);
        CHECK(is_token(p));
        CHECK(basic_sequence(associated_delta(p), 7) == p);
    }
}

TEST_CASE("basic sequence of D + D^2 solves the side conditions") {
    delta_op q(ord({0, 1, 1, 0, 0, 0, 0, 0, 0}));
    poly_seq p = basic_sequence(q, 8);
    CHECK(p.row_poly(0) == poly::constant(rat(1)));
    CHECK(p.row_poly(2) == poly({rat(0), rat(-1), rat(1, 2)})); // x^2/2 - x
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(p.coeff(n, 0).is_zero()); // p_n(0) = 0
        CHECK(apply_delta(q, p.row_poly(n)) == p.row_poly(n - 1));
    }
    CHECK(is_token(p));
}

TEST_CASE("first expansion theorem") {
    delta_op d = delta_op::derivative(10);

    shift_inv_op identity = expand_operator([](const poly& p) { return p; }, d, 10);
    CHECK(identity.coefficients() == series::delta0(flavor::ordinary, 10));

    // translation by h expands with Taylor coefficients h^k/k!
    std::mt19937 gen(11);
    for (int trial = 0; trial < 5; ++trial) {
        rat h = testsupport::random_nonzero_rat(gen);
        shift_inv_op tau =
            expand_operator([&](const poly& p) { return translate(p, h); }, d, 10);
        for (std::size_t k = 0; k <= 10; ++k)
            CHECK(tau.coefficients().coeff(k) == pow(h, k) / factorial(k));
    }

    // the forward difference against D gives 0, 1, 1/2!, 1/3!, ...
    shift_inv_op diff = expand_operator(
        [](const poly& p) { return sub(translate(p, rat(1)), p); }, d, 10);
    CHECK(diff.coefficients().coeff(0).is_zero());
    for (std::size_t k = 1; k <= 10; ++k)
        CHECK(diff.coefficients().coeff(k) == rat(1) / factorial(k));

    CHECK_THROWS_AS((void)expand_operator(
                        [](const poly& p) { return mul(p, poly({rat(0), rat(1)})); }, d, 6),
                    not_shift_invariant);
}

TEST_CASE("expansion round trip on random coefficients") {
    std::mt19937 gen(23);
    delta_op fwd = delta_op::forward_difference(8);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<rat> a(9);
        for (auto& v : a)
            v = testsupport::random_rat(gen);
        shift_inv_op s{series(flavor::ordinary, a)};
        shift_inv_op back = expand_operator(
            [&](const poly& p) { return apply_expansion(s, fwd, p); }, fwd, 8);
        CHECK(back.coefficients() == s.coefficients());
    }
}

TEST_CASE("operator algebra maps onto the convolution algebra") {
    delta_op d = delta_op::derivative(8);
    shift_inv_op id{series::delta0(flavor::ordinary, 8)};
    CHECK(operator_to_convolution(id, d) == point_mass(n_plus{8}, 0));

    std::vector<rat> qc(9, rat(0));
    qc[1] = rat(1);
    shift_inv_op q_itself{series(flavor::ordinary, qc)};
    CHECK(operator_to_convolution(q_itself, d) == point_mass(n_plus{8}, 1));

    // composition of black boxes expands to the convolution of the kernels
    std::mt19937 gen(37);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<rat> a(9), b(9);
        for (auto& v : a)
            v = testsupport::random_rat(gen);
        for (auto& v : b)
            v = testsupport::random_rat(gen);
        shift_inv_op sa{series(flavor::ordinary, a)};
        shift_inv_op sb{series(flavor::ordinary, b)};
        shift_inv_op composed = expand_operator(
            [&](const poly& p) { return apply_expansion(sa, d, apply_expansion(sb, d, p)); }, d,
            8);
        CHECK(operator_to_convolution(composed, d) ==
              convolve(operator_to_convolution(sa, d), operator_to_convolution(sb, d)));
    }
}

TEST_CASE("translation semigroup in expansion coordinates") {
    delta_op d = delta_op::derivative(8);
    rat h1(1, 2), h2(2, 3);
    auto tau = [&](const rat& h) {
        return expand_operator([&, h](const poly& p) { return translate(p, h); }, d, 8);
    };
    shift_inv_op composite = expand_operator(
        [&](const poly& p) { return translate(translate(p, h1), h2); }, d, 8);
    CHECK(operator_to_convolution(composite, d) ==
          convolve(operator_to_convolution(tau(h1), d), operator_to_convolution(tau(h2), d)));
    for (std::size_t k = 0; k <= 8; ++k)
        CHECK(composite.coefficients().coeff(k) == pow(h1 + h2, k) / factorial(k));
}

TEST_CASE("hopf product of functionals") {
    n_plus sg{9};
    cfunction<n_plus> ones(sg);
    for (std::size_t n = 0; n <= 9; ++n)
        ones.set(n, rat(1));
    cfunction<n_plus> l2(sg);
    l2.set(0, rat(3));
    l2.set(4, rat(-2));
    CHECK(hopf_product(point_mass(sg, 0), l2) == l2);

    cfunction<n_plus> squares = hopf_product(ones, ones);
    for (std::size_t n = 0; n <= 9; ++n)
        CHECK(squares.at(n) == rat(static_cast<long long>(n + 1)));

    std::mt19937 gen(53);
    for (int trial = 0; trial < 50; ++trial) {
        cfunction<n_plus> a(sg), b(sg), c(sg);
        std::uniform_int_distribution<std::size_t> where(0, 9);
        for (int i = 0; i < 3; ++i) {
            a.set(where(gen), testsupport::random_rat(gen));
            b.set(where(gen), testsupport::random_rat(gen));
            c.set(where(gen), testsupport::random_rat(gen));
        }
        CHECK(hopf_product(a, b) == hopf_product(b, a));
        CHECK(hopf_product(hopf_product(a, b), c) == hopf_product(a, hopf_product(b, c)));
        // the power-series identification carries the product to mul
        CHECK(to_series(hopf_product(a, b)) == mul(to_series(a), to_series(b)));
    }
    CHECK_THROWS_AS((void)hopf_product(ones, cfunction<n_plus>(n_plus{3})), semigroup_mismatch);
}

TEST_CASE("degree lowering by delta-family powers") {
    CHECK(degree_lowering_check(delta_op::derivative(8).symbol(), binomial_sequence(8)));
    CHECK(degree_lowering_check(delta_op::forward_difference(8).symbol(), monomial_sequence(8)));
    // D^2 lowers by two, so it cannot be a delta family for the monomials
    std::vector<rat> dd(9, rat(0));
    dd[2] = rat(1);
    CHECK_FALSE(degree_lowering_check(series(flavor::ordinary, dd), monomial_sequence(8)));
}

TEST_CASE("the kernel family of the delta powers is a discrete token") {
    // In basic-sequence coordinates the kernel of Q^k is the point mass at k,
    // so the family assembles into the identity matrix.
    std::vector<std::vector<rat>> values(7, std::vector<rat>(7, rat(0)));
    for (std::size_t k = 0; k < 7; ++k)
        values[k][k] = rat(1);
    CHECK(is_discrete_token(discrete_token(values)));
}

TEST_CASE("isomorphism triangle: functional, operator, convolution") {
    delta_op d = delta_op::derivative(8);
    poly_seq basic = basic_sequence(d, 8);
    std::mt19937 gen(71);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<rat> a(9);
        for (auto& v : a)
            v = testsupport::random_rat(gen);
        shift_inv_op s{series(flavor::ordinary, a)};

        // operator -> functional: l(p_k) = [S p_k](0) recovers a_k
        for (std::size_t k = 0; k <= 8; ++k)
            CHECK(apply_expansion(s, d, basic.row_poly(k)).eval(rat(0)) == a[k]);

        // convolution -> operator: the kernel acts on coordinates by
        // f_hat(m) -> sum_k a_k f_hat(m+k), matching S on the function side
        cfunction<n_plus> kernel = operator_to_convolution(s, d);
        std::vector<rat> fhat(9);
        for (auto& v : fhat)
            v = testsupport::random_rat(gen);
        poly f;
        for (std::size_t n = 0; n <= 8; ++n)
            f = add(f, scale(fhat[n], basic.row_poly(n)));
        poly via_operator = apply_expansion(s, d, f);
        poly via_kernel;
        for (std::size_t m = 0; m <= 8; ++m) {
            rat coord;
            for (std::size_t k = 0; m + k <= 8; ++k)
                coord += kernel.at(k) * fhat[m + k];
            via_kernel = add(via_kernel, scale(coord, basic.row_poly(m)));
        }
        CHECK(via_operator == via_kernel);
    }
}
