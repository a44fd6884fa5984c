#pragma once

#include "umbral/csemigroup.hpp"
#include "umbral/poly.hpp"
#include "umbral/rat.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace umbral {

/// A polynomial sequence p_0, ..., p_N stored as a lower-triangular rational
/// matrix, tri[n][k] = coefficient of x^k in p_n.  Each p_n has degree
/// exactly n (nonzero diagonal), so the sequence is a candidate token from
/// the non-negative integers to the reals.
class poly_seq {
public:
    explicit poly_seq(std::vector<std::vector<rat>> rows);

    std::size_t max_index() const { return rows_.size() - 1; }
    const rat& coeff(std::size_t n, std::size_t k) const { return rows_.at(n).at(k); }
    const std::vector<std::vector<rat>>& rows() const { return rows_; }

    poly row_poly(std::size_t n) const { return poly(rows_.at(n)); }

    friend bool operator==(const poly_seq& a, const poly_seq& b) = default;

private:
    std::vector<std::vector<rat>> rows_;
};

/// First monomial x^a y^b at which the convolution identity fails, with the
/// two sides' coefficients.
struct token_witness {
    std::size_t n = 0;
    std::size_t x_deg = 0;
    std::size_t y_deg = 0;
    rat lhs;
    rat rhs;
};

/// Exact check of p_n(x+y) = sum_k p_k(x) p_{n-k}(y) for every n up to the
/// stored bound, by expanding both sides in the bivariate monomial basis.
bool is_token(const poly_seq& p, token_witness* witness = nullptr);

/// A kernel t(n, m) between two truncated copies of the non-negative
/// integers, stored as a dense (row_bound+1) x (col_bound+1) matrix.
class discrete_token {
public:
    explicit discrete_token(std::vector<std::vector<rat>> values);

    std::size_t row_bound() const { return values_.size() - 1; }
    std::size_t col_bound() const { return values_.front().size() - 1; }
    const rat& value(std::size_t n, std::size_t m) const { return values_.at(n).at(m); }

private:
    std::vector<std::vector<rat>> values_;
};

struct discrete_token_witness {
    std::size_t n = 0;
    std::size_t m1 = 0;
    std::size_t m2 = 0;
    rat lhs;
    rat rhs;
};

/// Exact check of sum_k t(k, m) t(n-k, m') = t(n, m+m') within bounds.
bool is_discrete_token(const discrete_token& t, discrete_token_witness* witness = nullptr);

/// k(n) = p_n(0), verified to reproduce the whole sequence under
/// convolution in the first argument; throws reproducing_check_failed when
/// the sequence does not satisfy the identity (only genuine tokens do).
cfunction<n_plus> reproducing_kernel(const poly_seq& p);

/// [Tk](n) = sum_m t(n, m) k(m); the support of k must fit the column bound.
cfunction<n_plus> t_transform(const discrete_token& t, const cfunction<n_plus>& k);

/// Applies a moment functional l (given by l(x^k) for k = 0..N) to every row:
/// f(n) = l(p_n).
cfunction<n_plus> umbral_apply(const poly_seq& p, std::span<const rat> moments);

// Built-in catalog (all of integral type; each is the basic sequence of the
// operator named in the factory on the `operators` side).
poly_seq monomial_sequence(std::size_t n);                   // x^n/n!
poly_seq binomial_sequence(std::size_t n);                   // C(x,n)
poly_seq rising_binomial_sequence(std::size_t n);            // C(x+n-1,n)
poly_seq abel_sequence(std::size_t n, const rat& a);         // x(x-an)^{n-1}/n!
discrete_token binomial_discrete_token(std::size_t n, std::size_t m); // t(n,m)=C(m,n)

} // namespace umbral
