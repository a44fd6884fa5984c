#pragma once

#include "umbral/csemigroup.hpp"
#include "umbral/poly.hpp"
#include "umbral/series.hpp"
#include "umbral/token.hpp"

#include <cstddef>
#include <functional>

namespace umbral {

/// A delta operator Q = q_1 D + q_2 D^2 + ... acting on polynomials, encoded
/// by its symbol, an ordinary series with zero constant term and q_1 != 0.
/// The powers Q^k indexed by the non-negative integers form the delta family.
class delta_op {
public:
    explicit delta_op(series symbol);

    const series& symbol() const { return sym_; }
    std::size_t order() const { return sym_.order(); }

    static delta_op derivative(std::size_t order);          // D
    static delta_op forward_difference(std::size_t order);  // e^D - 1
    static delta_op backward_difference(std::size_t order); // 1 - e^{-D}
    static delta_op abel(std::size_t order, const rat& a);  // D e^{aD}

private:
    series sym_;
};

/// Applies the operator with the given D-symbol: sum_k q_k p^(k).  The symbol
/// must carry taps at least up to deg p.
poly apply_series_operator(const series& symbol, const poly& p);

poly apply_delta(const delta_op& q, const poly& p);

/// The unique sequence with p_0 = 1, Q p_n = p_{n-1} and p_n(0) = 0 for
/// n >= 1, solved degree by degree by exact back-substitution.
poly_seq basic_sequence(const delta_op& q, std::size_t bound);

/// A shift-invariant operator held by its expansion coefficients in the
/// powers of a chosen delta operator: S = sum_k a_k Q^k.
class shift_inv_op {
public:
    explicit shift_inv_op(series coefficients);
    const series& coefficients() const { return coeffs_; }

private:
    series coeffs_;
};

using poly_operator = std::function<poly(const poly&)>;

/// First Expansion Theorem made executable: a_k = [S p_k](0) where p is basic
/// for q.  The black box is spot-checked for shift invariance (it must
/// commute with five pseudo-random rational translations on the basic rows)
/// and the expansion is verified to reconstruct S on every p_n before the
/// coefficients are returned.
shift_inv_op expand_operator(const poly_operator& op, const delta_op& q, std::size_t bound,
                             unsigned spot_check_seed = 0x5eed);

/// S = sum a_k Q^k applied to a polynomial; convenience for tests and for
/// composing coordinatized operators.
poly apply_expansion(const shift_inv_op& s, const delta_op& q, const poly& p);

/// The convolution kernel on the non-negative integers that realizes S under
/// the basic-sequence coordinate map; composition of operators corresponds to
/// convolution of these kernels.
cfunction<n_plus> operator_to_convolution(const shift_inv_op& s, const delta_op& q);

/// Product of linear functionals in basic-sequence coordinates; this is plain
/// convolution on the non-negative integers, exposed under the name that the
/// functional calculus uses for it.
cfunction<n_plus> hopf_product(const cfunction<n_plus>& l1, const cfunction<n_plus>& l2);

/// deg(Q^k p2_n) must be exactly n-k (and Q^k p2_n = 0 past k = n) for every
/// n within the sequence bound.  Takes a raw symbol so the failure mode of a
/// non-delta operator (e.g. D^2) is observable.
bool degree_lowering_check(const series& q_symbol, const poly_seq& p2);

/// Recovers the delta operator whose basic sequence the given token is; this
/// is the constructive half of the token <-> delta-family correspondence.
/// Throws not_a_delta_operator when no shift-invariant symbol reproduces the
/// sequence (only genuine tokens admit one).
delta_op associated_delta(const poly_seq& p);

} // namespace umbral
