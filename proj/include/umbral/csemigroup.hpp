#pragma once

#include "umbral/errors.hpp"
#include "umbral/rat.hpp"
#include "umbral/series.hpp"

#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <ranges>
#include <utility>
#include <vector>

namespace umbral {

/// Contract for a (bound-truncated) left cancellative semigroup.  `mul` is the
/// total semigroup operation, `lquot(a, b)` the unique x with a·x = b when it
/// exists, `source()` a right source, `elements()` the truncated carrier used
/// by the finite integrals.  Cancellativity is not assumed silently: it is
/// checkable by exhaustion with `check_cancellative`.
template <class S>
concept c_semigroup =
    std::equality_comparable<S> && std::copyable<S> &&
    requires(const S& s, const typename S::element_type& a, const typename S::element_type& b) {
        typename S::element_type;
        { s.mul(a, b) } -> std::same_as<typename S::element_type>;
        { s.lquot(a, b) } -> std::same_as<std::optional<typename S::element_type>>;
        { s.source() } -> std::same_as<typename S::element_type>;
        { s.contains(a) } -> std::same_as<bool>;
        { s.elements() };
    };

/// The non-negative integers under addition, truncated to {0, ..., bound}.
struct n_plus {
    using element_type = std::size_t;

    std::size_t bound = 0;

    element_type mul(element_type a, element_type b) const { return a + b; }

    std::optional<element_type> lquot(element_type a, element_type b) const {
        if (b >= a)
            return b - a;
        return std::nullopt;
    }

    element_type source() const { return 0; }

    bool contains(element_type e) const { return e <= bound; }

    auto elements() const { return std::views::iota(std::size_t{0}, bound + 1); }

    friend bool operator==(const n_plus&, const n_plus&) = default;
};

static_assert(c_semigroup<n_plus>);

/// Finitely supported rational-valued function on the truncated carrier of a
/// c-semigroup.  Values off the carrier read as zero (the truncation view);
/// writes outside the carrier are rejected.
template <c_semigroup S>
class cfunction {
public:
    using element_type = typename S::element_type;

    explicit cfunction(S sg) : sg_(std::move(sg)) {}

    cfunction(S sg, std::map<element_type, rat> values) : sg_(std::move(sg)) {
        for (auto& [e, v] : values)
            set(e, v);
    }

    const S& semigroup() const { return sg_; }

    rat at(const element_type& e) const {
        auto it = vals_.find(e);
        return it == vals_.end() ? rat(0) : it->second;
    }

    void set(const element_type& e, const rat& v) {
        if (!sg_.contains(e))
            throw element_out_of_bounds("cfunction value outside the truncated carrier");
        if (v.is_zero())
            vals_.erase(e);
        else
            vals_[e] = v;
    }

    /// Nonzero entries, keyed by element.
    const std::map<element_type, rat>& support() const { return vals_; }

    bool is_zero() const { return vals_.empty(); }

    friend bool operator==(const cfunction& a, const cfunction& b) = default;

private:
    S sg_;
    std::map<element_type, rat> vals_;
};

/// Point mass at `e`.
template <c_semigroup S>
cfunction<S> point_mass(S sg, const typename S::element_type& e) {
    cfunction<S> f(std::move(sg));
    f.set(e, rat(1));
    return f;
}

/// Convolution (k2 * k1)(b) = sum_a k2(a) k1([a^-1 b]); terms with an
/// undefined quotient contribute zero (the agreement rule).
template <c_semigroup S>
cfunction<S> convolve(const cfunction<S>& k2, const cfunction<S>& k1) {
    if (k2.semigroup() != k1.semigroup())
        throw semigroup_mismatch("convolution of functions over different semigroups");
    const S& sg = k2.semigroup();
    cfunction<S> out(sg);
    for (const auto& b : sg.elements()) {
        rat acc;
        for (const auto& [a, va] : k2.support()) {
            auto q = sg.lquot(a, b);
            if (q)
                acc += va * k1.at(*q);
        }
        if (!acc.is_zero())
            out.set(b, acc);
    }
    return out;
}

/// Left shift: [shift(a, f)](b) = f(a·b); products leaving the truncated
/// carrier read as zero.
template <c_semigroup S>
cfunction<S> shift(const typename S::element_type& a, const cfunction<S>& f) {
    const S& sg = f.semigroup();
    if (!sg.contains(a))
        throw element_out_of_bounds("shift by element outside the carrier");
    cfunction<S> out(sg);
    for (const auto& b : sg.elements()) {
        auto ab = sg.mul(a, b);
        if (sg.contains(ab)) {
            rat v = f.at(ab);
            if (!v.is_zero())
                out.set(b, v);
        }
    }
    return out;
}

/// Shift invariance of the integral: sum_c f(c) = sum_b f([a^-1 b]).  The
/// check is only meaningful when the reindexed support stays inside the
/// truncated carrier; otherwise it throws support_too_large.
template <c_semigroup S>
bool check_invariance(const cfunction<S>& f, const typename S::element_type& a) {
    const S& sg = f.semigroup();
    if (!sg.contains(a))
        throw element_out_of_bounds("invariance check with element outside the carrier");
    for (const auto& [c, v] : f.support()) {
        (void)v;
        if (!sg.contains(sg.mul(a, c)))
            throw support_too_large("support escapes the truncated carrier under the shift");
    }
    rat lhs;
    for (const auto& [c, v] : f.support())
        lhs += v;
    rat rhs;
    for (const auto& b : sg.elements()) {
        auto q = sg.lquot(a, b);
        if (q)
            rhs += f.at(*q);
    }
    return lhs == rhs;
}

/// Exhaustive cancellativity and quotient-consistency check over the
/// truncated carrier (products falling outside the carrier are skipped).
template <c_semigroup S>
bool check_cancellative(const S& sg) {
    for (const auto& a : sg.elements()) {
        for (const auto& x : sg.elements()) {
            auto ax = sg.mul(a, x);
            auto xa = sg.mul(x, a);
            if (sg.contains(ax)) {
                auto q = sg.lquot(a, ax);
                if (!q || *q != x)
                    return false;
            }
            for (const auto& y : sg.elements()) {
                if (x == y)
                    continue;
                if (sg.contains(ax) && sg.contains(sg.mul(a, y)) && ax == sg.mul(a, y))
                    return false;
                if (sg.contains(xa) && sg.contains(sg.mul(y, a)) && xa == sg.mul(y, a))
                    return false;
            }
        }
    }
    return true;
}

/// The identification of C(N+) with truncated power series: coefficient n is
/// the value at n.
series to_series(const cfunction<n_plus>& f, flavor fl = flavor::ordinary);
cfunction<n_plus> cfunction_from_series(const series& s);
cfunction<n_plus> cfunction_from_values(std::size_t bound, const std::vector<rat>& values);

} // namespace umbral
