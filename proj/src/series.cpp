#include "umbral/series.hpp"

#include "umbral/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace umbral {

namespace {

void require_same_flavor(const series& a, const series& b) {
    if (a.flav() != b.flav())
        throw flavor_mismatch("mixed ordinary/exponential arithmetic");
}

} // namespace

std::string_view flavor_name(flavor f) {
    return f == flavor::ordinary ? "ordinary" : "exponential";
}

flavor flavor_from_name(std::string_view name) {
    if (name == "ordinary")
        return flavor::ordinary;
    if (name == "exponential")
        return flavor::exponential;
    throw parse_error("unknown flavor: '" + std::string(name) + "'");
}

series::series(flavor f, std::vector<rat> coeffs) : flav_(f), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw invariant_violation("series needs at least the constant coefficient");
}

series series::zero(flavor f, std::size_t order) {
    return series(f, std::vector<rat>(order + 1));
}

series series::delta0(flavor f, std::size_t order) {
    std::vector<rat> c(order + 1);
    c[0] = rat(1);
    return series(f, std::move(c));
}

bool series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const rat& r) { return r.is_zero(); });
}

series add(const series& a, const series& b) {
    require_same_flavor(a, b);
    std::size_t n = std::min(a.order(), b.order());
    std::vector<rat> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        c[i] = a.coeff(i) + b.coeff(i);
    return series(a.flav(), std::move(c));
}

series sub(const series& a, const series& b) {
    require_same_flavor(a, b);
    std::size_t n = std::min(a.order(), b.order());
    std::vector<rat> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        c[i] = a.coeff(i) - b.coeff(i);
    return series(a.flav(), std::move(c));
}

series mul(const series& a, const series& b) {
    require_same_flavor(a, b);
    std::size_t n = std::min(a.order(), b.order());
    std::vector<rat> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n - i; ++j)
            c[i + j] += a.coeff(i) * b.coeff(j);
    return series(a.flav(), std::move(c));
}

series scale(const rat& c, const series& a) {
    std::vector<rat> out(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i)
        out[i] = c * a.coeff(i);
    return series(a.flav(), std::move(out));
}

series inverse(const series& a) {
    if (a.coeff(0).is_zero())
        throw non_unit_constant_term("series with zero constant term has no inverse");
    std::size_t n = a.order();
    std::vector<rat> b(n + 1);
    rat inv0 = rat(1) / a.coeff(0);
    b[0] = inv0;
    for (std::size_t m = 1; m <= n; ++m) {
        rat acc;
        for (std::size_t k = 1; k <= m; ++k)
            acc += a.coeff(k) * b[m - k];
        b[m] = -inv0 * acc;
    }
    return series(a.flav(), std::move(b));
}

series compose(const series& a, const series& b) {
    require_same_flavor(a, b);
    if (!b.coeff(0).is_zero())
        throw nonzero_inner_constant("composition needs an inner series with zero constant term");
    std::size_t n = std::min(a.order(), b.order());
    // Truncate the inner series; coefficients of a past the result order
    // cannot contribute because b has positive valuation.
    series bt(a.flav(), std::vector<rat>(b.coeffs().begin(), b.coeffs().begin() + n + 1));
    series acc = series::zero(a.flav(), n);
    for (std::size_t k = n + 1; k-- > 0;) {
        acc = mul(acc, bt);
        std::vector<rat> c = acc.coeffs();
        c[0] += a.coeff(k);
        acc = series(a.flav(), std::move(c));
    }
    return acc;
}

series derive(const series& a) {
    if (a.order() == 0)
        return series::zero(a.flav(), 0);
    std::vector<rat> c(a.order());
    for (std::size_t i = 1; i <= a.order(); ++i)
        c[i - 1] = rat(static_cast<long long>(i)) * a.coeff(i);
    return series(a.flav(), std::move(c));
}

series integrate(const series& a, std::size_t max_order) {
    std::size_t n = std::min(a.order() + 1, max_order);
    std::vector<rat> c(n + 1);
    for (std::size_t i = 1; i <= n; ++i)
        c[i] = a.coeff(i - 1) / rat(static_cast<long long>(i));
    return series(a.flav(), std::move(c));
}

series exp_series(std::size_t order, flavor f) {
    std::vector<rat> c(order + 1);
    for (std::size_t i = 0; i <= order; ++i)
        c[i] = rat(1) / factorial(i);
    return series(f, std::move(c));
}

std::vector<rat> binomial_convolve(std::span<const rat> a, std::span<const rat> b) {
    std::size_t sz = std::min(a.size(), b.size());
    std::vector<rat> c(sz);
    for (std::size_t n = 0; n < sz; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            c[n] += binomial(n, k) * a[k] * b[n - k];
    return c;
}

std::string to_literal(const series& s) {
    std::ostringstream os;
    os << "flavor:" << flavor_name(s.flav()) << " order:" << s.order() << " coeffs:";
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (i)
            os << ',';
        os << s.coeff(i).str();
    }
    return os.str();
}

series series_from_literal(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string tok;
    flavor f = flavor::ordinary;
    bool have_flavor = false, have_order = false, have_coeffs = false;
    std::size_t order = 0;
    std::vector<rat> coeffs;
    while (is >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw parse_error("series literal: expected key:value, got '" + tok + "'");
        std::string key = tok.substr(0, colon);
        std::string val = tok.substr(colon + 1);
        if (key == "flavor") {
            f = flavor_from_name(val);
            have_flavor = true;
        } else if (key == "order") {
            try {
                order = std::stoul(val);
            } catch (const std::exception&) {
                throw parse_error("series literal: bad order '" + val + "'");
            }
            have_order = true;
        } else if (key == "coeffs") {
            std::size_t pos = 0;
            while (pos <= val.size()) {
                auto comma = val.find(',', pos);
                std::string item =
                    comma == std::string::npos ? val.substr(pos) : val.substr(pos, comma - pos);
                coeffs.push_back(rat::from_string(item));
                if (comma == std::string::npos)
                    break;
                pos = comma + 1;
            }
            have_coeffs = true;
        } else {
            throw parse_error("series literal: unknown key '" + key + "'");
        }
    }
    if (!have_flavor || !have_order || !have_coeffs)
        throw parse_error("series literal: needs flavor:, order: and coeffs:");
    if (coeffs.size() != order + 1)
        throw parse_error("series literal: order " + std::to_string(order) + " needs " +
                          std::to_string(order + 1) + " coefficients, got " +
                          std::to_string(coeffs.size()));
    return series(f, std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const series& s) { return os << to_literal(s); }

} // namespace umbral
