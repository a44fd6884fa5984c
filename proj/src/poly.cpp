#include "umbral/poly.hpp"

#include <ostream>
#include <sstream>

namespace umbral {

poly::poly(std::vector<rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

poly poly::constant(const rat& c) { return poly({c}); }

poly poly::monomial(const rat& c, std::size_t k) {
    std::vector<rat> v(k + 1);
    v[k] = c;
    return poly(std::move(v));
}

void poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

rat poly::eval(const rat& x) const {
    rat acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;)
        acc = acc * x + coeffs_[k];
    return acc;
}

poly add(const poly& a, const poly& b) {
    std::vector<rat> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) + b.coeff(i);
    return poly(std::move(c));
}

poly sub(const poly& a, const poly& b) {
    std::vector<rat> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) - b.coeff(i);
    return poly(std::move(c));
}

poly mul(const poly& a, const poly& b) {
    if (a.is_zero() || b.is_zero())
        return poly();
    std::vector<rat> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return poly(std::move(c));
}

poly scale(const rat& c, const poly& a) {
    std::vector<rat> out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = c * a.coeffs()[i];
    return poly(std::move(out));
}

poly derive(const poly& a) {
    if (a.coeffs().size() <= 1)
        return poly();
    std::vector<rat> c(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i)
        c[i - 1] = rat(static_cast<long long>(i)) * a.coeffs()[i];
    return poly(std::move(c));
}

poly translate(const poly& p, const rat& h) {
    if (h.is_zero())
        return p;
    std::vector<rat> c(p.coeffs().size());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        // x^i -> sum_j C(i,j) h^{i-j} x^j
        for (std::size_t j = 0; j <= i; ++j)
            c[j] += p.coeffs()[i] * binomial(i, j) * pow(h, i - j);
    }
    return poly(std::move(c));
}

std::string to_string(const poly& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const rat& c = p.coeffs()[k];
        if (c.is_zero())
            continue;
        if (!first)
            os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0)
            os << "-";
        rat mag = c.sign() < 0 ? -c : c;
        if (k == 0 || !mag.is_one())
            os << mag.str();
        if (k > 0) {
            if (!mag.is_one())
                os << "*";
            os << "x";
            if (k > 1)
                os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const poly& p) { return os << to_string(p); }

} // namespace umbral
