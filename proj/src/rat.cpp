#include "umbral/rat.hpp"

#include "umbral/errors.hpp"

#include <ostream>

namespace umbral {

namespace {

mpq_class make_canonical(mpq_class v) {
    v.canonicalize();
    return v;
}

} // namespace

rat::rat(long long n) : value_(0) { value_ = mpq_class(mpz_class(std::to_string(n))); }

rat::rat(long long num, long long den) : value_(0) {
    if (den == 0)
        throw invariant_violation("rational with zero denominator");
    mpq_class v(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    value_ = make_canonical(std::move(v));
}

rat rat::from_string(std::string_view text) {
    if (text.empty())
        throw parse_error("empty rational literal");
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        throw parse_error("malformed rational literal: '" + std::string(text) + "'");
    if (sgn(mpq_class(v.get_den())) == 0)
        throw parse_error("zero denominator in rational literal: '" + std::string(text) + "'");
    return rat(make_canonical(std::move(v)));
}

long rat::num_as_long() const {
    mpz_class n = value_.get_num();
    if (!n.fits_slong_p())
        throw invariant_violation("numerator does not fit in long");
    return n.get_si();
}

long rat::den_as_long() const {
    mpz_class d = value_.get_den();
    if (!d.fits_slong_p())
        throw invariant_violation("denominator does not fit in long");
    return d.get_si();
}

rat rat::operator-() const { return rat(mpq_class(-value_)); }

rat& rat::operator+=(const rat& o) {
    value_ += o.value_;
    return *this;
}

rat& rat::operator-=(const rat& o) {
    value_ -= o.value_;
    return *this;
}

rat& rat::operator*=(const rat& o) {
    value_ *= o.value_;
    return *this;
}

rat& rat::operator/=(const rat& o) {
    if (o.is_zero())
        throw invariant_violation("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const rat& r) { return os << r.str(); }

rat factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    // mpq_class from mpz is already canonical
    rat out = rat::from_string(f.get_str());
    return out;
}

rat binomial(unsigned long n, unsigned long k) {
    if (k > n)
        return rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return rat::from_string(b.get_str());
}

rat falling_factorial(unsigned long n, unsigned long k) {
    rat out(1);
    for (unsigned long i = 0; i < k; ++i) {
        if (i > n)
            return rat(0);
        out *= rat(static_cast<long long>(n - i));
    }
    return out;
}

rat pow(const rat& a, unsigned long k) {
    rat out(1);
    rat base = a;
    unsigned long e = k;
    while (e != 0) {
        if (e & 1)
            out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

} // namespace umbral
