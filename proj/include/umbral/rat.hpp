#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace umbral {

/// Arbitrary-precision rational, always in canonical form: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1.  Every exact module of the library works over this
/// scalar type; no floating point enters outside the `kernels` module.
class rat {
public:
    rat() : value_(0) {}
    rat(int n) : value_(n) {}
    rat(long n) : value_(static_cast<long int>(n)) {}
    rat(long long n);
    rat(long long num, long long den);

    /// Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
    static rat from_string(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }

    std::string str() const { return value_.get_str(); }
    std::string num_str() const { return value_.get_num().get_str(); }
    std::string den_str() const { return value_.get_den().get_str(); }

    /// Exact conversion to double (GMP rounds to nearest); only the float
    /// verification module uses this.
    double to_double() const { return value_.get_d(); }

    /// Numerator as long; throws if it does not fit.
    long num_as_long() const;
    long den_as_long() const;

    rat operator-() const;
    rat& operator+=(const rat& o);
    rat& operator-=(const rat& o);
    rat& operator*=(const rat& o);
    rat& operator/=(const rat& o); // division by zero throws

    friend rat operator+(rat a, const rat& b) { return a += b; }
    friend rat operator-(rat a, const rat& b) { return a -= b; }
    friend rat operator*(rat a, const rat& b) { return a *= b; }
    friend rat operator/(rat a, const rat& b) { return a /= b; }

    friend bool operator==(const rat& a, const rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const rat& a, const rat& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit rat(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const rat& r);

/// n! as a rat.
rat factorial(unsigned long n);

/// Binomial coefficient C(n, k), zero for k > n.
rat binomial(unsigned long n, unsigned long k);

/// Falling factorial n·(n-1)···(n-k+1); empty product is 1.
rat falling_factorial(unsigned long n, unsigned long k);

/// a^k with k >= 0.
rat pow(const rat& a, unsigned long k);

} // namespace umbral
