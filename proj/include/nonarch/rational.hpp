#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "nonarch/error.hpp"

namespace nonarch {

enum class Cmp { Less, Equal, Greater, Unresolved };

inline Cmp cmp_from_int(int s) {
    return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal);
}

const char* to_string(Cmp c);

// Exact arbitrary-precision fraction. Canonical form is maintained at all
// times: gcd(|num|, den) = 1, den > 0, zero is 0/1. Values are immutable in
// spirit -- every operation returns a fresh value -- so sharing across
// threads is safe.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                      // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational from_int(long n) { return Rational(n); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inv() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Exact integer power; negative exponents invert (zero base rejected).
    Rational pow(long e) const;

    // Exact k-th root when it exists in Q (k >= 1); nullopt otherwise.
    std::optional<Rational> root(unsigned long k) const;

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational floor() const;
    Rational ceil() const;

    // "p/q" (or "p" when q = 1); bit-exact round-trip with parse().
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    // Accepts "p", "p/q", and decimal literals like "-3.25" (converted
    // exactly via powers of ten; no floating intermediate).
    static Rational parse(std::string_view text);

private:
    mpq_class v_;
};

inline Cmp rat_cmp(const Rational& a, const Rational& b) {
    return cmp_from_int((a <=> b) < 0 ? -1 : ((a <=> b) > 0 ? 1 : 0));
}

inline Rational abs(const Rational& a) { return a.abs(); }
inline Rational inv(const Rational& a) { return a.inv(); }
inline int sign(const Rational& a) { return a.sign(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

// n! as an exact integer-valued rational.
Rational factorial(unsigned long n);

// Generalized binomial coefficient C(alpha, k) = alpha(alpha-1)...(alpha-k+1)/k!
// for rational alpha; drives binomial series for roots and rational powers.
Rational binomial(const Rational& alpha, unsigned long k);

} // namespace nonarch
