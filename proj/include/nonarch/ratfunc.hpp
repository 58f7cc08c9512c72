#pragma once

#include <iosfwd>
#include <string>

#include "nonarch/poly.hpp"
#include "nonarch/valuation.hpp"

namespace nonarch {

// The ordered field K(t) of rational functions over Q, ordered by the sign
// of the lowest-order coefficient (equivalently: by the sign of f(t) for all
// sufficiently small rational t > 0). Representations are canonical --
// num/den coprime, den's lowest-order coefficient 1 -- so equality is
// structural and comparison is exact.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {} // NOLINT
    RatFunc(Poly num, Poly den);

    static RatFunc t() { return RatFunc(Poly::t(), Poly(Rational(1))); }
    static RatFunc from_rational(const Rational& q) { return RatFunc(q); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inv() const;
    RatFunc pow(long e) const;
    RatFunc abs() const { return sign() < 0 ? -*this : *this; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Sign of the lowest-order coefficient of num (den is normalized to have
    // lowest-order coefficient 1). This is the K(t) ordering.
    int sign() const;

    ValuationValue valuation() const;

    // Exact evaluation at a rational point; the point must not be a pole.
    Rational eval(const Rational& x) const;

    // Smallest integer M such that num*den has no roots in (0, 1/M], derived
    // from the Cauchy root bound. For every rational 0 < eps <= 1/M the sign
    // of eval(eps) equals sign(). Defined for nonzero elements.
    mpz_class small_t_threshold() const;

    std::string str() const;

private:
    Poly num_, den_;
};

inline Cmp rf_compare(const RatFunc& f, const RatFunc& g) {
    int s = (f - g).sign();
    return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal);
}

inline RatFunc inv(const RatFunc& f) { return f.inv(); }
inline RatFunc abs(const RatFunc& f) { return f.abs(); }
inline int sign(const RatFunc& f) { return f.sign(); }
inline ValuationValue valuation(const RatFunc& f) { return f.valuation(); }

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

} // namespace nonarch
