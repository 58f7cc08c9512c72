#include "nonarch/ratfunc.hpp"

#include <ostream>

namespace nonarch {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    // Canonical scaling: lowest-order coefficient of den becomes 1.
    Rational low = den_.coeff(den_.ord());
    if (!(low == Rational(1))) {
        Rational s = low.inv();
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    RatFunc base = e < 0 ? inv() : *this;
    long n = e < 0 ? -e : e;
    RatFunc acc(Rational(1));
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

int RatFunc::sign() const {
    if (num_.is_zero()) return 0;
    return num_.coeff(num_.ord()).sign();
}

ValuationValue RatFunc::valuation() const {
    if (is_zero()) return ValuationValue::infinity();
    long v = static_cast<long>(num_.ord()) - static_cast<long>(den_.ord());
    return ValuationValue::finite(Rational(v));
}

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw DomainError("evaluation at a pole");
    return num_.eval(x) / d;
}

mpz_class RatFunc::small_t_threshold() const {
    if (is_zero()) throw DomainError("threshold of the zero element");
    // Nonzero roots of h = num*den have |x| >= |g_0| / (|g_0| + max_i |g_i|)
    // where g = h / t^ord(h). Any M with 1/M below that bound works.
    Poly h = num_ * den_;
    const unsigned base = h.ord();
    Rational g0 = h.coeff(base).abs();
    Rational top(0);
    for (auto& [d, c] : h.terms()) {
        if (d == base) continue;
        Rational a = c.abs();
        if (a > top) top = a;
    }
    Rational bound = g0 / (g0 + top); // r_min lower bound, in (0, 1]
    Rational m = bound.inv().floor() + Rational(1);
    return m.num();
}

std::string RatFunc::str() const {
    if (den_.is_one()) {
        bool multi = num_.terms().size() > 1;
        return multi ? "(" + num_.str() + ")" : num_.str();
    }
    auto wrap = [](const Poly& p) {
        bool multi = p.terms().size() > 1;
        return multi ? "(" + p.str() + ")" : p.str();
    };
    return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

} // namespace nonarch
