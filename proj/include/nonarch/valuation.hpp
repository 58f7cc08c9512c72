#pragma once

#include <cmath>
#include <string>

#include "nonarch/rational.hpp"

namespace nonarch {

// Codomain of the valuations v and nu: a rational or +infinity (infinity is
// reserved for the zero element). Doubles as the series cutoff bound, where
// +infinity means "known exactly".
class ValuationValue {
public:
    static ValuationValue infinity() { return ValuationValue(true, Rational(0)); }
    static ValuationValue finite(Rational r) { return ValuationValue(false, std::move(r)); }

    bool is_infinite() const { return infinite_; }
    const Rational& value() const { return value_; } // only meaningful when finite

    bool operator==(const ValuationValue& o) const {
        if (infinite_ != o.infinite_) return false;
        return infinite_ || value_ == o.value_;
    }

    bool operator<(const ValuationValue& o) const {
        if (infinite_) return false;
        if (o.infinite_) return true;
        return value_ < o.value_;
    }
    bool operator<=(const ValuationValue& o) const { return *this < o || *this == o; }
    bool operator>(const ValuationValue& o) const { return o < *this; }
    bool operator>=(const ValuationValue& o) const { return o <= *this; }

    // Infinity absorbs, matching v(xy) = v(x) + v(y) with the zero element.
    ValuationValue operator+(const ValuationValue& o) const {
        if (infinite_ || o.infinite_) return infinity();
        return finite(value_ + o.value_);
    }
    ValuationValue operator-(const Rational& r) const {
        if (infinite_) return infinity();
        return finite(value_ - r);
    }
    ValuationValue operator+(const Rational& r) const {
        if (infinite_) return infinity();
        return finite(value_ + r);
    }

    static ValuationValue min(const ValuationValue& a, const ValuationValue& b) {
        return a < b ? a : b;
    }

    // Display affordance only: ||x|| = e^{-v}, with e^{-inf} = 0.
    double norm_display() const {
        return infinite_ ? 0.0 : std::exp(-value_.to_double());
    }

    std::string str() const { return infinite_ ? "inf" : value_.str(); }

private:
    ValuationValue(bool inf, Rational v) : infinite_(inf), value_(std::move(v)) {}

    bool infinite_;
    Rational value_;
};

} // namespace nonarch
