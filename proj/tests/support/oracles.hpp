#pragma once

// Test-side oracles, independent of the series-evaluation path they check.

#include <vector>

#include "nonarch/fnexpr.hpp"
#include "nonarch/rational.hpp"

namespace oracles {

using nonarch::FnExpr;
using nonarch::Rational;

// Classical symbolic differentiation over the expression grammar. Uses only
// tree rewriting and exact rational arithmetic; never touches series code.
inline FnExpr diff_symbolic(const FnExpr& e) {
    using K = FnExpr::Kind;
    switch (e.kind()) {
        case K::Const: return FnExpr::constant(Rational(0));
        case K::Var: return FnExpr::constant(Rational(1));
        case K::Add: return diff_symbolic(e.child(0)) + diff_symbolic(e.child(1));
        case K::Sub: return diff_symbolic(e.child(0)) - diff_symbolic(e.child(1));
        case K::Mul:
            return diff_symbolic(e.child(0)) * e.child(1) +
                   e.child(0) * diff_symbolic(e.child(1));
        case K::Div: {
            const FnExpr &u = e.child(0), &v = e.child(1);
            return (diff_symbolic(u) * v - u * diff_symbolic(v)) / (v * v);
        }
        case K::Neg: return -diff_symbolic(e.child(0));
        case K::Pow: {
            // d(u^a) = a * u^(a-1) * u'
            const FnExpr& u = e.child(0);
            Rational a = e.exponent();
            return FnExpr::constant(a) * u.pow(a - Rational(1)) * diff_symbolic(u);
        }
        case K::Exp: return FnExpr::exp(e.child(0)) * diff_symbolic(e.child(0));
        case K::Ln: return diff_symbolic(e.child(0)) / e.child(0);
        case K::Sin: return FnExpr::cos(e.child(0)) * diff_symbolic(e.child(0));
        case K::Cos: return -(FnExpr::sin(e.child(0)) * diff_symbolic(e.child(0)));
        case K::Sqrt:
            return diff_symbolic(e.child(0)) /
                   (FnExpr::constant(Rational(2)) * FnExpr::sqrt(e.child(0)));
    }
    return FnExpr::constant(Rational(0));
}

// Central difference (f(r+h) - f(r-h)) / 2h in exact rational arithmetic.
inline Rational central_difference(const FnExpr& f, const Rational& r, const Rational& h) {
    return (f.eval_at(r + h) - f.eval_at(r - h)) / (Rational(2) * h);
}

// Frozen expansions computed by hand / classical formulas.

// Geometric series: 1/(1-t) = sum t^k.
inline std::vector<Rational> geometric_coeffs(unsigned n) {
    return std::vector<Rational>(n + 1, Rational(1));
}

// sqrt(1+t) by the generalized binomial theorem; first values frozen from
// C(1/2,k) worked by hand: 1, 1/2, -1/8, 1/16, -5/128, 7/256.
inline std::vector<Rational> sqrt1p_coeffs() {
    return {Rational(1),        Rational(1, 2),   Rational(-1, 8),
            Rational(1, 16),    Rational(-5, 128), Rational(7, 256)};
}

// sin: c_{2m+1} = (-1)^m / (2m+1)!, zeros elsewhere.
inline Rational sin_coeff(unsigned k) {
    if (k % 2 == 0) return Rational(0);
    Rational c = nonarch::factorial(k).inv();
    return ((k - 1) / 2) % 2 == 0 ? c : -c;
}

inline Rational cos_coeff(unsigned k) {
    if (k % 2 == 1) return Rational(0);
    Rational c = nonarch::factorial(k).inv();
    return (k / 2) % 2 == 0 ? c : -c;
}

} // namespace oracles
