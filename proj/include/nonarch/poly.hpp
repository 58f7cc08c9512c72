#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nonarch/rational.hpp"

namespace nonarch {

// Univariate polynomial over Q in the distinguished variable t, stored as
// sorted (degree, coefficient) pairs with no zero coefficients. The zero
// polynomial has an empty term list, so representations are canonical and
// equality is structural.
class Poly {
public:
    using Term = std::pair<unsigned, Rational>;

    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(std::vector<Term> terms); // normalizes: sorts, merges, drops zeros

    static Poly t(unsigned degree = 1); // the monomial t^degree

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // Lowest stored degree; only defined for nonzero polynomials.
    unsigned ord() const;
    unsigned deg() const;
    Rational coeff(unsigned degree) const;
    const std::vector<Term>& terms() const { return terms_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& c) const;
    Poly shifted(unsigned degrees) const; // multiply by t^degrees

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Rational eval(const Rational& x) const;

    // Exact Euclidean division over Q; remainder returned alongside quotient.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    std::string str() const; // ascending-degree infix, e.g. "1 + 2*t - 3/2*t^2"

private:
    std::vector<Term> terms_;
};

// Monic gcd over Q via primitive PRS on integer polynomials (pseudo-division
// with content removal each step, so coefficients stay small).
Poly poly_gcd(const Poly& a, const Poly& b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace nonarch
