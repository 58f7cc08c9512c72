#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nonarch/ratfunc.hpp"
#include "nonarch/valuation.hpp"

namespace nonarch {

// Which exponent lattice a series lives in. Integer exponents give the
// Laurent field K<t^Z>; denominators dividing a fixed nu give the Puiseux
// field K{{t}}; unrestricted rational exponents stand in for the Levi-Civita
// field K<t^R> (rational exponents only -- exactness rules out irrational
// ones, and every worked identity here needs only rationals).
struct ExponentGroup {
    enum class Kind { Integer, BoundedDenominator, Rational };

    Kind kind = Kind::Rational;
    unsigned long denom = 1; // only meaningful for BoundedDenominator

    static ExponentGroup laurent() { return {Kind::Integer, 1}; }
    static ExponentGroup puiseux(unsigned long nu) { return {Kind::BoundedDenominator, nu}; }
    static ExponentGroup levi_civita() { return {Kind::Rational, 1}; }

    bool contains(const Rational& e) const;
    bool operator==(const ExponentGroup& o) const = default;

    // Smallest common refinement; kinds must agree.
    static ExponentGroup join(const ExponentGroup& a, const ExponentGroup& b);

    std::string str() const;
};

// Term and runtime limits for the nonterminating expansions (inversion,
// roots, lifted primitives). `cutoff` is the exponent bound used when the
// input is exact but the result is an infinite series.
struct Budget {
    Rational cutoff = Rational(16);
    unsigned max_terms = 512;
};

// Truncated generalized power series: strictly increasing exponents, no zero
// coefficients, every stored exponent <= cutoff. cutoff = +infinity means the
// element is known exactly; otherwise the value is terms + O(t^{>cutoff}).
class Series {
public:
    using Term = std::pair<Rational, Rational>; // (exponent, coefficient)

    explicit Series(ExponentGroup g = ExponentGroup::levi_civita())
        : group_(g), cutoff_(ValuationValue::infinity()) {}

    static Series constant(const Rational& c, ExponentGroup g);
    static Series monomial(const Rational& coeff, const Rational& exp, ExponentGroup g);
    static Series t(ExponentGroup g) { return monomial(Rational(1), Rational(1), g); }
    static Series from_terms(std::vector<Term> terms, ValuationValue cutoff, ExponentGroup g);

    const std::vector<Term>& terms() const { return terms_; }
    const ValuationValue& cutoff() const { return cutoff_; }
    const ExponentGroup& group() const { return group_; }

    bool is_exact() const { return cutoff_.is_infinite(); }
    bool is_exact_zero() const { return terms_.empty() && is_exact(); }

    Rational coeff_at(const Rational& exp) const;

    Series operator-() const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;

    // Factor x = a t^e (1 + w) and expand 1/x = t^{-e}/a * sum (-w)^k.
    // Guaranteed cutoff: input cutoff - 2e when the input is truncated;
    // exact inputs give an exact monomial inverse or budget.cutoff.
    Series inv(const Budget& budget = {}) const;

    Series div(const Series& o, const Budget& budget = {}) const { return *this * o.inv(budget); }

    Series pow(long e, const Budget& budget = {}) const;

    // k-th root via exact root of the leading coefficient and a binomial
    // series tail. Promotes the exponent group when e/k leaves it.
    Series root(unsigned long k, const Budget& budget = {}) const;

    // nu(S) = min(supp S); infinity only for the exact zero.
    ValuationValue valuation() const;

    // Sign of the leading coefficient (the K((t^R)) ordering).
    int sign() const;

    Series abs() const;

    // Valuation plus the display-only float e^{-v}.
    std::pair<ValuationValue, double> norm() const;
    std::pair<ValuationValue, double> dist(const Series& o) const;

    // Drop knowledge beyond `c` (no-op if already coarser).
    Series truncated(const ValuationValue& c) const;

    bool identical(const Series& o) const {
        return terms_ == o.terms_ && cutoff_ == o.cutoff_ && group_ == o.group_;
    }

    // Effective valuation lower bound used by cutoff propagation: the first
    // exponent, or the cutoff itself when no term is stored.
    ValuationValue nu_hat() const;

    std::string str(bool show_cutoff = true) const;

private:
    ExponentGroup group_;
    std::vector<Term> terms_;
    ValuationValue cutoff_;

    void drop_beyond_cutoff();
    void check_group() const;
};

// Four-valued comparison: Equal only for exactly-zero difference, Unresolved
// when the difference vanishes up to a finite cutoff.
Cmp s_compare(const Series& x, const Series& y);

// True when x - y has no term at or below its cutoff: exact equality, or
// agreement to the guaranteed resolution. This is the "equal up to cutoff"
// predicate used by axiom checks and transfer demos.
bool agrees_to_cutoff(const Series& x, const Series& y);

// Laurent expansion of f about t = 0. Terminating expansions (monomial
// denominator) come back exact; otherwise terms run to `cutoff`.
Series to_series(const RatFunc& f, const Rational& cutoff);

inline Series inv(const Series& s) { return s.inv(); }
inline Series abs(const Series& s) { return s.abs(); }
inline int sign(const Series& s) { return s.sign(); }
inline ValuationValue valuation(const Series& s) { return s.valuation(); }

std::ostream& operator<<(std::ostream& os, const Series& s);

} // namespace nonarch
