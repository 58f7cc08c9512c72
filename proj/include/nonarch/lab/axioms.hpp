#pragma once

#include <cstdint>
#include <random>

#include "nonarch/lab/report.hpp"
#include "nonarch/order.hpp"

namespace nonarch::lab {

// Deterministic element generators shared by the axiom suites, the transfer
// demos, and the round-trip tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long int_in(long lo, long hi);
    Rational rational(long max_num = 30, long max_den = 30);
    Rational nonzero_rational(long max_num = 30, long max_den = 30);
    Poly poly(unsigned max_deg = 6, long coeff_bound = 9);
    Poly nonzero_poly(unsigned max_deg = 6, long coeff_bound = 9);
    RatFunc ratfunc(unsigned max_deg = 6, long coeff_bound = 9);
    // Exact finite-support series in the given group.
    Series series(ExponentGroup g, unsigned max_terms = 4, long exp_bound = 6,
                  long coeff_bound = 9);
    // Exact series with strictly positive valuation.
    Series infinitesimal_series(ExponentGroup g, unsigned max_terms = 4,
                                long exp_bound = 6, long coeff_bound = 9);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

struct AxiomsConfig {
    unsigned cases = 1000;
    std::uint64_t seed = 1;
};

// Field axioms on random triples: associativity, commutativity,
// distributivity, identities, inverses. Series cases mix exact and truncated
// operands; agreement means "no differing term at or below the guaranteed
// cutoff".
DemoReport check_field_axioms(FieldId field, const AxiomsConfig& cfg = {});

// Total-order axioms plus the classification structure: trichotomy, order
// compatibility with + and *, positive-cone closure, |ab| = |a||b|, the
// triangle inequality, convexity of the infinitesimal ideal, closure of the
// finite ring, and x infinitesimal <-> 1/x infinitely large.
DemoReport check_order_axioms(FieldId field, const AxiomsConfig& cfg = {});

// Valuation axioms: v(x) = inf iff x = 0, the logarithmic property, the
// ultrametric inequality (with the forced-equality case v(x) != v(y) checked
// separately), and convexity |x| < |y| => v(x) >= v(y).
DemoReport check_valuation_axioms(FieldId field, const AxiomsConfig& cfg = {});

} // namespace nonarch::lab
