#pragma once

#include <cstdint>

#include "nonarch/lab/report.hpp"
#include "nonarch/lab/transfer.hpp"
#include "nonarch/order.hpp"

namespace nonarch::lab {

// 0 < t < 1/n for n = 1..n_max, plus the classification of t. Reports
// NotApplicable over Q, which has no infinitesimal generator.
DemoReport demo_non_archimedean(FieldId field, unsigned long n_max);

// The bounded sequence x_n = n*t (n <= n_max) is pairwise separated by t, so
// it has no cluster point: Weierstrass completeness fails off the
// Archimedean axis.
DemoReport demo_weierstrass_failure(FieldId field, unsigned n_max);

// a_n = -1/n is increasing and bounded above yet never t-Cauchy: monotone
// completeness fails. NotApplicable over Q.
DemoReport demo_monotone_failure(FieldId field, unsigned n_max);

// Geometric partial sums converge to 1/(1-t) in the valuation metric:
// d(S_n, 1/(1-t)) has valuation exactly n+1.
DemoReport demo_cauchy_completeness(unsigned n_max);

// Nested intervals around the truncated sqrt(1+t) series in K(t) with empty
// representable intersection: low-degree candidates (Taylor and maximal-
// contact Pade forms) satisfy v(x^2 - (1+t)) <= 2d+1, far short of the 2N
// the intersection would demand.
DemoReport demo_cantor_gap(unsigned n_max);

// The two worked identities behind the transfer examples, checked on random
// sample pairs, plus an inequality system probed at t.
DemoReport demo_transfer_cubic(unsigned samples, std::uint64_t seed);
DemoReport demo_transfer_sine(unsigned samples, std::uint64_t seed);
DemoReport demo_transfer_inequality();

} // namespace nonarch::lab
