#pragma once

#include <vector>

#include "nonarch/lab/report.hpp"
#include "nonarch/rational.hpp"

namespace nonarch::lab {

// Closed-form rational sequence over n = 1, 2, ... restricted to shapes for
// which {n : a_n < b_n} and friends are decidably finite or cofinite:
// eventually-periodic patterns and harmonic tails c/n.
struct SequenceSpec {
    enum class Kind { EventuallyPeriodic, Harmonic };

    Kind kind = Kind::EventuallyPeriodic;
    std::vector<Rational> prefix;
    std::vector<Rational> period; // nonempty for EventuallyPeriodic
    Rational scale;               // Harmonic: a_n = scale / n

    static SequenceSpec constant(Rational c);
    static SequenceSpec periodic(std::vector<Rational> period);
    static SequenceSpec eventually_periodic(std::vector<Rational> prefix,
                                            std::vector<Rational> period);
    static SequenceSpec harmonic(Rational scale = Rational(1));

    Rational at(unsigned long n) const; // 1-indexed
    std::string str() const;
};

enum class FrechetOrder { Less, Greater, Equal, Incomparable };

const char* to_string(FrechetOrder o);

// Order of the sequence classes modulo the Frechet (cofinite) filter: Equal
// iff {a_n = b_n} is cofinite, Less/Greater iff the strict set is cofinite,
// Incomparable otherwise. Without the ultrafilter's decisiveness the
// quotient order is not total, which is what Incomparable exhibits.
FrechetOrder frechet_compare(const SequenceSpec& a, const SequenceSpec& b);

// The canonical trio: alternating 0/1 vs 1/0 (incomparable), 1/n vs 0
// (greater), constant vs itself (equal).
DemoReport demo_frechet();

} // namespace nonarch::lab
