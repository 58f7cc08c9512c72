#include "nonarch/lab/frechet.hpp"

#include <numeric>
#include <sstream>

#include "nonarch/error.hpp"

namespace nonarch::lab {

SequenceSpec SequenceSpec::constant(Rational c) {
    SequenceSpec s;
    s.kind = Kind::EventuallyPeriodic;
    s.period = {std::move(c)};
    return s;
}

SequenceSpec SequenceSpec::periodic(std::vector<Rational> period) {
    if (period.empty()) throw UnsupportedSpec("periodic spec needs a nonempty period");
    SequenceSpec s;
    s.kind = Kind::EventuallyPeriodic;
    s.period = std::move(period);
    return s;
}

SequenceSpec SequenceSpec::eventually_periodic(std::vector<Rational> prefix,
                                               std::vector<Rational> period) {
    if (period.empty()) throw UnsupportedSpec("periodic spec needs a nonempty period");
    SequenceSpec s;
    s.kind = Kind::EventuallyPeriodic;
    s.prefix = std::move(prefix);
    s.period = std::move(period);
    return s;
}

SequenceSpec SequenceSpec::harmonic(Rational scale) {
    SequenceSpec s;
    s.kind = Kind::Harmonic;
    s.scale = std::move(scale);
    return s;
}

Rational SequenceSpec::at(unsigned long n) const {
    if (n == 0) throw DomainError("sequences are 1-indexed");
    switch (kind) {
        case Kind::EventuallyPeriodic: {
            if (n <= prefix.size()) return prefix[n - 1];
            unsigned long off = n - prefix.size() - 1;
            return period[off % period.size()];
        }
        case Kind::Harmonic: return scale / Rational(static_cast<long>(n));
    }
    throw DomainError("unreachable sequence kind");
}

std::string SequenceSpec::str() const {
    std::ostringstream os;
    if (kind == Kind::Harmonic) {
        os << "(" << scale.str() << "/n)";
        return os.str();
    }
    os << "(";
    for (auto& p : prefix) os << p.str() << ", ";
    os << "[";
    for (std::size_t i = 0; i < period.size(); ++i) os << (i ? " " : "") << period[i].str();
    os << "]...)";
    return os.str();
}

const char* to_string(FrechetOrder o) {
    switch (o) {
        case FrechetOrder::Less: return "Less";
        case FrechetOrder::Greater: return "Greater";
        case FrechetOrder::Equal: return "Equal";
        case FrechetOrder::Incomparable: return "Incomparable";
    }
    return "?";
}

namespace {

enum class Rel { Less, Equal, Greater };

FrechetOrder fold(const std::vector<Rel>& rels) {
    bool all_less = true, all_equal = true, all_greater = true;
    for (Rel r : rels) {
        all_less &= r == Rel::Less;
        all_equal &= r == Rel::Equal;
        all_greater &= r == Rel::Greater;
    }
    if (all_equal) return FrechetOrder::Equal;
    if (all_less) return FrechetOrder::Less;
    if (all_greater) return FrechetOrder::Greater;
    return FrechetOrder::Incomparable;
}

Rel rel_of(const Rational& a, const Rational& b) {
    if (a == b) return Rel::Equal;
    return a < b ? Rel::Less : Rel::Greater;
}

// Eventual relation of c/n against the fixed value v within one class.
Rel harmonic_vs_value(const Rational& c, const Rational& v) {
    if (v.sign() > 0) return Rel::Less;
    if (v.sign() < 0) return Rel::Greater;
    if (c.sign() > 0) return Rel::Greater;
    if (c.sign() < 0) return Rel::Less;
    return Rel::Equal;
}

} // namespace

FrechetOrder frechet_compare(const SequenceSpec& a, const SequenceSpec& b) {
    using K = SequenceSpec::Kind;

    if (a.kind == K::Harmonic && b.kind == K::Harmonic) {
        Rel r = rel_of(a.scale, b.scale);
        return r == Rel::Equal ? FrechetOrder::Equal
                               : (r == Rel::Less ? FrechetOrder::Less : FrechetOrder::Greater);
    }

    if (a.kind == K::EventuallyPeriodic && b.kind == K::EventuallyPeriodic) {
        unsigned long start = std::max(a.prefix.size(), b.prefix.size());
        unsigned long l = std::lcm(a.period.size(), b.period.size());
        std::vector<Rel> rels;
        for (unsigned long r = 0; r < l; ++r) {
            unsigned long n = start + 1 + r;
            rels.push_back(rel_of(a.at(n), b.at(n)));
        }
        return fold(rels);
    }

    // Mixed: one harmonic tail against one periodic pattern.
    const SequenceSpec& h = a.kind == K::Harmonic ? a : b;
    const SequenceSpec& p = a.kind == K::Harmonic ? b : a;
    std::vector<Rel> rels;
    for (auto& v : p.period) rels.push_back(harmonic_vs_value(h.scale, v));
    FrechetOrder o = fold(rels);
    if (&h == &a) return o;
    switch (o) { // flip for the reversed argument order
        case FrechetOrder::Less: return FrechetOrder::Greater;
        case FrechetOrder::Greater: return FrechetOrder::Less;
        default: return o;
    }
}

DemoReport demo_frechet() {
    DemoReport rep;
    rep.name = "frechet-incomparability";

    auto alt01 = SequenceSpec::periodic({Rational(0), Rational(1)});
    auto alt10 = SequenceSpec::periodic({Rational(1), Rational(0)});
    rep.check("(0,1,0,1,...) vs (1,0,1,0,...) -> Incomparable",
              frechet_compare(alt01, alt10) == FrechetOrder::Incomparable);

    rep.check("(1/n) vs constant 0 -> Greater",
              frechet_compare(SequenceSpec::harmonic(), SequenceSpec::constant(Rational(0))) ==
                  FrechetOrder::Greater);

    rep.check("constant 7 vs constant 7 -> Equal",
              frechet_compare(SequenceSpec::constant(Rational(7)),
                              SequenceSpec::constant(Rational(7))) == FrechetOrder::Equal);

    rep.check("finite disagreement is invisible: (5,1,1,1,...) vs constant 1 -> Equal",
              frechet_compare(SequenceSpec::eventually_periodic({Rational(5)}, {Rational(1)}),
                              SequenceSpec::constant(Rational(1))) == FrechetOrder::Equal);

    rep.check("(1/n) vs (1/(2n)) -> Greater",
              frechet_compare(SequenceSpec::harmonic(Rational(1)),
                              SequenceSpec::harmonic(Rational(1, 2))) ==
                  FrechetOrder::Greater);

    rep.notes.push_back("the order fails to be total exactly because the Frechet filter "
                        "never decides between complementary infinite sets; a free "
                        "ultrafilter would");
    return rep;
}

} // namespace nonarch::lab
