#include "nonarch/lab/axioms.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace nonarch::lab {

long Gen::int_in(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rational Gen::rational(long max_num, long max_den) {
    return Rational(int_in(-max_num, max_num), int_in(1, max_den));
}

Rational Gen::nonzero_rational(long max_num, long max_den) {
    Rational r;
    do {
        r = rational(max_num, max_den);
    } while (r.is_zero());
    return r;
}

Poly Gen::poly(unsigned max_deg, long coeff_bound) {
    std::vector<Poly::Term> terms;
    unsigned deg = static_cast<unsigned>(int_in(0, max_deg));
    for (unsigned d = 0; d <= deg; ++d)
        if (int_in(0, 2) != 0) // sparse-ish
            terms.push_back({d, Rational(int_in(-coeff_bound, coeff_bound))});
    return Poly(std::move(terms));
}

Poly Gen::nonzero_poly(unsigned max_deg, long coeff_bound) {
    Poly p;
    do {
        p = poly(max_deg, coeff_bound);
    } while (p.is_zero());
    return p;
}

RatFunc Gen::ratfunc(unsigned max_deg, long coeff_bound) {
    return RatFunc(poly(max_deg, coeff_bound), nonzero_poly(max_deg, coeff_bound));
}

Series Gen::series(ExponentGroup g, unsigned max_terms, long exp_bound, long coeff_bound) {
    std::vector<Series::Term> terms;
    unsigned n = static_cast<unsigned>(int_in(0, max_terms));
    for (unsigned i = 0; i < n; ++i) {
        Rational e;
        switch (g.kind) {
            case ExponentGroup::Kind::Integer: e = Rational(int_in(-exp_bound, exp_bound)); break;
            case ExponentGroup::Kind::BoundedDenominator:
                e = Rational(int_in(-exp_bound * static_cast<long>(g.denom),
                                    exp_bound * static_cast<long>(g.denom)),
                             static_cast<long>(g.denom));
                break;
            case ExponentGroup::Kind::Rational:
                e = Rational(int_in(-exp_bound * 6, exp_bound * 6), int_in(1, 6));
                break;
        }
        Rational c(int_in(-coeff_bound, coeff_bound));
        if (!c.is_zero()) terms.push_back({e, c});
    }
    return Series::from_terms(std::move(terms), ValuationValue::infinity(), g);
}

Series Gen::infinitesimal_series(ExponentGroup g, unsigned max_terms, long exp_bound,
                                 long coeff_bound) {
    Series s = series(g, max_terms, exp_bound, coeff_bound);
    // Shift below valuation 1 so every term is strictly positive in exponent.
    if (s.terms().empty()) return Series::t(g);
    Rational shift = Rational(1) - s.terms().front().first;
    if (g.kind == ExponentGroup::Kind::Integer) shift = shift.ceil();
    if (g.kind == ExponentGroup::Kind::BoundedDenominator) {
        // Round up to the group lattice.
        Rational nu(static_cast<long>(g.denom));
        shift = (shift * nu).ceil() / nu;
    }
    std::vector<Series::Term> terms;
    for (auto& [e, c] : s.terms()) terms.push_back({e + shift, c});
    return Series::from_terms(std::move(terms), ValuationValue::infinity(), g);
}

namespace {

// Aggregates one named check over many random cases into a single assertion.
struct Agg {
    bool ok = true;
    unsigned tested = 0;
    std::string witness;

    void note(bool pass, const std::function<std::string()>& details) {
        ++tested;
        if (ok && !pass) {
            ok = false;
            witness = details();
        }
    }

    void emit(DemoReport& r, const std::string& what) const {
        r.check(what + " (" + std::to_string(tested) + " checks)", ok, witness);
    }
};

struct RatFieldOps {
    using T = Rational;
    Gen gen;
    explicit RatFieldOps(std::uint64_t seed) : gen(seed) {}

    T random(bool) { return gen.rational(); }
    std::optional<T> random_infinitesimal() { return std::nullopt; }
    std::optional<T> random_finite() { return gen.rational(); }
    T zero() const { return Rational(0); }
    T one() const { return Rational(1); }
    bool eq(const T& a, const T& b) const { return a == b; }
    Cmp cmp(const T& a, const T& b) const { return rat_cmp(a, b); }
    std::optional<T> try_inv(const T& a) const {
        if (a.is_zero()) return std::nullopt;
        return a.inv();
    }
    std::string show(const T& a) const { return a.str(); }
};

struct RatFuncOps {
    using T = RatFunc;
    Gen gen;
    explicit RatFuncOps(std::uint64_t seed) : gen(seed) {}

    T random(bool) { return gen.ratfunc(4, 9); }
    std::optional<T> random_infinitesimal() {
        // t * (finite appreciable): valuation >= 1
        return RatFunc::t() * random_appreciable();
    }
    std::optional<T> random_finite() {
        T f = gen.ratfunc(4, 9);
        ValuationValue v = f.valuation();
        if (v.is_infinite() || !(v.value().sign() < 0)) return f;
        return f.inv(); // flip infinitely large to infinitesimal
    }
    T random_appreciable() {
        for (;;) {
            T f = gen.ratfunc(3, 9);
            ValuationValue v = f.valuation();
            if (!v.is_infinite() && v.value().is_zero()) return f;
        }
    }
    T zero() const { return RatFunc(Rational(0)); }
    T one() const { return RatFunc(Rational(1)); }
    bool eq(const T& a, const T& b) const { return a == b; }
    Cmp cmp(const T& a, const T& b) const { return rf_compare(a, b); }
    std::optional<T> try_inv(const T& a) const {
        if (a.is_zero()) return std::nullopt;
        return a.inv();
    }
    std::string show(const T& a) const { return a.str(); }
};

struct SeriesOps {
    using T = Series;
    Gen gen;
    ExponentGroup group;
    SeriesOps(std::uint64_t seed, ExponentGroup g) : gen(seed), group(g) {}

    T random(bool allow_truncated) {
        Series s = gen.series(group);
        if (allow_truncated && gen.int_in(0, 2) == 0)
            s = s.truncated(ValuationValue::finite(Rational(gen.int_in(0, 8))));
        return s;
    }
    std::optional<T> random_infinitesimal() { return gen.infinitesimal_series(group); }
    std::optional<T> random_finite() {
        Series s = gen.infinitesimal_series(group);
        return Series::constant(gen.rational(9, 9), group) + s;
    }
    T zero() const { return Series(group); }
    T one() const { return Series::constant(Rational(1), group); }
    bool eq(const T& a, const T& b) const { return agrees_to_cutoff(a, b); }
    Cmp cmp(const T& a, const T& b) const { return s_compare(a, b); }
    std::optional<T> try_inv(const T& a) const {
        if (a.terms().empty()) return std::nullopt;
        return a.inv();
    }
    std::string show(const T& a) const { return a.str(); }
};

template <class Ops>
void field_suite(DemoReport& r, Ops ops, unsigned cases) {
    Agg assoc_add, comm_add, assoc_mul, comm_mul, distrib, identities, add_inv, mul_inv;
    for (unsigned i = 0; i < cases; ++i) {
        auto a = ops.random(true), b = ops.random(true), c = ops.random(true);
        auto show3 = [&] {
            return "a=" + ops.show(a) + " b=" + ops.show(b) + " c=" + ops.show(c);
        };
        assoc_add.note(ops.eq((a + b) + c, a + (b + c)), show3);
        comm_add.note(ops.eq(a + b, b + a), show3);
        assoc_mul.note(ops.eq((a * b) * c, a * (b * c)), show3);
        comm_mul.note(ops.eq(a * b, b * a), show3);
        distrib.note(ops.eq(a * (b + c), a * b + a * c), show3);
        identities.note(ops.eq(a + ops.zero(), a) && ops.eq(a * ops.one(), a), show3);
        add_inv.note(ops.eq(a + (-a), ops.zero()), show3);
        if (auto ai = ops.try_inv(a))
            mul_inv.note(ops.eq(a * *ai, ops.one()),
                         [&] { return "a=" + ops.show(a) + " inv=" + ops.show(*ai); });
    }
    assoc_add.emit(r, "associativity of +");
    comm_add.emit(r, "commutativity of +");
    assoc_mul.emit(r, "associativity of *");
    comm_mul.emit(r, "commutativity of *");
    distrib.emit(r, "distributivity");
    identities.emit(r, "additive and multiplicative identities");
    add_inv.emit(r, "additive inverses");
    mul_inv.emit(r, "multiplicative inverses (agree to cutoff)");
}

template <class Ops>
void order_suite(DemoReport& r, Ops ops, unsigned cases) {
    Agg trichotomy, compat_add, compat_mul, cone, abs_mul, triangle;
    Agg convex, finite_ring, ideal, inv_duality;
    const auto zero = ops.zero();
    for (unsigned i = 0; i < cases; ++i) {
        auto a = ops.random(false), b = ops.random(false), c = ops.random(false);
        auto show3 = [&] {
            return "a=" + ops.show(a) + " b=" + ops.show(b) + " c=" + ops.show(c);
        };
        Cmp ab = ops.cmp(a, b), ba = ops.cmp(b, a);
        bool tri = (ab == Cmp::Less && ba == Cmp::Greater) ||
                   (ab == Cmp::Greater && ba == Cmp::Less) ||
                   (ab == Cmp::Equal && ba == Cmp::Equal);
        trichotomy.note(tri && ops.cmp(a, a) == Cmp::Equal, show3);
        if (ab == Cmp::Less)
            compat_add.note(ops.cmp(a + c, b + c) == Cmp::Less, show3);
        if (ab == Cmp::Less && ops.cmp(zero, c) == Cmp::Less)
            compat_mul.note(ops.cmp(a * c, b * c) == Cmp::Less, show3);
        if (ops.cmp(a, zero) == Cmp::Greater && ops.cmp(b, zero) == Cmp::Greater)
            cone.note(ops.cmp(a + b, zero) == Cmp::Greater &&
                          ops.cmp(a * b, zero) == Cmp::Greater,
                      show3);
        abs_mul.note(ops.eq(abs(a * b), abs(a) * abs(b)), show3);
        Cmp t = ops.cmp(abs(a + b), abs(a) + abs(b));
        triangle.note(t == Cmp::Less || t == Cmp::Equal, show3);

        if (auto inf = ops.random_infinitesimal()) {
            // Convexity of I(K): |x| <= |d| with d infinitesimal forces x in.
            auto d = *inf;
            auto x = (i % 2 == 0) ? d * *ops.random_infinitesimal() : d;
            if (ops.cmp(abs(x), abs(d)) != Cmp::Greater) {
                convex.note(is_infinitesimal(classify(x)), [&] {
                    return "x=" + ops.show(x) + " d=" + ops.show(d);
                });
            }
            auto f = *ops.random_finite();
            ideal.note(is_infinitesimal(classify(d * f)), [&] {
                return "d=" + ops.show(d) + " f=" + ops.show(f);
            });
            auto f2 = *ops.random_finite();
            finite_ring.note(is_finite(classify(f + f2)) && is_finite(classify(f * f2)),
                             [&] { return "f=" + ops.show(f) + " g=" + ops.show(f2); });
            if (auto di = ops.try_inv(d))
                inv_duality.note(classify(*di) == Classification::InfinitelyLarge,
                                 [&] { return "d=" + ops.show(d); });
        }
    }
    trichotomy.emit(r, "trichotomy");
    compat_add.emit(r, "a < b implies a + c < b + c");
    compat_mul.emit(r, "a < b, 0 < c implies ac < bc");
    cone.emit(r, "positive cone closed under + and *");
    abs_mul.emit(r, "|ab| = |a||b|");
    triangle.emit(r, "|a + b| <= |a| + |b|");
    if (convex.tested > 0) convex.emit(r, "convexity of the infinitesimal ideal");
    if (finite_ring.tested > 0) finite_ring.emit(r, "finite elements closed under + and *");
    if (ideal.tested > 0) ideal.emit(r, "infinitesimal * finite stays infinitesimal");
    if (inv_duality.tested > 0)
        inv_duality.emit(r, "x infinitesimal iff 1/x infinitely large");
}

template <class Ops>
void valuation_suite(DemoReport& r, Ops ops, unsigned cases,
                     const std::function<typename Ops::T(typename Ops::T)>& bump) {
    Agg zero_inf, logarithmic, ultra, ultra_eq, convex;
    const auto zero = ops.zero();
    zero_inf.note(valuation(zero).is_infinite(), [] { return std::string("v(0)"); });
    for (unsigned i = 0; i < cases; ++i) {
        auto a = ops.random(false), b = ops.random(false);
        auto show2 = [&] { return "a=" + ops.show(a) + " b=" + ops.show(b); };
        zero_inf.note(ops.eq(a, zero) || !valuation(a).is_infinite(), show2);

        ValuationValue va = valuation(a), vb = valuation(b);
        ValuationValue vab = valuation(a * b);
        logarithmic.note(vab == va + vb, show2);
        ultra.note(valuation(a + b) >= ValuationValue::min(va, vb), show2);

        // Forced unequal-valuation case: the ultrametric bound is an equality.
        auto b2 = valuation(b) == va && !ops.eq(b, zero) ? bump(b) : b;
        ValuationValue vb2 = valuation(b2);
        if (!(vb2 == va))
            ultra_eq.note(valuation(a + b2) == ValuationValue::min(va, vb2),
                          [&] { return "a=" + ops.show(a) + " b=" + ops.show(b2); });

        if (ops.cmp(abs(a), abs(b)) == Cmp::Less) convex.note(va >= vb, show2);
    }
    zero_inf.emit(r, "v(x) = infinity iff x = 0");
    logarithmic.emit(r, "v(xy) = v(x) + v(y)");
    ultra.emit(r, "v(x + y) >= min(v(x), v(y))");
    ultra_eq.emit(r, "v(x) != v(y) forces v(x + y) = min");
    convex.emit(r, "|x| < |y| implies v(x) >= v(y)");
}

ExponentGroup group_for(FieldId f) {
    switch (f) {
        case FieldId::Laurent: return ExponentGroup::laurent();
        case FieldId::Puiseux: return ExponentGroup::puiseux(6);
        default: return ExponentGroup::levi_civita();
    }
}

} // namespace

DemoReport check_field_axioms(FieldId field, const AxiomsConfig& cfg) {
    DemoReport r;
    r.name = std::string("field-axioms-") + field_name(field);
    r.params["cases"] = std::to_string(cfg.cases);
    r.params["seed"] = std::to_string(cfg.seed);
    switch (field) {
        case FieldId::Q: field_suite(r, RatFieldOps(cfg.seed), cfg.cases); break;
        case FieldId::RatFuncField: field_suite(r, RatFuncOps(cfg.seed), cfg.cases); break;
        default: field_suite(r, SeriesOps(cfg.seed, group_for(field)), cfg.cases); break;
    }
    return r;
}

DemoReport check_order_axioms(FieldId field, const AxiomsConfig& cfg) {
    DemoReport r;
    r.name = std::string("order-axioms-") + field_name(field);
    r.params["cases"] = std::to_string(cfg.cases);
    r.params["seed"] = std::to_string(cfg.seed);
    switch (field) {
        case FieldId::Q: order_suite(r, RatFieldOps(cfg.seed), cfg.cases); break;
        case FieldId::RatFuncField: order_suite(r, RatFuncOps(cfg.seed), cfg.cases); break;
        default: order_suite(r, SeriesOps(cfg.seed, group_for(field)), cfg.cases); break;
    }
    return r;
}

DemoReport check_valuation_axioms(FieldId field, const AxiomsConfig& cfg) {
    DemoReport r;
    r.name = std::string("valuation-axioms-") + field_name(field);
    r.params["cases"] = std::to_string(cfg.cases);
    r.params["seed"] = std::to_string(cfg.seed);
    switch (field) {
        case FieldId::Q:
            valuation_suite<RatFieldOps>(r, RatFieldOps(cfg.seed), cfg.cases,
                                         [](Rational) { return Rational(0); });
            break;
        case FieldId::RatFuncField:
            valuation_suite<RatFuncOps>(r, RatFuncOps(cfg.seed), cfg.cases,
                                        [](RatFunc f) { return f * RatFunc::t(); });
            break;
        default: {
            ExponentGroup g = group_for(field);
            valuation_suite<SeriesOps>(r, SeriesOps(cfg.seed, g), cfg.cases,
                                       [g](Series s) { return s * Series::t(g); });
            break;
        }
    }
    return r;
}

} // namespace nonarch::lab
