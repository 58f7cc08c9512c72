#include "nonarch/lab/demos.hpp"

#include <optional>
#include <sstream>

#include "nonarch/lab/axioms.hpp"

namespace nonarch::lab {

namespace {

Cmp gcmp(const RatFunc& a, const RatFunc& b) { return rf_compare(a, b); }
Cmp gcmp(const Series& a, const Series& b) { return s_compare(a, b); }

struct Agg {
    bool ok = true;
    unsigned tested = 0;
    std::string witness;
    void note(bool pass, const std::string& details) {
        ++tested;
        if (ok && !pass) {
            ok = false;
            witness = details;
        }
    }
    void emit(DemoReport& r, const std::string& what) const {
        r.check(what + " (" + std::to_string(tested) + " checks)", ok, witness);
    }
};

template <class T, class Embed>
void non_arch_core(DemoReport& rep, const T& t_elem, Embed embed, unsigned long n_max) {
    rep.check("0 < t", gcmp(embed(Rational(0)), t_elem) == Cmp::Less);
    Agg below;
    for (unsigned long n = 1; n <= n_max; ++n) {
        bool ok = gcmp(t_elem, embed(Rational(1, static_cast<long>(n)))) == Cmp::Less;
        below.note(ok, "t !< 1/" + std::to_string(n));
        if (!ok) break;
    }
    below.emit(rep, "t < 1/n for n = 1.." + std::to_string(n_max));
    rep.check("classify(t) = NonzeroInfinitesimal",
              classify(t_elem) == Classification::NonzeroInfinitesimal);
}

template <class T, class Embed>
void weierstrass_core(DemoReport& rep, const T& t_elem, Embed embed, unsigned n_max) {
    std::vector<T> xs;
    xs.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) xs.push_back(embed(Rational(n)) * t_elem);

    const T one = embed(Rational(1));
    Agg bounded, separated;
    for (unsigned n = 0; n < n_max; ++n)
        bounded.note(gcmp(abs(xs[n]), one) == Cmp::Less,
                     "|" + std::to_string(n + 1) + "t| >= 1");
    for (unsigned n = 0; n < n_max; ++n)
        for (unsigned m = n + 1; m < n_max; ++m) {
            Cmp c = gcmp(abs(xs[n] - xs[m]), t_elem);
            separated.note(c == Cmp::Greater || c == Cmp::Equal,
                           "|x_" + std::to_string(n + 1) + " - x_" + std::to_string(m + 1) +
                               "| < t");
        }
    bounded.emit(rep, "boundedness |n*t| < 1");
    separated.emit(rep, "separation |x_n - x_m| >= t");
    rep.check("classify(n_max * t) = NonzeroInfinitesimal",
              classify(xs.back()) == Classification::NonzeroInfinitesimal);
    rep.notes.push_back(
        "every pair of terms is at least t apart, so no interval of radius t/2 "
        "contains two terms and the bounded sequence has no cluster point");
}

template <class T, class Embed>
void monotone_core(DemoReport& rep, const T& t_elem, Embed embed, unsigned n_max) {
    std::vector<T> as;
    as.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n)
        as.push_back(embed(-Rational(1, static_cast<long>(n))));

    Agg increasing, bounded, gaps;
    for (unsigned n = 0; n + 1 < n_max; ++n)
        increasing.note(gcmp(as[n], as[n + 1]) == Cmp::Less,
                        "a_" + std::to_string(n + 1) + " !< a_" + std::to_string(n + 2));
    const T zero = embed(Rational(0));
    for (unsigned n = 0; n < n_max; ++n)
        bounded.note(gcmp(as[n], zero) == Cmp::Less, "a_n not below the bound 0");
    for (unsigned n = 0; n < n_max; ++n)
        for (unsigned m = n + 1; m < n_max; ++m)
            gaps.note(gcmp(abs(as[n] - as[m]), t_elem) == Cmp::Greater,
                      "|a_" + std::to_string(n + 1) + " - a_" + std::to_string(m + 1) +
                          "| <= t");
    increasing.emit(rep, "sequence -1/n is increasing");
    bounded.emit(rep, "sequence bounded above by 0");
    gaps.emit(rep, "pairwise gaps exceed t (never t-Cauchy)");
    rep.notes.push_back("an increasing bounded sequence whose gaps all exceed the "
                        "infinitesimal t cannot converge: monotone completeness fails");
}

} // namespace

DemoReport demo_non_archimedean(FieldId field, unsigned long n_max) {
    DemoReport rep;
    rep.name = "non-archimedean";
    rep.params["field"] = field_name(field);
    rep.params["n"] = std::to_string(n_max);
    switch (field) {
        case FieldId::Q:
            rep.not_applicable = true;
            rep.notes.push_back("Q has no infinitesimal generator; the demo needs one");
            break;
        case FieldId::RatFuncField:
            non_arch_core(rep, RatFunc::t(), [](Rational q) { return RatFunc(q); }, n_max);
            break;
        default: {
            ExponentGroup g = field == FieldId::Laurent
                                  ? ExponentGroup::laurent()
                                  : (field == FieldId::Puiseux ? ExponentGroup::puiseux(6)
                                                               : ExponentGroup::levi_civita());
            non_arch_core(rep, Series::t(g),
                          [g](Rational q) { return Series::constant(q, g); }, n_max);
            break;
        }
    }
    return rep;
}

DemoReport demo_weierstrass_failure(FieldId field, unsigned n_max) {
    DemoReport rep;
    rep.name = "weierstrass-failure";
    rep.params["field"] = field_name(field);
    rep.params["n"] = std::to_string(n_max);
    switch (field) {
        case FieldId::Q:
            rep.not_applicable = true;
            rep.notes.push_back("Weierstrass completeness holds on Archimedean fields; "
                                "the counterexample needs an infinitesimal");
            break;
        case FieldId::RatFuncField:
            weierstrass_core(rep, RatFunc::t(), [](Rational q) { return RatFunc(q); }, n_max);
            break;
        default: {
            ExponentGroup g = field == FieldId::Laurent
                                  ? ExponentGroup::laurent()
                                  : (field == FieldId::Puiseux ? ExponentGroup::puiseux(6)
                                                               : ExponentGroup::levi_civita());
            weierstrass_core(rep, Series::t(g),
                             [g](Rational q) { return Series::constant(q, g); }, n_max);
            break;
        }
    }
    return rep;
}

DemoReport demo_monotone_failure(FieldId field, unsigned n_max) {
    DemoReport rep;
    rep.name = "monotone-failure";
    rep.params["field"] = field_name(field);
    rep.params["n"] = std::to_string(n_max);
    switch (field) {
        case FieldId::Q:
            rep.not_applicable = true;
            rep.notes.push_back("no infinitesimal tolerance epsilon = t exists in Q");
            break;
        case FieldId::RatFuncField:
            monotone_core(rep, RatFunc::t(), [](Rational q) { return RatFunc(q); }, n_max);
            break;
        default: {
            ExponentGroup g = field == FieldId::Laurent
                                  ? ExponentGroup::laurent()
                                  : (field == FieldId::Puiseux ? ExponentGroup::puiseux(6)
                                                               : ExponentGroup::levi_civita());
            monotone_core(rep, Series::t(g),
                          [g](Rational q) { return Series::constant(q, g); }, n_max);
            break;
        }
    }
    return rep;
}

DemoReport demo_cauchy_completeness(unsigned n_max) {
    DemoReport rep;
    rep.name = "cauchy-completeness";
    rep.params["n"] = std::to_string(n_max);

    const ExponentGroup g = ExponentGroup::laurent();
    Budget budget;
    budget.cutoff = Rational(static_cast<long>(n_max) + 2);
    const Series one = Series::constant(Rational(1), g);
    const Series t = Series::t(g);
    const Series limit_elem = (one - t).inv(budget);

    Agg val_exact, telescope;
    Series partial = one; // S_0
    Series tk = one;
    for (unsigned n = 1; n <= n_max; ++n) {
        tk = tk * t;
        partial = partial + tk; // S_n = 1 + t + ... + t^n, exact
        auto [v, display] = partial.dist(limit_elem);
        val_exact.note(v == ValuationValue::finite(Rational(static_cast<long>(n) + 1)),
                       "d(S_" + std::to_string(n) + ", 1/(1-t)) has valuation " + v.str());
        Series expect = one - tk * t; // 1 - t^{n+1}
        telescope.note(((one - t) * partial).identical(expect),
                       "telescoping failed at n = " + std::to_string(n));
    }
    val_exact.emit(rep, "d(S_n, 1/(1-t)) has valuation exactly n+1");
    telescope.emit(rep, "(1-t) * S_n = 1 - t^{n+1} exactly");
    rep.notes.push_back("the valuations n+1 increase without bound, so ||S_n - 1/(1-t)|| "
                        "-> 0: the geometric sums converge in the valuation metric");
    return rep;
}

namespace {

// Dense Gaussian elimination over Q; nullopt on a singular system.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        Rational inv_p = m[col][col].inv();
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rational f = m[row][col] * inv_p;
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

// Maximal-contact rational approximant [i/j] to the series with coefficients
// s_0..s_{i+j}: denominator coefficients are eliminated so the product
// matches through order i+j.
std::optional<RatFunc> pade(const std::vector<Rational>& s, unsigned i, unsigned j) {
    auto coeff = [&](long k) { return k < 0 ? Rational(0) : s.at(static_cast<size_t>(k)); };
    std::vector<Rational> b{Rational(1)};
    if (j > 0) {
        std::vector<std::vector<Rational>> m(j, std::vector<Rational>(j));
        std::vector<Rational> rhs(j);
        for (unsigned l = 1; l <= j; ++l) {
            for (unsigned mm = 1; mm <= j; ++mm)
                m[l - 1][mm - 1] = coeff(static_cast<long>(i + l) - static_cast<long>(mm));
            rhs[l - 1] = -coeff(static_cast<long>(i + l));
        }
        auto sol = solve_linear(std::move(m), std::move(rhs));
        if (!sol) return std::nullopt;
        for (auto& v : *sol) b.push_back(v);
    }
    std::vector<Poly::Term> num, den;
    for (unsigned k = 0; k <= i; ++k) {
        Rational a(0);
        for (unsigned mm = 0; mm <= std::min<unsigned>(k, j); ++mm)
            a += b[mm] * coeff(static_cast<long>(k) - static_cast<long>(mm));
        if (!a.is_zero()) num.push_back({k, a});
    }
    for (unsigned mm = 0; mm <= j; ++mm)
        if (!b[mm].is_zero()) den.push_back({mm, b[mm]});
    return RatFunc(Poly(std::move(num)), Poly(std::move(den)));
}

} // namespace

DemoReport demo_cantor_gap(unsigned n_max) {
    DemoReport rep;
    rep.name = "cantor-gap";
    rep.params["n"] = std::to_string(n_max);

    const Rational half(1, 2);
    std::vector<Rational> s; // sqrt(1+t) coefficients
    for (unsigned k = 0; k <= 2 * n_max + 2; ++k) s.push_back(binomial(half, k));

    auto taylor_rf = [&](unsigned n) {
        std::vector<Poly::Term> terms;
        for (unsigned k = 0; k <= n; ++k)
            if (!s[k].is_zero()) terms.push_back({k, s[k]});
        return RatFunc(Poly(std::move(terms)), Poly(Rational(1)));
    };
    const RatFunc t = RatFunc::t();
    const RatFunc one_plus_t = RatFunc(Rational(1)) + t;

    // T_2 against the worked binomial expansion.
    RatFunc t2_expected =
        RatFunc(Rational(1)) + t * RatFunc(half) - t * t * RatFunc(Rational(1, 8));
    rep.check("T_2 = 1 + t/2 - t^2/8", taylor_rf(2) == t2_expected);

    Agg nesting;
    for (unsigned n = 1; n + 1 <= n_max; ++n) {
        RatFunc lo_n = taylor_rf(n) - t.pow(n), hi_n = taylor_rf(n) + t.pow(n);
        RatFunc lo_n1 = taylor_rf(n + 1) - t.pow(n + 1), hi_n1 = taylor_rf(n + 1) + t.pow(n + 1);
        bool inner = rf_compare(lo_n1, lo_n) != Cmp::Less &&
                     rf_compare(hi_n1, hi_n) != Cmp::Greater;
        nesting.note(inner, "I_" + std::to_string(n + 1) + " not inside I_" + std::to_string(n));
    }
    nesting.emit(rep, "nesting I_{n+1} inside I_n for n < " + std::to_string(n_max));

    // Candidate sweep: nothing of num/den degree <= d can sit in every I_n.
    Agg defect_bound, excluded;
    for (unsigned d = 0; d <= 4; ++d) {
        std::vector<std::pair<std::string, RatFunc>> candidates;
        candidates.push_back({"taylor[" + std::to_string(d) + "]", taylor_rf(d)});
        if (d >= 1) {
            auto p = pade(s, d, d);
            if (p) candidates.push_back({"pade[" + std::to_string(d) + "/" +
                                             std::to_string(d) + "]",
                                         *p});
        }
        for (auto& [label, x] : candidates) {
            RatFunc defect = x * x - one_plus_t;
            ValuationValue v = defect.valuation();
            bool bound_ok = !v.is_infinite() &&
                            v.value() <= Rational(2 * static_cast<long>(d) + 1) &&
                            v.value() < Rational(2 * static_cast<long>(n_max));
            defect_bound.note(bound_ok, label + ": v(x^2 - (1+t)) = " + v.str());

            // The chain only sees the defect once n exceeds its valuation.
            unsigned n_star = 2 * d + 2;
            if (n_star > n_max) continue;
            bool outside =
                rf_compare((x - taylor_rf(n_star)).abs(), t.pow(n_star)) == Cmp::Greater;
            excluded.note(outside,
                          label + " not excluded from I_" + std::to_string(n_star));
        }
    }
    defect_bound.emit(rep, "v(x^2 - (1+t)) <= 2d+1 < 2N for elimination candidates, d <= 4");
    excluded.emit(rep, "each candidate with 2d+2 <= N falls outside I_{2d+2}");

    Agg constants;
    for (long c : {0L, 1L, -1L, 2L}) {
        RatFunc x = RatFunc(Rational(c));
        constants.note(rf_compare((x - taylor_rf(2)).abs(), t.pow(2)) == Cmp::Greater,
                       "constant " + std::to_string(c) + " not excluded at n = 2");
    }
    RatFunc xh = RatFunc(half);
    constants.note(rf_compare((xh - taylor_rf(2)).abs(), t.pow(2)) == Cmp::Greater,
                   "constant 1/2 not excluded at n = 2");
    constants.emit(rep, "degree-0 constants excluded at n = 2");

    rep.notes.push_back("x^2 = 1 + t has no solution in K(t): degrees give "
                        "2*deg(num) = 1 + 2*deg(den), which no integers satisfy");
    rep.notes.push_back("a fraction with num/den degree <= d has 2d+1 free coefficients, "
                        "so x^2 can match 1+t through order 2d at best; membership in "
                        "every I_n up to N would force order >= 2N");
    return rep;
}

namespace {

TransferSystem cubic_system() {
    TransferSystem sys;
    sys.name = "cubic-identity";
    sys.variables = {"x", "y"};
    FnExpr x = FnExpr::var("x"), y = FnExpr::var("y");
    FnExpr three = FnExpr::constant(Rational(3));
    FnExpr lhs = (x + y).pow(Rational(3));
    FnExpr rhs = x.pow(Rational(3)) + three * x.pow(Rational(2)) * y +
                 three * x * y.pow(Rational(2)) + y.pow(Rational(3));
    sys.equations.push_back({lhs, rhs});
    return sys;
}

TransferSystem sine_system() {
    TransferSystem sys;
    sys.name = "sine-addition";
    sys.variables = {"x", "y"};
    FnExpr x = FnExpr::var("x"), y = FnExpr::var("y");
    FnExpr lhs = FnExpr::sin(x + y);
    FnExpr rhs = FnExpr::sin(x) * FnExpr::cos(y) + FnExpr::cos(x) * FnExpr::sin(y);
    sys.equations.push_back({lhs, rhs});
    return sys;
}

} // namespace

DemoReport demo_transfer_cubic(unsigned samples, std::uint64_t seed) {
    Gen gen(seed);
    std::vector<std::vector<Rational>> base;
    std::vector<std::vector<Series>> ext;
    const ExponentGroup g = ExponentGroup::levi_civita();
    for (unsigned i = 0; i < samples; ++i) {
        base.push_back({gen.rational(), gen.rational()});
        ext.push_back({gen.series(g), gen.series(g)});
    }
    DemoReport rep = check_transfer(cubic_system(), base, ext, true);
    rep.params["seed"] = std::to_string(seed);
    return rep;
}

DemoReport demo_transfer_sine(unsigned samples, std::uint64_t seed) {
    Gen gen(seed);
    std::vector<std::vector<Rational>> base{{Rational(0), Rational(0)}};
    std::vector<std::vector<Series>> ext;
    const ExponentGroup g = ExponentGroup::levi_civita();
    for (unsigned i = 0; i < samples; ++i)
        ext.push_back({gen.infinitesimal_series(g), gen.infinitesimal_series(g)});
    DemoReport rep = check_transfer(sine_system(), base, ext, true);
    rep.params["seed"] = std::to_string(seed);
    return rep;
}

DemoReport demo_transfer_inequality() {
    TransferSystem sys;
    sys.name = "square-below-identity";
    sys.variables = {"x"};
    FnExpr x = FnExpr::var("x");
    sys.inequalities.push_back({x.pow(Rational(2)), x});

    std::vector<std::vector<Rational>> base{{Rational(0)},   {Rational(1, 2)},
                                            {Rational(1)},   {Rational(2)},
                                            {Rational(-1)}};
    const ExponentGroup g = ExponentGroup::levi_civita();
    std::vector<std::vector<Series>> ext{{Series::t(g)}};
    return check_transfer(sys, base, ext, true);
}

} // namespace nonarch::lab
