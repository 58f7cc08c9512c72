#include "nonarch/calculus.hpp"

#include <sstream>

#include "nonarch/error.hpp"

namespace nonarch {

Rational st(const Series& x) {
    const Rational zero(0);
    if (!x.terms().empty() && x.terms().front().first < zero)
        throw NotFinite("no standard part: valuation " +
                        x.terms().front().first.str() + " < 0");
    if (!x.cutoff().is_infinite() && x.cutoff().value() < zero)
        throw UnresolvedAtTruncation(
            "cannot exclude terms below exponent 0 at cutoff " + x.cutoff().str());
    return x.coeff_at(zero);
}

TaylorGenerator::TaylorGenerator(Primitive p, unsigned order) {
    coeffs_.reserve(order + 1);
    switch (p) {
        case Primitive::Exp:
            coeffs_.push_back(Rational(1));
            for (unsigned k = 1; k <= order; ++k)
                coeffs_.push_back(coeffs_[k - 1] / Rational(static_cast<long>(k)));
            break;
        case Primitive::Sin:
        case Primitive::Cos: {
            // c_{k+2} = -c_k / ((k+1)(k+2))
            coeffs_.push_back(p == Primitive::Sin ? Rational(0) : Rational(1));
            if (order >= 1) coeffs_.push_back(p == Primitive::Sin ? Rational(1) : Rational(0));
            for (unsigned k = 2; k <= order; ++k)
                coeffs_.push_back(-coeffs_[k - 2] /
                                  Rational(static_cast<long>(k) * static_cast<long>(k - 1)));
            break;
        }
        case Primitive::Ln1p:
            // ln(1+u) = u - u^2/2 + u^3/3 - ...
            coeffs_.push_back(Rational(0));
            for (unsigned k = 1; k <= order; ++k) {
                Rational c(1, static_cast<long>(k));
                coeffs_.push_back(k % 2 == 0 ? -c : c);
            }
            break;
    }
}

namespace {

// Sums sum_k c_k h^k for an infinitesimal h, to the resolution h supports
// (or the budget cutoff when h is exact).
Series sum_about_anchor(TaylorGenerator::Primitive p, const Series& h, const Budget& budget) {
    const ExponentGroup g = h.group();
    if (h.is_exact_zero()) {
        TaylorGenerator gen(p, 0);
        return Series::constant(gen.coeff(0), g);
    }
    const ValuationValue target =
        h.is_exact() ? ValuationValue::finite(budget.cutoff) : h.cutoff();

    // Enough coefficients for the deepest power that can matter.
    TaylorGenerator gen(p, budget.max_terms + 1);

    Series acc = Series::constant(gen.coeff(0), g);
    Series hk = Series::constant(Rational(1), g);
    for (unsigned k = 1;; ++k) {
        if (k > budget.max_terms)
            throw BudgetExceeded("primitive expansion exceeded " +
                                 std::to_string(budget.max_terms) + " terms");
        hk = hk * h;
        if (hk.nu_hat() > target) break;
        acc = acc + hk * Series::constant(gen.coeff(k), g);
        if (hk.terms().empty()) break;
    }
    return acc.truncated(target);
}

Series require_finite_split(const Series& u, const char* what, Rational& out_st) {
    const Rational zero(0);
    if (!u.terms().empty() && u.terms().front().first < zero)
        throw NotFinite(std::string(what) + " of an infinitely large element");
    if (!u.cutoff().is_infinite() && u.cutoff().value() < zero)
        throw UnresolvedAtTruncation(std::string(what) +
                                     ": standard part unresolved at cutoff " +
                                     u.cutoff().str());
    out_st = u.coeff_at(zero);
    return u - Series::constant(out_st, u.group());
}

} // namespace

Series lift_eval(const FnExpr& f, const std::map<std::string, Series>& env,
                 const Budget& budget) {
    ExponentGroup g = ExponentGroup::levi_civita();
    if (!env.empty()) g = env.begin()->second.group();

    switch (f.kind()) {
        case FnExpr::Kind::Const: return Series::constant(f.value(), g);
        case FnExpr::Kind::Var: {
            auto it = env.find(f.name());
            if (it == env.end()) throw DomainError("unbound variable '" + f.name() + "'");
            return it->second;
        }
        case FnExpr::Kind::Add:
            return lift_eval(f.child(0), env, budget) + lift_eval(f.child(1), env, budget);
        case FnExpr::Kind::Sub:
            return lift_eval(f.child(0), env, budget) - lift_eval(f.child(1), env, budget);
        case FnExpr::Kind::Mul:
            return lift_eval(f.child(0), env, budget) * lift_eval(f.child(1), env, budget);
        case FnExpr::Kind::Div:
            return lift_eval(f.child(0), env, budget)
                .div(lift_eval(f.child(1), env, budget), budget);
        case FnExpr::Kind::Neg: return -lift_eval(f.child(0), env, budget);
        case FnExpr::Kind::Pow: {
            Series u = lift_eval(f.child(0), env, budget);
            const Rational& e = f.exponent();
            if (e.is_integer()) return u.pow(e.num().get_si(), budget);
            long p = Rational(e.num(), 1).num().get_si();
            unsigned long q = e.den().get_ui();
            return u.pow(p, budget).root(q, budget);
        }
        case FnExpr::Kind::Sqrt:
            return lift_eval(f.child(0), env, budget).root(2, budget);
        case FnExpr::Kind::Exp: {
            Series u = lift_eval(f.child(0), env, budget);
            Rational c;
            Series h = require_finite_split(u, "exp", c);
            if (!c.is_zero())
                throw NotRepresentable("exp at standard part " + c.str() +
                                       " has irrational coefficients");
            return sum_about_anchor(TaylorGenerator::Primitive::Exp, h, budget);
        }
        case FnExpr::Kind::Sin: {
            Series u = lift_eval(f.child(0), env, budget);
            Rational c;
            Series h = require_finite_split(u, "sin", c);
            if (!c.is_zero())
                throw NotRepresentable("sin at standard part " + c.str() +
                                       " has irrational coefficients");
            return sum_about_anchor(TaylorGenerator::Primitive::Sin, h, budget);
        }
        case FnExpr::Kind::Cos: {
            Series u = lift_eval(f.child(0), env, budget);
            Rational c;
            Series h = require_finite_split(u, "cos", c);
            if (!c.is_zero())
                throw NotRepresentable("cos at standard part " + c.str() +
                                       " has irrational coefficients");
            return sum_about_anchor(TaylorGenerator::Primitive::Cos, h, budget);
        }
        case FnExpr::Kind::Ln: {
            Series u = lift_eval(f.child(0), env, budget);
            Rational c;
            Series h = require_finite_split(u, "ln", c);
            if (c.sign() <= 0) throw DomainError("ln at non-positive standard part " + c.str());
            if (!(c == Rational(1)))
                throw NotRepresentable("ln at standard part " + c.str() +
                                       " has irrational coefficients");
            return sum_about_anchor(TaylorGenerator::Primitive::Ln1p, h, budget);
        }
    }
    throw DomainError("unreachable expression kind");
}

Series lift_eval(const FnExpr& f, const Series& x, const Budget& budget) {
    return lift_eval(f, std::map<std::string, Series>{{"x", x}}, budget);
}

Series derivative_quotient(const FnExpr& f, const Rational& r, const Series& dx,
                           const Budget& budget) {
    const ExponentGroup g = dx.group();
    Series x = Series::constant(r, g) + dx;
    Series fx = lift_eval(f, x, budget);
    Rational fr = f.eval_at(r);
    return (fx - Series::constant(fr, g)).div(dx, budget);
}

Rational derivative_with(const FnExpr& f, const Rational& r, const Series& dx,
                         const Budget& budget) {
    return st(derivative_quotient(f, r, dx, budget));
}

Rational derivative(const FnExpr& f, const Rational& r, const Budget& budget) {
    return derivative_with(f, r, Series::t(ExponentGroup::levi_civita()), budget);
}

LimitResult limit(const FnExpr& f, const Rational& r, const Budget& budget) {
    const ExponentGroup g = ExponentGroup::levi_civita();
    const Series t = Series::t(g);
    const Series two_t = t * Series::constant(Rational(2), g);
    const Series t_sq = t * t;
    const std::vector<std::pair<const char*, Series>> menu = {
        {"dx=t", t},      {"dx=-t", -t},      {"dx=t^2", t_sq},
        {"dx=-t^2", -t_sq}, {"dx=2t", two_t}, {"dx=-2t", -two_t}};

    std::vector<Rational> values;
    std::vector<std::string> witnesses;
    unsigned domain_failures = 0, notrep = 0, unresolved = 0, divergent = 0;

    for (auto& [label, dx] : menu) {
        try {
            Series fx = lift_eval(f, Series::constant(r, g) + dx, budget);
            values.push_back(st(fx));
        } catch (const DomainError& e) {
            ++domain_failures;
            witnesses.push_back(std::string(label) + ": " + e.what());
        } catch (const NotRepresentable& e) {
            ++notrep;
            witnesses.push_back(std::string(label) + ": " + e.what());
        } catch (const NotFinite& e) {
            ++divergent;
            witnesses.push_back(std::string(label) + ": " + e.what());
        } catch (const UnresolvedAtTruncation& e) {
            ++unresolved;
            witnesses.push_back(std::string(label) + ": " + e.what());
        }
    }

    if (domain_failures == menu.size())
        throw DomainError("no tested perturbation stays in the domain of " + f.str() +
                          " at " + r.str());
    if (domain_failures + notrep == menu.size())
        throw NotRepresentable("limit of " + f.str() + " at " + r.str() +
                               " is not exactly representable");

    bool agree = !values.empty();
    for (auto& v : values)
        if (!(v == values.front())) agree = false;

    if (agree && values.size() == menu.size())
        return {LimitResult::Kind::Value, values.front(), {}};
    if (!agree) {
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            if (!(values[i] == values[i + 1]))
                witnesses.push_back("conflicting standard parts " + values[i].str() +
                                    " vs " + values[i + 1].str());
        return {LimitResult::Kind::NoLimit, std::nullopt, witnesses};
    }
    if (unresolved > 0 && divergent == 0 && domain_failures == 0)
        return {LimitResult::Kind::Unresolved, std::nullopt, witnesses};
    return {LimitResult::Kind::NoLimit, std::nullopt, witnesses};
}

std::vector<Rational> taylor(const FnExpr& f, const Rational& r, unsigned n, Budget budget) {
    if (budget.cutoff < Rational(static_cast<long>(n)))
        budget.cutoff = Rational(static_cast<long>(n));

    const ExponentGroup g = ExponentGroup::levi_civita();
    Series fx = lift_eval(f, Series::constant(r, g) + Series::t(g), budget);
    // Division inside f can shrink the guaranteed cutoff below n; widen and
    // retry since the input is exact.
    for (int attempt = 0;
         attempt < 5 && !fx.cutoff().is_infinite() &&
         fx.cutoff().value() < Rational(static_cast<long>(n));
         ++attempt) {
        budget.cutoff = budget.cutoff * Rational(2);
        fx = lift_eval(f, Series::constant(r, g) + Series::t(g), budget);
    }
    if (!fx.cutoff().is_infinite() && fx.cutoff().value() < Rational(static_cast<long>(n)))
        throw UnresolvedAtTruncation("taylor coefficients beyond cutoff " +
                                     fx.cutoff().str());

    std::vector<Rational> out;
    out.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) out.push_back(fx.coeff_at(Rational(static_cast<long>(k))));
    return out;
}

} // namespace nonarch
