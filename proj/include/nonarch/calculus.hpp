#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nonarch/fnexpr.hpp"
#include "nonarch/series.hpp"

namespace nonarch {

// Standard part: the unique rational infinitesimally close to a finite
// element. Raises NotFinite for infinitely large input; a truncation that
// cannot exclude terms at exponent <= 0 raises UnresolvedAtTruncation.
Rational st(const Series& x);

// Exact Taylor coefficients of a primitive about its anchor point, produced
// by the primitive's defining recurrence. Instances are immutable after
// construction, so concurrent readers see sequential behavior.
class TaylorGenerator {
public:
    enum class Primitive { Exp, Sin, Cos, Ln1p }; // ln(1+u) about u = 0

    TaylorGenerator(Primitive p, unsigned order);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(unsigned k) const { return coeffs_.at(k); }

private:
    std::vector<Rational> coeffs_;
};

// Evaluates f with series values bound to its variables: the non-standard
// extension of f restricted to the computable series fields. Transcendental
// primitives expand about the argument's standard part, which must be the
// primitive's anchor (exp/sin/cos need st = 0, ln needs st = 1) -- anything
// else has irrational Taylor coefficients and raises NotRepresentable.
Series lift_eval(const FnExpr& f, const std::map<std::string, Series>& env,
                 const Budget& budget = {});
Series lift_eval(const FnExpr& f, const Series& x, const Budget& budget = {});

// The difference quotient (*f(r + dx) - f(r)) / dx as a series; its standard
// part is the derivative. Exposed so callers can inspect the discarded
// infinitesimal tail (e.g. 3r^2 + 3r dx + dx^2 for x^3).
Series derivative_quotient(const FnExpr& f, const Rational& r, const Series& dx,
                           const Budget& budget = {});

// st of the difference quotient with dx = t. The quotient's standard part is
// the same for every nonzero infinitesimal dx; see derivative_with.
Rational derivative(const FnExpr& f, const Rational& r, const Budget& budget = {});
Rational derivative_with(const FnExpr& f, const Rational& r, const Series& dx,
                         const Budget& budget = {});

struct LimitResult {
    enum class Kind { Value, NoLimit, Unresolved };
    Kind kind;
    std::optional<Rational> value;
    std::vector<std::string> witnesses; // per-dx notes when no limit is found
};

// Tests st(*f(r + dx)) over the perturbation menu {t, -t, t^2, -t^2, 2t, -2t}
// and returns the common value if all agree. The menu is a sound but
// incomplete stand-in for the theorem's "all nonzero infinitesimals".
// Raises DomainError when no tested perturbation stays in the domain.
LimitResult limit(const FnExpr& f, const Rational& r, const Budget& budget = {});

// Coefficients [c_0..c_n] of f about r, read from lift_eval(f, r + t);
// k! * c_k is the k-th derivative at r.
std::vector<Rational> taylor(const FnExpr& f, const Rational& r, unsigned n,
                             Budget budget = {});

} // namespace nonarch
