#pragma once

#include <concepts>
#include <string>

#include "nonarch/rational.hpp"
#include "nonarch/ratfunc.hpp"
#include "nonarch/series.hpp"
#include "nonarch/valuation.hpp"

namespace nonarch {

// Capability contract an ordered-field element type must satisfy to use the
// classification vocabulary: field arithmetic, a sign, and a computable
// valuation (trivial on Q). sign() and valuation() may refuse to answer at a
// finite truncation by throwing UnresolvedAtTruncation.
template <typename T>
concept OrderedFieldElement = requires(const T& x, const T& y) {
    { x + y } -> std::convertible_to<T>;
    { x - y } -> std::convertible_to<T>;
    { x * y } -> std::convertible_to<T>;
    { -x } -> std::convertible_to<T>;
    { inv(x) } -> std::convertible_to<T>;
    { sign(x) } -> std::convertible_to<int>;
    { valuation(x) } -> std::convertible_to<ValuationValue>;
    { abs(x) } -> std::convertible_to<T>;
};

// Trivial valuation on Q: 0 for nonzero elements, infinity for 0.
inline ValuationValue valuation(const Rational& q) {
    return q.is_zero() ? ValuationValue::infinity() : ValuationValue::finite(Rational(0));
}

static_assert(OrderedFieldElement<Rational>);
static_assert(OrderedFieldElement<RatFunc>);
static_assert(OrderedFieldElement<Series>);

// Partition of a field into {0}, I(K)\{0}, F(K)\I(K), L(K). Decided through
// the valuation sign, which is exact for every implemented field (the
// all-naturals quantifier in the definition is not computable directly).
enum class Classification { Zero, NonzeroInfinitesimal, FiniteAppreciable, InfinitelyLarge };

const char* to_string(Classification c);

template <OrderedFieldElement T>
Classification classify(const T& x) {
    if (sign(x) == 0) return Classification::Zero;
    ValuationValue v = valuation(x);
    ValuationValue zero = ValuationValue::finite(Rational(0));
    if (v > zero) return Classification::NonzeroInfinitesimal;
    if (v == zero) return Classification::FiniteAppreciable;
    return Classification::InfinitelyLarge;
}

inline bool is_infinitesimal(Classification c) {
    return c == Classification::Zero || c == Classification::NonzeroInfinitesimal;
}

inline bool is_finite(Classification c) {
    return c != Classification::InfinitelyLarge;
}

// x ~ y: the difference is zero or a nonzero infinitesimal.
template <OrderedFieldElement T>
bool infinitely_close(const T& x, const T& y) {
    return is_infinitesimal(classify(x - y));
}

// Membership of x in the monad of the singleton {s}.
template <OrderedFieldElement T>
bool monad_member(const T& s, const T& x) {
    return infinitely_close(x, s);
}

// Registry of the implemented fields, for the Archimedean predicate and the
// CLI field switch.
enum class FieldId { Q, RatFuncField, Laurent, Puiseux, LeviCivita };

const char* field_name(FieldId id);

// True exactly when the field's canonical valuation is trivial: Q only.
// Each series field and K(t) carries a nontrivial valuation (v(t) = 1).
inline bool is_archimedean(FieldId id) { return id == FieldId::Q; }

} // namespace nonarch
