#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "nonarch/fnexpr.hpp"
#include "nonarch/order.hpp"
#include "nonarch/series.hpp"

namespace nonarch {

// A value in whichever field the session is configured for.
using Element = std::variant<Rational, RatFunc, Series>;

struct ParseOptions {
    FieldId field = FieldId::LeviCivita;
    Budget budget = {};
};

// Element grammar: rationals (fraction or decimal literals), the generator
// t, + - * / ^ with literal rational exponents, parentheses, and session
// variables from `vars`. Exponent-group constraints are enforced here:
// t^(1/2) under laurent raises ExponentGroupViolation.
Element parse_element(std::string_view text, const ParseOptions& opts,
                      const std::map<std::string, Element>* vars = nullptr);

// Function grammar: the same operators over the variable x plus
// exp/ln/sin/cos/sqrt calls.
FnExpr parse_function(std::string_view text);

std::string element_str(const Element& e);
Cmp element_compare(const Element& a, const Element& b);
Classification element_classify(const Element& e);
ValuationValue element_valuation(const Element& e);

} // namespace nonarch
