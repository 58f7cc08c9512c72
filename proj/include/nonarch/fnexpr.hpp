#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nonarch/rational.hpp"

namespace nonarch {

// Immutable expression tree over the elementary-function grammar: rational
// constants, named variables, field operations, powers with exact rational
// exponents, and exp/ln/sin/cos/sqrt. Shared subtrees are cheap to copy.
//
// The calculus layer uses the single variable "x"; the transfer lab builds
// systems in several variables from the same grammar.
class FnExpr {
public:
    enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Exp, Ln, Sin, Cos, Sqrt };

    static FnExpr constant(Rational c);
    static FnExpr var(std::string name);
    static FnExpr x() { return var("x"); }

    FnExpr operator+(const FnExpr& o) const { return make(Kind::Add, {*this, o}); }
    FnExpr operator-(const FnExpr& o) const { return make(Kind::Sub, {*this, o}); }
    FnExpr operator*(const FnExpr& o) const { return make(Kind::Mul, {*this, o}); }
    FnExpr operator/(const FnExpr& o) const { return make(Kind::Div, {*this, o}); }
    FnExpr operator-() const { return make(Kind::Neg, {*this}); }

    // Exact rational exponent; integers cover the ordinary powers.
    FnExpr pow(Rational e) const;

    static FnExpr exp(const FnExpr& a) { return make(Kind::Exp, {a}); }
    static FnExpr ln(const FnExpr& a) { return make(Kind::Ln, {a}); }
    static FnExpr sin(const FnExpr& a) { return make(Kind::Sin, {a}); }
    static FnExpr cos(const FnExpr& a) { return make(Kind::Cos, {a}); }
    static FnExpr sqrt(const FnExpr& a) { return make(Kind::Sqrt, {a}); }

    Kind kind() const { return node_->kind; }
    const Rational& value() const { return node_->value; }    // Const payload
    const Rational& exponent() const { return node_->value; } // Pow payload
    const std::string& name() const { return node_->name; }   // Var payload
    const FnExpr& child(std::size_t i) const { return node_->kids[i]; }
    std::size_t arity() const { return node_->kids.size(); }

    // Exact evaluation over Q. Transcendental primitives are only exact at
    // their anchor points (exp/sin/cos at 0, ln at 1, roots of perfect
    // powers); elsewhere they raise NotRepresentable.
    Rational eval(const std::map<std::string, Rational>& env) const;
    Rational eval_at(const Rational& x) const { return eval({{"x", x}}); }

    std::string str() const;

private:
    struct Node {
        Kind kind;
        Rational value;
        std::string name;
        std::vector<FnExpr> kids;
    };

    explicit FnExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static FnExpr make(Kind k, std::vector<FnExpr> kids);

    std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const FnExpr& e);

} // namespace nonarch
