#include "nonarch/fnexpr.hpp"

#include <ostream>
#include <sstream>

#include "nonarch/error.hpp"

namespace nonarch {

FnExpr FnExpr::make(Kind k, std::vector<FnExpr> kids) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->kids = std::move(kids);
    return FnExpr(std::move(n));
}

FnExpr FnExpr::constant(Rational c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->value = std::move(c);
    return FnExpr(std::move(n));
}

FnExpr FnExpr::var(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->name = std::move(name);
    return FnExpr(std::move(n));
}

FnExpr FnExpr::pow(Rational e) const {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->value = std::move(e);
    n->kids = {*this};
    return FnExpr(std::move(n));
}

Rational FnExpr::eval(const std::map<std::string, Rational>& env) const {
    switch (kind()) {
        case Kind::Const: return value();
        case Kind::Var: {
            auto it = env.find(name());
            if (it == env.end()) throw DomainError("unbound variable '" + name() + "'");
            return it->second;
        }
        case Kind::Add: return child(0).eval(env) + child(1).eval(env);
        case Kind::Sub: return child(0).eval(env) - child(1).eval(env);
        case Kind::Mul: return child(0).eval(env) * child(1).eval(env);
        case Kind::Div: {
            Rational d = child(1).eval(env);
            if (d.is_zero()) throw DomainError("division by zero at evaluation point");
            return child(0).eval(env) / d;
        }
        case Kind::Neg: return -child(0).eval(env);
        case Kind::Pow: {
            Rational b = child(0).eval(env);
            const Rational& e = exponent();
            if (e.is_integer()) {
                long n = e.num().get_si();
                if (b.is_zero() && n < 0) throw DomainError("zero base with negative power");
                return b.pow(n);
            }
            long p = Rational(e.num(), 1).num().get_si();
            unsigned long q = e.den().get_ui();
            if (b.is_zero() && p < 0) throw DomainError("zero base with negative power");
            auto r = b.pow(p).root(q);
            if (!r)
                throw NotRepresentable("power " + b.str() + "^(" + e.str() +
                                       ") is not rational");
            return *r;
        }
        case Kind::Exp: {
            Rational u = child(0).eval(env);
            if (u.is_zero()) return Rational(1);
            throw NotRepresentable("exp(" + u.str() + ") is not rational");
        }
        case Kind::Ln: {
            Rational u = child(0).eval(env);
            if (u.sign() <= 0) throw DomainError("ln of non-positive value");
            if (u == Rational(1)) return Rational(0);
            throw NotRepresentable("ln(" + u.str() + ") is not rational");
        }
        case Kind::Sin: {
            Rational u = child(0).eval(env);
            if (u.is_zero()) return Rational(0);
            throw NotRepresentable("sin(" + u.str() + ") is not rational");
        }
        case Kind::Cos: {
            Rational u = child(0).eval(env);
            if (u.is_zero()) return Rational(1);
            throw NotRepresentable("cos(" + u.str() + ") is not rational");
        }
        case Kind::Sqrt: {
            Rational u = child(0).eval(env);
            if (u.sign() < 0) throw DomainError("sqrt of negative value");
            auto r = u.root(2);
            if (!r) throw NotRepresentable("sqrt(" + u.str() + ") is not rational");
            return *r;
        }
    }
    throw DomainError("unreachable expression kind");
}

namespace {

int precedence(FnExpr::Kind k) {
    switch (k) {
        case FnExpr::Kind::Add:
        case FnExpr::Kind::Sub: return 1;
        case FnExpr::Kind::Mul:
        case FnExpr::Kind::Div: return 2;
        case FnExpr::Kind::Neg: return 3;
        case FnExpr::Kind::Pow: return 4;
        default: return 5;
    }
}

void print(std::ostream& os, const FnExpr& e, int parent_prec) {
    int p = precedence(e.kind());
    bool need = p < parent_prec;
    auto open = [&] { if (need) os << "("; };
    auto close = [&] { if (need) os << ")"; };
    switch (e.kind()) {
        case FnExpr::Kind::Const:
            if (e.value().sign() < 0) {
                os << "(" << e.value().str() << ")";
            } else {
                os << e.value().str();
            }
            break;
        case FnExpr::Kind::Var: os << e.name(); break;
        case FnExpr::Kind::Add:
            open();
            print(os, e.child(0), p);
            os << " + ";
            print(os, e.child(1), p + 1);
            close();
            break;
        case FnExpr::Kind::Sub:
            open();
            print(os, e.child(0), p);
            os << " - ";
            print(os, e.child(1), p + 1);
            close();
            break;
        case FnExpr::Kind::Mul:
            open();
            print(os, e.child(0), p);
            os << "*";
            print(os, e.child(1), p + 1);
            close();
            break;
        case FnExpr::Kind::Div:
            open();
            print(os, e.child(0), p);
            os << "/";
            print(os, e.child(1), p + 1);
            close();
            break;
        case FnExpr::Kind::Neg:
            open();
            os << "-";
            print(os, e.child(0), p + 1);
            close();
            break;
        case FnExpr::Kind::Pow:
            open();
            print(os, e.child(0), p + 1);
            os << "^";
            if (e.exponent().is_integer() && e.exponent().sign() >= 0)
                os << e.exponent().str();
            else
                os << "(" << e.exponent().str() << ")";
            close();
            break;
        case FnExpr::Kind::Exp: os << "exp("; print(os, e.child(0), 0); os << ")"; break;
        case FnExpr::Kind::Ln: os << "ln("; print(os, e.child(0), 0); os << ")"; break;
        case FnExpr::Kind::Sin: os << "sin("; print(os, e.child(0), 0); os << ")"; break;
        case FnExpr::Kind::Cos: os << "cos("; print(os, e.child(0), 0); os << ")"; break;
        case FnExpr::Kind::Sqrt: os << "sqrt("; print(os, e.child(0), 0); os << ")"; break;
    }
}

} // namespace

std::string FnExpr::str() const {
    std::ostringstream os;
    print(os, *this, 0);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FnExpr& e) { return os << e.str(); }

} // namespace nonarch
