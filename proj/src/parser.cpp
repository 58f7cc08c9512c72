#include "nonarch/parser.hpp"

#include <cctype>
#include <optional>

namespace nonarch {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            current_ = {Token::Kind::End, "", start};
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            bool seen_dot = false;
            while (j < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[j])) ||
                    (src_[j] == '.' && !seen_dot))) {
                if (src_[j] == '.') seen_dot = true;
                ++j;
            }
            current_ = {Token::Kind::Number, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            current_ = {Token::Kind::Ident, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::Plus; break;
            case '-': k = Token::Kind::Minus; break;
            case '*': k = Token::Kind::Star; break;
            case '/': k = Token::Kind::Slash; break;
            case '^': k = Token::Kind::Caret; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        current_ = {k, std::string(1, c), start};
        ++i_;
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token current_{Token::Kind::End, "", 0};
};

bool is_function_name(const std::string& s) {
    return s == "exp" || s == "ln" || s == "sin" || s == "cos" || s == "sqrt";
}

FnExpr apply_function(const std::string& name, const FnExpr& arg) {
    if (name == "exp") return FnExpr::exp(arg);
    if (name == "ln") return FnExpr::ln(arg);
    if (name == "sin") return FnExpr::sin(arg);
    if (name == "cos") return FnExpr::cos(arg);
    return FnExpr::sqrt(arg);
}

// Recursive-descent parser producing an FnExpr AST. `allow_functions`
// distinguishes the function grammar from the element grammar.
class Parser {
public:
    Parser(std::string_view src, bool allow_functions)
        : lex_(src), allow_functions_(allow_functions) {}

    FnExpr parse() {
        FnExpr e = expr();
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError("trailing input '" + lex_.peek().text + "'", lex_.peek().pos);
        return e;
    }

private:
    FnExpr expr() {
        FnExpr e = term();
        for (;;) {
            if (lex_.peek().kind == Token::Kind::Plus) {
                lex_.take();
                e = e + term();
            } else if (lex_.peek().kind == Token::Kind::Minus) {
                lex_.take();
                e = e - term();
            } else {
                return e;
            }
        }
    }

    FnExpr term() {
        FnExpr e = unary();
        for (;;) {
            if (lex_.peek().kind == Token::Kind::Star) {
                lex_.take();
                e = e * unary();
            } else if (lex_.peek().kind == Token::Kind::Slash) {
                lex_.take();
                e = e / unary();
            } else {
                return e;
            }
        }
    }

    FnExpr unary() {
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            return -unary();
        }
        return power();
    }

    FnExpr power() {
        FnExpr base = atom();
        while (lex_.peek().kind == Token::Kind::Caret) {
            lex_.take();
            base = base.pow(exponent_literal());
        }
        return base;
    }

    // Exponents are literal rationals: 2, -3, (7/3), (-1/2), 0.5.
    Rational exponent_literal() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::LParen) {
            lex_.take();
            if (lex_.peek().kind == Token::Kind::Minus) {
                neg = true;
                lex_.take();
            } else if (lex_.peek().kind == Token::Kind::Plus) {
                lex_.take();
            }
            Rational num = number();
            Rational result = num;
            if (lex_.peek().kind == Token::Kind::Slash) {
                lex_.take();
                Rational den = number();
                if (den.is_zero()) throw DivisionByZero("zero denominator in exponent");
                result = num / den;
            }
            expect(Token::Kind::RParen, ")");
            return neg ? -result : result;
        }
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            neg = true;
        }
        Rational r = number();
        return neg ? -r : r;
    }

    Rational number() {
        if (lex_.peek().kind != Token::Kind::Number)
            throw ParseError("expected a number, got '" + lex_.peek().text + "'",
                             lex_.peek().pos);
        Token t = lex_.take();
        return Rational::parse(t.text);
    }

    FnExpr atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::Number: {
                Token n = lex_.take();
                return FnExpr::constant(Rational::parse(n.text));
            }
            case Token::Kind::Ident: {
                Token id = lex_.take();
                if (lex_.peek().kind == Token::Kind::LParen && is_function_name(id.text)) {
                    if (!allow_functions_)
                        throw ParseError("function '" + id.text +
                                             "' is not allowed in element expressions",
                                         id.pos);
                    lex_.take();
                    FnExpr arg = expr();
                    expect(Token::Kind::RParen, ")");
                    return apply_function(id.text, arg);
                }
                return FnExpr::var(id.text);
            }
            case Token::Kind::LParen: {
                lex_.take();
                FnExpr e = expr();
                expect(Token::Kind::RParen, ")");
                return e;
            }
            default:
                throw ParseError("expected a value, got '" +
                                     (t.kind == Token::Kind::End ? "end of input" : t.text) +
                                     "'",
                                 t.pos);
        }
    }

    void expect(Token::Kind k, const char* what) {
        if (lex_.peek().kind != k)
            throw ParseError(std::string("expected '") + what + "'", lex_.peek().pos);
        lex_.take();
    }

    Lexer lex_;
    bool allow_functions_;
};

ExponentGroup config_group(FieldId field) {
    switch (field) {
        case FieldId::Laurent: return ExponentGroup::laurent();
        case FieldId::Puiseux: return ExponentGroup::puiseux(1); // widens per literal
        default: return ExponentGroup::levi_civita();
    }
}

struct ElementEval {
    const ParseOptions& opts;
    const std::map<std::string, Element>* vars;

    Element eval(const FnExpr& e) const {
        switch (e.kind()) {
            case FnExpr::Kind::Const: return embed(e.value());
            case FnExpr::Kind::Var: return variable(e.name());
            case FnExpr::Kind::Add: return binop(e, [this](auto a, auto b) { return a + b; });
            case FnExpr::Kind::Sub: return binop(e, [this](auto a, auto b) { return a - b; });
            case FnExpr::Kind::Mul: return binop(e, [this](auto a, auto b) { return a * b; });
            case FnExpr::Kind::Div: return div(e);
            case FnExpr::Kind::Neg: {
                Element a = eval(e.child(0));
                return std::visit([](auto& v) -> Element { return -v; }, a);
            }
            case FnExpr::Kind::Pow: return pow(e);
            default:
                throw DomainError("function calls are not element expressions");
        }
    }

    Element embed(const Rational& q) const {
        switch (opts.field) {
            case FieldId::Q: return q;
            case FieldId::RatFuncField: return RatFunc(q);
            default: return Series::constant(q, config_group(opts.field));
        }
    }

    Element variable(const std::string& name) const {
        if (name == "t") {
            switch (opts.field) {
                case FieldId::Q:
                    throw DomainError("the field q has no infinitesimal generator t");
                case FieldId::RatFuncField: return RatFunc::t();
                default: return Series::t(config_group(opts.field));
            }
        }
        if (vars) {
            auto it = vars->find(name);
            if (it != vars->end()) return it->second;
        }
        throw DomainError("unknown variable '" + name + "'");
    }

    template <class Op>
    Element binop(const FnExpr& e, Op op) const {
        Element a = eval(e.child(0)), b = eval(e.child(1));
        return combine(a, b, op);
    }

    template <class Op>
    Element combine(const Element& a, const Element& b, Op op) const {
        if (a.index() != b.index()) throw DomainError("mixed field elements");
        if (std::holds_alternative<Rational>(a))
            return op(std::get<Rational>(a), std::get<Rational>(b));
        if (std::holds_alternative<RatFunc>(a))
            return op(std::get<RatFunc>(a), std::get<RatFunc>(b));
        return op(std::get<Series>(a), std::get<Series>(b));
    }

    Element div(const FnExpr& e) const {
        Element a = eval(e.child(0)), b = eval(e.child(1));
        if (a.index() != b.index()) throw DomainError("mixed field elements");
        if (std::holds_alternative<Rational>(a))
            return std::get<Rational>(a) / std::get<Rational>(b);
        if (std::holds_alternative<RatFunc>(a))
            return std::get<RatFunc>(a) / std::get<RatFunc>(b);
        return std::get<Series>(a).div(std::get<Series>(b), opts.budget);
    }

    Element pow(const FnExpr& e) const {
        Element base = eval(e.child(0));
        const Rational& ex = e.exponent();
        if (ex.is_integer()) {
            long n = ex.num().get_si();
            if (std::holds_alternative<Rational>(base)) return std::get<Rational>(base).pow(n);
            if (std::holds_alternative<RatFunc>(base)) return std::get<RatFunc>(base).pow(n);
            return std::get<Series>(base).pow(n, opts.budget);
        }
        long p = ex.num().get_si();
        unsigned long q = ex.den().get_ui();
        if (std::holds_alternative<Rational>(base)) {
            auto r = std::get<Rational>(base).pow(p).root(q);
            if (!r)
                throw NotRepresentable("power ^(" + ex.str() + ") leaves Q");
            return *r;
        }
        if (std::holds_alternative<RatFunc>(base))
            throw ExponentGroupViolation("rational exponent " + ex.str() +
                                         " needs a series field, not K(t)");
        if (opts.field == FieldId::Laurent)
            throw ExponentGroupViolation("exponent " + ex.str() +
                                         " outside the Laurent group Z");
        return std::get<Series>(base).pow(p, opts.budget).root(q, opts.budget);
    }
};

} // namespace

Element parse_element(std::string_view text, const ParseOptions& opts,
                      const std::map<std::string, Element>* vars) {
    Parser p(text, /*allow_functions=*/false);
    FnExpr ast = p.parse();
    ElementEval ev{opts, vars};
    return ev.eval(ast);
}

FnExpr parse_function(std::string_view text) {
    Parser p(text, /*allow_functions=*/true);
    return p.parse();
}

std::string element_str(const Element& e) {
    return std::visit([](auto& v) { return v.str(); }, e);
}

Cmp element_compare(const Element& a, const Element& b) {
    if (a.index() != b.index()) throw DomainError("mixed field elements");
    if (std::holds_alternative<Rational>(a))
        return rat_cmp(std::get<Rational>(a), std::get<Rational>(b));
    if (std::holds_alternative<RatFunc>(a))
        return rf_compare(std::get<RatFunc>(a), std::get<RatFunc>(b));
    return s_compare(std::get<Series>(a), std::get<Series>(b));
}

Classification element_classify(const Element& e) {
    return std::visit([](auto& v) { return classify(v); }, e);
}

ValuationValue element_valuation(const Element& e) {
    return std::visit([](auto& v) { return valuation(v); }, e);
}

} // namespace nonarch
