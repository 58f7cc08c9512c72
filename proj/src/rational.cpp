#include "nonarch/rational.hpp"

#include <cctype>
#include <ostream>

namespace nonarch {

const char* to_string(Cmp c) {
    switch (c) {
        case Cmp::Less: return "Less";
        case Cmp::Equal: return "Equal";
        case Cmp::Greater: return "Greater";
        case Cmp::Unresolved: return "Unresolved";
    }
    return "?";
}

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), n);
    return Rational(num, den);
}

std::optional<Rational> Rational::root(unsigned long k) const {
    if (k == 0) return std::nullopt;
    if (k == 1) return *this;
    if (is_zero()) return Rational(0);
    if (sign() < 0 && k % 2 == 0) return std::nullopt;
    mpz_class n = num(), d = den();
    bool neg = n < 0;
    if (neg) n = -n;
    mpz_class rn, rd;
    bool exact_n = mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) != 0;
    bool exact_d = mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k) != 0;
    if (!exact_n || !exact_d) return std::nullopt;
    if (neg) rn = -rn;
    return Rational(rn, rd);
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(q, 1);
}

Rational Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(q, 1);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("empty rational literal", 0);

    auto slash = s.find('/');
    Rational result;
    if (slash != std::string_view::npos) {
        std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!all_digits(ns) || !all_digits(ds))
            throw ParseError("malformed fraction '" + std::string(text) + "'", 0);
        mpz_class n{std::string(ns)};
        mpz_class d{std::string(ds)};
        if (d == 0) throw DivisionByZero("fraction '" + std::string(text) + "'");
        result = Rational(n, d);
    } else {
        auto dot = s.find('.');
        if (dot != std::string_view::npos) {
            std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
            if (ip.empty()) ip = "0";
            if (!all_digits(ip) || !all_digits(fp))
                throw ParseError("malformed decimal '" + std::string(text) + "'", 0);
            mpz_class scaled(std::string(ip) + std::string(fp));
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
            result = Rational(scaled, den);
        } else {
            if (!all_digits(s))
                throw ParseError("malformed rational '" + std::string(text) + "'", 0);
            result = Rational(mpz_class(std::string(s)), 1);
        }
    }
    return neg ? -result : result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f, 1);
}

Rational binomial(const Rational& alpha, unsigned long k) {
    Rational c(1);
    for (unsigned long j = 0; j < k; ++j)
        c *= (alpha - Rational(static_cast<long>(j))) / Rational(static_cast<long>(j + 1));
    return c;
}

} // namespace nonarch
