#include "nonarch/poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace nonarch {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) terms_.push_back({0, c});
}

Poly::Poly(std::vector<Term> terms) {
    std::map<unsigned, Rational> acc;
    for (auto& [d, c] : terms) acc[d] += c;
    for (auto& [d, c] : acc)
        if (!c.is_zero()) terms_.push_back({d, c});
}

Poly Poly::t(unsigned degree) {
    Poly p;
    p.terms_.push_back({degree, Rational(1)});
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == Rational(1);
}

unsigned Poly::ord() const { return terms_.front().first; }
unsigned Poly::deg() const { return terms_.back().first; }

Rational Poly::coeff(unsigned degree) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                               [](const Term& t, unsigned d) { return t.first < d; });
    if (it != terms_.end() && it->first == degree) return it->second;
    return Rational(0);
}

Poly Poly::operator-() const {
    Poly r;
    r.terms_.reserve(terms_.size());
    for (auto& [d, c] : terms_) r.terms_.push_back({d, -c});
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            r.terms_.push_back(*b++);
        } else {
            Rational s = a->second + b->second;
            if (!s.is_zero()) r.terms_.push_back({a->first, s});
            ++a;
            ++b;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::map<unsigned, Rational> acc;
    for (auto& [da, ca] : terms_)
        for (auto& [db, cb] : o.terms_) acc[da + db] += ca * cb;
    Poly r;
    for (auto& [d, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({d, c});
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    r.terms_.reserve(terms_.size());
    for (auto& [d, a] : terms_) r.terms_.push_back({d, a * c});
    return r;
}

Poly Poly::shifted(unsigned degrees) const {
    Poly r;
    r.terms_.reserve(terms_.size());
    for (auto& [d, a] : terms_) r.terms_.push_back({d + degrees, a});
    return r;
}

Rational Poly::eval(const Rational& x) const {
    // Horner over the dense degree range, walking sparse terms.
    Rational acc(0);
    unsigned prev = 0;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) acc = acc * x.pow(static_cast<long>(prev - it->first));
        acc += it->second;
        prev = it->first;
        first = false;
    }
    if (!first) acc = acc * x.pow(static_cast<long>(prev));
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly q, r = *this;
    const Rational lead = divisor.terms_.back().second;
    const unsigned dd = divisor.deg();
    while (!r.is_zero() && r.deg() >= dd) {
        Rational c = r.terms_.back().second / lead;
        unsigned d = r.deg() - dd;
        Poly m;
        m.terms_.push_back({d, c});
        q = q + m;
        r = r - divisor.shifted(d).scaled(c);
    }
    return {q, r};
}

namespace {

// Integer polynomial support for the primitive PRS.

mpz_class int_content(const Poly& p) {
    mpz_class g = 0;
    for (auto& [d, c] : p.terms()) {
        mpz_class n = c.num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    return g;
}

// Clears denominators and divides by the content; result is primitive with
// positive leading coefficient.
Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class l = 1;
    for (auto& [d, c] : p.terms()) {
        mpz_class den = c.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    Poly q = p.scaled(Rational(l, 1));
    mpz_class cont = int_content(q);
    q = q.scaled(Rational(mpz_class(1), cont));
    if (q.terms().back().second.sign() < 0) q = -q;
    return q;
}

// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, all in Z.
Poly pseudo_rem(const Poly& a, const Poly& b) {
    Poly r = a;
    const Rational lead = b.terms().back().second;
    const unsigned db = b.deg();
    while (!r.is_zero() && r.deg() >= db) {
        unsigned shift = r.deg() - db;
        Rational c = r.terms().back().second;
        r = r.scaled(lead) - b.shifted(shift).scaled(c);
    }
    return r;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    Poly p = primitive_part(a), q = primitive_part(b);
    if (p.deg() < q.deg()) std::swap(p, q);
    while (!q.is_zero()) {
        Poly r = pseudo_rem(p, q);
        p = q;
        q = r.is_zero() ? Poly() : primitive_part(r);
    }
    // Monic over Q so gcd output is canonical.
    return p.scaled(p.terms().back().second.inv());
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (d == 0) {
            os << a.str();
        } else {
            if (!(a == Rational(1))) os << a.str() << "*";
            os << "t";
            if (d != 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

} // namespace nonarch
