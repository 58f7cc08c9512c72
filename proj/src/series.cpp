#include "nonarch/series.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace nonarch {

bool ExponentGroup::contains(const Rational& e) const {
    switch (kind) {
        case Kind::Integer: return e.is_integer();
        case Kind::BoundedDenominator: return mpz_class(mpz_class(denom) % e.den()) == 0;
        case Kind::Rational: return true;
    }
    return false;
}

ExponentGroup ExponentGroup::join(const ExponentGroup& a, const ExponentGroup& b) {
    // Least upper bound along the chain K<t^Z> subset K{{t}} subset K<t^R>.
    if (a.kind == Kind::Rational || b.kind == Kind::Rational) return levi_civita();
    if (a.kind == Kind::Integer) return b;
    if (b.kind == Kind::Integer) return a;
    mpz_class l;
    mpz_lcm_ui(l.get_mpz_t(), mpz_class(a.denom).get_mpz_t(), b.denom);
    return puiseux(l.get_ui());
}

std::string ExponentGroup::str() const {
    switch (kind) {
        case Kind::Integer: return "laurent";
        case Kind::BoundedDenominator: return "puiseux(" + std::to_string(denom) + ")";
        case Kind::Rational: return "levicivita";
    }
    return "?";
}

void Series::check_group() const {
    for (auto& [e, c] : terms_)
        if (!group_.contains(e))
            throw ExponentGroupViolation("exponent " + e.str() + " outside group " +
                                         group_.str());
}

void Series::drop_beyond_cutoff() {
    if (cutoff_.is_infinite()) return;
    std::erase_if(terms_, [&](const Term& t) {
        return ValuationValue::finite(t.first) > cutoff_;
    });
}

Series Series::constant(const Rational& c, ExponentGroup g) {
    Series s(g);
    if (!c.is_zero()) s.terms_.push_back({Rational(0), c});
    return s;
}

Series Series::monomial(const Rational& coeff, const Rational& exp, ExponentGroup g) {
    Series s(g);
    if (!coeff.is_zero()) s.terms_.push_back({exp, coeff});
    s.check_group();
    return s;
}

Series Series::from_terms(std::vector<Term> terms, ValuationValue cutoff, ExponentGroup g) {
    std::map<Rational, Rational> acc;
    for (auto& [e, c] : terms) acc[e] += c;
    Series s(g);
    s.cutoff_ = std::move(cutoff);
    for (auto& [e, c] : acc)
        if (!c.is_zero()) s.terms_.push_back({e, c});
    s.drop_beyond_cutoff();
    s.check_group();
    return s;
}

Rational Series::coeff_at(const Rational& exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, const Rational& e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return Rational(0);
}

Series Series::operator-() const {
    Series r(group_);
    r.cutoff_ = cutoff_;
    r.terms_.reserve(terms_.size());
    for (auto& [e, c] : terms_) r.terms_.push_back({e, -c});
    return r;
}

Series Series::operator+(const Series& o) const {
    Series r(ExponentGroup::join(group_, o.group_));
    r.cutoff_ = ValuationValue::min(cutoff_, o.cutoff_);
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
    r.drop_beyond_cutoff();
    return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

ValuationValue Series::nu_hat() const {
    if (!terms_.empty()) return ValuationValue::finite(terms_.front().first);
    return cutoff_; // every actual term lies strictly beyond the cutoff
}

Series Series::operator*(const Series& o) const {
    Series r(ExponentGroup::join(group_, o.group_));
    r.cutoff_ = ValuationValue::min(cutoff_ + o.nu_hat(), o.cutoff_ + nu_hat());
    std::map<Rational, Rational> acc;
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) acc[ea + eb] += ca * cb;
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({e, c});
    r.drop_beyond_cutoff();
    return r;
}

Series Series::inv(const Budget& budget) const {
    if (terms_.empty()) {
        if (is_exact()) throw DivisionByZero("inverse of the zero series");
        throw UnresolvedAtTruncation("inverse of a series with no term at cutoff " +
                                     cutoff_.str());
    }
    const Rational a = terms_.front().second;
    const Rational e = terms_.front().first;

    // w = x / (a t^e) - 1: positive-valuation tail.
    Series w(group_);
    w.cutoff_ = cutoff_ - e;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        w.terms_.push_back({terms_[i].first - e, terms_[i].second / a});

    if (w.terms_.empty() && w.is_exact()) return monomial(a.inv(), -e, group_);

    const ValuationValue result_cutoff =
        is_exact() ? ValuationValue::finite(budget.cutoff) : cutoff_ - e - e;
    const ValuationValue rel_cutoff = result_cutoff + e;

    Series acc = constant(Rational(1), group_);
    Series wk = acc;
    for (unsigned k = 1;; ++k) {
        if (k > budget.max_terms)
            throw BudgetExceeded("series inversion exceeded " +
                                 std::to_string(budget.max_terms) + " expansion terms");
        wk = wk * (-w);
        if (wk.nu_hat() > rel_cutoff) break;
        acc = acc + wk;
        // An empty truncated power stays empty forever; its cutoff already
        // entered acc, so the remaining tail is accounted for.
        if (wk.terms().empty()) break;
    }
    Series r = acc * monomial(a.inv(), -e, group_);
    return r.truncated(result_cutoff);
}

Series Series::pow(long e, const Budget& budget) const {
    if (e == 0) return constant(Rational(1), group_);
    Series base = e < 0 ? inv(budget) : *this;
    long n = e < 0 ? -e : e;
    Series acc = constant(Rational(1), group_);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return acc;
}

Series Series::root(unsigned long k, const Budget& budget) const {
    if (k == 0) throw DomainError("0th root");
    if (k == 1) return *this;
    if (terms_.empty()) {
        if (is_exact()) return *this; // k-th root of exact zero
        throw UnresolvedAtTruncation("root of a series with no term at cutoff " +
                                     cutoff_.str());
    }
    const Rational a = terms_.front().second;
    const Rational e = terms_.front().first;
    if (a.sign() < 0 && k % 2 == 0)
        throw NotRepresentable("even root of a negative leading coefficient");
    auto ar = a.root(k);
    if (!ar)
        throw NotRepresentable("leading coefficient " + a.str() + " has no rational " +
                               std::to_string(k) + "-th root");
    const Rational ek = e / Rational(static_cast<long>(k));

    ExponentGroup g = group_;
    if (!g.contains(ek)) {
        unsigned long q = ek.den().get_ui();
        g = ExponentGroup::join(
            g.kind == ExponentGroup::Kind::Integer ? ExponentGroup::puiseux(q) : g,
            ExponentGroup::puiseux(q));
    }

    Series w(g);
    w.cutoff_ = cutoff_ - e;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        w.terms_.push_back({terms_[i].first - e, terms_[i].second / a});

    if (w.terms_.empty() && w.is_exact()) return monomial(*ar, ek, g);

    const ValuationValue result_cutoff =
        is_exact() ? ValuationValue::finite(budget.cutoff) : cutoff_ - e + ek;
    const ValuationValue rel_cutoff = result_cutoff - ek;

    const Rational alpha = Rational(1) / Rational(static_cast<long>(k));
    Series acc = constant(Rational(1), g);
    Series wj = acc;
    for (unsigned long j = 1;; ++j) {
        if (j > budget.max_terms)
            throw BudgetExceeded("series root exceeded " + std::to_string(budget.max_terms) +
                                 " expansion terms");
        wj = wj * w;
        if (wj.nu_hat() > rel_cutoff) break;
        Series term = wj * constant(binomial(alpha, j), g);
        acc = acc + term;
        if (wj.terms().empty()) break;
    }
    Series r = acc * monomial(*ar, ek, g);
    return r.truncated(result_cutoff);
}

ValuationValue Series::valuation() const {
    if (!terms_.empty()) return ValuationValue::finite(terms_.front().first);
    if (is_exact()) return ValuationValue::infinity();
    throw UnresolvedAtTruncation("valuation of a series with no term at cutoff " +
                                 cutoff_.str());
}

int Series::sign() const {
    if (!terms_.empty()) return terms_.front().second.sign();
    if (is_exact()) return 0;
    throw UnresolvedAtTruncation("sign of a series with no term at cutoff " + cutoff_.str());
}

Series Series::abs() const {
    // |terms + O(t^{>c})| with an empty term list is the same unknown tail,
    // so abs stays total even when the sign does not resolve.
    if (terms_.empty()) return *this;
    return terms_.front().second.sign() < 0 ? -*this : *this;
}

std::pair<ValuationValue, double> Series::norm() const {
    ValuationValue v = valuation();
    return {v, v.norm_display()};
}

std::pair<ValuationValue, double> Series::dist(const Series& o) const {
    return (*this - o).norm();
}

Series Series::truncated(const ValuationValue& c) const {
    Series r = *this;
    r.cutoff_ = ValuationValue::min(cutoff_, c);
    r.drop_beyond_cutoff();
    return r;
}

Cmp s_compare(const Series& x, const Series& y) {
    Series d = x - y;
    if (d.terms().empty()) return d.is_exact() ? Cmp::Equal : Cmp::Unresolved;
    return d.terms().front().second.sign() > 0 ? Cmp::Greater : Cmp::Less;
}

bool agrees_to_cutoff(const Series& x, const Series& y) {
    return (x - y).terms().empty();
}

Series to_series(const RatFunc& f, const Rational& cutoff) {
    const ExponentGroup g = ExponentGroup::laurent();
    if (f.is_zero()) return Series(g);

    const unsigned alpha = f.num().ord(), beta = f.den().ord();
    const long lead = static_cast<long>(alpha) - static_cast<long>(beta);

    if (f.den().terms().size() == 1) {
        // Monomial denominator: the expansion terminates, keep it exact.
        std::vector<Series::Term> terms;
        for (auto& [d, c] : f.num().terms())
            terms.push_back({Rational(static_cast<long>(d) - static_cast<long>(beta)), c});
        return Series::from_terms(std::move(terms), ValuationValue::infinity(), g);
    }

    // Quotient recurrence for n0/d0 with d0_0 = 1 (den is lowest-monic).
    std::vector<Rational> q;
    std::vector<Series::Term> terms;
    for (long j = 0; Rational(lead + j) <= cutoff; ++j) {
        Rational qj = f.num().coeff(alpha + static_cast<unsigned>(j));
        for (long i = 1; i <= j; ++i)
            qj -= f.den().coeff(beta + static_cast<unsigned>(i)) * q[static_cast<size_t>(j - i)];
        q.push_back(qj);
        if (!qj.is_zero()) terms.push_back({Rational(lead + j), qj});
    }
    return Series::from_terms(std::move(terms), ValuationValue::finite(cutoff), g);
}

std::string Series::str(bool show_cutoff) const {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
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
        if (e.is_zero()) {
            os << a.str();
        } else {
            if (!(a == Rational(1))) os << a.str() << "*";
            os << "t";
            if (!(e == Rational(1))) {
                if (e.is_integer() && e.sign() > 0)
                    os << "^" << e.str();
                else
                    os << "^(" << e.str() << ")";
            }
        }
        first = false;
    }
    if (first && is_exact()) os << "0";
    if (!is_exact() && show_cutoff) {
        if (!first) os << " + ";
        os << "O(t^(>" << cutoff_.str() << "))";
    } else if (first && !is_exact()) {
        os << "O(t^(>" << cutoff_.str() << "))";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

} // namespace nonarch
