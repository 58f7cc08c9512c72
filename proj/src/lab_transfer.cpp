#include "nonarch/lab/transfer.hpp"

#include <sstream>

namespace nonarch::lab {

namespace {

enum class Tri { True, False, Unknown };

Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::True;
}

std::map<std::string, Rational> bind_base(const TransferSystem& sys,
                                          const std::vector<Rational>& point) {
    std::map<std::string, Rational> env;
    for (std::size_t i = 0; i < sys.variables.size(); ++i) env[sys.variables[i]] = point[i];
    return env;
}

std::map<std::string, Series> bind_ext(const TransferSystem& sys,
                                       const std::vector<Series>& point) {
    std::map<std::string, Series> env;
    for (std::size_t i = 0; i < sys.variables.size(); ++i) env[sys.variables[i]] = point[i];
    return env;
}

// Exact membership over Q.
Tri base_member(const TransferSystem& sys, const std::map<std::string, Rational>& env) {
    for (auto& [l, r] : sys.equations)
        if (!(l.eval(env) == r.eval(env))) return Tri::False;
    for (auto& [l, r] : sys.inequations)
        if (l.eval(env) == r.eval(env)) return Tri::False;
    for (auto& [l, r] : sys.inequalities)
        if (l.eval(env) > r.eval(env)) return Tri::False;
    return Tri::True;
}

// Membership over the series extension, three-valued at finite cutoffs.
Tri ext_member(const TransferSystem& sys, const std::map<std::string, Series>& env,
               const Budget& budget) {
    Tri acc = Tri::True;
    for (auto& [l, r] : sys.equations) {
        Series d = lift_eval(l, env, budget) - lift_eval(r, env, budget);
        if (!d.terms().empty()) return Tri::False;
        acc = tri_and(acc, d.is_exact() ? Tri::True : Tri::Unknown);
    }
    for (auto& [l, r] : sys.inequations) {
        Cmp c = s_compare(lift_eval(l, env, budget), lift_eval(r, env, budget));
        if (c == Cmp::Equal) return Tri::False;
        acc = tri_and(acc, c == Cmp::Unresolved ? Tri::Unknown : Tri::True);
    }
    for (auto& [l, r] : sys.inequalities) {
        Cmp c = s_compare(lift_eval(l, env, budget), lift_eval(r, env, budget));
        if (c == Cmp::Greater) return Tri::False;
        acc = tri_and(acc, c == Cmp::Unresolved ? Tri::Unknown : Tri::True);
    }
    return acc;
}

std::string show_base(const TransferSystem& sys, const std::vector<Rational>& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? ", " : "") << sys.variables[i] << "=" << p[i].str();
    return os.str();
}

std::string show_ext(const TransferSystem& sys, const std::vector<Series>& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? ", " : "") << sys.variables[i] << "=" << p[i].str();
    return os.str();
}

} // namespace

DemoReport check_transfer(const TransferSystem& sys,
                          const std::vector<std::vector<Rational>>& base_samples,
                          const std::vector<std::vector<Series>>& ext_samples,
                          std::optional<bool> expect_ext_member, const Budget& budget) {
    DemoReport report;
    report.name = "transfer-" + sys.name;
    report.params["base_samples"] = std::to_string(base_samples.size());
    report.params["ext_samples"] = std::to_string(ext_samples.size());

    // Base direction: the canonical embedding must reproduce each verdict.
    bool consensus_init = false;
    bool consensus = true;
    bool consensus_valid = true;
    unsigned base_ok = 0, base_bad = 0, base_err = 0;
    std::string base_witness;
    for (auto& p : base_samples) {
        try {
            auto env = bind_base(sys, p);
            Tri mb = base_member(sys, env);
            std::map<std::string, Series> senv;
            for (auto& [k, v] : env)
                senv[k] = Series::constant(v, ExponentGroup::levi_civita());
            Tri me = ext_member(sys, senv, budget);
            bool agree = (mb == me); // constants evaluate exactly, so no Unknown
            if (agree)
                ++base_ok;
            else if (base_bad++ == 0)
                base_witness = show_base(sys, p) + ": base " +
                               (mb == Tri::True ? "member" : "non-member") +
                               ", embedded disagrees";
            if (!consensus_init) {
                consensus = (mb == Tri::True);
                consensus_init = true;
            } else if (consensus != (mb == Tri::True)) {
                consensus_valid = false;
            }
        } catch (const Error& e) {
            ++base_err;
            if (base_witness.empty())
                base_witness = show_base(sys, p) + ": " + e.what();
        }
    }
    if (!base_samples.empty()) {
        Verdict v = base_bad > 0 ? Verdict::Fail
                                 : (base_err > 0 ? Verdict::Unresolved : Verdict::Pass);
        report.add("embedded constants reproduce base verdicts (" +
                       std::to_string(base_samples.size()) + " samples)",
                   v, base_witness);
    }

    std::optional<bool> expected = expect_ext_member;
    if (!expected && consensus_init && consensus_valid) expected = consensus;

    unsigned ext_ok = 0, ext_bad = 0, ext_unresolved = 0, ext_err = 0;
    std::string ext_witness;
    for (auto& p : ext_samples) {
        try {
            Tri me = ext_member(sys, bind_ext(sys, p), budget);
            if (!expected) {
                if (me == Tri::Unknown)
                    ++ext_unresolved;
                else
                    ++ext_ok;
                continue;
            }
            bool want = *expected;
            if ((me == Tri::True && want) || (me == Tri::False && !want)) {
                ++ext_ok;
            } else if (me == Tri::Unknown) {
                // Vanishes to cutoff: consistent with membership, not proof.
                if (want)
                    ++ext_ok;
                else
                    ++ext_unresolved;
            } else {
                if (ext_bad++ == 0)
                    ext_witness = show_ext(sys, p) + ": verdict contradicts transfer";
            }
        } catch (const Error& e) {
            ++ext_err;
            if (ext_witness.empty()) ext_witness = show_ext(sys, p) + ": " + e.what();
        }
    }
    if (!ext_samples.empty()) {
        Verdict v = ext_bad > 0
                        ? Verdict::Fail
                        : ((ext_err > 0 || ext_unresolved > 0) ? Verdict::Unresolved
                                                               : Verdict::Pass);
        report.add("extension samples consistent with transfer (" +
                       std::to_string(ext_samples.size()) + " samples)",
                   v, ext_witness);
    }

    report.notes.push_back("sampled check only: verdicts are consistent with the transfer "
                           "principle at the tested points, not a proof of it");
    return report;
}

} // namespace nonarch::lab
