// Command-line front end: one-shot commands, a REPL, and script files over
// the exact non-Archimedean field engine.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nonarch/calculus.hpp"
#include "nonarch/lab/axioms.hpp"
#include "nonarch/lab/demos.hpp"
#include "nonarch/lab/frechet.hpp"
#include "nonarch/parser.hpp"

namespace {

using nonarch::Budget;
using nonarch::Cmp;
using nonarch::Element;
using nonarch::FieldId;
using nonarch::Rational;
using nonarch::Series;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnresolved = 2;

struct Session {
    FieldId field = FieldId::LeviCivita;
    Budget budget;
    std::string format = "plain"; // plain | json
    std::uint64_t seed = 1;
    std::map<std::string, Element> vars;

    nonarch::ParseOptions parse_options() const { return {field, budget}; }
};

struct Output {
    int code = kExitOk;
    std::string plain;
    json doc;
};

std::optional<FieldId> field_from_name(const std::string& name) {
    for (FieldId f : {FieldId::Q, FieldId::RatFuncField, FieldId::Laurent, FieldId::Puiseux,
                      FieldId::LeviCivita})
        if (name == nonarch::field_name(f)) return f;
    return std::nullopt;
}

json element_json(const Element& e) {
    json j;
    j["text"] = nonarch::element_str(e);
    if (std::holds_alternative<Rational>(e)) {
        j["kind"] = "rational";
        j["value"] = std::get<Rational>(e).str();
    } else if (std::holds_alternative<nonarch::RatFunc>(e)) {
        const auto& f = std::get<nonarch::RatFunc>(e);
        j["kind"] = "ratfunc";
        json num = json::array(), den = json::array();
        for (auto& [d, c] : f.num().terms()) num.push_back({{"deg", d}, {"c", c.str()}});
        for (auto& [d, c] : f.den().terms()) den.push_back({{"deg", d}, {"c", c.str()}});
        j["num"] = num;
        j["den"] = den;
    } else {
        const auto& s = std::get<Series>(e);
        j["kind"] = "series";
        json terms = json::array();
        for (auto& [ex, c] : s.terms()) terms.push_back({{"e", ex.str()}, {"c", c.str()}});
        j["terms"] = terms;
        j["cutoff"] = s.cutoff().str();
        j["group"] = s.group().str();
    }
    return j;
}

Output cmd_eval(Session& session, const std::string& expr) {
    Element e = nonarch::parse_element(expr, session.parse_options(), &session.vars);
    Output out;
    out.plain = nonarch::element_str(e);
    out.doc = {{"command", "eval"}, {"field", nonarch::field_name(session.field)},
               {"result", element_json(e)}};
    return out;
}

Output cmd_cmp(Session& session, const std::string& a, const std::string& b) {
    Element ea = nonarch::parse_element(a, session.parse_options(), &session.vars);
    Element eb = nonarch::parse_element(b, session.parse_options(), &session.vars);
    Cmp c = nonarch::element_compare(ea, eb);
    Output out;
    out.code = c == Cmp::Unresolved ? kExitUnresolved : kExitOk;
    out.plain = nonarch::to_string(c);
    out.doc = {{"command", "cmp"}, {"result", nonarch::to_string(c)}};
    return out;
}

Output cmd_classify(Session& session, const std::string& expr) {
    Element e = nonarch::parse_element(expr, session.parse_options(), &session.vars);
    auto c = nonarch::element_classify(e);
    Output out;
    out.plain = nonarch::to_string(c);
    out.doc = {{"command", "classify"}, {"result", nonarch::to_string(c)}};
    return out;
}

Output cmd_st(Session& session, const std::string& expr) {
    Element e = nonarch::parse_element(expr, session.parse_options(), &session.vars);
    Rational r;
    if (std::holds_alternative<Rational>(e)) {
        r = std::get<Rational>(e);
    } else if (std::holds_alternative<nonarch::RatFunc>(e)) {
        r = nonarch::st(nonarch::to_series(std::get<nonarch::RatFunc>(e), Rational(0)));
    } else {
        r = nonarch::st(std::get<Series>(e));
    }
    Output out;
    out.plain = r.str();
    out.doc = {{"command", "st"}, {"result", r.str()}};
    return out;
}

Output cmd_val(Session& session, const std::string& expr) {
    Element e = nonarch::parse_element(expr, session.parse_options(), &session.vars);
    auto v = nonarch::element_valuation(e);
    Output out;
    out.plain = v.str();
    out.doc = {{"command", "val"}, {"result", v.str()}};
    return out;
}

Output cmd_norm(Session& session, const std::string& expr) {
    Element e = nonarch::parse_element(expr, session.parse_options(), &session.vars);
    auto v = nonarch::element_valuation(e);
    Output out;
    std::ostringstream os;
    os << "valuation " << v.str() << ", display " << v.norm_display();
    out.plain = os.str();
    out.doc = {{"command", "norm"}, {"valuation", v.str()}, {"display", v.norm_display()}};
    return out;
}

Output cmd_diff(Session& session, const std::string& fn, const std::string& at) {
    nonarch::FnExpr f = nonarch::parse_function(fn);
    Rational r = Rational::parse(at);
    Rational d = nonarch::derivative(f, r, session.budget);
    Output out;
    out.plain = d.str();
    out.doc = {{"command", "diff"}, {"at", r.str()}, {"result", d.str()}};
    return out;
}

Output cmd_limit(Session& session, const std::string& fn, const std::string& at) {
    nonarch::FnExpr f = nonarch::parse_function(fn);
    Rational r = Rational::parse(at);
    nonarch::LimitResult lr = nonarch::limit(f, r, session.budget);
    Output out;
    out.doc["command"] = "limit";
    out.doc["at"] = r.str();
    switch (lr.kind) {
        case nonarch::LimitResult::Kind::Value:
            out.plain = lr.value->str();
            out.doc["kind"] = "Value";
            out.doc["value"] = lr.value->str();
            break;
        case nonarch::LimitResult::Kind::NoLimit:
            out.plain = "NoLimit";
            out.doc["kind"] = "NoLimit";
            out.doc["witnesses"] = lr.witnesses;
            break;
        case nonarch::LimitResult::Kind::Unresolved:
            out.plain = "Unresolved";
            out.doc["kind"] = "Unresolved";
            out.doc["witnesses"] = lr.witnesses;
            out.code = kExitUnresolved;
            break;
    }
    return out;
}

Output cmd_taylor(Session& session, const std::string& fn, const std::string& at, unsigned n) {
    nonarch::FnExpr f = nonarch::parse_function(fn);
    Rational r = Rational::parse(at);
    auto coeffs = nonarch::taylor(f, r, n, session.budget);
    Output out;
    std::ostringstream os;
    json arr = json::array();
    os << "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        os << (i ? ", " : "") << coeffs[i].str();
        arr.push_back(coeffs[i].str());
    }
    os << "]";
    out.plain = os.str();
    out.doc = {{"command", "taylor"}, {"at", r.str()}, {"coefficients", arr}};
    return out;
}

Output report_output(const nonarch::lab::DemoReport& rep) {
    Output out;
    out.plain = rep.text();
    out.doc = json::parse(rep.to_json());
    if (rep.count(nonarch::lab::Verdict::Fail) > 0)
        out.code = kExitError;
    else if (rep.count(nonarch::lab::Verdict::Unresolved) > 0)
        out.code = kExitUnresolved;
    return out;
}

Output merge_reports(const std::vector<nonarch::lab::DemoReport>& reps) {
    Output out;
    json arr = json::array();
    std::ostringstream os;
    for (auto& rep : reps) {
        Output one = report_output(rep);
        os << one.plain;
        arr.push_back(one.doc);
        out.code = std::max(out.code, one.code);
    }
    out.plain = os.str();
    out.doc = {{"command", "reports"}, {"reports", arr}};
    return out;
}

Output cmd_demo(Session& session, const std::string& name, unsigned long n,
                unsigned samples) {
    namespace lab = nonarch::lab;
    if (name == "non-archimedean")
        return report_output(lab::demo_non_archimedean(session.field, n));
    if (name == "weierstrass")
        return report_output(
            lab::demo_weierstrass_failure(session.field, static_cast<unsigned>(n)));
    if (name == "monotone")
        return report_output(
            lab::demo_monotone_failure(session.field, static_cast<unsigned>(n)));
    if (name == "cauchy")
        return report_output(lab::demo_cauchy_completeness(static_cast<unsigned>(n)));
    if (name == "cantor")
        return report_output(lab::demo_cantor_gap(static_cast<unsigned>(n)));
    if (name == "frechet") return report_output(lab::demo_frechet());
    if (name == "transfer-cubic")
        return report_output(lab::demo_transfer_cubic(samples, session.seed));
    if (name == "transfer-sine")
        return report_output(lab::demo_transfer_sine(samples, session.seed));
    if (name == "transfer-inequality")
        return report_output(lab::demo_transfer_inequality());
    if (name == "all") {
        std::vector<nonarch::lab::DemoReport> reps;
        FieldId f = session.field == FieldId::Q ? FieldId::RatFuncField : session.field;
        reps.push_back(lab::demo_non_archimedean(f, n));
        reps.push_back(lab::demo_weierstrass_failure(f, 100));
        reps.push_back(lab::demo_monotone_failure(f, 50));
        reps.push_back(lab::demo_cauchy_completeness(50));
        reps.push_back(lab::demo_cantor_gap(12));
        reps.push_back(lab::demo_frechet());
        reps.push_back(lab::demo_transfer_cubic(samples, session.seed));
        reps.push_back(lab::demo_transfer_sine(samples, session.seed));
        reps.push_back(lab::demo_transfer_inequality());
        return merge_reports(reps);
    }
    throw nonarch::DomainError(
        "unknown demo '" + name +
        "' (try: non-archimedean, weierstrass, monotone, cauchy, cantor, frechet, "
        "transfer-cubic, transfer-sine, transfer-inequality, all)");
}

Output cmd_check_axioms(Session& session, unsigned cases) {
    nonarch::lab::AxiomsConfig cfg;
    cfg.cases = cases;
    cfg.seed = session.seed;
    std::vector<nonarch::lab::DemoReport> reps{
        nonarch::lab::check_field_axioms(session.field, cfg),
        nonarch::lab::check_order_axioms(session.field, cfg),
        nonarch::lab::check_valuation_axioms(session.field, cfg)};
    return merge_reports(reps);
}

void print_output(const Session& session, const Output& out) {
    if (session.format == "json")
        std::cout << out.doc.dump(2) << "\n";
    else
        std::cout << out.plain << (out.plain.empty() || out.plain.back() == '\n' ? "" : "\n");
}

// Quote-aware splitter for REPL and script lines.
std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> parts;
    std::string cur;
    bool quoted = false, any = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
            any = true;
            continue;
        }
        if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
            if (any || !cur.empty()) parts.push_back(cur);
            cur.clear();
            any = false;
            continue;
        }
        cur.push_back(c);
    }
    if (any || !cur.empty()) parts.push_back(cur);
    return parts;
}

std::optional<std::string> flag_value(std::vector<std::string>& args, const std::string& name) {
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] == name) {
            std::string v = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
            return v;
        }
    }
    return std::nullopt;
}

int apply_set(Session& session, const std::string& key, const std::string& value) {
    if (key == "field") {
        auto f = field_from_name(value);
        if (!f) throw nonarch::DomainError("unknown field '" + value + "'");
        session.field = *f;
    } else if (key == "cutoff") {
        session.budget.cutoff = Rational::parse(value);
    } else if (key == "terms") {
        session.budget.max_terms = static_cast<unsigned>(std::stoul(value));
    } else if (key == "format") {
        if (value != "plain" && value != "json")
            throw nonarch::DomainError("format must be plain or json");
        session.format = value;
    } else if (key == "seed") {
        session.seed = std::stoull(value);
    } else {
        throw nonarch::DomainError("unknown setting '" + key + "'");
    }
    return kExitOk;
}

// Executes one REPL/script line; returns the exit code of the command.
int run_line(Session& session, const std::string& line) {
    std::vector<std::string> parts = split_line(line);
    if (parts.empty() || parts[0].starts_with("#")) return kExitOk;

    try {
        const std::string cmd = parts[0];
        if (cmd == ":set") {
            if (parts.size() != 3)
                throw nonarch::DomainError(":set needs a key and a value");
            apply_set(session, parts[1], parts[2]);
            std::cout << "ok\n";
            return kExitOk;
        }
        if (cmd == "let") {
            // let NAME = EXPR
            if (parts.size() < 4 || parts[2] != "=")
                throw nonarch::DomainError("usage: let NAME = EXPR");
            std::string expr;
            for (std::size_t i = 3; i < parts.size(); ++i) expr += parts[i] + " ";
            Element e = nonarch::parse_element(expr, session.parse_options(), &session.vars);
            session.vars[parts[1]] = e;
            std::cout << parts[1] << " = " << nonarch::element_str(e) << "\n";
            return kExitOk;
        }

        std::vector<std::string> args(parts.begin() + 1, parts.end());
        auto at = flag_value(args, "--at");
        auto n_flag = flag_value(args, "--n");
        auto samples_flag = flag_value(args, "--samples");
        auto field_flag = flag_value(args, "--field");
        Session local = session;
        if (field_flag) {
            auto f = field_from_name(*field_flag);
            if (!f) throw nonarch::DomainError("unknown field '" + *field_flag + "'");
            local.field = *f;
        }

        Output out;
        if (cmd == "eval" && args.size() == 1) {
            out = cmd_eval(local, args[0]);
        } else if (cmd == "cmp" && args.size() == 2) {
            out = cmd_cmp(local, args[0], args[1]);
        } else if (cmd == "classify" && args.size() == 1) {
            out = cmd_classify(local, args[0]);
        } else if (cmd == "st" && args.size() == 1) {
            out = cmd_st(local, args[0]);
        } else if (cmd == "val" && args.size() == 1) {
            out = cmd_val(local, args[0]);
        } else if (cmd == "norm" && args.size() == 1) {
            out = cmd_norm(local, args[0]);
        } else if (cmd == "diff" && args.size() == 1 && at) {
            out = cmd_diff(local, args[0], *at);
        } else if (cmd == "limit" && args.size() == 1 && at) {
            out = cmd_limit(local, args[0], *at);
        } else if (cmd == "taylor" && args.size() == 1 && at && n_flag) {
            out = cmd_taylor(local, args[0], *at,
                             static_cast<unsigned>(std::stoul(*n_flag)));
        } else if (cmd == "demo" && args.size() == 1) {
            out = cmd_demo(local, args[0], n_flag ? std::stoul(*n_flag) : 1000,
                           samples_flag ? static_cast<unsigned>(std::stoul(*samples_flag))
                                        : 100);
        } else if (cmd == "check-axioms" && args.empty()) {
            out = cmd_check_axioms(local,
                                   n_flag ? static_cast<unsigned>(std::stoul(*n_flag)) : 1000);
        } else {
            throw nonarch::DomainError("unrecognized command line: " + line);
        }
        print_output(session, out);
        if (session.vars.size() != local.vars.size()) session.vars = local.vars;
        return out.code;
    } catch (const nonarch::Error& e) {
        std::cout << "error[" << e.code() << "]: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int run_repl(Session& session, std::istream& in, bool interactive) {
    std::string line;
    int last = kExitOk;
    if (interactive) std::cout << "nonarch repl; :q quits\n";
    while (true) {
        if (interactive) std::cout << "> " << std::flush;
        if (!std::getline(in, line)) break;
        if (line == ":q" || line == ":quit") break;
        int code = run_line(session, line);
        if (!interactive) last = std::max(last, code);
    }
    return last;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic and infinitesimal calculus in non-Archimedean "
                 "ordered fields"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    Session session;
    std::string field_name_opt = "levicivita", cutoff_opt = "16", format_opt = "plain";
    unsigned terms_opt = 512;
    std::uint64_t seed_opt = 1;
    std::string script_path;

    app.add_option("--field", field_name_opt, "field context: q, ratfunc, laurent, puiseux, levicivita")
        ->envname("NONARCH_FIELD");
    app.add_option("--cutoff", cutoff_opt, "series cutoff exponent (rational)")
        ->envname("NONARCH_CUTOFF");
    app.add_option("--terms", terms_opt, "expansion term budget")->envname("NONARCH_TERMS");
    app.add_option("--format", format_opt, "output format: plain or json")
        ->envname("NONARCH_FORMAT");
    app.add_option("--seed", seed_opt, "random seed for demos and axiom checks")
        ->envname("NONARCH_SEED");
    app.add_option("--script", script_path, "run commands from a file, one per line")
        ->envname("NONARCH_SCRIPT");

    std::string arg_a, arg_b, arg_at = "0";
    unsigned arg_n = 4;
    unsigned long demo_n = 1000;
    unsigned samples = 100, cases = 1000;
    std::string demo_name;

    auto* c_eval = app.add_subcommand("eval", "evaluate an element expression");
    c_eval->add_option("expr", arg_a)->required();
    auto* c_cmp = app.add_subcommand("cmp", "compare two elements");
    c_cmp->add_option("a", arg_a)->required();
    c_cmp->add_option("b", arg_b)->required();
    auto* c_classify = app.add_subcommand("classify", "classify an element");
    c_classify->add_option("expr", arg_a)->required();
    auto* c_st = app.add_subcommand("st", "standard part of a finite element");
    c_st->add_option("expr", arg_a)->required();
    auto* c_val = app.add_subcommand("val", "canonical valuation");
    c_val->add_option("expr", arg_a)->required();
    auto* c_norm = app.add_subcommand("norm", "valuation norm (exact valuation + display float)");
    c_norm->add_option("expr", arg_a)->required();
    auto* c_diff = app.add_subcommand("diff", "derivative via an infinitesimal increment");
    c_diff->add_option("fn", arg_a)->required();
    c_diff->add_option("--at", arg_at, "expansion point")->required();
    auto* c_limit = app.add_subcommand("limit", "limit via infinitesimal perturbations");
    c_limit->add_option("fn", arg_a)->required();
    c_limit->add_option("--at", arg_at)->required();
    auto* c_taylor = app.add_subcommand("taylor", "Taylor coefficients about a point");
    c_taylor->add_option("fn", arg_a)->required();
    c_taylor->add_option("--at", arg_at)->required();
    c_taylor->add_option("-n,--n", arg_n, "highest coefficient index");
    auto* c_demo = app.add_subcommand("demo", "run a verification demo");
    c_demo->add_option("name", demo_name)->required();
    c_demo->add_option("--n", demo_n, "demo size parameter");
    c_demo->add_option("--samples", samples, "sample count for transfer demos");
    auto* c_axioms = app.add_subcommand("check-axioms", "random field/order/valuation axiom suites");
    c_axioms->add_option("--cases", cases, "random cases per axiom");
    auto* c_repl = app.add_subcommand("repl", "interactive session");

    CLI11_PARSE(app, argc, argv);

    try {
        auto f = field_from_name(field_name_opt);
        if (!f) {
            std::cerr << "error: unknown field '" << field_name_opt << "'\n";
            return kExitError;
        }
        session.field = *f;
        session.budget.cutoff = Rational::parse(cutoff_opt);
        session.budget.max_terms = terms_opt;
        session.format = format_opt;
        session.seed = seed_opt;
    } catch (const nonarch::Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return kExitError;
    }

    if (!script_path.empty()) {
        std::ifstream in(script_path);
        if (!in) {
            std::cerr << "error: cannot open script " << script_path << "\n";
            return kExitError;
        }
        return run_repl(session, in, false);
    }

    try {
        Output out;
        if (c_eval->parsed()) out = cmd_eval(session, arg_a);
        else if (c_cmp->parsed()) out = cmd_cmp(session, arg_a, arg_b);
        else if (c_classify->parsed()) out = cmd_classify(session, arg_a);
        else if (c_st->parsed()) out = cmd_st(session, arg_a);
        else if (c_val->parsed()) out = cmd_val(session, arg_a);
        else if (c_norm->parsed()) out = cmd_norm(session, arg_a);
        else if (c_diff->parsed()) out = cmd_diff(session, arg_a, arg_at);
        else if (c_limit->parsed()) out = cmd_limit(session, arg_a, arg_at);
        else if (c_taylor->parsed()) out = cmd_taylor(session, arg_a, arg_at, arg_n);
        else if (c_demo->parsed()) out = cmd_demo(session, demo_name, demo_n, samples);
        else if (c_axioms->parsed()) out = cmd_check_axioms(session, cases);
        else if (c_repl->parsed()) return run_repl(session, std::cin, true);
        else {
            std::cout << app.help() << "\n";
            return kExitOk;
        }
        print_output(session, out);
        return out.code;
    } catch (const nonarch::Error& e) {
        if (session.format == "json") {
            json j{{"error", e.code()}, {"message", e.what()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        }
        return e.code() == "UnresolvedAtTruncation" ? kExitUnresolved : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
