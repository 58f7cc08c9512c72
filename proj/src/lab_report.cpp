#include "nonarch/lab/report.hpp"

#include <sstream>

#include "json.hpp"

namespace nonarch::lab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "Pass";
        case Verdict::Fail: return "Fail";
        case Verdict::Unresolved: return "Unresolved";
    }
    return "?";
}

void DemoReport::check(const std::string& desc, bool ok, const std::string& witness) {
    assertions.push_back({desc, ok ? Verdict::Pass : Verdict::Fail, witness});
}

void DemoReport::add(const std::string& desc, Verdict v, const std::string& witness) {
    assertions.push_back({desc, v, witness});
}

std::size_t DemoReport::count(Verdict v) const {
    std::size_t n = 0;
    for (auto& a : assertions)
        if (a.verdict == v) ++n;
    return n;
}

bool DemoReport::all_passed() const {
    return count(Verdict::Fail) == 0 && count(Verdict::Unresolved) == 0;
}

std::string DemoReport::text() const {
    std::ostringstream os;
    os << "demo: " << name << "\n";
    for (auto& [k, v] : params) os << "  param " << k << " = " << v << "\n";
    if (not_applicable) os << "  NOT APPLICABLE\n";
    for (auto& a : assertions) {
        os << "  [" << to_string(a.verdict) << "] " << a.desc;
        if (!a.witness.empty()) os << "  -- " << a.witness;
        os << "\n";
    }
    for (auto& n : notes) os << "  note: " << n << "\n";
    os << "  summary: " << count(Verdict::Pass) << " pass, " << count(Verdict::Fail)
       << " fail, " << count(Verdict::Unresolved) << " unresolved\n";
    return os.str();
}

std::string DemoReport::to_json(int indent) const {
    nlohmann::json j;
    j["name"] = name;
    j["params"] = params;
    j["not_applicable"] = not_applicable;
    j["assertions"] = nlohmann::json::array();
    for (auto& a : assertions)
        j["assertions"].push_back(
            {{"desc", a.desc}, {"verdict", to_string(a.verdict)}, {"witness", a.witness}});
    j["notes"] = notes;
    j["summary"] = {{"pass", count(Verdict::Pass)},
                    {"fail", count(Verdict::Fail)},
                    {"unresolved", count(Verdict::Unresolved)}};
    return j.dump(indent);
}

} // namespace nonarch::lab
