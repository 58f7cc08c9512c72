#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace nonarch::lab {

enum class Verdict { Pass, Fail, Unresolved };

const char* to_string(Verdict v);

struct Assertion {
    std::string desc;
    Verdict verdict;
    std::string witness; // serialized elements or failure details
};

// Machine-checked record of one demo run. Every claim the demo makes is an
// assertion with a verdict; `notes` carries explanatory prose and is never
// counted as a check.
struct DemoReport {
    std::string name;
    std::map<std::string, std::string> params;
    std::vector<Assertion> assertions;
    std::vector<std::string> notes;
    bool not_applicable = false;

    void check(const std::string& desc, bool ok, const std::string& witness = "");
    void add(const std::string& desc, Verdict v, const std::string& witness = "");

    std::size_t count(Verdict v) const;
    bool all_passed() const;

    std::string text() const;
    std::string to_json(int indent = 2) const;
};

} // namespace nonarch::lab
