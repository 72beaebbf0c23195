#pragma once

// Registry of named verification cases: exact reproduction of the published
// fractions, cross-path equivalences, property suites, and seeded Monte
// Carlo validation.  The CLI `verify` command and the acceptance test
// binary both run these.

#include <functional>
#include <string>
#include <vector>

namespace parrondo::verify {

struct CaseResult {
    bool pass = false;
    std::string expected;
    std::string computed;
    std::string note;
};

struct Case {
    std::string id;
    std::string group;  // exact | crosspath | properties | montecarlo
    std::string description;
    std::function<CaseResult()> run;
};

const std::vector<Case>& all_cases();
const Case* find_case(const std::string& id);
std::vector<const Case*> cases_in_group(const std::string& group);

}  // namespace parrondo::verify
