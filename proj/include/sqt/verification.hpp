#pragma once

#include <string>
#include <vector>

#include "sqt/squeezed_spectrum.hpp"

namespace sqt {

inline constexpr int kCriterionCount = 10;

struct CheckResult {
    int criterion = 0;  // 1..10, or 0 for supplementary notes
    std::string name;
    bool passed = false;
    std::string detail;  // measured values, always filled in
};

struct VerifyOptions {
    double epsilon_tail = kDefaultEpsilonTail;
    std::string circuit_file;  // optional: adds a derived-omega report line
};

// One acceptance criterion; k in 1..kCriterionCount. A thrown exception
// inside a check is converted into a failed result carrying the message.
CheckResult run_criterion(int k, const VerifyOptions& opt = {});

// All criteria in order, plus supplementary note lines (EoF regression at
// the sweep peak; derived omega when a circuit file is given).
std::vector<CheckResult> run_acceptance(const VerifyOptions& opt = {});

}  // namespace sqt
