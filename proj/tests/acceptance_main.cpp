// Acceptance gate: one PASS/FAIL line per criterion with the measured
// values. Run with --criterion N for a single criterion, no arguments for
// the full set plus supplementary notes.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "sqt/verification.hpp"

namespace {

void print_line(const sqt::CheckResult& c) {
    if (c.criterion > 0)
        std::printf("[%s] criterion %2d %-26s %s\n", c.passed ? "PASS" : "FAIL", c.criterion,
                    c.name.c_str(), c.detail.c_str());
    else
        std::printf("[%s] note         %-26s %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    sqt::VerifyOptions opt;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--epsilon-tail") == 0 && i + 1 < argc) {
            opt.epsilon_tail = std::atof(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N] [--epsilon-tail X]\n", argv[0]);
            return 2;
        }
    }

    std::vector<sqt::CheckResult> results;
    if (only != 0) {
        if (only < 1 || only > sqt::kCriterionCount) {
            std::fprintf(stderr, "criterion index must lie in 1..%d\n", sqt::kCriterionCount);
            return 2;
        }
        results.push_back(sqt::run_criterion(only, opt));
    } else {
        results = sqt::run_acceptance(opt);
    }

    int failed = 0;
    for (const sqt::CheckResult& c : results) {
        print_line(c);
        if (!c.passed) ++failed;
    }
    if (results.size() > 1)
        std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failed,
                    results.size());
    return failed == 0 ? 0 : 1;
}
