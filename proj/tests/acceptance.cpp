// Acceptance runner: executes the verification registry and prints one
// PASS/FAIL line per check, grouped by criterion. Exits nonzero if any
// check in the selected range fails.
//
// Usage: acceptance [--criteria LO-HI] [--and-unnumbered] [--h6-budget N]

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "forb/verify.hpp"

int main(int argc, char** argv) {
    int lo = 1, hi = 99;
    bool unnumbered = false;
    std::uint64_t h6_budget = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criteria") && i + 1 < argc) {
            if (std::sscanf(argv[++i], "%d-%d", &lo, &hi) != 2) {
                std::fprintf(stderr, "bad --criteria range\n");
                return 2;
            }
        } else if (!std::strcmp(argv[i], "--and-unnumbered")) {
            unnumbered = true;
        } else if (!std::strcmp(argv[i], "--h6-budget") && i + 1 < argc) {
            h6_budget = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::fprintf(stderr, "usage: acceptance [--criteria LO-HI] [--and-unnumbered]\n");
            return 2;
        }
    }

    forb::VerifyContext ctx;
    ctx.h6_budget = h6_budget;
    int failures = 0, expected_failures = 0, passes = 0;
    for (const auto& suite : forb::verify_registry()) {
        bool numbered = suite.criterion >= lo && suite.criterion <= hi && suite.criterion != 0;
        if (!numbered && !(unnumbered && suite.criterion == 0)) continue;
        std::vector<forb::CheckResult> results = suite.run(ctx);
        for (const auto& r : results) {
            const char* tag = r.pass ? "PASS" : (r.expected_fail ? "FAIL*" : "FAIL");
            if (r.criterion > 0)
                std::printf("[criterion %02d] %-5s %s / %s: %s (%.2fs)\n", r.criterion, tag,
                            r.suite.c_str(), r.name.c_str(), r.detail.c_str(), r.seconds);
            else
                std::printf("[unnumbered]   %-5s %s / %s: %s (%.2fs)\n", tag, r.suite.c_str(),
                            r.name.c_str(), r.detail.c_str(), r.seconds);
            if (r.pass) ++passes;
            else if (r.expected_fail) { ++expected_failures; ++failures; }
            else ++failures;
        }
    }
    std::printf("summary: %d passed, %d failed", passes, failures);
    if (expected_failures)
        std::printf(" (%d of the failures are the documented spec-defect checks, kept verbatim)",
                    expected_failures);
    std::printf("\n");
    return failures ? 1 : 0;
}
