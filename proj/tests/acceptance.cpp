// Acceptance gate: runs every registered suite at its contract scale and
// prints one pass/fail line per criterion. Exits nonzero when any suite
// fails a check or busts its time budget.

#include "revring/suites.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    uint64_t seed = 42;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    const auto& registry = revring::suite_registry();
    int failures = 0;
    int index = 0;
    for (const auto& info : registry) {
        ++index;
        revring::SuiteReport r = revring::run_suite(info.name, seed, 0);
        bool in_time = r.elapsed_ms <= info.time_limit_ms;
        bool ok = r.passed() && in_time;
        std::printf("[%s] %2d. %-22s %8lu cases  %6ld ms (limit %ld ms)%s\n",
                    ok ? "PASS" : "FAIL", index, info.name.c_str(), r.cases, r.elapsed_ms,
                    info.time_limit_ms, in_time ? "" : "  TIME BUDGET EXCEEDED");
        if (!r.passed()) {
            for (const std::string& f : r.failures)
                std::printf("       - %s\n", f.c_str());
        }
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::printf("acceptance: all %d criteria passed\n", index);
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
