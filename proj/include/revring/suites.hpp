#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace revring {

// Deterministic generator for reproducible suites: splitmix64 behind a tiny
// interface, so results are bit-identical across platforms and compilers.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }
};

struct SuiteReport {
    std::string suite;
    uint64_t seed = 0;
    unsigned long scale = 0;
    unsigned long cases = 0;
    std::vector<std::string> failures;
    long elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
    std::string json() const;
};

struct SuiteInfo {
    std::string name;
    unsigned long default_scale;
    long time_limit_ms;
    std::string summary;
};

const std::vector<SuiteInfo>& suite_registry();

// Runs a registered suite deterministically; scale = 0 picks the default.
// Throws UnknownSuite for unregistered names.
SuiteReport run_suite(const std::string& name, uint64_t seed, unsigned long scale);

} // namespace revring
