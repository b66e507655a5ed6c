#pragma once

// The corpus-wide law suite: every asserted law on every built-in
// instance, every planted mutation, the metamorphic cross-checks, and the
// oracle agreements, with an expected verdict per entry. Output is
// deterministic JSON: equal seeds give byte-identical reports for any job
// count.

#include <cstdint>
#include <string>
#include <vector>

namespace ftczin {

struct SuiteOptions {
    std::vector<std::uint64_t> seeds = {0};
    std::size_t samples = 500;
    int jobs = 1;
};

struct SuiteResult {
    std::string json;      // pretty-printed, schemaVersion 1
    bool allMatched;       // every entry's verdict equals its expectation
    std::size_t total = 0;
    std::size_t mismatched = 0;
};

SuiteResult runSuite(const SuiteOptions& options);

}  // namespace ftczin
