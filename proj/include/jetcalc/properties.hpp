#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jetcalc {

// Outcome of one seeded property: how many cases ran and, on failure, a
// description of the first counterexample found.
struct PropertyResult {
    std::string name;
    bool pass = false;
    int cases = 0;
    std::string detail;
};

const std::vector<std::string>& suite_names();

// Runs every property of the named suite ("algebra", "jets", "varieties",
// "blowup", "analysis") with deterministic per-case sub-seeds. Unknown suite
// names are a DomainError.
std::vector<PropertyResult> run_suite(const std::string& suite, std::uint64_t seed, int cases);

} // namespace jetcalc
