#pragma once

#include <cstddef>
#include <cstdint>

namespace jetcalc {

// Hard caps for basis completion and expression growth. Exceeding one raises
// ResourceLimitError with the offending quantity in the message.
struct Limits {
    int max_degree = 64;            // total degree of any intermediate term
    std::size_t max_basis = 4096;   // basis elements during completion
    std::size_t max_pairs = 200000; // critical pairs processed
};

// Parameters for randomized rank / point sampling. The seed has no default in
// the CLI (it must be given explicitly); the library default keeps fixtures terse.
struct SampleParams {
    std::uint64_t seed = 1;
    long bound = 1000; // coordinates drawn from [-bound, bound]
    int trials = 5;
};

// Budget for the exact lift solver.
struct LiftOptions {
    int attempts = 4;              // independent-variable groundings tried
    std::size_t branch_nodes = 64; // root-branching nodes visited per grounding
    std::uint64_t seed = 1;
    long bound = 5; // grounding values drawn from [-bound, bound]
    Limits limits;
};

// splitmix64 step; used to derive independent per-trial seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace jetcalc
