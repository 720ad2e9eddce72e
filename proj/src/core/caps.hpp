#pragma once

#include <cstdint>

namespace subsum {

// Resource caps. All explicit: a run either fits under them or fails loudly.
struct Caps {
    uint32_t order_cap = 4096;        // max group order
    uint32_t length_cap = 64;         // max sequence length (bounds the DP table height)
    uint32_t aut_order_cap = 64;      // brute-force automorphism search, non-cyclic groups
    uint64_t aut_count_cap = 250000;  // refuse to materialize larger automorphism groups
    uint32_t brute_force_cap = 20;    // 2^|S| subset walk guard for the oracle
    uint32_t search_order_cap = 32;   // davenport_constant search
    uint64_t enum_budget = 20000000;  // projected multiset count guard for exhaustive runs
};

} // namespace subsum
