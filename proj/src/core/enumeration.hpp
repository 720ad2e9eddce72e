#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "core/group.hpp"
#include "core/sequence.hpp"
#include "core/sumset.hpp"

namespace subsum {

// Canonical enumeration of multisets over a group: each multiset appears
// exactly once, as a non-decreasing list of element indices. Streams are
// deterministic (lexicographic in that list).
struct EnumSpec {
    GroupPtr group;
    uint32_t length = 0;
    bool exclude_zero_element = false;
    bool zero_sum_free_only = false;
    bool orbit_reduce = false;
    std::vector<uint32_t> prefix; // shard: fixed leading indices, non-decreasing

    std::string describe() const;
};

// Visitor gets the multiplicity vector and Sigma(prefix sums) of the full
// multiset (maintained incrementally, so zero-sum-free pruning is one bitset
// test per appended element).
using EnumVisitor = std::function<void(const std::vector<uint32_t>& mult, const GroupSet& sigma)>;

// With orbit_reduce, only the lexicographically minimal index list of each
// automorphism orbit is yielded; pass the precomputed automorphism set.
void enumerate_multisets(const EnumSpec& spec, const EnumVisitor& visit,
                         const AutomorphismSet* auts = nullptr);

// Prefix-based disjoint shards whose union equals the unsharded stream.
// Rejects specs with orbit_reduce set: orbit reduction does not compose
// shard-locally and must be applied by the orchestrator across the whole
// stream (see is_orbit_min, which is a per-multiset predicate).
std::vector<EnumSpec> shard_prefixes(const EnumSpec& spec, uint32_t fanout);

// True iff no automorphism maps the multiset to a lexicographically smaller
// index list. Exactly one member of each orbit satisfies this.
bool is_orbit_min(const std::vector<uint32_t>& mult, const AutomorphismSet& auts);

// The minimal orbit member as a multiplicity vector.
std::vector<uint32_t> orbit_canonical(const std::vector<uint32_t>& mult,
                                      const AutomorphismSet& auts);

// Number of multisets of the given length over an alphabet: C(a+len-1, len).
// Saturates at UINT64_MAX.
uint64_t multiset_count(uint64_t alphabet, uint64_t length);

} // namespace subsum
