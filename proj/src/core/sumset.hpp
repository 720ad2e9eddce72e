#pragma once

#include <cstdint>
#include <vector>

#include "core/caps.hpp"
#include "core/sequence.hpp"

namespace subsum {

// The family { Sigma_k(S) } for k = 0..|S|, as one bitset per k.
// per_k[0] = {0} is an internal convention; user-facing unions start at 1.
class SumsetProfile {
public:
    SumsetProfile(GroupPtr group, std::vector<GroupSet> per_k)
        : group_(std::move(group)), per_k_(std::move(per_k)) {}

    const GroupPtr& group() const { return group_; }
    uint32_t length() const { return static_cast<uint32_t>(per_k_.size()) - 1; }
    const GroupSet& at(uint32_t k) const { return per_k_[k]; }

    GroupSet sigma_all() const;               // union over k in [1, |S|]
    GroupSet sigma_geq(uint32_t ell) const;   // union over k in [ell, |S|]

private:
    GroupPtr group_;
    std::vector<GroupSet> per_k_;
};

// Cardinality-stratified subset-sum DP: one element copy at a time,
// new[k] = old[k] | (old[k-1] + g).
SumsetProfile sumset_profile(const Sequence& s);

// Independent oracle: walks all 2^|S| subsequences explicitly. Exists solely
// to cross-check the DP; guarded by caps.brute_force_cap.
SumsetProfile brute_force_profile(const Sequence& s, uint32_t brute_force_cap = Caps{}.brute_force_cap);

GroupSet sigma_all(const Sequence& s);
GroupSet sigma_geq(const Sequence& s, uint32_t ell);
bool is_zero_sum_free(const Sequence& s);

// Incremental update used by enumeration and searches:
// Sigma(S.g) = Sigma(S) | (Sigma(S)+g) | {g}.
GroupSet sigma_extended(const Group& g, const GroupSet& sigma, uint32_t elem);

} // namespace subsum
