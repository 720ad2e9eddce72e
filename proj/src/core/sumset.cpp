#include "core/sumset.hpp"

#include "core/error.hpp"

namespace subsum {

GroupSet SumsetProfile::sigma_all() const { return sigma_geq(1); }

GroupSet SumsetProfile::sigma_geq(uint32_t ell) const {
    if (ell < 1 || ell > length())
        throw Error(ErrorCode::invalid_argument,
                    "sigma_geq bound " + std::to_string(ell) + " out of range [1, " +
                        std::to_string(length()) + "]");
    GroupSet out(group_->order());
    for (uint32_t k = ell; k < per_k_.size(); ++k) out |= per_k_[k];
    return out;
}

SumsetProfile sumset_profile(const Sequence& s) {
    const Group& g = *s.group();
    uint32_t n = g.order();
    uint32_t len = s.length();

    std::vector<GroupSet> per_k(len + 1, GroupSet(n));
    per_k[0].set(0);

    uint32_t processed = 0;
    for (uint32_t e = 0; e < n; ++e) {
        uint32_t m = s.multiplicity(e);
        if (!m) continue;
        std::vector<uint32_t> perm = g.translation(e);
        for (uint32_t c = 0; c < m; ++c) {
            ++processed;
            for (uint32_t k = processed; k >= 1; --k)
                GroupSet::or_permuted(per_k[k], per_k[k - 1], perm);
        }
    }
    return SumsetProfile(s.group(), std::move(per_k));
}

SumsetProfile brute_force_profile(const Sequence& s, uint32_t brute_force_cap) {
    if (s.length() > brute_force_cap)
        throw Error(ErrorCode::cap_exceeded,
                    "brute-force oracle capped at length " + std::to_string(brute_force_cap));
    const Group& g = *s.group();
    uint32_t n = g.order();
    uint32_t len = s.length();
    std::vector<uint32_t> elems = to_elements(s);

    std::vector<GroupSet> per_k(len + 1, GroupSet(n));
    for (uint64_t mask = 0; mask < (uint64_t(1) << len); ++mask) {
        uint32_t sum = 0;
        uint32_t size = 0;
        for (uint32_t i = 0; i < len; ++i) {
            if ((mask >> i) & 1) {
                sum = g.add(sum, elems[i]);
                ++size;
            }
        }
        per_k[size].set(sum);
    }
    return SumsetProfile(s.group(), std::move(per_k));
}

GroupSet sigma_all(const Sequence& s) {
    const Group& g = *s.group();
    GroupSet acc(g.order());
    for (uint32_t e = 0; e < g.order(); ++e)
        for (uint32_t c = 0; c < s.multiplicity(e); ++c) acc = sigma_extended(g, acc, e);
    return acc;
}

GroupSet sigma_geq(const Sequence& s, uint32_t ell) { return sumset_profile(s).sigma_geq(ell); }

bool is_zero_sum_free(const Sequence& s) { return !sigma_all(s).test(0); }

GroupSet sigma_extended(const Group& g, const GroupSet& sigma, uint32_t elem) {
    GroupSet out = sigma;
    out |= g.translate_set(sigma, elem);
    out.set(elem);
    return out;
}

} // namespace subsum
