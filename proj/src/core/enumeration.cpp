#include "core/enumeration.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace subsum {

std::string EnumSpec::describe() const {
    std::string out = "multisets of length " + std::to_string(length) + " over C_" +
                      group->literal();
    if (exclude_zero_element) out += " \\ {0}";
    if (zero_sum_free_only) out += ", zero-sum free";
    if (orbit_reduce) out += ", orbit-reduced";
    return out;
}

namespace {

struct DfsState {
    const Group* group;
    const EnumSpec* spec;
    const EnumVisitor* visit;
    const AutomorphismSet* auts;
    std::vector<uint32_t> mult;
};

void dfs(DfsState& st, uint32_t min_elem, uint32_t remaining, const GroupSet& sigma) {
    if (remaining == 0) {
        if (!st.spec->orbit_reduce || is_orbit_min(st.mult, *st.auts))
            (*st.visit)(st.mult, sigma);
        return;
    }
    uint32_t n = st.group->order();
    for (uint32_t g = min_elem; g < n; ++g) {
        if (st.spec->zero_sum_free_only) {
            // 0 lands in Sigma(prefix.g) iff g == 0 or -g already in Sigma(prefix)
            if (g == 0 || sigma.test(st.group->neg(g))) continue;
        }
        GroupSet next = sigma_extended(*st.group, sigma, g);
        ++st.mult[g];
        dfs(st, g, remaining - 1, next);
        --st.mult[g];
    }
}

} // namespace

void enumerate_multisets(const EnumSpec& spec, const EnumVisitor& visit,
                         const AutomorphismSet* auts) {
    const Group& g = *spec.group;
    if (spec.orbit_reduce && auts == nullptr)
        throw Error(ErrorCode::invalid_argument, "orbit reduction needs an automorphism set");
    if (spec.prefix.size() > spec.length)
        throw Error(ErrorCode::invalid_argument, "shard prefix longer than the target length");

    uint32_t first = spec.exclude_zero_element ? 1 : 0;
    uint32_t prev = first;
    for (uint32_t e : spec.prefix) {
        if (e < prev || e >= g.order())
            throw Error(ErrorCode::invalid_argument, "shard prefix is not a valid non-decreasing index list");
        prev = e;
    }

    DfsState st{&g, &spec, &visit, auts, std::vector<uint32_t>(g.order(), 0)};

    GroupSet sigma(g.order());
    uint32_t min_elem = first;
    for (uint32_t e : spec.prefix) {
        if (spec.zero_sum_free_only && (e == 0 || sigma.test(g.neg(e))))
            return; // whole shard pruned
        sigma = sigma_extended(g, sigma, e);
        ++st.mult[e];
        min_elem = e;
    }
    dfs(st, min_elem, spec.length - static_cast<uint32_t>(spec.prefix.size()), sigma);
}

std::vector<EnumSpec> shard_prefixes(const EnumSpec& spec, uint32_t fanout) {
    if (fanout < 1)
        throw Error(ErrorCode::invalid_argument, "fanout must be >= 1");
    if (spec.orbit_reduce)
        throw Error(ErrorCode::invalid_argument,
                    "orbit reduction does not shard; reduce across the merged stream");
    if (!spec.prefix.empty())
        throw Error(ErrorCode::invalid_argument, "cannot shard an already-sharded spec");
    if (fanout == 1 || spec.length == 0) return {spec};

    uint32_t first = spec.exclude_zero_element ? 1 : 0;
    uint32_t n = spec.group->order();

    std::vector<EnumSpec> depth1;
    for (uint32_t a = first; a < n; ++a) {
        EnumSpec s = spec;
        s.prefix = {a};
        depth1.push_back(std::move(s));
    }
    if (depth1.size() >= fanout || spec.length < 2) return depth1;

    std::vector<EnumSpec> depth2;
    for (uint32_t a = first; a < n; ++a) {
        for (uint32_t b = a; b < n; ++b) {
            EnumSpec s = spec;
            s.prefix = {a, b};
            depth2.push_back(std::move(s));
        }
    }
    return depth2;
}

bool is_orbit_min(const std::vector<uint32_t>& mult, const AutomorphismSet& auts) {
    // Compare index lists without materializing them: walk both multiplicity
    // vectors in index order, consuming copies.
    uint32_t n = static_cast<uint32_t>(mult.size());
    std::vector<uint32_t> image(n);
    for (const auto& map : auts.maps) {
        std::fill(image.begin(), image.end(), 0);
        for (uint32_t g = 0; g < n; ++g)
            if (mult[g]) image[map[g]] += mult[g];
        // lexicographic comparison of sorted index lists == comparison of
        // multiplicity vectors with "more mass earlier wins"
        for (uint32_t g = 0; g < n; ++g) {
            if (image[g] == mult[g]) continue;
            if (image[g] > mult[g]) {
                // image's list is smaller at the first divergence
                return false;
            }
            break; // mult's list is smaller; this map cannot improve
        }
    }
    return true;
}

std::vector<uint32_t> orbit_canonical(const std::vector<uint32_t>& mult,
                                      const AutomorphismSet& auts) {
    uint32_t n = static_cast<uint32_t>(mult.size());
    std::vector<uint32_t> best = mult;
    std::vector<uint32_t> image(n);
    for (const auto& map : auts.maps) {
        std::fill(image.begin(), image.end(), 0);
        for (uint32_t g = 0; g < n; ++g)
            if (mult[g]) image[map[g]] += mult[g];
        for (uint32_t g = 0; g < n; ++g) {
            if (image[g] == best[g]) continue;
            if (image[g] > best[g]) best = image;
            break;
        }
    }
    return best;
}

uint64_t multiset_count(uint64_t alphabet, uint64_t length) {
    if (length == 0) return 1;
    if (alphabet == 0) return 0;
    // C(alphabet + length - 1, length), saturating
    unsigned __int128 acc = 1;
    for (uint64_t i = 1; i <= length; ++i) {
        acc = acc * (alphabet - 1 + i) / i;
        if (acc > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<uint64_t>(acc);
}

} // namespace subsum
