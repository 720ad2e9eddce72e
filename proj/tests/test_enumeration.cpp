#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/enumeration.hpp"
#include "core/error.hpp"
#include "core/sumset.hpp"

using namespace subsum;

namespace {

std::vector<std::vector<uint32_t>> collect(const EnumSpec& spec,
                                           const AutomorphismSet* auts = nullptr) {
    std::vector<std::vector<uint32_t>> out;
    enumerate_multisets(spec, [&](const std::vector<uint32_t>& mult, const GroupSet&) {
        out.push_back(mult);
    }, auts);
    return out;
}

std::vector<uint32_t> mult_of(const GroupPtr& g, std::initializer_list<uint32_t> elems) {
    std::vector<uint32_t> m(g->order(), 0);
    for (uint32_t e : elems) ++m[e];
    return m;
}

} // namespace

TEST_CASE("all multisets of length 2 over C_3") {
    auto g = Group::make({3});
    auto got = collect({g, 2, false, false, false, {}});
    std::vector<std::vector<uint32_t>> expect = {
        mult_of(g, {0, 0}), mult_of(g, {0, 1}), mult_of(g, {0, 2}),
        mult_of(g, {1, 1}), mult_of(g, {1, 2}), mult_of(g, {2, 2})};
    CHECK(got == expect);
}

TEST_CASE("zero-sum-free filter over C_3") {
    auto g = Group::make({3});
    auto got = collect({g, 2, false, true, false, {}});
    std::vector<std::vector<uint32_t>> expect = {mult_of(g, {1, 1}), mult_of(g, {2, 2})};
    CHECK(got == expect);
}

TEST_CASE("stream cardinality equals the multiset coefficient") {
    for (const char* lit : {"2", "5", "9", "2,4", "3,3", "2,2,2"}) {
        auto g = Group::parse(lit);
        for (uint32_t len = 0; len <= 4; ++len) {
            auto got = collect({g, len, false, false, false, {}});
            CHECK(got.size() == multiset_count(g->order(), len));
            auto nz = collect({g, len, true, false, false, {}});
            CHECK(nz.size() == multiset_count(g->order() - 1, len));
        }
    }
}

TEST_CASE("determinism: two runs yield identical streams") {
    auto g = Group::parse("2,4");
    EnumSpec spec{g, 4, false, true, false, {}};
    CHECK(collect(spec) == collect(spec));
}

TEST_CASE("prune soundness: skipped multisets genuinely contain a zero sum") {
    for (const char* lit : {"5", "7", "2,4"}) {
        auto g = Group::parse(lit);
        for (uint32_t len = 1; len <= 4; ++len) {
            auto all = collect({g, len, false, false, false, {}});
            auto pruned = collect({g, len, false, true, false, {}});
            std::set<std::vector<uint32_t>> kept(pruned.begin(), pruned.end());
            for (const auto& mult : all) {
                bool zsf = is_zero_sum_free(Sequence(g, mult));
                CHECK(zsf == (kept.count(mult) > 0));
            }
        }
    }
}

TEST_CASE("orbit reduction: Burnside-style recount over C_5") {
    auto g = Group::make({5});
    AutomorphismSet auts = automorphisms(*g);
    CHECK(auts.count() == 4);

    auto all = collect({g, 3, false, false, false, {}});
    auto reduced = collect({g, 3, false, false, true, {}}, &auts);

    // group the full stream into orbits; the set of minimal members must be
    // exactly the reduced stream
    std::set<std::vector<uint32_t>> reps;
    for (const auto& mult : all) reps.insert(orbit_canonical(mult, auts));
    std::set<std::vector<uint32_t>> got(reduced.begin(), reduced.end());
    CHECK(got == reps);

    // orbit sizes partition the full stream
    uint64_t total = 0;
    for (const auto& rep : reps) {
        std::set<std::vector<uint32_t>> orbit;
        for (const auto& map : auts.maps) {
            std::vector<uint32_t> image(g->order(), 0);
            for (uint32_t e = 0; e < g->order(); ++e) image[map[e]] += rep[e];
            orbit.insert(image);
        }
        total += orbit.size();
    }
    CHECK(total == all.size());
}

TEST_CASE("orbit soundness: no automorphism maps a representative lower") {
    for (const char* lit : {"8", "3,3", "2,4"}) {
        auto g = Group::parse(lit);
        AutomorphismSet auts = automorphisms(*g);
        auto reduced = collect({g, 3, true, false, true, {}}, &auts);
        for (const auto& mult : reduced) {
            CHECK(is_orbit_min(mult, auts));
            CHECK(orbit_canonical(mult, auts) == mult);
        }
    }
}

TEST_CASE("index-list canonical order puts small indices first") {
    // the orbit of 1^3 over C_7 under units is {t^3}; the representative is 1^3
    auto g = Group::make({7});
    AutomorphismSet auts = automorphisms(*g);
    CHECK(orbit_canonical(mult_of(g, {3, 3, 3}), auts) == mult_of(g, {1, 1, 1}));
    CHECK(is_orbit_min(mult_of(g, {1, 1, 1}), auts));
    CHECK(!is_orbit_min(mult_of(g, {3, 3, 3}), auts));
}

TEST_CASE("shard completeness") {
    auto g = Group::make({5});
    EnumSpec spec{g, 3, false, true, false, {}};
    auto whole = collect(spec);

    SUBCASE("fanout by first index") {
        auto shards = shard_prefixes(spec, 5);
        CHECK(shards.size() == 5);
        std::vector<std::vector<uint32_t>> merged;
        for (const auto& s : shards)
            for (auto& m : collect(s)) merged.push_back(std::move(m));
        CHECK(merged == whole);
    }
    SUBCASE("two-level fanout") {
        auto shards = shard_prefixes(spec, 64);
        CHECK(shards.size() == 15); // pairs (a,b), a <= b, over 5 elements
        std::vector<std::vector<uint32_t>> merged;
        for (const auto& s : shards)
            for (auto& m : collect(s)) merged.push_back(std::move(m));
        CHECK(merged == whole);
    }
    SUBCASE("fanout 1 is the identity") {
        auto shards = shard_prefixes(spec, 1);
        CHECK(shards.size() == 1);
        CHECK(collect(shards[0]) == whole);
    }
}

TEST_CASE("sharding rejects orbit reduction at shard level") {
    auto g = Group::make({5});
    EnumSpec spec{g, 3, false, false, true, {}};
    CHECK_THROWS_AS((void)shard_prefixes(spec, 5), Error);

    // the orchestrator path: shard without reduction, filter per item
    EnumSpec plain = spec;
    plain.orbit_reduce = false;
    AutomorphismSet auts = automorphisms(*g);
    std::vector<std::vector<uint32_t>> merged;
    for (auto& s : shard_prefixes(plain, 5)) {
        s.orbit_reduce = true;
        for (auto& m : collect(s, &auts)) merged.push_back(std::move(m));
    }
    CHECK(merged == collect(spec, &auts));
}

TEST_CASE("invalid shard prefixes are rejected") {
    auto g = Group::make({5});
    CHECK_THROWS_AS((void)collect({g, 3, false, false, false, {2, 1}}), Error);
    CHECK_THROWS_AS((void)collect({g, 2, false, false, false, {1, 1, 1}}), Error);
    CHECK_THROWS_AS((void)collect({g, 3, true, false, false, {0}}), Error);
}

TEST_CASE("multiset_count") {
    CHECK(multiset_count(3, 2) == 6);
    CHECK(multiset_count(7, 5) == 462);
    CHECK(multiset_count(1, 9) == 1);
    CHECK(multiset_count(9, 0) == 1);
    CHECK(multiset_count(4096, 64) == UINT64_MAX); // saturates
}
