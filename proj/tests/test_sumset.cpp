#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/enumeration.hpp"
#include "core/error.hpp"
#include "core/sumset.hpp"

using namespace subsum;

namespace {

Sequence random_sequence(const GroupPtr& g, std::mt19937_64& rng, uint32_t max_len,
                         uint32_t min_len = 0) {
    std::vector<uint32_t> mult(g->order(), 0);
    uint32_t len = min_len + static_cast<uint32_t>(rng() % (max_len - min_len + 1));
    for (uint32_t i = 0; i < len; ++i) ++mult[rng() % g->order()];
    return Sequence(g, mult);
}

GroupSet set_of(const GroupPtr& g, std::initializer_list<uint32_t> elems) {
    GroupSet s(g->order());
    for (uint32_t e : elems) s.set(e);
    return s;
}

bool profiles_equal(const SumsetProfile& a, const SumsetProfile& b) {
    if (a.length() != b.length()) return false;
    for (uint32_t k = 0; k <= a.length(); ++k)
        if (a.at(k) != b.at(k)) return false;
    return true;
}

} // namespace

TEST_CASE("profile of the counterexample sequence over C_7") {
    auto g = Group::make({7});
    Sequence s = Sequence::parse(g, "0^4,1^4,2,6");
    SumsetProfile p = sumset_profile(s);
    CHECK(p.at(7) == set_of(g, {1, 2, 3, 4, 5, 6}));
    CHECK(!p.at(7).test(0));
    // top row is always the singleton {sigma(S)}
    CHECK(p.at(s.length()) == GroupSet::singleton(7, s.sum()));
    CHECK(p.at(0) == GroupSet::singleton(7, 0));
    for (uint32_t k = 0; k <= s.length(); ++k) CHECK(!p.at(k).empty());
}

TEST_CASE("two-subset sums of 1.1.2 over C_5") {
    auto g = Group::make({5});
    Sequence s = Sequence::parse(g, "1^2,2");
    SumsetProfile p = sumset_profile(s);
    CHECK(p.at(2) == set_of(g, {2, 3})); // 1+1 and 1+2
    CHECK(profiles_equal(p, brute_force_profile(s)));
}

TEST_CASE("sigma of a constant sequence is the cyclic run") {
    auto g = Group::make({9});
    for (uint32_t m = 1; m <= 8; ++m) {
        Sequence s(g, [&] {
            std::vector<uint32_t> mult(9, 0);
            mult[2] = m;
            return mult;
        }());
        GroupSet expect(9);
        for (uint32_t j = 1; j <= m; ++j) expect.set((2 * j) % 9);
        CHECK(sigma_all(s) == expect);
        CHECK(sigma_all(s).count() == m);
    }
}

TEST_CASE("sigma of the exceptional 3-element set over C_2+C_4") {
    auto g = Group::parse("2,4");
    Sequence s = Sequence::parse(g, "(0,1),(1,0),(1,1)");
    // oracle: all 7 nonempty subsets by hand
    GroupSet expect(8);
    std::vector<uint32_t> elems = to_elements(s);
    for (uint32_t mask = 1; mask < 8; ++mask) {
        uint32_t sum = 0;
        for (int i = 0; i < 3; ++i)
            if (mask & (1u << i)) sum = g->add(sum, elems[i]);
        expect.set(sum);
    }
    GroupSet got = sigma_all(s);
    CHECK(got == expect);
    CHECK(got.count() == 5);
    for (const char* lit : {"(0,1)", "(1,0)", "(1,1)", "(0,2)", "(1,2)"})
        CHECK(got.test(g->parse_element(lit)));
}

TEST_CASE("sigma_geq basics") {
    auto g = Group::make({5});
    Sequence s = Sequence::parse(g, "1^2,2");
    SumsetProfile p = sumset_profile(s);
    CHECK(p.sigma_geq(1) == sigma_all(s));
    CHECK(p.sigma_geq(3) == GroupSet::singleton(5, 4));
    CHECK_THROWS_AS((void)p.sigma_geq(0), Error);
    CHECK_THROWS_AS((void)p.sigma_geq(4), Error);
}

TEST_CASE("zero-sum freeness") {
    auto c6 = Group::make({6});
    CHECK(is_zero_sum_free(Sequence::parse(c6, "1^5")));
    CHECK(!is_zero_sum_free(Sequence::parse(c6, "1^6")));
    CHECK(!is_zero_sum_free(Sequence::parse(c6, "0,3")));

    auto c4 = Group::make({4});
    CHECK(!is_zero_sum_free(Sequence::parse(c4, "1,1,2")));
    CHECK(is_zero_sum_free(Sequence::empty(c4))); // vacuous convention
}

TEST_CASE("brute-force oracle base cases") {
    auto c4 = Group::make({4});
    SumsetProfile e = brute_force_profile(Sequence::empty(c4));
    CHECK(e.length() == 0);
    CHECK(e.at(0) == GroupSet::singleton(4, 0));

    Sequence s = Sequence::parse(c4, "0^2,1,1,2");
    SumsetProfile p = brute_force_profile(s);
    CHECK(p.at(4) == set_of(c4, {0, 2, 3})); // the five 4-subsequences sum to 2,3,0
    CHECK(profiles_equal(p, sumset_profile(s)));

    CHECK_THROWS_AS((void)brute_force_profile(Sequence::parse(c4, "1^21")), Error);
}

TEST_CASE("oracle equivalence on seeded random sequences") {
    std::mt19937_64 rng(424242);
    std::vector<GroupPtr> pool;
    for (const char* lit : {"2", "5", "9", "16", "2,2", "2,4", "3,3"})
        pool.push_back(Group::parse(lit));
    for (int trial = 0; trial < 400; ++trial) {
        const GroupPtr& g = pool[rng() % pool.size()];
        Sequence s = random_sequence(g, rng, 12);
        CHECK(profiles_equal(sumset_profile(s), brute_force_profile(s)));
    }
}

TEST_CASE("translation covariance: Sigma_k(g+S) = k g + Sigma_k(S)") {
    std::mt19937_64 rng(5150);
    for (const char* lit : {"7", "2,4", "3,3"}) {
        auto g = Group::parse(lit);
        for (int trial = 0; trial < 30; ++trial) {
            Sequence s = random_sequence(g, rng, 9);
            uint32_t t = static_cast<uint32_t>(rng() % g->order());
            SumsetProfile p = sumset_profile(s);
            SumsetProfile q = sumset_profile(s.translated(t));
            for (uint32_t k = 0; k <= s.length(); ++k)
                CHECK(q.at(k) == g->translate_set(p.at(k), g->scalar_mul(k, t)));
        }
    }
}

TEST_CASE("automorphism equivariance: Sigma_k(phi S) = phi Sigma_k(S)") {
    std::mt19937_64 rng(99);
    for (const char* lit : {"8", "2,4", "3,3"}) {
        auto g = Group::parse(lit);
        AutomorphismSet auts = automorphisms(*g);
        for (int trial = 0; trial < 12; ++trial) {
            Sequence s = random_sequence(g, rng, 8);
            const auto& map = auts.maps[rng() % auts.count()];
            std::vector<uint32_t> image_mult(g->order(), 0);
            for (uint32_t e = 0; e < g->order(); ++e) image_mult[map[e]] += s.multiplicity(e);
            SumsetProfile p = sumset_profile(s);
            SumsetProfile q = sumset_profile(Sequence(g, image_mult));
            for (uint32_t k = 0; k <= s.length(); ++k) {
                GroupSet mapped(g->order());
                p.at(k).for_each([&](uint32_t e) { mapped.set(map[e]); });
                CHECK(q.at(k) == mapped);
            }
        }
    }
}

TEST_CASE("monotone extension and tail recurrence") {
    std::mt19937_64 rng(31337);
    auto g = Group::parse("2,4");
    for (int trial = 0; trial < 40; ++trial) {
        Sequence s = random_sequence(g, rng, 9, 1);
        SumsetProfile p = sumset_profile(s);
        uint32_t extra = static_cast<uint32_t>(rng() % g->order());
        SumsetProfile bigger = sumset_profile(s.appending(extra));
        for (uint32_t k = 0; k <= s.length(); ++k)
            CHECK((p.at(k) & bigger.at(k)) == p.at(k)); // subset
        for (uint32_t k = 1; k < s.length(); ++k)
            CHECK(p.sigma_geq(k) == (p.at(k) | p.sigma_geq(k + 1)));
    }
}

TEST_CASE("superadditivity over disjoint subsequences of a zero-sum free S") {
    std::mt19937_64 rng(271828);
    for (const char* lit : {"11", "3,3", "2,4"}) {
        auto g = Group::parse(lit);
        int done = 0;
        while (done < 25) {
            Sequence s = random_sequence(g, rng, 7, 2);
            if (!is_zero_sum_free(s)) continue;
            ++done;
            // random split into t parts
            uint32_t t = 2 + static_cast<uint32_t>(rng() % 3);
            std::vector<std::vector<uint32_t>> parts(t, std::vector<uint32_t>(g->order(), 0));
            for (uint32_t e = 0; e < g->order(); ++e)
                for (uint32_t c = 0; c < s.multiplicity(e); ++c) ++parts[rng() % t][e];
            uint32_t sum = 0;
            for (const auto& m : parts) {
                Sequence part(g, m);
                if (part.length() > 0) sum += sigma_all(part).count();
            }
            CHECK(sigma_all(s).count() >= sum);
        }
    }
}

TEST_CASE("|Sigma(S)| >= |S| with equality only for constant sequences") {
    // exhaustive over small groups, all zero-sum free sequences up to length 5
    for (const char* lit : {"5", "6", "7", "2,4", "3,3"}) {
        auto g = Group::parse(lit);
        for (uint32_t len = 1; len <= 5; ++len) {
            EnumSpec spec{g, len, true, true, false, {}};
            enumerate_multisets(spec, [&](const std::vector<uint32_t>& mult,
                                          const GroupSet& sigma) {
                uint32_t card = sigma.count();
                CHECK(card >= len);
                uint32_t supp = 0, elem = 0;
                for (uint32_t e = 0; e < mult.size(); ++e)
                    if (mult[e]) {
                        ++supp;
                        elem = e;
                    }
                bool constant_long_order = supp == 1 && g->element_order(elem) >= len + 1;
                CHECK((card == len) == constant_long_order);
            });
        }
    }
}
