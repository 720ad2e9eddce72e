#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "core/enumeration.hpp"
#include "core/error.hpp"
#include "core/invariants.hpp"
#include "core/sumset.hpp"

using namespace subsum;

namespace {

RunOptions opts(uint32_t jobs = 2) {
    RunOptions o;
    o.jobs = jobs;
    return o;
}

} // namespace

TEST_CASE("davenport constants by search") {
    CHECK(*davenport_constant(Group::make({6}), opts()).value == 6);
    CHECK(*davenport_constant(Group::parse("2,2"), opts()).value == 3);
    CHECK(*davenport_constant(Group::parse("3,3"), opts()).value == 5);
    CHECK(*davenport_constant(Group::parse("2,2,2"), opts()).value == 4);
    CHECK(*davenport_constant(Group::make({2}), opts()).value == 2);
}

TEST_CASE("davenport literature oracle") {
    CHECK(*davenport_known(*Group::make({7})) == 7);
    CHECK(*davenport_known(*Group::parse("2,6")) == 7);
    CHECK(!davenport_known(*Group::parse("2,2,2")).has_value());

    // search agrees with the oracle wherever it is defined
    for (const char* lit : {"7", "10", "2,6", "3,6", "2,4"}) {
        auto g = Group::parse(lit);
        CHECK(*davenport_constant(g, opts()).value == *davenport_known(*g));
    }
}

TEST_CASE("davenport witness soundness") {
    auto g = Group::parse("3,6");
    SearchResult res = davenport_constant(g, opts());
    CHECK(*res.value == 8);
    CHECK(!res.witnesses.empty());
    for (const std::string& lit : res.witnesses) {
        Sequence w = Sequence::parse(g, lit);
        CHECK(w.length() == *res.value - 1);
        CHECK(is_zero_sum_free(w));
        // every single-element extension closes a zero sum
        for (uint32_t e = 0; e < g->order(); ++e)
            CHECK(!is_zero_sum_free(w.appending(e)));
    }
    CHECK_THROWS_AS((void)davenport_constant(Group::make({64}), opts()), Error);
}

TEST_CASE("f_gkr reproduces the known closed-form values") {
    CHECK(*f_gkr(Group::make({5}), 5, 1, true, opts()).value == 2);
    CHECK(*f_gkr(Group::parse("3,3"), 9, 2, true, opts()).value == 5);
}

TEST_CASE("f_gkr is invariant under orbit reduction") {
    for (const char* lit : {"5", "2,4"}) {
        auto g = Group::parse(lit);
        uint32_t k = g->order();
        SearchResult with = f_gkr(g, k, 2, true, opts());
        SearchResult without = f_gkr(g, k, 2, false, opts());
        CHECK(*with.value == *without.value);
        CHECK(with.sequences_examined < without.sequences_examined);
        // orbit witnesses are canonical members of the raw witness orbits
        AutomorphismSet auts = automorphisms(*g);
        for (const std::string& lit2 : with.witnesses) {
            Sequence s = Sequence::parse(g, lit2);
            CHECK(is_orbit_min(s.mult(), auts));
        }
    }
}

TEST_CASE("f_gkr witnesses qualify and attain the minimum") {
    auto g = Group::parse("2,4");
    SearchResult res = f_gkr(g, 8, 2, true, opts());
    CHECK(*res.value == 3); // attained by 0^7.g^3 with ord(g) = 4
    for (const std::string& lit : res.witnesses) {
        Sequence s = Sequence::parse(g, lit);
        CHECK(s.length() == 10);
        SumsetProfile prof = sumset_profile(s);
        CHECK(!prof.at(8).test(0));
        CHECK(prof.at(8).count() == 3);
        // Bollobas-Leader bound r+1 and the support bound r+|supp|-1
        CHECK(prof.at(8).count() >= 2 + 1);
        CHECK(prof.at(8).count() >= 2 + s.support_size() - 1);
    }
    // r = 3 pushes the minimum to |G|-1 (every qualifying profile fills G\{0})
    CHECK(*f_gkr(g, 8, 3, true, opts()).value == 7);

    // the predicted witness shape, checked through the independent oracle
    Sequence w = Sequence::parse(g, "(0,0)^7,(0,1)^3");
    SumsetProfile oracle = brute_force_profile(w);
    CHECK(!oracle.at(8).test(0));
    CHECK(oracle.at(8).count() == 3);
}

TEST_CASE("f_gkr empty domain") {
    // k = n, r = D-1 = n-1: EGZ forces 0 in Sigma_n at length 2n-1
    SearchResult res = f_gkr(Group::make({3}), 3, 2, true, opts());
    CHECK(!res.value.has_value());
    CHECK(res.sequences_examined > 0);
}

TEST_CASE("f_gkr argument checks") {
    auto g = Group::make({5});
    CHECK_THROWS_AS((void)f_gkr(g, 0, 1, true, opts()), Error);
    CHECK_THROWS_AS((void)f_gkr(g, 5, 0, true, opts()), Error);
    CHECK_THROWS_AS((void)f_gkr(g, 60, 10, true, opts()), Error); // length cap
}

TEST_CASE("closed-form regimes that are consistent") {
    // cyclic: f = r+1 for r <= exp-2
    for (uint32_t r = 1; r <= 3; ++r) {
        auto rep = fgkr_closed_form_check(Group::make({5}), r, opts());
        CHECK(rep.holds());
        CHECK(rep.results["f_search"] == r + 1);
        CHECK(rep.results["consequent_holds_on_witnesses"] == true);
    }
    // C_3+C_3 at r = 3: regimes 2 and 3 agree on (r-p+3)p-1 = 8
    auto rep = fgkr_closed_form_check(Group::parse("3,3"), 3, opts());
    CHECK(rep.holds());
    CHECK(rep.results["f_search"] == 8);
}

TEST_CASE("closed-form regime conflict on C_2+C_4") {
    // r = 2 sits in two stated regimes whose predictions differ (3 vs 11);
    // the search settles it at 3, so the second closed form is violated
    auto rep = fgkr_closed_form_check(Group::parse("2,4"), 2, opts());
    CHECK(!rep.holds());
    CHECK(rep.results["f_search"] == 3);
    bool flagged = false;
    for (const auto& v : rep.violations)
        if (v.details.find("11") != std::string::npos) flagged = true;
    CHECK(flagged);
}

TEST_CASE("closed forms outside every regime") {
    CHECK_THROWS_AS((void)fgkr_closed_form_check(Group::make({5}), 4, opts()), Error);
}

TEST_CASE("searches are deterministic across worker counts") {
    auto a = fgkr_report(Group::parse("3,3"), 9, 2, true, opts(1));
    auto b = fgkr_report(Group::parse("3,3"), 9, 2, true, opts(8));
    CHECK(a.to_json().dump(2) == b.to_json().dump(2));

    auto c = davenport_report(Group::make({11}), opts(1));
    auto d = davenport_report(Group::make({11}), opts(8));
    CHECK(c.to_json().dump(2) == d.to_json().dump(2));
}

TEST_CASE("witness cap is honored") {
    RunOptions o = opts();
    o.witness_cap = 3;
    SearchResult res = davenport_constant(Group::make({9}), o);
    CHECK(res.witnesses.size() <= 3);
    CHECK(*res.value == 9);
}
