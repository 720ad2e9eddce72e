#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "subsum/subsum.h"

namespace {

struct Options {
    subsum_run_options o;
    Options() { subsum_run_options_default(&o); }
};

std::string json_of(subsum_report* rep) {
    char* text = nullptr;
    REQUIRE(subsum_report_to_json(rep, &text) == SUBSUM_OK);
    std::string out = text;
    subsum_string_free(text);
    return out;
}

} // namespace

TEST_CASE("group lifecycle and errors") {
    subsum_caps caps;
    subsum_caps_default(&caps);
    CHECK(caps.order_cap == 4096);

    subsum_group* g = nullptr;
    REQUIRE(subsum_group_parse("6,4", &caps, &g) == SUBSUM_OK);
    CHECK(subsum_group_order(g) == 24);
    CHECK(subsum_group_exponent(g) == 12);
    CHECK(subsum_group_rank(g) == 2);
    uint32_t moduli[2];
    REQUIRE(subsum_group_moduli(g, moduli, 2) == SUBSUM_OK);
    CHECK(moduli[0] == 2);
    CHECK(moduli[1] == 12);
    char* lit = nullptr;
    REQUIRE(subsum_group_literal(g, &lit) == SUBSUM_OK);
    CHECK(std::string(lit) == "2,12");
    subsum_string_free(lit);
    subsum_group_free(g);

    subsum_group* bad = nullptr;
    CHECK(subsum_group_parse("abc", &caps, &bad) == SUBSUM_ERR_PARSE);
    CHECK(std::string(subsum_last_error()).size() > 0);
    CHECK(subsum_group_parse("1,4", &caps, &bad) == SUBSUM_ERR_INVALID_ARGUMENT);
    CHECK(subsum_group_parse("4096,2", &caps, &bad) == SUBSUM_ERR_CAP_EXCEEDED);
}

TEST_CASE("elements and sequences through the C surface") {
    subsum_caps caps;
    subsum_caps_default(&caps);
    subsum_group* g = nullptr;
    REQUIRE(subsum_group_parse("2,4", &caps, &g) == SUBSUM_OK);

    uint32_t e = 0;
    REQUIRE(subsum_element_parse(g, "(1,2)", &e) == SUBSUM_OK);
    uint32_t ord = 0;
    REQUIRE(subsum_element_order(g, e, &ord) == SUBSUM_OK);
    CHECK(ord == 2);
    uint32_t sum = 0;
    REQUIRE(subsum_element_add(g, e, e, &sum) == SUBSUM_OK);
    CHECK(sum == 0);
    uint32_t neg = 0;
    REQUIRE(subsum_element_neg(g, e, &neg) == SUBSUM_OK);
    CHECK(neg == e);
    char* fmt = nullptr;
    REQUIRE(subsum_element_format(g, e, &fmt) == SUBSUM_OK);
    CHECK(std::string(fmt) == "(1,2)");
    subsum_string_free(fmt);

    subsum_sequence* s = nullptr;
    REQUIRE(subsum_sequence_parse(g, "(0,1)^3,(1,0)", &caps, &s) == SUBSUM_OK);
    CHECK(subsum_sequence_length(s) == 4);
    CHECK(subsum_sequence_support_size(s) == 2);
    CHECK(subsum_sequence_max_multiplicity(s) == 3);
    int zsf = 0;
    REQUIRE(subsum_sequence_is_zero_sum_free(s, &zsf) == SUBSUM_OK);
    CHECK(zsf == 1);

    uint32_t mask = 0;
    REQUIRE(subsum_classify_equality_form(s, &mask) == SUBSUM_OK);
    CHECK(mask == 0); // length-4 supp-2 sequence matching no form over C_2+C_4

    subsum_sequence_free(s);
    subsum_group_free(g);
}

TEST_CASE("profiles and the brute-force oracle agree") {
    subsum_caps caps;
    subsum_caps_default(&caps);
    subsum_group* g = nullptr;
    REQUIRE(subsum_group_parse("7", &caps, &g) == SUBSUM_OK);
    subsum_sequence* s = nullptr;
    REQUIRE(subsum_sequence_parse(g, "0^4,1^4,2,6", &caps, &s) == SUBSUM_OK);

    subsum_profile* p = nullptr;
    REQUIRE(subsum_profile_compute(s, &p) == SUBSUM_OK);
    subsum_profile* q = nullptr;
    REQUIRE(subsum_profile_brute_force(s, &caps, &q) == SUBSUM_OK);

    CHECK(subsum_profile_length(p) == 10);
    for (uint32_t k = 0; k <= 10; ++k) {
        uint32_t a = 0, b = 0;
        REQUIRE(subsum_profile_k_cardinality(p, k, &a) == SUBSUM_OK);
        REQUIRE(subsum_profile_k_cardinality(q, k, &b) == SUBSUM_OK);
        CHECK(a == b);
    }
    uint32_t card = 0;
    REQUIRE(subsum_profile_k_cardinality(p, 7, &card) == SUBSUM_OK);
    CHECK(card == 6);
    int has_zero = 1;
    REQUIRE(subsum_profile_k_contains(p, 7, 0, &has_zero) == SUBSUM_OK);
    CHECK(has_zero == 0);

    uint32_t buf[8];
    size_t count = 8;
    REQUIRE(subsum_profile_k_members(p, 7, buf, &count) == SUBSUM_OK);
    CHECK(count == 6);
    for (size_t i = 0; i < count; ++i) CHECK(buf[i] == i + 1);

    size_t too_small = 2;
    CHECK(subsum_profile_k_members(p, 7, buf, &too_small) == SUBSUM_ERR_INVALID_ARGUMENT);
    CHECK(too_small == 6); // reports the required size

    subsum_profile_free(p);
    subsum_profile_free(q);
    subsum_sequence_free(s);
    subsum_group_free(g);
}

TEST_CASE("verification runs and report accessors") {
    Options opt;
    opt.o.jobs = 2;
    subsum_report* rep = nullptr;
    REQUIRE(subsum_verify_egz(3, &opt.o, &rep) == SUBSUM_OK);
    CHECK(subsum_report_violation_count(rep) == 0);
    CHECK(subsum_report_instances_checked(rep) == 21);
    CHECK(subsum_report_elapsed_seconds(rep) >= 0.0);
    nlohmann::json doc = nlohmann::json::parse(json_of(rep));
    CHECK(doc["claim_id"] == "egz");
    CHECK(doc["verdict"] == "holds on checked domain");
    char* table = nullptr;
    REQUIRE(subsum_report_to_table(rep, &table) == SUBSUM_OK);
    CHECK(std::string(table).find("egz") != std::string::npos);
    subsum_string_free(table);
    subsum_report_free(rep);

    CHECK(subsum_verify_egz(9, &opt.o, &rep) == SUBSUM_ERR_BUDGET_EXCEEDED);
    CHECK(subsum_counterexample_check(6, &opt.o, &rep) == SUBSUM_ERR_INVALID_ARGUMENT);
    CHECK(subsum_check_lemmas("bogus", 5, &opt.o, &rep) == SUBSUM_ERR_UNKNOWN_CLAIM);
}

TEST_CASE("davenport and fgkr through the C surface") {
    subsum_caps caps;
    subsum_caps_default(&caps);
    subsum_group* g = nullptr;
    REQUIRE(subsum_group_parse("3,3", &caps, &g) == SUBSUM_OK);

    int64_t known = 0;
    int present = 0;
    REQUIRE(subsum_davenport_known(g, &known, &present) == SUBSUM_OK);
    CHECK(present == 1);
    CHECK(known == 5);

    Options opt;
    subsum_report* rep = nullptr;
    REQUIRE(subsum_davenport(g, &opt.o, &rep) == SUBSUM_OK);
    nlohmann::json doc = nlohmann::json::parse(json_of(rep));
    CHECK(doc["results"]["value"] == 5);
    subsum_report_free(rep);

    REQUIRE(subsum_fgkr(g, 9, 2, 1, &opt.o, &rep) == SUBSUM_OK);
    doc = nlohmann::json::parse(json_of(rep));
    CHECK(doc["results"]["value"] == 5);
    subsum_report_free(rep);
    subsum_group_free(g);
}

TEST_CASE("interrupt and resume through the progress callback") {
    const char* cp_path = "/tmp/subsum_capi_ckpt.json";
    std::remove(cp_path);

    subsum_caps caps;
    subsum_caps_default(&caps);
    subsum_group* g = nullptr;
    REQUIRE(subsum_group_parse("11", &caps, &g) == SUBSUM_OK);

    // uninterrupted baseline
    Options base;
    subsum_report* rep = nullptr;
    REQUIRE(subsum_davenport(g, &base.o, &rep) == SUBSUM_OK);
    std::string expected = json_of(rep);
    subsum_report_free(rep);

    // stop after 3 units, then resume from the checkpoint
    Options stop;
    stop.o.checkpoint_path = cp_path;
    stop.o.progress = [](void*, uint64_t done, uint64_t) -> int { return done < 3 ? 1 : 0; };
    rep = nullptr;
    CHECK(subsum_davenport(g, &stop.o, &rep) == SUBSUM_ERR_INTERRUPTED);

    Options resume;
    resume.o.checkpoint_path = cp_path;
    resume.o.jobs = 4;
    REQUIRE(subsum_davenport(g, &resume.o, &rep) == SUBSUM_OK);
    CHECK(json_of(rep) == expected);
    subsum_report_free(rep);
    subsum_group_free(g);
}

TEST_CASE("version string") {
    CHECK(std::string(subsum_version()).find('.') != std::string::npos);
}
