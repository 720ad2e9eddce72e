#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(SUBSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("group info normalizes the literal") {
    RunResult r = run_cli("group info --group 6,4");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["group"] == "2,12");
    CHECK(doc["results"]["order"] == 24);
    CHECK(doc["results"]["exponent"] == 12);
}

TEST_CASE("sumset subcommand reproduces the k-sum example") {
    RunResult r = run_cli("sumset --group 7 --seq 0^4,1^4,2,6 --k 7");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["results"]["sigma_k"] == json::array({"1", "2", "3", "4", "5", "6"}));
    CHECK(doc["results"]["zero_sum_free"] == false);
}

TEST_CASE("verify counterexample exits zero and reports n-1 sums") {
    RunResult r = run_cli("verify counterexample --n 7 --format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["results"]["sigma_n_cardinality"] == 6);
    CHECK(doc["verdict"] == "holds on checked domain");
}

TEST_CASE("violations map to exit status 1") {
    // the published closed form for C_2+C_4 at r=2 disagrees with the search
    RunResult r = run_cli("verify fgkr-closed-forms --group 2,4 --r 2");
    CHECK(r.exit_code == 1);
    json doc = json::parse(r.out);
    CHECK(doc["verdict"] == "violations found");
}

TEST_CASE("usage and budget errors map to exit status 2") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("verify egz").exit_code == 2);               // missing --n
    CHECK(run_cli("verify egz --n 9").exit_code == 2);         // over the cap
    CHECK(run_cli("davenport --group 0").exit_code == 2);      // bad modulus
    CHECK(run_cli("sumset --group 7 --seq 'x'").exit_code == 2);
    CHECK(run_cli("fgkr --group 5 --k 5 --r 1 --format yaml").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("environment variables override caps") {
    RunResult r = run_cli("verify egz --n 5", "SUBSUM_CAP_ENUM_BUDGET=10");
    CHECK(r.exit_code == 2);
    RunResult ok = run_cli("verify egz --n 5", "SUBSUM_CAP_ENUM_BUDGET=100000");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("reports are byte-identical across --jobs") {
    RunResult a = run_cli("verify counterexample --n 9 --jobs 1");
    RunResult b = run_cli("verify counterexample --n 9 --jobs 8");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult c = run_cli("fgkr --group 3,3 --k 9 --r 2 --jobs 1");
    RunResult d = run_cli("fgkr --group 3,3 --k 9 --r 2 --jobs 8");
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);

    RunResult e = run_cli("verify lemmas --trials 500 --seed 7 --jobs 1");
    RunResult f = run_cli("verify lemmas --trials 500 --seed 7 --jobs 8");
    CHECK(e.exit_code == 0);
    CHECK(e.out == f.out);
}

TEST_CASE("emitted JSON re-serializes to itself") {
    for (const char* cmd : {"group info --group 3,3", "davenport --group 2,6",
                            "verify gao --group 2,2", "fgkr --group 5 --k 5 --r 2"}) {
        RunResult r = run_cli(cmd);
        CHECK(r.exit_code == 0);
        std::string text = r.out;
        if (!text.empty() && text.back() == '\n') text.pop_back();
        CHECK(json::parse(text).dump(2) == text);
    }
}

TEST_CASE("table format renders") {
    RunResult r = run_cli("davenport --group 3,3 --format table");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("davenport") != std::string::npos);
    CHECK(r.out.find("claim") != std::string::npos);
    CHECK(json::accept(r.out) == false);
}

TEST_CASE("checkpointed run completes and cleans up") {
    const char* cp = "/tmp/subsum_cli_ckpt.json";
    std::remove(cp);
    RunResult r = run_cli(std::string("fgkr --group 2,4 --k 8 --r 2 --checkpoint ") + cp);
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["results"]["value"] == 3);
    FILE* f = fopen(cp, "r");
    CHECK(f == nullptr); // removed after completion
    if (f) fclose(f);
}

TEST_CASE("seed changes randomized reports, fixed seed reproduces them") {
    RunResult a = run_cli("verify lemmas --lemma pixton --trials 50 --seed 5");
    RunResult b = run_cli("verify lemmas --lemma pixton --trials 50 --seed 5");
    RunResult c = run_cli("verify lemmas --lemma pixton --trials 50 --seed 6");
    CHECK(a.out == b.out);
    json da = json::parse(a.out), dc = json::parse(c.out);
    CHECK(da["seed"] == 5);
    CHECK(dc["seed"] == 6);
}
