// subsum command-line tool. Links the C API only; all computation lives in
// the shared library. One report document per invocation on stdout; progress
// and diagnostics on stderr.
//
// Exit status: 0 = claim holds / computation completed, 1 = violations
// found, 2 = usage, cap, or budget error, 130 = interrupted (checkpoint
// written when one was configured).

#include <csignal>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "subsum/subsum.h"

namespace {

volatile std::sig_atomic_t g_interrupted = 0;

void handle_sigint(int) { g_interrupted = 1; }

int progress_cb(void*, uint64_t, uint64_t) { return g_interrupted ? 0 : 1; }

struct CommonArgs {
    std::string group;
    std::string format = "json";
    std::string checkpoint;
    uint32_t jobs = 1;
    uint64_t seed = 1;
    uint32_t witnesses = 10;
};

uint64_t parse_env_u64(const char* name, const char* text) {
    try {
        size_t pos = 0;
        uint64_t v = std::stoull(text, &pos);
        if (pos != std::string(text).size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        std::cerr << "error: bad value for " << name << ": '" << text << "'\n";
        std::exit(2);
    }
}

void env_override_u32(const char* name, uint32_t& value) {
    if (const char* v = std::getenv(name)) value = static_cast<uint32_t>(parse_env_u64(name, v));
}

void env_override_u64(const char* name, uint64_t& value) {
    if (const char* v = std::getenv(name)) value = parse_env_u64(name, v);
}

subsum_caps caps_from_env() {
    subsum_caps caps;
    subsum_caps_default(&caps);
    env_override_u32("SUBSUM_CAP_ORDER", caps.order_cap);
    env_override_u32("SUBSUM_CAP_LENGTH", caps.length_cap);
    env_override_u32("SUBSUM_CAP_AUT_ORDER", caps.aut_order_cap);
    env_override_u64("SUBSUM_CAP_AUT_COUNT", caps.aut_count_cap);
    env_override_u32("SUBSUM_CAP_BRUTE_FORCE", caps.brute_force_cap);
    env_override_u32("SUBSUM_CAP_SEARCH_ORDER", caps.search_order_cap);
    env_override_u64("SUBSUM_CAP_ENUM_BUDGET", caps.enum_budget);
    return caps;
}

void add_caps_flags(CLI::App* cmd, subsum_caps& caps) {
    cmd->add_option("--cap-order", caps.order_cap, "max group order");
    cmd->add_option("--cap-length", caps.length_cap, "max sequence length");
    cmd->add_option("--cap-aut-order", caps.aut_order_cap,
                    "max order for non-cyclic automorphism enumeration");
    cmd->add_option("--cap-aut-count", caps.aut_count_cap, "max automorphism count");
    cmd->add_option("--cap-brute-force", caps.brute_force_cap, "max length for the 2^n oracle");
    cmd->add_option("--cap-search-order", caps.search_order_cap, "max order for davenport search");
    cmd->add_option("--cap-enum-budget", caps.enum_budget, "max projected enumeration size");
}

void add_common_flags(CLI::App* cmd, CommonArgs& args, bool with_group = true) {
    if (with_group)
        cmd->add_option("--group", args.group, "group moduli, e.g. 3,3 or 6,4")->required();
    cmd->add_option("--format", args.format, "output format: json|table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--jobs", args.jobs, "worker count")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args.seed, "seed for randomized checks");
    cmd->add_option("--witnesses", args.witnesses, "witness cap per search result");
    cmd->add_option("--checkpoint", args.checkpoint, "checkpoint file for resumable runs");
}

subsum_run_options make_options(const CommonArgs& args, const subsum_caps& caps) {
    subsum_run_options opt;
    subsum_run_options_default(&opt);
    opt.jobs = args.jobs;
    opt.seed = args.seed;
    opt.witness_cap = args.witnesses;
    opt.checkpoint_path = args.checkpoint.empty() ? nullptr : args.checkpoint.c_str();
    opt.progress = progress_cb;
    opt.caps = caps;
    return opt;
}

int fail(subsum_status st) {
    std::cerr << "error: " << subsum_last_error() << "\n";
    if (st == SUBSUM_ERR_INTERRUPTED) {
        std::cerr << "interrupted; resume with the same command and checkpoint\n";
        return 130;
    }
    return 2;
}

int emit_report(subsum_report* rep, const std::string& format) {
    char* text = nullptr;
    subsum_status st = format == "table" ? subsum_report_to_table(rep, &text)
                                         : subsum_report_to_json(rep, &text);
    if (st != SUBSUM_OK) {
        subsum_report_free(rep);
        return fail(st);
    }
    std::cout << text << (format == "table" ? "" : "\n");
    subsum_string_free(text);
    std::cerr << "elapsed: " << subsum_report_elapsed_seconds(rep) << "s, instances: "
              << subsum_report_instances_checked(rep) << "\n";
    int rc = subsum_report_violation_count(rep) > 0 ? 1 : 0;
    subsum_report_free(rep);
    return rc;
}

int parse_group(const std::string& literal, const subsum_caps& caps, subsum_group** out) {
    subsum_status st = subsum_group_parse(literal.c_str(), &caps, out);
    return st == SUBSUM_OK ? 0 : fail(st);
}

} // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_sigint);

    CLI::App app{"subsequence sums over finite abelian groups: sumset computation, "
                 "exhaustive theorem verification, and extremal search"};
    app.require_subcommand(1);
    subsum_caps caps = caps_from_env();

    int exit_code = 2;
    auto run = [&](auto&& fn) { return [&, fn]() { exit_code = fn(); }; };

    // ---- group info ----
    CLI::App* group_cmd = app.add_subcommand("group", "group structure commands");
    group_cmd->require_subcommand(1);
    CLI::App* info = group_cmd->add_subcommand("info", "normalized structure of a group");
    auto info_args = std::make_shared<CommonArgs>();
    add_common_flags(info, *info_args);
    add_caps_flags(info, caps);
    info->callback(run([&, info_args]() -> int {
        subsum_group* g = nullptr;
        if (int rc = parse_group(info_args->group, caps, &g)) return rc;
        subsum_report* rep = nullptr;
        subsum_status st = subsum_group_info(g, &caps, &rep);
        subsum_group_free(g);
        if (st != SUBSUM_OK) return fail(st);
        return emit_report(rep, info_args->format);
    }));

    // ---- sumset ----
    CLI::App* sumset = app.add_subcommand("sumset", "k-sum sets of a sequence");
    auto sumset_args = std::make_shared<CommonArgs>();
    auto seq_literal = std::make_shared<std::string>();
    auto k_opt = std::make_shared<int64_t>(-1);
    auto geq_opt = std::make_shared<int64_t>(-1);
    add_common_flags(sumset, *sumset_args);
    add_caps_flags(sumset, caps);
    sumset->add_option("--seq", *seq_literal, "sequence literal, e.g. 0^4,1^4,2,6")->required();
    sumset->add_option("--k", *k_opt, "emit Sigma_k for this k");
    sumset->add_option("--geq", *geq_opt, "emit Sigma_{>=ell} for this ell");
    sumset->callback(run([&, sumset_args, seq_literal, k_opt, geq_opt]() -> int {
        subsum_group* g = nullptr;
        if (int rc = parse_group(sumset_args->group, caps, &g)) return rc;
        subsum_sequence* s = nullptr;
        subsum_status st = subsum_sequence_parse(g, seq_literal->c_str(), &caps, &s);
        subsum_group_free(g);
        if (st != SUBSUM_OK) return fail(st);
        subsum_report* rep = nullptr;
        st = subsum_sumset_report(s, *k_opt, *geq_opt, &rep);
        subsum_sequence_free(s);
        if (st != SUBSUM_OK) return fail(st);
        return emit_report(rep, sumset_args->format);
    }));

    // ---- verify ----
    CLI::App* verify = app.add_subcommand("verify", "run a theorem or lemma check");
    verify->require_subcommand(1);

    auto add_group_claim = [&](const char* name, const char* desc, auto fn,
                               bool needs_max_len) {
        CLI::App* cmd = verify->add_subcommand(name, desc);
        auto args = std::make_shared<CommonArgs>();
        auto max_len = std::make_shared<uint32_t>(0);
        add_common_flags(cmd, *args);
        add_caps_flags(cmd, caps);
        if (needs_max_len)
            cmd->add_option("--max-len", *max_len, "maximum sequence length")->required();
        cmd->callback(run([&, args, max_len, fn]() -> int {
            subsum_group* g = nullptr;
            if (int rc = parse_group(args->group, caps, &g)) return rc;
            subsum_run_options opt = make_options(*args, caps);
            subsum_report* rep = nullptr;
            subsum_status st = fn(g, *max_len, &opt, &rep);
            subsum_group_free(g);
            if (st != SUBSUM_OK) return fail(st);
            return emit_report(rep, args->format);
        }));
    };

    add_group_claim("sigma-lower-bound",
                    "|Sigma(S)| >= |S|+|supp(S)|-1 over zero-sum free sequences",
                    [](subsum_group* g, uint32_t ml, const subsum_run_options* o,
                       subsum_report** r) { return subsum_verify_sigma_lower_bound(g, ml, o, r); },
                    true);
    add_group_claim("equality-classification",
                    "both directions of the equality-case classification",
                    [](subsum_group* g, uint32_t ml, const subsum_run_options* o,
                       subsum_report** r) {
                        return subsum_verify_equality_classification(g, ml, o, r);
                    },
                    true);
    add_group_claim("geqk-bound", "|Sigma_{>=k}(S)| >= |S|-k+|supp(S)|",
                    [](subsum_group* g, uint32_t ml, const subsum_run_options* o,
                       subsum_report** r) { return subsum_verify_geqk_bound(g, ml, o, r); },
                    true);
    add_group_claim("gao", "0 in Sigma_|G| for every sequence of length |G|+D(G)-1",
                    [](subsum_group* g, uint32_t, const subsum_run_options* o,
                       subsum_report** r) { return subsum_verify_gao(g, o, r); },
                    false);

    {
        CLI::App* cmd = verify->add_subcommand("sigma-n-bound",
                                               "|Sigma_n(S)| >= r+|supp(S)|-1 at |S| = n+r");
        auto args = std::make_shared<CommonArgs>();
        auto r_max = std::make_shared<uint32_t>(1);
        auto mode = std::make_shared<std::string>("reduced");
        add_common_flags(cmd, *args);
        add_caps_flags(cmd, caps);
        cmd->add_option("--r-max", *r_max, "largest r to check")->required();
        cmd->add_option("--mode", *mode, "direct|reduced")
            ->check(CLI::IsMember({"direct", "reduced"}));
        cmd->callback(run([&, args, r_max, mode]() -> int {
            subsum_group* g = nullptr;
            if (int rc = parse_group(args->group, caps, &g)) return rc;
            subsum_run_options opt = make_options(*args, caps);
            subsum_report* rep = nullptr;
            subsum_status st = subsum_verify_sigma_n_bound(g, *r_max, mode->c_str(), &opt, &rep);
            subsum_group_free(g);
            if (st != SUBSUM_OK) return fail(st);
            return emit_report(rep, args->format);
        }));
    }

    {
        CLI::App* cmd = verify->add_subcommand(
            "counterexample", "the 0^(n-3).g^(n-3).(2g).((n-1)g) construction over C_n");
        auto args = std::make_shared<CommonArgs>();
        auto n = std::make_shared<uint32_t>(7);
        add_common_flags(cmd, *args, false);
        add_caps_flags(cmd, caps);
        cmd->add_option("--n", *n, "odd n >= 7")->required();
        cmd->callback(run([&, args, n]() -> int {
            subsum_run_options opt = make_options(*args, caps);
            subsum_report* rep = nullptr;
            subsum_status st = subsum_counterexample_check(*n, &opt, &rep);
            if (st != SUBSUM_OK) return fail(st);
            return emit_report(rep, args->format);
        }));
    }

    {
        CLI::App* cmd = verify->add_subcommand("egz", "0 in Sigma_n at length 2n-1 over C_n");
        auto args = std::make_shared<CommonArgs>();
        auto n = std::make_shared<uint32_t>(3);
        add_common_flags(cmd, *args, false);
        add_caps_flags(cmd, caps);
        cmd->add_option("--n", *n, "cyclic group order, n <= 7")->required();
        cmd->callback(run([&, args, n]() -> int {
            subsum_run_options opt = make_options(*args, caps);
            subsum_report* rep = nullptr;
            subsum_status st = subsum_verify_egz(*n, &opt, &rep);
            if (st != SUBSUM_OK) return fail(st);
            return emit_report(rep, args->format);
        }));
    }

    {
        CLI::App* cmd = verify->add_subcommand("lemmas", "auxiliary lemma property suites");
        auto args = std::make_shared<CommonArgs>();
        auto lemmas = std::make_shared<std::string>();
        auto trials = std::make_shared<uint64_t>(1000);
        add_common_flags(cmd, *args, false);
        add_caps_flags(cmd, caps);
        cmd->add_option("--lemma", *lemmas,
                        "comma-separated ids: pixton,olson,c2sum,reduction,subsets (default all)");
        cmd->add_option("--trials", *trials, "trials per randomized lemma");
        cmd->callback(run([&, args, lemmas, trials]() -> int {
            subsum_run_options opt = make_options(*args, caps);
            subsum_report* rep = nullptr;
            subsum_status st = subsum_check_lemmas(lemmas->c_str(), *trials, &opt, &rep);
            if (st != SUBSUM_OK) return fail(st);
            return emit_report(rep, args->format);
        }));
    }

    {
        CLI::App* cmd = verify->add_subcommand("fgkr-closed-forms",
                                               "f_{G,|G|}(r) against the published closed forms");
        auto args = std::make_shared<CommonArgs>();
        auto r = std::make_shared<uint32_t>(1);
        add_common_flags(cmd, *args);
        add_caps_flags(cmd, caps);
        cmd->add_option("--r", *r, "value of r")->required();
        cmd->callback(run([&, args, r]() -> int {
            subsum_group* g = nullptr;
            if (int rc = parse_group(args->group, caps, &g)) return rc;
            subsum_run_options opt = make_options(*args, caps);
            subsum_report* rep = nullptr;
            subsum_status st = subsum_fgkr_closed_forms(g, *r, &opt, &rep);
            subsum_group_free(g);
            if (st != SUBSUM_OK) return fail(st);
            return emit_report(rep, args->format);
        }));
    }

    // ---- davenport ----
    {
        CLI::App* cmd = app.add_subcommand("davenport", "Davenport constant by pruned search");
        auto args = std::make_shared<CommonArgs>();
        add_common_flags(cmd, *args);
        add_caps_flags(cmd, caps);
        cmd->callback(run([&, args]() -> int {
            subsum_group* g = nullptr;
            if (int rc = parse_group(args->group, caps, &g)) return rc;
            subsum_run_options opt = make_options(*args, caps);
            subsum_report* rep = nullptr;
            subsum_status st = subsum_davenport(g, &opt, &rep);
            subsum_group_free(g);
            if (st != SUBSUM_OK) return fail(st);
            return emit_report(rep, args->format);
        }));
    }

    // ---- fgkr ----
    {
        CLI::App* cmd = app.add_subcommand("fgkr", "f_{G,k}(r) by exhaustive minimization");
        auto args = std::make_shared<CommonArgs>();
        auto k = std::make_shared<uint32_t>(1);
        auto r = std::make_shared<uint32_t>(1);
        auto no_orbit = std::make_shared<bool>(false);
        add_common_flags(cmd, *args);
        add_caps_flags(cmd, caps);
        cmd->add_option("--k", *k, "subsequence length k")->required();
        cmd->add_option("--r", *r, "value of r")->required();
        cmd->add_flag("--no-orbit-reduce", *no_orbit, "disable automorphism-orbit reduction");
        cmd->callback(run([&, args, k, r, no_orbit]() -> int {
            subsum_group* g = nullptr;
            if (int rc = parse_group(args->group, caps, &g)) return rc;
            subsum_run_options opt = make_options(*args, caps);
            subsum_report* rep = nullptr;
            subsum_status st = subsum_fgkr(g, *k, *r, *no_orbit ? 0 : 1, &opt, &rep);
            subsum_group_free(g);
            if (st != SUBSUM_OK) return fail(st);
            return emit_report(rep, args->format);
        }));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // --help exits 0; any usage error is 2
    }
    return exit_code;
}
