#include "subsum/subsum.h"

#include <cstring>
#include <string>

#include "core/enumeration.hpp"
#include "core/error.hpp"
#include "core/invariants.hpp"
#include "core/report.hpp"
#include "core/sequence.hpp"
#include "core/sumset.hpp"
#include "core/verifiers.hpp"

using namespace subsum;

struct subsum_group {
    GroupPtr g;
};
struct subsum_sequence {
    Sequence s;
};
struct subsum_profile {
    SumsetProfile p;
};
struct subsum_report {
    VerificationReport r;
};

namespace {

thread_local std::string t_last_error;

subsum_status status_of(ErrorCode c) {
    switch (c) {
    case ErrorCode::invalid_argument: return SUBSUM_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse_error: return SUBSUM_ERR_PARSE;
    case ErrorCode::cap_exceeded: return SUBSUM_ERR_CAP_EXCEEDED;
    case ErrorCode::budget_exceeded: return SUBSUM_ERR_BUDGET_EXCEEDED;
    case ErrorCode::unknown_claim: return SUBSUM_ERR_UNKNOWN_CLAIM;
    case ErrorCode::io_error: return SUBSUM_ERR_IO;
    case ErrorCode::checkpoint_mismatch: return SUBSUM_ERR_CHECKPOINT_MISMATCH;
    }
    return SUBSUM_ERR_INTERNAL;
}

template <typename F>
subsum_status guarded(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const Interrupted&) {
        t_last_error = "run interrupted";
        return SUBSUM_ERR_INTERRUPTED;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return SUBSUM_ERR_INTERNAL;
    }
}

Caps to_caps(const subsum_caps* c) {
    if (!c) return Caps{};
    Caps out;
    out.order_cap = c->order_cap;
    out.length_cap = c->length_cap;
    out.aut_order_cap = c->aut_order_cap;
    out.aut_count_cap = c->aut_count_cap;
    out.brute_force_cap = c->brute_force_cap;
    out.search_order_cap = c->search_order_cap;
    out.enum_budget = c->enum_budget;
    return out;
}

RunOptions to_options(const subsum_run_options* o) {
    RunOptions out;
    if (!o) return out;
    out.jobs = o->jobs ? o->jobs : 1;
    out.seed = o->seed;
    out.witness_cap = o->witness_cap;
    if (o->checkpoint_path) out.checkpoint_path = o->checkpoint_path;
    if (o->progress) {
        subsum_progress_fn fn = o->progress;
        void* user = o->progress_user;
        out.progress = [fn, user](uint64_t done, uint64_t total) {
            return fn(user, done, total) != 0;
        };
    }
    out.caps = to_caps(&o->caps);
    return out;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

subsum_status make_report(subsum_report** out, VerificationReport rep) {
    *out = new subsum_report{std::move(rep)};
    return SUBSUM_OK;
}

} // namespace

extern "C" {

const char* subsum_version(void) { return "1.0.0"; }

const char* subsum_last_error(void) { return t_last_error.c_str(); }

void subsum_string_free(char* s) { std::free(s); }

void subsum_caps_default(subsum_caps* caps) {
    Caps d;
    caps->order_cap = d.order_cap;
    caps->length_cap = d.length_cap;
    caps->aut_order_cap = d.aut_order_cap;
    caps->aut_count_cap = d.aut_count_cap;
    caps->brute_force_cap = d.brute_force_cap;
    caps->search_order_cap = d.search_order_cap;
    caps->enum_budget = d.enum_budget;
}

void subsum_run_options_default(subsum_run_options* opt) {
    RunOptions d;
    opt->jobs = d.jobs;
    opt->seed = d.seed;
    opt->witness_cap = d.witness_cap;
    opt->checkpoint_path = nullptr;
    opt->progress = nullptr;
    opt->progress_user = nullptr;
    subsum_caps_default(&opt->caps);
}

/* ---- groups ---- */

subsum_status subsum_group_parse(const char* literal, const subsum_caps* caps,
                                 subsum_group** out) {
    return guarded([&] {
        if (!literal || !out) {
            t_last_error = "null argument";
            return SUBSUM_ERR_INVALID_ARGUMENT;
        }
        *out = new subsum_group{Group::parse(literal, to_caps(caps).order_cap)};
        return SUBSUM_OK;
    });
}

subsum_status subsum_group_from_moduli(const uint64_t* moduli, size_t count,
                                       const subsum_caps* caps, subsum_group** out) {
    return guarded([&] {
        if (!moduli || !out) {
            t_last_error = "null argument";
            return SUBSUM_ERR_INVALID_ARGUMENT;
        }
        std::vector<uint64_t> m(moduli, moduli + count);
        *out = new subsum_group{Group::make(std::move(m), to_caps(caps).order_cap)};
        return SUBSUM_OK;
    });
}

void subsum_group_free(subsum_group* g) { delete g; }

uint32_t subsum_group_order(const subsum_group* g) { return g->g->order(); }
uint32_t subsum_group_exponent(const subsum_group* g) { return g->g->exponent(); }
uint32_t subsum_group_rank(const subsum_group* g) { return g->g->rank(); }

subsum_status subsum_group_moduli(const subsum_group* g, uint32_t* buf, size_t buflen) {
    return guarded([&] {
        const auto& m = g->g->moduli();
        if (buflen < m.size()) {
            t_last_error = "buffer too small";
            return SUBSUM_ERR_INVALID_ARGUMENT;
        }
        for (size_t i = 0; i < m.size(); ++i) buf[i] = m[i];
        return SUBSUM_OK;
    });
}

subsum_status subsum_group_literal(const subsum_group* g, char** out) {
    return guarded([&] {
        *out = dup_string(g->g->literal());
        return SUBSUM_OK;
    });
}

subsum_status subsum_element_parse(const subsum_group* g, const char* text, uint32_t* out) {
    return guarded([&] {
        *out = g->g->parse_element(text);
        return SUBSUM_OK;
    });
}

subsum_status subsum_element_format(const subsum_group* g, uint32_t e, char** out) {
    return guarded([&] {
        if (e >= g->g->order()) {
            t_last_error = "element index out of range";
            return SUBSUM_ERR_INVALID_ARGUMENT;
        }
        *out = dup_string(g->g->format_element(e));
        return SUBSUM_OK;
    });
}

subsum_status subsum_element_add(const subsum_group* g, uint32_t a, uint32_t b, uint32_t* out) {
    return guarded([&] {
        if (a >= g->g->order() || b >= g->g->order()) {
            t_last_error = "element index out of range";
            return SUBSUM_ERR_INVALID_ARGUMENT;
        }
        *out = g->g->add(a, b);
        return SUBSUM_OK;
    });
}

subsum_status subsum_element_neg(const subsum_group* g, uint32_t a, uint32_t* out) {
    return guarded([&] {
        if (a >= g->g->order()) {
            t_last_error = "element index out of range";
            return SUBSUM_ERR_INVALID_ARGUMENT;
        }
        *out = g->g->neg(a);
        return SUBSUM_OK;
    });
}

subsum_status subsum_element_order(const subsum_group* g, uint32_t a, uint32_t* out) {
    return guarded([&] {
        *out = g->g->element_order(a);
        return SUBSUM_OK;
    });
}

/* ---- sequences ---- */

subsum_status subsum_sequence_parse(const subsum_group* g, const char* literal,
                                    const subsum_caps* caps, subsum_sequence** out) {
    return guarded([&] {
        if (!literal || !out) {
            t_last_error = "null argument";
            return SUBSUM_ERR_INVALID_ARGUMENT;
        }
        *out = new subsum_sequence{Sequence::parse(g->g, literal, to_caps(caps).length_cap)};
        return SUBSUM_OK;
    });
}

void subsum_sequence_free(subsum_sequence* s) { delete s; }

uint32_t subsum_sequence_length(const subsum_sequence* s) { return s->s.length(); }
uint32_t subsum_sequence_sum(const subsum_sequence* s) { return s->s.sum(); }
uint32_t subsum_sequence_support_size(const subsum_sequence* s) { return s->s.support_size(); }
uint32_t subsum_sequence_max_multiplicity(const subsum_sequence* s) {
    return s->s.max_multiplicity();
}
uint32_t subsum_sequence_multiplicity(const subsum_sequence* s, uint32_t e) {
    return e < s->s.group()->order() ? s->s.multiplicity(e) : 0;
}

subsum_status subsum_sequence_literal(const subsum_sequence* s, char** out) {
    return guarded([&] {
        *out = dup_string(s->s.literal());
        return SUBSUM_OK;
    });
}

subsum_status subsum_sequence_is_zero_sum_free(const subsum_sequence* s, int* out) {
    return guarded([&] {
        *out = is_zero_sum_free(s->s) ? 1 : 0;
        return SUBSUM_OK;
    });
}

/* ---- profiles ---- */

subsum_status subsum_profile_compute(const subsum_sequence* s, subsum_profile** out) {
    return guarded([&] {
        *out = new subsum_profile{sumset_profile(s->s)};
        return SUBSUM_OK;
    });
}

subsum_status subsum_profile_brute_force(const subsum_sequence* s, const subsum_caps* caps,
                                         subsum_profile** out) {
    return guarded([&] {
        *out = new subsum_profile{brute_force_profile(s->s, to_caps(caps).brute_force_cap)};
        return SUBSUM_OK;
    });
}

void subsum_profile_free(subsum_profile* p) { delete p; }

uint32_t subsum_profile_length(const subsum_profile* p) { return p->p.length(); }

subsum_status subsum_profile_k_cardinality(const subsum_profile* p, uint32_t k, uint32_t* out) {
    return guarded([&] {
        if (k > p->p.length()) {
            t_last_error = "k out of range";
            return SUBSUM_ERR_INVALID_ARGUMENT;
        }
        *out = p->p.at(k).count();
        return SUBSUM_OK;
    });
}

subsum_status subsum_profile_k_contains(const subsum_profile* p, uint32_t k, uint32_t e,
                                        int* out) {
    return guarded([&] {
        if (k > p->p.length() || e >= p->p.at(k).universe()) {
            t_last_error = "index out of range";
            return SUBSUM_ERR_INVALID_ARGUMENT;
        }
        *out = p->p.at(k).test(e) ? 1 : 0;
        return SUBSUM_OK;
    });
}

subsum_status subsum_profile_k_members(const subsum_profile* p, uint32_t k, uint32_t* buf,
                                       size_t* count) {
    return guarded([&] {
        if (k > p->p.length()) {
            t_last_error = "k out of range";
            return SUBSUM_ERR_INVALID_ARGUMENT;
        }
        std::vector<uint32_t> members = p->p.at(k).elements();
        if (*count < members.size()) {
            *count = members.size();
            t_last_error = "buffer too small";
            return SUBSUM_ERR_INVALID_ARGUMENT;
        }
        for (size_t i = 0; i < members.size(); ++i) buf[i] = members[i];
        *count = members.size();
        return SUBSUM_OK;
    });
}

/* ---- runs ---- */

subsum_status subsum_verify_sigma_lower_bound(const subsum_group* g, uint32_t max_len,
                                              const subsum_run_options* opt,
                                              subsum_report** out) {
    return guarded([&] {
        return make_report(out, verify_sigma_lower_bound(g->g, max_len, to_options(opt)));
    });
}

subsum_status subsum_verify_equality_classification(const subsum_group* g, uint32_t max_len,
                                                    const subsum_run_options* opt,
                                                    subsum_report** out) {
    return guarded([&] {
        return make_report(out, verify_equality_classification(g->g, max_len, to_options(opt)));
    });
}

subsum_status subsum_verify_geqk_bound(const subsum_group* g, uint32_t max_len,
                                       const subsum_run_options* opt, subsum_report** out) {
    return guarded([&] {
        return make_report(out, verify_geqk_bound(g->g, max_len, to_options(opt)));
    });
}

subsum_status subsum_verify_sigma_n_bound(const subsum_group* g, uint32_t r_max,
                                          const char* mode, const subsum_run_options* opt,
                                          subsum_report** out) {
    return guarded([&] {
        std::string m = mode ? mode : "";
        SigmaNMode sm;
        if (m == "direct")
            sm = SigmaNMode::direct;
        else if (m == "reduced")
            sm = SigmaNMode::reduced;
        else {
            t_last_error = "mode must be 'direct' or 'reduced'";
            return SUBSUM_ERR_INVALID_ARGUMENT;
        }
        return make_report(out, verify_sigma_n_bound(g->g, r_max, sm, to_options(opt)));
    });
}

subsum_status subsum_counterexample_check(uint32_t n, const subsum_run_options* opt,
                                          subsum_report** out) {
    return guarded([&] { return make_report(out, counterexample_check(n, to_options(opt))); });
}

subsum_status subsum_check_lemmas(const char* lemmas, uint64_t trials,
                                  const subsum_run_options* opt, subsum_report** out) {
    return guarded([&] {
        std::set<std::string> ids;
        if (lemmas && *lemmas) {
            std::string cur;
            for (const char* p = lemmas;; ++p) {
                if (*p == ',' || *p == '\0') {
                    if (!cur.empty()) ids.insert(cur);
                    cur.clear();
                    if (*p == '\0') break;
                } else if (!std::isspace(static_cast<unsigned char>(*p))) {
                    cur.push_back(*p);
                }
            }
        }
        return make_report(out, check_lemmas(ids, trials, to_options(opt)));
    });
}

subsum_status subsum_verify_egz(uint32_t n, const subsum_run_options* opt, subsum_report** out) {
    return guarded([&] { return make_report(out, verify_egz(n, to_options(opt))); });
}

subsum_status subsum_verify_gao(const subsum_group* g, const subsum_run_options* opt,
                                subsum_report** out) {
    return guarded([&] { return make_report(out, verify_gao(g->g, to_options(opt))); });
}

subsum_status subsum_davenport(const subsum_group* g, const subsum_run_options* opt,
                               subsum_report** out) {
    return guarded([&] { return make_report(out, davenport_report(g->g, to_options(opt))); });
}

subsum_status subsum_davenport_known(const subsum_group* g, int64_t* value, int* present) {
    return guarded([&] {
        auto known = davenport_known(*g->g);
        *present = known.has_value() ? 1 : 0;
        if (known) *value = *known;
        return SUBSUM_OK;
    });
}

subsum_status subsum_fgkr(const subsum_group* g, uint32_t k, uint32_t r, int orbit_reduce,
                          const subsum_run_options* opt, subsum_report** out) {
    return guarded([&] {
        return make_report(out, fgkr_report(g->g, k, r, orbit_reduce != 0, to_options(opt)));
    });
}

subsum_status subsum_fgkr_closed_forms(const subsum_group* g, uint32_t r,
                                       const subsum_run_options* opt, subsum_report** out) {
    return guarded([&] {
        return make_report(out, fgkr_closed_form_check(g->g, r, to_options(opt)));
    });
}

subsum_status subsum_group_info(const subsum_group* g, const subsum_caps* caps,
                                subsum_report** out) {
    return guarded([&] { return make_report(out, group_info_report(g->g, to_caps(caps))); });
}

subsum_status subsum_sumset_report(const subsum_sequence* s, int64_t k, int64_t geq,
                                   subsum_report** out) {
    return guarded([&] {
        std::optional<uint32_t> ko, go;
        if (k >= 0) ko = static_cast<uint32_t>(k);
        if (geq >= 0) go = static_cast<uint32_t>(geq);
        return make_report(out, sumset_report(s->s, ko, go));
    });
}

subsum_status subsum_classify_equality_form(const subsum_sequence* s, uint32_t* mask) {
    return guarded([&] {
        std::set<FormId> forms = classify_equality_form(s->s);
        uint32_t m = 0;
        for (FormId f : forms) m |= 1u << (static_cast<int>(f) - 1);
        *mask = m;
        return SUBSUM_OK;
    });
}

/* ---- reports ---- */

void subsum_report_free(subsum_report* r) { delete r; }

uint64_t subsum_report_violation_count(const subsum_report* r) { return r->r.violations.size(); }

uint64_t subsum_report_instances_checked(const subsum_report* r) {
    return r->r.instances_checked;
}

double subsum_report_elapsed_seconds(const subsum_report* r) { return r->r.elapsed_seconds; }

subsum_status subsum_report_to_json(const subsum_report* r, char** out) {
    return guarded([&] {
        *out = dup_string(r->r.to_json().dump(2));
        return SUBSUM_OK;
    });
}

subsum_status subsum_report_to_table(const subsum_report* r, char** out) {
    return guarded([&] {
        *out = dup_string(r->r.to_table());
        return SUBSUM_OK;
    });
}

} // extern "C"
