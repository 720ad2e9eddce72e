#include "core/verifiers.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "core/enumeration.hpp"
#include "core/error.hpp"
#include "core/invariants.hpp"
#include "core/sumset.hpp"

namespace subsum {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t mix_seed(uint64_t seed, uint64_t stream, uint64_t index) {
    return splitmix64(splitmix64(seed ^ (stream * 0x9e3779b97f4a7c15ULL)) + index);
}

constexpr uint32_t kFanout = 64;

nlohmann::json empty_partial() {
    return nlohmann::json{{"checked", 0},
                          {"violations", nlohmann::json::array()},
                          {"witnesses", nlohmann::json::array()}};
}

void merge_basic(nlohmann::json& acc, const nlohmann::json& p) {
    acc["checked"] = acc["checked"].get<uint64_t>() + p["checked"].get<uint64_t>();
    for (const auto& v : p["violations"]) acc["violations"].push_back(v);
    for (const auto& w : p["witnesses"]) acc["witnesses"].push_back(w);
}

void add_violation(nlohmann::json& partial, const std::string& seq, const std::string& details) {
    partial["violations"].push_back({{"sequence", seq}, {"details", details}});
}

void fill_from_acc(VerificationReport& rep, const nlohmann::json& acc) {
    rep.instances_checked = acc["checked"].get<uint64_t>();
    for (const auto& v : acc["violations"])
        rep.violations.push_back({v["sequence"].get<std::string>(), v["details"].get<std::string>()});
    for (const auto& w : acc["witnesses"]) rep.equality_witnesses.push_back(w.get<std::string>());
}

// Shards a multi-length enumeration into ordered work units.
std::vector<EnumSpec> length_sharded_units(const GroupPtr& g, const std::vector<uint32_t>& lengths,
                                           bool exclude_zero, bool zsf_only) {
    std::vector<EnumSpec> units;
    for (uint32_t len : lengths) {
        EnumSpec base{g, len, exclude_zero, zsf_only, false, {}};
        for (EnumSpec& s : shard_prefixes(base, kFanout)) units.push_back(std::move(s));
    }
    return units;
}

void check_enum_budget(const Group& g, const std::vector<uint32_t>& lengths, bool exclude_zero,
                       const Caps& caps) {
    uint64_t total = 0;
    uint64_t alphabet = g.order() - (exclude_zero ? 1 : 0);
    for (uint32_t len : lengths) {
        uint64_t c = multiset_count(alphabet, len);
        total = c > UINT64_MAX - total ? UINT64_MAX : total + c;
    }
    if (total > caps.enum_budget)
        throw Error(ErrorCode::budget_exceeded,
                    "projected enumeration of " + std::to_string(total) +
                        " multisets exceeds budget " + std::to_string(caps.enum_budget));
}

uint32_t support_size_of(const std::vector<uint32_t>& mult) {
    uint32_t c = 0;
    for (uint32_t m : mult)
        if (m) ++c;
    return c;
}

std::string mult_literal(const Group& g, const std::vector<uint32_t>& mult) {
    std::string out;
    bool first = true;
    for (uint32_t e = 0; e < mult.size(); ++e) {
        if (!mult[e]) continue;
        if (!first) out.push_back(',');
        first = false;
        out += g.format_element(e);
        if (mult[e] > 1) {
            out.push_back('^');
            out += std::to_string(mult[e]);
        }
    }
    return out;
}

RunOptions inner_options(const RunOptions& opt) {
    RunOptions o = opt;
    o.checkpoint_path.clear();
    o.progress = nullptr;
    return o;
}

} // namespace

// ---------------------------------------------------------------------------
// Theorem: |Sigma(S)| >= |S| + |supp(S)| - 1 for zero-sum free S
// ---------------------------------------------------------------------------

VerificationReport verify_sigma_lower_bound(GroupPtr g, uint32_t max_len, const RunOptions& opt) {
    auto t0 = Clock::now();
    if (max_len < 1)
        throw Error(ErrorCode::invalid_argument, "max_len must be >= 1");
    std::vector<uint32_t> lengths;
    for (uint32_t l = 1; l <= max_len; ++l) lengths.push_back(l);
    check_enum_budget(*g, lengths, true, opt.caps);

    AutomorphismSet auts = automorphisms(*g, opt.caps);
    std::vector<EnumSpec> units = length_sharded_units(g, lengths, true, true);

    auto run_unit = [&](uint64_t idx) {
        nlohmann::json partial = empty_partial();
        EnumSpec spec = units[idx];
        spec.orbit_reduce = true;
        uint64_t checked = 0;
        enumerate_multisets(spec, [&](const std::vector<uint32_t>& mult, const GroupSet& sigma) {
            ++checked;
            uint32_t card = sigma.count();
            uint32_t supp = support_size_of(mult);
            uint32_t bound = spec.length + supp - 1;
            if (card < bound)
                add_violation(partial, mult_literal(*g, mult),
                              "|Sigma(S)|=" + std::to_string(card) + " < |S|+|supp(S)|-1=" +
                                  std::to_string(bound));
            else if (card == bound)
                partial["witnesses"].push_back(mult_literal(*g, mult));
        }, &auts);
        partial["checked"] = checked;
        return partial;
    };

    std::string fp = "sigma-lower-bound|" + g->literal() + "|max_len=" + std::to_string(max_len);
    nlohmann::json acc = run_units(opt, fp, units.size(), run_unit, merge_basic, empty_partial());

    VerificationReport rep;
    rep.claim_id = "sigma-lower-bound";
    rep.group_literal = g->literal();
    rep.parameters["max_len"] = max_len;
    fill_from_acc(rep, acc);
    rep.results["equality_witness_count"] = rep.equality_witnesses.size();
    rep.verified_domain = "all zero-sum free sequences over C_" + g->literal() +
                          " of length 1.." + std::to_string(max_len) + ", orbit-reduced";
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// Equality classification
// ---------------------------------------------------------------------------

std::set<FormId> classify_equality_form(const Sequence& s) {
    if (s.length() < 1)
        throw Error(ErrorCode::invalid_argument, "cannot classify the empty sequence");
    if (!is_zero_sum_free(s))
        throw Error(ErrorCode::invalid_argument, "sequence is not zero-sum free");

    const Group& g = *s.group();
    uint32_t len = s.length();
    std::vector<uint32_t> supp = s.support().elements();
    std::set<FormId> forms;

    if (supp.size() == 1) {
        uint32_t e = supp[0];
        if (e != 0 && g.element_order(e) >= len + 1) forms.insert(FormId::form1);
    }

    if (len == 2 && supp.size() == 2) {
        if (supp[0] != 0 && supp[1] != 0) forms.insert(FormId::form2);
    }

    if (len >= 3 && supp.size() == 2) {
        for (int swap = 0; swap < 2; ++swap) {
            uint32_t base = supp[swap ? 1 : 0];
            uint32_t other = supp[swap ? 0 : 1];
            if (s.multiplicity(base) == len - 1 && s.multiplicity(other) == 1 &&
                other == g.add(base, base) && base != 0 && g.element_order(base) >= len + 2)
                forms.insert(FormId::form3);
        }
    }

    if (len == 3 && supp.size() == 3) {
        for (uint32_t i = 0; i < 3; ++i) {
            for (uint32_t j = 0; j < 3; ++j) {
                if (i == j) continue;
                uint32_t g1 = supp[i], g2 = supp[j], g3 = supp[3 - i - j];
                if (g.add(g1, g2) != g3) continue;
                if (g1 == 0 || g2 == 0) continue;
                if (g.add(g1, g1) == 0) continue;
                if (g.add(g2, g2) != 0) continue;
                if (g.add(g.add(g1, g1), g2) == 0) continue;
                forms.insert(FormId::form4);
            }
        }
    }
    return forms;
}

namespace {

// All sequences of forms (1)-(4) over g with length <= max_len, keyed by
// canonical (orbit-minimal) multiplicity vector.
std::map<std::vector<uint32_t>, std::set<FormId>> generate_forms(const Group& g,
                                                                 const AutomorphismSet& auts,
                                                                 uint32_t max_len) {
    std::map<std::vector<uint32_t>, std::set<FormId>> out;
    uint32_t n = g.order();
    auto insert = [&](std::vector<uint32_t> mult, FormId f) {
        out[orbit_canonical(mult, auts)].insert(f);
    };

    for (uint32_t e = 1; e < n; ++e) {
        uint32_t ord = g.element_order(e);
        // form1: g^L with ord(g) >= L+1
        for (uint32_t len = 1; len <= std::min(max_len, ord - 1); ++len) {
            std::vector<uint32_t> mult(n, 0);
            mult[e] = len;
            insert(std::move(mult), FormId::form1);
        }
        // form3: g^(L-1).(2g) with L >= 3 and ord(g) >= L+2
        if (ord >= 5) {
            uint32_t twice = g.add(e, e);
            for (uint32_t len = 3; len <= std::min(max_len, ord - 2); ++len) {
                std::vector<uint32_t> mult(n, 0);
                mult[e] = len - 1;
                mult[twice] += 1;
                insert(std::move(mult), FormId::form3);
            }
        }
    }

    if (max_len >= 2) {
        // form2: two distinct nonzero elements
        for (uint32_t a = 1; a < n; ++a) {
            for (uint32_t b = a + 1; b < n; ++b) {
                std::vector<uint32_t> mult(n, 0);
                mult[a] = 1;
                mult[b] = 1;
                insert(std::move(mult), FormId::form2);
            }
        }
    }

    if (max_len >= 3) {
        // form4: g1.g2.(g1+g2) with 2g1 != 0, 2g2 = 0, 2g1+g2 != 0
        for (uint32_t g1 = 1; g1 < n; ++g1) {
            if (g.add(g1, g1) == 0) continue;
            for (uint32_t g2 = 1; g2 < n; ++g2) {
                if (g.add(g2, g2) != 0) continue;
                if (g.add(g.add(g1, g1), g2) == 0) continue;
                std::vector<uint32_t> mult(n, 0);
                mult[g1] += 1;
                mult[g2] += 1;
                mult[g.add(g1, g2)] += 1;
                insert(std::move(mult), FormId::form4);
            }
        }
    }
    return out;
}

} // namespace

VerificationReport verify_equality_classification(GroupPtr g, uint32_t max_len,
                                                  const RunOptions& opt) {
    auto t0 = Clock::now();
    VerificationReport base = verify_sigma_lower_bound(g, max_len, inner_options(opt));

    VerificationReport rep;
    rep.claim_id = "equality-classification";
    rep.group_literal = g->literal();
    rep.parameters["max_len"] = max_len;
    rep.violations = base.violations; // bound violations would break both directions
    rep.instances_checked = base.instances_checked;

    AutomorphismSet auts = automorphisms(*g, opt.caps);

    // forward: every equality witness classifies into exactly one form
    std::set<std::vector<uint32_t>> witness_set;
    std::map<int, uint64_t> per_form;
    uint64_t multi_form = 0;
    for (const std::string& lit : base.equality_witnesses) {
        Sequence s = Sequence::parse(g, lit, opt.caps.length_cap);
        witness_set.insert(s.mult());
        std::set<FormId> forms = classify_equality_form(s);
        if (forms.size() != 1) {
            ++multi_form;
            rep.violations.push_back(
                {lit, "equality witness matches " + std::to_string(forms.size()) +
                          " forms; expected exactly one"});
        }
        for (FormId f : forms) ++per_form[static_cast<int>(f)];
    }

    // reverse: every form instance is zero-sum free (form 2 aside) and
    // attains equality; the witness set and the form set must coincide
    auto generated = generate_forms(*g, auts, max_len);
    std::set<std::vector<uint32_t>> generated_zsf;
    for (const auto& [mult, forms] : generated) {
        ++rep.instances_checked;
        Sequence s(g, mult, opt.caps.length_cap);
        if (forms.size() != 1)
            rep.violations.push_back({s.literal(), "form overlap: generated by " +
                                                       std::to_string(forms.size()) + " forms"});
        uint32_t card = sigma_all(s).count();
        uint32_t bound = s.length() + s.support_size() - 1;
        if (card != bound)
            rep.violations.push_back(
                {s.literal(), "form instance has |Sigma(S)|=" + std::to_string(card) +
                                  " != |S|+|supp(S)|-1=" + std::to_string(bound)});
        if (!is_zero_sum_free(s)) continue; // outside the theorem's domain
        generated_zsf.insert(mult);
    }

    for (const auto& mult : witness_set)
        if (!generated_zsf.count(mult))
            rep.violations.push_back({mult_literal(*g, mult),
                                      "equality witness matches no form construction"});
    for (const auto& mult : generated_zsf)
        if (!witness_set.count(mult))
            rep.violations.push_back({mult_literal(*g, mult),
                                      "form construction is not an equality witness"});

    rep.equality_witnesses = base.equality_witnesses;
    rep.results["witness_count"] = witness_set.size();
    rep.results["form_construction_count"] = generated_zsf.size();
    rep.results["multi_form_matches"] = multi_form;
    nlohmann::json pf = nlohmann::json::object();
    for (const auto& [f, c] : per_form) pf["form" + std::to_string(f)] = c;
    rep.results["per_form"] = pf;
    rep.verified_domain = "equality witnesses and form constructions over C_" + g->literal() +
                          " up to length " + std::to_string(max_len) + ", both inclusions";
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// Theorem: |Sigma_{>=k}(S)| >= |S| - k + |supp(S)|
// ---------------------------------------------------------------------------

VerificationReport verify_geqk_bound(GroupPtr g, uint32_t max_len, const RunOptions& opt) {
    auto t0 = Clock::now();
    if (max_len < 2)
        throw Error(ErrorCode::invalid_argument, "max_len must be >= 2");
    std::vector<uint32_t> lengths;
    for (uint32_t l = 2; l <= max_len; ++l) lengths.push_back(l);
    check_enum_budget(*g, lengths, true, opt.caps);

    AutomorphismSet auts = automorphisms(*g, opt.caps);
    std::vector<EnumSpec> units = length_sharded_units(g, lengths, true, false);

    auto run_unit = [&](uint64_t idx) {
        nlohmann::json partial = empty_partial();
        partial["base_case_instances"] = 0;
        partial["base_case_equalities"] = 0;
        EnumSpec spec = units[idx];
        spec.orbit_reduce = true;
        uint64_t checked = 0, base_inst = 0, base_eq = 0;
        uint32_t len = spec.length;
        enumerate_multisets(spec, [&](const std::vector<uint32_t>& mult, const GroupSet&) {
            Sequence s(g, mult, opt.caps.length_cap);
            SumsetProfile prof = sumset_profile(s);
            uint32_t supp = s.support_size();
            // suffix unions Sigma_{>=k}
            std::vector<GroupSet> geq(len + 1, GroupSet(g->order()));
            geq[len] = prof.at(len);
            for (uint32_t k = len - 1; k >= 1; --k) geq[k] = geq[k + 1] | prof.at(k);
            for (uint32_t k = 1; k + 1 <= len; ++k) {
                if (geq[k].test(0)) continue;
                ++checked;
                uint32_t card = geq[k].count();
                uint32_t need = len - k + supp;
                if (card < need)
                    add_violation(partial, s.literal(),
                                  "k=" + std::to_string(k) + ": |Sigma_{>=k}(S)|=" +
                                      std::to_string(card) + " < |S|-k+|supp(S)|=" +
                                      std::to_string(need));
                if (len - k == 1) {
                    ++base_inst;
                    if (card == 1 + supp)
                        ++base_eq;
                    else
                        add_violation(partial, s.literal(),
                                      "k=" + std::to_string(k) +
                                          ": base case |S|=k+1 not an equality: " +
                                          std::to_string(card) + " != " +
                                          std::to_string(1 + supp));
                }
                if (card == need && partial["witnesses"].size() < opt.witness_cap)
                    partial["witnesses"].push_back(s.literal() + " | k=" + std::to_string(k));
            }
        }, &auts);
        partial["checked"] = checked;
        partial["base_case_instances"] = base_inst;
        partial["base_case_equalities"] = base_eq;
        return partial;
    };

    auto merge = [](nlohmann::json& acc, const nlohmann::json& p) {
        merge_basic(acc, p);
        acc["base_case_instances"] =
            acc["base_case_instances"].get<uint64_t>() + p["base_case_instances"].get<uint64_t>();
        acc["base_case_equalities"] =
            acc["base_case_equalities"].get<uint64_t>() + p["base_case_equalities"].get<uint64_t>();
    };

    nlohmann::json init = empty_partial();
    init["base_case_instances"] = 0;
    init["base_case_equalities"] = 0;
    std::string fp = "geqk-bound|" + g->literal() + "|max_len=" + std::to_string(max_len);
    nlohmann::json acc = run_units(opt, fp, units.size(), run_unit, merge, init);

    VerificationReport rep;
    rep.claim_id = "geqk-bound";
    rep.group_literal = g->literal();
    rep.parameters["max_len"] = max_len;
    fill_from_acc(rep, acc);
    if (rep.equality_witnesses.size() > opt.witness_cap)
        rep.equality_witnesses.resize(opt.witness_cap);
    rep.results["base_case_instances"] = acc["base_case_instances"];
    rep.results["base_case_equalities"] = acc["base_case_equalities"];
    rep.verified_domain = "all (S, k) with 0 not in supp(S), 0 not in Sigma_{>=k}(S), k+1 <= |S| <= " +
                          std::to_string(max_len) + " over C_" + g->literal() + ", orbit-reduced";
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// Theorem: |Sigma_n(S)| >= r + |supp(S)| - 1
// ---------------------------------------------------------------------------

namespace {

// Canonical instance string for cross-validating direct and reduced modes:
// "k=K T=<canonical literal>".
std::string reduced_instance_key(const Group& g, const AutomorphismSet& auts, uint32_t k,
                                 const std::vector<uint32_t>& t_mult) {
    return "k=" + std::to_string(k) + " T=" + mult_literal(g, orbit_canonical(t_mult, auts));
}

nlohmann::json sigma_n_direct_pass(const GroupPtr& g, uint32_t r_lo, uint32_t r_hi,
                                   const AutomorphismSet& auts, const RunOptions& opt,
                                   const std::string& fp_tag) {
    uint32_t n = g->order();
    std::vector<EnumSpec> units;
    std::vector<uint32_t> unit_r;
    for (uint32_t r = r_lo; r <= r_hi; ++r) {
        EnumSpec base{g, n + r, false, false, false, {}};
        for (EnumSpec& s : shard_prefixes(base, kFanout)) {
            units.push_back(std::move(s));
            unit_r.push_back(r);
        }
    }

    auto run_unit = [&](uint64_t idx) {
        nlohmann::json partial = empty_partial();
        partial["qualifying"] = 0;
        partial["instances"] = nlohmann::json::array();
        uint32_t r = unit_r[idx];
        uint64_t checked = 0, qualifying = 0;
        std::set<std::string> instances;
        enumerate_multisets(units[idx], [&](const std::vector<uint32_t>& mult, const GroupSet&) {
            ++checked;
            Sequence s(g, mult, opt.caps.length_cap);
            SumsetProfile prof = sumset_profile(s);
            const GroupSet& sn = prof.at(n);
            if (sn.test(0)) return;
            ++qualifying;
            uint32_t supp = s.support_size();
            uint32_t card = sn.count();
            if (card < r + supp - 1)
                add_violation(partial, s.literal(),
                              "r=" + std::to_string(r) + ": |Sigma_n(S)|=" + std::to_string(card) +
                                  " < r+|supp(S)|-1=" + std::to_string(r + supp - 1));

            // normalize by translation: move a maximal-multiplicity element
            // to 0, then reduce through the 0^(n-k)T decomposition
            uint32_t h = s.max_multiplicity();
            uint32_t gstar = 0;
            while (s.multiplicity(gstar) != h) ++gstar;
            Sequence norm = s.translated(g->neg(gstar));
            SumsetProfile nprof = sumset_profile(norm);
            if (nprof.at(n) != sn)
                add_violation(partial, s.literal(),
                              "translation normalization changed Sigma_n");
            uint32_t k = n - norm.multiplicity(0);
            std::vector<uint32_t> t_mult = norm.mult();
            t_mult[0] = 0;
            Sequence t(g, t_mult, opt.caps.length_cap);
            if (sumset_profile(t).sigma_geq(k) != sn)
                add_violation(partial, s.literal(),
                              "Sigma_n(S) != Sigma_{>=k}(T) under the 0^(n-k)T reduction");
            instances.insert(reduced_instance_key(*g, auts, k, t_mult));
        });
        partial["checked"] = checked;
        partial["qualifying"] = qualifying;
        for (const std::string& i : instances) partial["instances"].push_back(i);
        return partial;
    };

    auto merge = [](nlohmann::json& acc, const nlohmann::json& p) {
        merge_basic(acc, p);
        acc["qualifying"] = acc["qualifying"].get<uint64_t>() + p["qualifying"].get<uint64_t>();
        for (const auto& i : p["instances"]) acc["instances"].push_back(i);
    };

    nlohmann::json init = empty_partial();
    init["qualifying"] = 0;
    init["instances"] = nlohmann::json::array();
    nlohmann::json acc = run_units(opt, fp_tag, units.size(), run_unit, merge, init);

    // dedup instance keys across shards
    std::set<std::string> uniq;
    for (const auto& i : acc["instances"]) uniq.insert(i.get<std::string>());
    acc["instances"] = nlohmann::json::array();
    for (const std::string& i : uniq) acc["instances"].push_back(i);
    return acc;
}

} // namespace

VerificationReport verify_sigma_n_bound(GroupPtr g, uint32_t r_max, SigmaNMode mode,
                                        const RunOptions& opt) {
    auto t0 = Clock::now();
    uint32_t n = g->order();
    if (mode == SigmaNMode::direct && (n > 8 || r_max > 2))
        throw Error(ErrorCode::cap_exceeded, "direct mode is capped at |G| <= 8 and r <= 2");
    if (mode == SigmaNMode::reduced && n > 16)
        throw Error(ErrorCode::cap_exceeded, "reduced mode is capped at |G| <= 16");

    SearchResult dav = davenport_constant(g, inner_options(opt));
    int64_t d = *dav.value;
    if (d < 3 || r_max < 1)
        throw Error(ErrorCode::invalid_argument,
                    "no valid r: need 1 <= r <= D(G)-2 = " + std::to_string(d - 2));
    uint32_t r_hi = std::min<uint32_t>(r_max, static_cast<uint32_t>(d - 2));

    AutomorphismSet auts = automorphisms(*g, opt.caps);

    VerificationReport rep;
    rep.claim_id = "sigma-n-bound";
    rep.group_literal = g->literal();
    rep.parameters["r_max"] = r_hi;
    rep.results["mode"] = mode == SigmaNMode::direct ? "direct" : "reduced";

    if (mode == SigmaNMode::direct) {
        std::vector<uint32_t> lengths;
        for (uint32_t r = 1; r <= r_hi; ++r) lengths.push_back(n + r);
        check_enum_budget(*g, lengths, false, opt.caps);
        std::string fp = "sigma-n-bound-direct|" + g->literal() + "|r=" + std::to_string(r_hi);
        nlohmann::json acc = sigma_n_direct_pass(g, 1, r_hi, auts, opt, fp);
        fill_from_acc(rep, acc);
        rep.results["qualifying"] = acc["qualifying"];
        rep.results["normalized_instances"] = acc["instances"].size();
        rep.verified_domain = "all raw sequences over C_" + g->literal() + " with |S| = |G|+r, r=1.." +
                              std::to_string(r_hi) + ", 0 not in Sigma_n(S)";
    } else {
        // the equivalent Sigma_{>=k} statement at |T| = k+r, plus the
        // direct cross-validation where direct mode can run
        nlohmann::json acc = empty_partial();
        acc["qualifying"] = 0;
        acc["instances"] = nlohmann::json::array();

        std::vector<EnumSpec> units;
        std::vector<std::pair<uint32_t, uint32_t>> unit_kr;
        std::vector<uint32_t> lengths;
        for (uint32_t r = 1; r <= r_hi; ++r)
            for (uint32_t k = 1; k + 1 <= n; ++k) {
                lengths.push_back(k + r);
                EnumSpec base{g, k + r, true, false, false, {}};
                for (EnumSpec& s : shard_prefixes(base, kFanout)) {
                    units.push_back(std::move(s));
                    unit_kr.emplace_back(k, r);
                }
            }
        check_enum_budget(*g, lengths, true, opt.caps);

        auto run_unit = [&](uint64_t idx) {
            nlohmann::json partial = empty_partial();
            partial["qualifying"] = 0;
            partial["instances"] = nlohmann::json::array();
            auto [k, r] = unit_kr[idx];
            EnumSpec spec = units[idx];
            spec.orbit_reduce = true;
            uint64_t checked = 0, qualifying = 0;
            enumerate_multisets(spec, [&](const std::vector<uint32_t>& mult, const GroupSet&) {
                ++checked;
                Sequence t(g, mult, opt.caps.length_cap);
                SumsetProfile prof = sumset_profile(t);
                GroupSet geqk = prof.sigma_geq(k);
                if (geqk.test(0)) return;
                ++qualifying;
                uint32_t supp = t.support_size();
                uint32_t card = geqk.count();
                if (card < r + supp)
                    add_violation(partial, t.literal(),
                                  "k=" + std::to_string(k) + " r=" + std::to_string(r) +
                                      ": |Sigma_{>=k}(T)|=" + std::to_string(card) +
                                      " < r+|supp(T)|=" + std::to_string(r + supp));
                if (t.max_multiplicity() <= n - k)
                    partial["instances"].push_back(reduced_instance_key(*g, auts, k, mult));
            }, &auts);
            partial["checked"] = checked;
            partial["qualifying"] = qualifying;
            return partial;
        };
        auto merge = [](nlohmann::json& a, const nlohmann::json& p) {
            merge_basic(a, p);
            a["qualifying"] = a["qualifying"].get<uint64_t>() + p["qualifying"].get<uint64_t>();
            for (const auto& i : p["instances"]) a["instances"].push_back(i);
        };
        std::string fp = "sigma-n-bound-reduced|" + g->literal() + "|r=" + std::to_string(r_hi);
        acc = run_units(opt, fp, units.size(), run_unit, merge, acc);

        std::set<std::string> reduced_instances;
        for (const auto& i : acc["instances"]) reduced_instances.insert(i.get<std::string>());
        fill_from_acc(rep, acc);
        rep.results["qualifying"] = acc["qualifying"];
        rep.results["reduced_instances"] = reduced_instances.size();

        if (n <= 8 && r_hi <= 2) {
            std::string dfp; // cross-validation pass is never checkpointed
            RunOptions dopt = inner_options(opt);
            nlohmann::json dacc = sigma_n_direct_pass(g, 1, r_hi, auts, dopt, dfp);
            std::set<std::string> direct_instances;
            for (const auto& i : dacc["instances"]) direct_instances.insert(i.get<std::string>());
            rep.results["cross_validated"] = true;
            rep.results["direct_instances"] = direct_instances.size();
            rep.instances_checked += dacc["checked"].get<uint64_t>();
            for (const auto& v : dacc["violations"])
                rep.violations.push_back({v["sequence"].get<std::string>(),
                                          v["details"].get<std::string>()});
            if (direct_instances != reduced_instances) {
                std::string detail = "direct and reduced instance sets differ (" +
                                     std::to_string(direct_instances.size()) + " vs " +
                                     std::to_string(reduced_instances.size()) + ")";
                rep.violations.push_back({"", detail});
            }
        } else {
            rep.results["cross_validated"] = false;
        }
        rep.verified_domain = "all T over C_" + g->literal() +
                              " with |T| = k+r, 0 not in supp(T) or Sigma_{>=k}(T), r=1.." +
                              std::to_string(r_hi) + ", k=1..|G|-1, orbit-reduced";
    }

    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// The counterexample construction
// ---------------------------------------------------------------------------

VerificationReport counterexample_check(uint32_t n, const RunOptions& opt) {
    auto t0 = Clock::now();
    if (n < 7 || n % 2 == 0)
        throw Error(ErrorCode::invalid_argument, "n must be odd and >= 7");
    if (n > 15)
        throw Error(ErrorCode::budget_exceeded, "counterexample scan capped at n <= 15");

    GroupPtr g = Group::make({n}, opt.caps.order_cap);
    uint32_t r = n - 4;

    std::vector<uint32_t> mult(n, 0);
    mult[0] = n - 3;
    mult[1] = n - 3;
    mult[2] += 1;
    mult[n - 1] += 1;
    Sequence s(g, mult, opt.caps.length_cap);

    VerificationReport rep;
    rep.claim_id = "counterexample";
    rep.group_literal = g->literal();
    rep.parameters["n"] = n;
    rep.parameters["r"] = r;

    if (s.length() != 2 * n - 4)
        rep.violations.push_back({s.literal(), "|S| != 2n-4"});

    SumsetProfile prof = sumset_profile(s);
    const GroupSet& sn = prof.at(n);
    if (sn.test(0)) rep.violations.push_back({s.literal(), "0 in Sigma_n(S)"});
    if (sn.count() != n - 1)
        rep.violations.push_back(
            {s.literal(), "|Sigma_n(S)|=" + std::to_string(sn.count()) + " != n-1"});
    GroupSet expect(n);
    for (uint32_t e = 1; e < n; ++e) expect.set(e);
    if (sn != expect)
        rep.violations.push_back({s.literal(), "Sigma_n(S) != {g, 2g, ..., (n-1)g}"});

    // scan: no zero-sum free T with |T| = n-3, |Sigma(T)| <= n-1, |supp(T)| >= 3
    EnumSpec base{g, n - 3, true, true, false, {}};
    std::vector<EnumSpec> units = shard_prefixes(base, kFanout);

    auto run_unit = [&](uint64_t idx) {
        nlohmann::json partial = empty_partial();
        partial["min_sigma_supp3"] = nullptr;
        uint64_t checked = 0;
        std::optional<uint32_t> min_sigma;
        enumerate_multisets(units[idx], [&](const std::vector<uint32_t>& m, const GroupSet& sigma) {
            ++checked;
            uint32_t card = sigma.count();
            uint32_t supp = support_size_of(m);
            if (supp >= 3) {
                if (!min_sigma || card < *min_sigma) min_sigma = card;
                if (card <= n - 1)
                    add_violation(partial, mult_literal(*g, m),
                                  "conjecture clauses met: |Sigma(T)|=" + std::to_string(card) +
                                      " <= n-1 and |supp(T)|=" + std::to_string(supp) + " >= 3");
            }
        });
        partial["checked"] = checked;
        if (min_sigma) partial["min_sigma_supp3"] = *min_sigma;
        return partial;
    };
    auto merge = [](nlohmann::json& acc, const nlohmann::json& p) {
        merge_basic(acc, p);
        if (!p["min_sigma_supp3"].is_null()) {
            if (acc["min_sigma_supp3"].is_null() ||
                p["min_sigma_supp3"].get<uint32_t>() < acc["min_sigma_supp3"].get<uint32_t>())
                acc["min_sigma_supp3"] = p["min_sigma_supp3"];
        }
    };

    nlohmann::json init = empty_partial();
    init["min_sigma_supp3"] = nullptr;
    std::string fp = "counterexample|n=" + std::to_string(n);
    nlohmann::json acc = run_units(opt, fp, units.size(), run_unit, merge, init);

    uint64_t scanned = acc["checked"].get<uint64_t>();
    for (const auto& v : acc["violations"])
        rep.violations.push_back({v["sequence"].get<std::string>(), v["details"].get<std::string>()});
    rep.instances_checked = scanned + 1;

    rep.results["sequence"] = s.literal();
    rep.results["sigma_n_cardinality"] = sn.count();
    rep.results["zero_in_sigma_n"] = sn.test(0);
    rep.results["scanned_zero_sum_free_T"] = scanned;
    rep.results["min_sigma_T_with_supp3"] = acc["min_sigma_supp3"];
    rep.verified_domain = "S = 0^(n-3).g^(n-3).(2g).((n-1)g) over C_" + std::to_string(n) +
                          " plus an exhaustive scan of zero-sum free T with |T| = n-3";
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// Lemma property suites
// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = {"c2sum", "olson", "pixton", "reduction",
                                                 "subsets"};
    return ids;
}

std::vector<GroupPtr> lemma_group_pool(const Caps& caps) {
    std::vector<GroupPtr> pool;
    for (uint32_t n = 5; n <= 9; ++n) pool.push_back(Group::make({n}, caps.order_cap));
    pool.push_back(Group::make({12}, caps.order_cap));
    pool.push_back(Group::make({2, 2}, caps.order_cap));
    pool.push_back(Group::make({2, 4}, caps.order_cap));
    pool.push_back(Group::make({3, 3}, caps.order_cap));
    pool.push_back(Group::make({2, 2, 2}, caps.order_cap));
    return pool;
}

GroupSet random_subset(std::mt19937_64& rng, uint32_t n, bool allow_zero) {
    GroupSet s(n);
    for (uint32_t e = allow_zero ? 0 : 1; e < n; ++e)
        if (rng() & 1) s.set(e);
    return s;
}

void lemma_pixton_trials(const std::vector<GroupPtr>& pool, uint64_t seed, uint64_t lo,
                         uint64_t hi, nlohmann::json& partial) {
    uint64_t checked = 0;
    for (uint64_t t = lo; t < hi; ++t) {
        std::mt19937_64 rng(mix_seed(seed, 1, t));
        const GroupPtr& g = pool[rng() % pool.size()];
        uint32_t n = g->order();

        GroupSet x(n);
        do {
            x = random_subset(rng, n, false);
        } while (x.empty() || g->closure(x).count() != n);

        GroupSet y(n);
        do {
            y = random_subset(rng, n, true);
        } while (y.empty() || y.count() == n);

        uint32_t total = 0;
        x.for_each([&](uint32_t e) { total += (g->translate_set(y, e) - y).count(); });
        ++checked;
        if (total < x.count()) {
            std::string detail = "group C_" + g->literal() + ": sum of |(Y+g)\\Y| = " +
                                 std::to_string(total) + " < |X| = " + std::to_string(x.count());
            add_violation(partial, "trial " + std::to_string(t), detail);
        }
    }
    partial["checked"] = partial["checked"].get<uint64_t>() + checked;
}

void lemma_olson_trials(uint64_t seed, uint64_t lo, uint64_t hi, nlohmann::json& partial) {
    uint64_t checked = 0;
    for (uint64_t t = lo; t < hi; ++t) {
        std::mt19937_64 rng(mix_seed(seed, 2, t));
        uint32_t m = 5 + static_cast<uint32_t>(rng() % 9); // 5..13
        std::vector<uint32_t> units;
        for (uint32_t u = 1; u < m; ++u)
            if (std::gcd(u, m) == 1) units.push_back(u);
        uint32_t a = units[rng() % units.size()];
        uint32_t a0 = static_cast<uint32_t>(rng() % m);
        uint32_t s = 1 + static_cast<uint32_t>(rng() % (m - 3)); // 1..m-3

        GroupSet progression(m);
        for (uint32_t lam = 0; lam <= s; ++lam)
            progression.set((a0 + lam * a) % m);

        ++checked;
        for (uint32_t b0 = 0; b0 < m; ++b0) {
            for (uint32_t b : units) {
                GroupSet other(m);
                for (uint32_t lam = 0; lam <= s; ++lam) other.set((b0 + lam * b) % m);
                if (other == progression && b != a && b != m - a) {
                    std::string detail = "C_" + std::to_string(m) + ", a=" + std::to_string(a) +
                                         ", s=" + std::to_string(s) + ": representation with b=" +
                                         std::to_string(b) + " != +-a";
                    add_violation(partial, "trial " + std::to_string(t), detail);
                }
            }
        }
    }
    partial["checked"] = partial["checked"].get<uint64_t>() + checked;
}

void lemma_c2sum_exhaustive(const Caps& caps, nlohmann::json& partial) {
    for (uint32_t t = 2; t <= 6; ++t) {
        GroupPtr g = Group::make(std::vector<uint64_t>(t, 2), caps.order_cap);
        uint32_t sum = 0;
        for (uint32_t e = 1; e < g->order(); ++e) sum = g->add(sum, e);
        partial["checked"] = partial["checked"].get<uint64_t>() + 1;
        if (sum != 0)
            add_violation(partial, "C_2^" + std::to_string(t),
                          "sigma(G \\ {0}) = " + g->format_element(sum) + " != 0");
    }
}

void lemma_reduction_trials(const std::vector<GroupPtr>& pool, const Caps& caps, uint64_t seed,
                            uint64_t lo, uint64_t hi, nlohmann::json& partial) {
    uint64_t checked = 0;
    for (uint64_t t = lo; t < hi; ++t) {
        std::mt19937_64 rng(mix_seed(seed, 3, t));
        const GroupPtr& g = pool[rng() % pool.size()];
        uint32_t n = g->order();

        bool found = false;
        for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
            uint32_t k = 1 + static_cast<uint32_t>(rng() % n);
            uint32_t max_extra = std::min<uint32_t>(6, caps.length_cap - (n - k) - k);
            uint32_t len = k + static_cast<uint32_t>(rng() % (max_extra + 1));
            if (len == 0) continue;
            std::vector<uint32_t> t_mult(n, 0);
            for (uint32_t i = 0; i < len; ++i) ++t_mult[rng() % n];

            std::vector<uint32_t> s_mult = t_mult;
            s_mult[0] += n - k;
            uint32_t h = *std::max_element(s_mult.begin(), s_mult.end());
            if (s_mult[0] + 1 < h) continue; // hypothesis v_0(S) >= h(S)-1

            Sequence tt(g, t_mult, caps.length_cap);
            Sequence ss(g, s_mult, caps.length_cap);
            GroupSet lhs = sumset_profile(tt).sigma_geq(k);
            GroupSet rhs = sumset_profile(ss).at(n);
            ++checked;
            found = true;
            if (lhs != rhs) {
                std::string detail = "C_" + g->literal() + ", k=" + std::to_string(k) +
                                     ", T=" + tt.literal() + ": Sigma_{>=k}(T) != Sigma_n(0^(n-k)T)";
                add_violation(partial, "trial " + std::to_string(t), detail);
            }
        }
    }
    partial["checked"] = partial["checked"].get<uint64_t>() + checked;
}

void lemma_subsets_exhaustive(const std::vector<GroupPtr>& pool, const Caps& caps,
                              nlohmann::json& partial) {
    uint64_t checked = 0;
    for (const GroupPtr& g : pool) {
        uint32_t n = g->order();
        std::vector<uint32_t> members;
        // subsets of G \ {0} of size 1..4 as strictly increasing index lists
        std::vector<uint32_t> stack;
        std::function<void(uint32_t)> rec = [&](uint32_t min_e) {
            if (!stack.empty() && stack.size() <= 4) {
                std::vector<uint32_t> mult(n, 0);
                for (uint32_t e : stack) mult[e] = 1;
                Sequence s(g, mult, caps.length_cap);
                GroupSet sigma = sigma_all(s);
                if (!sigma.test(0)) {
                    ++checked;
                    uint32_t size = static_cast<uint32_t>(stack.size());
                    uint32_t card = sigma.count();
                    bool ok = true;
                    std::string why;
                    if (size <= 2) {
                        ok = card == 2 * size - 1;
                        why = "|Sigma(S)| != 2|S|-1";
                    } else if (size == 3) {
                        if (card >= 6) {
                            ok = true;
                        } else {
                            std::set<FormId> forms = classify_equality_form(s);
                            ok = card == 5 && forms.count(FormId::form4) > 0;
                            why = "size-3 subset neither |Sigma| >= 6 nor the exceptional form";
                        }
                    } else {
                        ok = card >= 2 * size;
                        why = "|Sigma(S)| < 2|S| for a size-4 zero-sum free subset";
                    }
                    if (!ok)
                        add_violation(partial, s.literal(),
                                      "C_" + g->literal() + ": " + why + " (|Sigma|=" +
                                          std::to_string(card) + ")");
                }
            }
            if (stack.size() == 4) return;
            for (uint32_t e = min_e; e < n; ++e) {
                stack.push_back(e);
                rec(e + 1);
                stack.pop_back();
            }
        };
        rec(1);
    }
    partial["checked"] = partial["checked"].get<uint64_t>() + checked;
}

} // namespace

VerificationReport check_lemmas(const std::set<std::string>& which, uint64_t trials,
                                const RunOptions& opt) {
    auto t0 = Clock::now();
    if (trials < 1)
        throw Error(ErrorCode::invalid_argument, "trials must be >= 1");
    std::set<std::string> ids = which;
    if (ids.empty()) ids.insert(lemma_ids().begin(), lemma_ids().end());
    for (const std::string& id : ids)
        if (std::find(lemma_ids().begin(), lemma_ids().end(), id) == lemma_ids().end())
            throw Error(ErrorCode::unknown_claim, "unknown lemma id '" + id + "'");

    std::vector<GroupPtr> pool = lemma_group_pool(opt.caps);

    constexpr uint64_t kChunk = 250;
    struct Unit {
        std::string lemma;
        uint64_t lo, hi; // trial range; unused for exhaustive lemmas
    };
    std::vector<Unit> units;
    for (const std::string& id : lemma_ids()) {
        if (!ids.count(id)) continue;
        if (id == "c2sum" || id == "subsets") {
            units.push_back({id, 0, 0});
        } else {
            for (uint64_t lo = 0; lo < trials; lo += kChunk)
                units.push_back({id, lo, std::min(trials, lo + kChunk)});
        }
    }

    auto run_unit = [&](uint64_t idx) {
        nlohmann::json partial = empty_partial();
        const Unit& u = units[idx];
        if (u.lemma == "pixton")
            lemma_pixton_trials(pool, opt.seed, u.lo, u.hi, partial);
        else if (u.lemma == "olson")
            lemma_olson_trials(opt.seed, u.lo, u.hi, partial);
        else if (u.lemma == "c2sum")
            lemma_c2sum_exhaustive(opt.caps, partial);
        else if (u.lemma == "reduction")
            lemma_reduction_trials(pool, opt.caps, opt.seed, u.lo, u.hi, partial);
        else if (u.lemma == "subsets")
            lemma_subsets_exhaustive(pool, opt.caps, partial);
        return partial;
    };

    std::string fp = "lemmas|trials=" + std::to_string(trials) + "|seed=" +
                     std::to_string(opt.seed);
    for (const std::string& id : lemma_ids())
        if (ids.count(id)) fp += "|" + id;
    nlohmann::json acc = run_units(opt, fp, units.size(), run_unit, merge_basic, empty_partial());

    VerificationReport rep;
    rep.claim_id = "lemmas";
    rep.parameters["trials"] = static_cast<int64_t>(trials);
    rep.seed = opt.seed;
    fill_from_acc(rep, acc);
    nlohmann::json run = nlohmann::json::array();
    for (const std::string& id : lemma_ids())
        if (ids.count(id)) run.push_back(id);
    rep.results["lemmas"] = run;
    rep.verified_domain = "randomized trials (seeded) plus exhaustive small-group sweeps";
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// EGZ and the Gao theorem
// ---------------------------------------------------------------------------

namespace {

VerificationReport zero_in_sigma_k_exhaustive(const GroupPtr& g, uint32_t length, uint32_t k,
                                              const std::string& claim, const RunOptions& opt) {
    check_enum_budget(*g, {length}, false, opt.caps);
    EnumSpec base{g, length, false, false, false, {}};
    std::vector<EnumSpec> units = shard_prefixes(base, kFanout);

    auto run_unit = [&](uint64_t idx) {
        nlohmann::json partial = empty_partial();
        uint64_t checked = 0;
        enumerate_multisets(units[idx], [&](const std::vector<uint32_t>& mult, const GroupSet&) {
            ++checked;
            Sequence s(g, mult, opt.caps.length_cap);
            if (!sumset_profile(s).at(k).test(0))
                add_violation(partial, s.literal(),
                              "0 not in Sigma_" + std::to_string(k) + "(S)");
        });
        partial["checked"] = checked;
        return partial;
    };
    std::string fp = claim + "|" + g->literal() + "|len=" + std::to_string(length);
    nlohmann::json acc = run_units(opt, fp, units.size(), run_unit, merge_basic, empty_partial());

    VerificationReport rep;
    rep.claim_id = claim;
    rep.group_literal = g->literal();
    fill_from_acc(rep, acc);
    return rep;
}

} // namespace

VerificationReport verify_egz(uint32_t n, const RunOptions& opt) {
    auto t0 = Clock::now();
    if (n < 2 || n > 7)
        throw Error(ErrorCode::budget_exceeded, "EGZ sweep capped at 2 <= n <= 7");
    GroupPtr g = Group::make({n}, opt.caps.order_cap);
    VerificationReport rep = zero_in_sigma_k_exhaustive(g, 2 * n - 1, n, "egz", opt);
    rep.parameters["n"] = n;
    rep.verified_domain = "all sequences of length 2n-1 = " + std::to_string(2 * n - 1) +
                          " over C_" + std::to_string(n);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

VerificationReport verify_gao(GroupPtr g, const RunOptions& opt) {
    auto t0 = Clock::now();
    if (g->order() > 9)
        throw Error(ErrorCode::budget_exceeded, "Gao sweep capped at |G| <= 9");
    SearchResult dav = davenport_constant(g, inner_options(opt));
    uint32_t length = g->order() + static_cast<uint32_t>(*dav.value) - 1;
    VerificationReport rep = zero_in_sigma_k_exhaustive(g, length, g->order(), "gao", opt);
    rep.parameters["davenport"] = *dav.value;
    rep.parameters["length"] = length;
    rep.verified_domain = "all sequences of length |G|+D(G)-1 = " + std::to_string(length) +
                          " over C_" + g->literal();
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// Informational reports
// ---------------------------------------------------------------------------

VerificationReport group_info_report(GroupPtr g, const Caps& caps) {
    VerificationReport rep;
    rep.claim_id = "group-info";
    rep.group_literal = g->literal();
    rep.instances_checked = 1;
    nlohmann::json moduli = nlohmann::json::array();
    for (uint32_t m : g->moduli()) moduli.push_back(m);
    rep.results["moduli"] = moduli;
    rep.results["order"] = g->order();
    rep.results["exponent"] = g->exponent();
    rep.results["rank"] = g->rank();
    if (g->is_cyclic() || g->order() <= caps.aut_order_cap)
        rep.results["automorphism_count"] = automorphisms(*g, caps).count();
    rep.verified_domain = "group structure computation";
    return rep;
}

VerificationReport sumset_report(const Sequence& s, std::optional<uint32_t> k,
                                 std::optional<uint32_t> geq) {
    const Group& g = *s.group();
    VerificationReport rep;
    rep.claim_id = "sumset";
    rep.group_literal = g.literal();
    rep.instances_checked = 1;

    SumsetProfile prof = sumset_profile(s);
    auto set_to_json = [&](const GroupSet& set) {
        nlohmann::json arr = nlohmann::json::array();
        set.for_each([&](uint32_t e) { arr.push_back(g.format_element(e)); });
        return arr;
    };

    rep.results["sequence"] = s.literal();
    rep.results["length"] = s.length();
    rep.results["sigma"] = g.format_element(s.sum());
    rep.results["support"] = set_to_json(s.support());
    rep.results["max_occurrence"] = s.max_multiplicity();
    if (s.length() > 0) {
        GroupSet all = prof.sigma_all();
        rep.results["sigma_all"] = set_to_json(all);
        rep.results["zero_sum_free"] = !all.test(0);
    } else {
        rep.results["sigma_all"] = nlohmann::json::array();
        rep.results["zero_sum_free"] = true;
    }
    nlohmann::json cards = nlohmann::json::array();
    for (uint32_t i = 0; i <= s.length(); ++i) cards.push_back(prof.at(i).count());
    rep.results["per_k_cardinality"] = cards;
    if (k) {
        if (*k > s.length())
            throw Error(ErrorCode::invalid_argument, "k exceeds the sequence length");
        rep.parameters["k"] = *k;
        rep.results["sigma_k"] = set_to_json(prof.at(*k));
    }
    if (geq) {
        rep.parameters["geq"] = *geq;
        rep.results["sigma_geq"] = set_to_json(prof.sigma_geq(*geq));
    }
    rep.verified_domain = "subsequence-sum computation";
    return rep;
}

} // namespace subsum
