#pragma once

#include <optional>
#include <set>
#include <string>

#include "core/report.hpp"
#include "core/runner.hpp"
#include "core/sequence.hpp"

namespace subsum {

// The four structural forms of the equality classification.
enum class FormId : int { form1 = 1, form2 = 2, form3 = 3, form4 = 4 };

// Every form whose side conditions the zero-sum free sequence satisfies:
//   form1: S = g^|S|,          g != 0, ord(g) >= |S|+1
//   form2: S = g1.g2,          g1 != g2, both nonzero
//   form3: S = g^(|S|-1).(2g), |S| >= 3, ord(g) >= |S|+2
//   form4: S = g1.g2.(g1+g2),  2g1 != 0, 2g2 = 0, 2g1+g2 != 0
// All role assignments of the terms are tried; the result is
// representation-independent. Throws if S is not zero-sum free.
std::set<FormId> classify_equality_form(const Sequence& s);

// |Sigma(S)| >= |S| + |supp(S)| - 1 over all zero-sum free sequences of
// length <= max_len, orbit-reduced; equality cases become witnesses.
VerificationReport verify_sigma_lower_bound(GroupPtr g, uint32_t max_len, const RunOptions& opt);

// Both directions of the equality classification: every equality witness
// matches exactly one form, and every form instance (within the length
// bound, zero-sum free) is an equality witness.
VerificationReport verify_equality_classification(GroupPtr g, uint32_t max_len,
                                                  const RunOptions& opt);

// |Sigma_{>=k}(S)| >= |S| - k + |supp(S)| for all (S, k) with 0 not in
// supp(S), 0 not in Sigma_{>=k}(S), k+1 <= |S| <= max_len; base-case
// instances |S| = k+1 must attain equality exactly.
VerificationReport verify_geqk_bound(GroupPtr g, uint32_t max_len, const RunOptions& opt);

enum class SigmaNMode { direct, reduced };

// |Sigma_n(S)| >= r + |supp(S)| - 1 for |S| = n + r, 0 not in Sigma_n(S).
// Direct mode enumerates raw sequences and validates the v_0(S) = h(S)
// normalization per instance; reduced mode checks the equivalent
// Sigma_{>=k} statement and cross-validates against direct where that runs.
VerificationReport verify_sigma_n_bound(GroupPtr g, uint32_t r_max, SigmaNMode mode,
                                        const RunOptions& opt);

// The counterexample construction S = 0^(n-3).g^(n-3).(2g).((n-1)g) over
// C_n, n odd >= 7: checks its stated properties and scans every zero-sum
// free T of length n-3 for one meeting both conjecture clauses.
VerificationReport counterexample_check(uint32_t n, const RunOptions& opt);

// Property suites for the auxiliary lemmas. Valid ids: "pixton", "olson",
// "c2sum", "reduction", "subsets".
VerificationReport check_lemmas(const std::set<std::string>& which, uint64_t trials,
                                const RunOptions& opt);

// Every sequence of length 2n-1 over C_n has 0 in Sigma_n (n <= 7).
VerificationReport verify_egz(uint32_t n, const RunOptions& opt);

// Every sequence of length |G| + D(G) - 1 has 0 in Sigma_|G| (|G| <= 9).
VerificationReport verify_gao(GroupPtr g, const RunOptions& opt);

// Informational report builders used by the CLI surface.
VerificationReport group_info_report(GroupPtr g, const Caps& caps);
VerificationReport sumset_report(const Sequence& s, std::optional<uint32_t> k,
                                 std::optional<uint32_t> geq);

} // namespace subsum
