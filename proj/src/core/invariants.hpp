#pragma once

#include <optional>

#include "core/report.hpp"
#include "core/runner.hpp"
#include "core/sequence.hpp"

namespace subsum {

// D(G) = 1 + max length of a zero-sum free sequence, by depth-first
// extension of canonical zero-sum free sequences with incremental-profile
// pruning. Witnesses are maximal zero-sum free sequences.
SearchResult davenport_constant(GroupPtr g, const RunOptions& opt);

// Literature oracle: n for C_n, n1+n2-1 for rank 2, absent for rank >= 3.
std::optional<int64_t> davenport_known(const Group& g);

// f_{G,k}(r) = min |Sigma_k(S)| over |S| = k+r with 0 not in Sigma_k(S).
// Exhaustive; empty qualifying set reported as an absent value.
SearchResult f_gkr(GroupPtr g, uint32_t k, uint32_t r, bool orbit_reduce, const RunOptions& opt);

// Compares f_{G,|G|}(r) from search against the published closed forms and
// checks the restricted conjecture's consequent on every minimizing witness.
VerificationReport fgkr_closed_form_check(GroupPtr g, uint32_t r, const RunOptions& opt);

// Report builders for the CLI surface.
VerificationReport davenport_report(GroupPtr g, const RunOptions& opt);
VerificationReport fgkr_report(GroupPtr g, uint32_t k, uint32_t r, bool orbit_reduce,
                               const RunOptions& opt);

} // namespace subsum
