#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace subsum {

constexpr int kReportSchemaVersion = 1;

struct Violation {
    std::string sequence;
    std::string details;
};

// Outcome of an exhaustive or randomized check. `elapsed_seconds` is kept
// out of the serialized document so identical runs emit identical bytes.
struct VerificationReport {
    std::string claim_id;
    std::optional<std::string> group_literal;
    std::map<std::string, int64_t> parameters;
    uint64_t instances_checked = 0;
    std::vector<Violation> violations;
    std::vector<std::string> equality_witnesses;
    nlohmann::json results = nlohmann::json::object();
    std::optional<uint64_t> seed;
    std::string verified_domain;
    double elapsed_seconds = 0.0;

    bool holds() const { return violations.empty(); }
    std::string verdict() const {
        return holds() ? "holds on checked domain" : "violations found";
    }

    nlohmann::json to_json() const;
    std::string to_table() const;
};

// Outcome of a minimization / extremal search.
struct SearchResult {
    std::optional<int64_t> value; // nullopt = empty qualifying domain
    std::vector<std::string> witnesses;
    uint64_t sequences_examined = 0;
    bool orbit_reduced = false;
    double elapsed_seconds = 0.0;
};

} // namespace subsum
