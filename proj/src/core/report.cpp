#include "core/report.hpp"

#include <sstream>

namespace subsum {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["claim_id"] = claim_id;
    if (group_literal)
        doc["group"] = *group_literal;
    else
        doc["group"] = nullptr;
    doc["parameters"] = parameters;
    doc["instances_checked"] = instances_checked;
    nlohmann::json viol = nlohmann::json::array();
    for (const Violation& v : violations)
        viol.push_back({{"sequence", v.sequence}, {"details", v.details}});
    doc["violations"] = viol;
    doc["equality_witnesses"] = equality_witnesses;
    doc["results"] = results;
    if (seed)
        doc["seed"] = *seed;
    else
        doc["seed"] = nullptr;
    doc["verified_domain"] = verified_domain;
    doc["verdict"] = verdict();
    return doc;
}

std::string VerificationReport::to_table() const {
    std::ostringstream out;
    out << "claim              " << claim_id << "\n";
    out << "verdict            " << verdict() << "\n";
    if (group_literal) out << "group              " << *group_literal << "\n";
    if (!parameters.empty()) {
        out << "parameters         ";
        bool first = true;
        for (const auto& [k, v] : parameters) {
            if (!first) out << "  ";
            first = false;
            out << k << "=" << v;
        }
        out << "\n";
    }
    if (seed) out << "seed               " << *seed << "\n";
    out << "instances checked  " << instances_checked << "\n";
    out << "violations         " << violations.size() << "\n";
    for (const Violation& v : violations)
        out << "  ! " << v.sequence << "  :: " << v.details << "\n";
    out << "equality witnesses " << equality_witnesses.size() << "\n";
    for (const std::string& w : equality_witnesses) out << "  = " << w << "\n";
    if (!results.empty()) {
        out << "results\n";
        for (auto it = results.begin(); it != results.end(); ++it)
            out << "  " << it.key() << ": " << it.value().dump() << "\n";
    }
    out << "domain             " << verified_domain << "\n";
    return out.str();
}

} // namespace subsum
