#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace secsheaf {

using json = nlohmann::ordered_json;

// One verification record: the check, the hypotheses it was gated on, the
// outcome, and a witness or counterexample.
struct CheckRecord {
    std::string check;
    json hypotheses = json::object();
    std::string status;  // "pass" | "fail" | "skipped"
    std::string reason;  // non-empty for skips
    json witness = json::object();

    static CheckRecord pass(std::string check, json hypotheses, json witness = json::object()) {
        return {std::move(check), std::move(hypotheses), "pass", "", std::move(witness)};
    }
    static CheckRecord fail(std::string check, json hypotheses, json witness = json::object()) {
        return {std::move(check), std::move(hypotheses), "fail", "", std::move(witness)};
    }
    static CheckRecord skipped(std::string check, json hypotheses, std::string reason) {
        return {std::move(check), std::move(hypotheses), "skipped", std::move(reason),
                json::object()};
    }

    json to_json() const {
        json j;
        j["check"] = check;
        j["hypotheses"] = hypotheses;
        j["status"] = status;
        if (!reason.empty()) j["reason"] = reason;
        if (!witness.empty()) j["witness"] = witness;
        return j;
    }
};

inline json records_to_json(const std::vector<CheckRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(r.to_json());
    return arr;
}

inline bool any_failed(const std::vector<CheckRecord>& records) {
    for (const auto& r : records)
        if (r.status == "fail") return true;
    return false;
}

}  // namespace secsheaf
