#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace extlab {

using json = nlohmann::ordered_json;

// One checked statement. The anchor is a stable descriptive key.
struct Assertion {
    std::string name;
    std::string anchor;
    bool pass = true;
    std::string detail;
};

inline json to_json(const Assertion& a) {
    return json{{"name", a.name}, {"anchor", a.anchor}, {"pass", a.pass}, {"detail", a.detail}};
}

struct Report {
    std::string command;
    json config = json::object();
    json results = json::object();
    std::vector<Assertion> assertions;
    double seconds = 0;
    std::string error;

    bool ok() const {
        if (!error.empty()) return false;
        for (auto& a : assertions)
            if (!a.pass) return false;
        return true;
    }

    void check(std::string name, std::string anchor, bool pass, std::string detail = "") {
        assertions.push_back({std::move(name), std::move(anchor), pass, std::move(detail)});
    }

    // Deterministic part only; timing is added by the caller if wanted.
    json payload() const {
        json j{{"command", command}, {"config", config}, {"results", results}};
        json as = json::array();
        for (auto& a : assertions) as.push_back(to_json(a));
        j["assertions"] = as;
        j["ok"] = ok();
        if (!error.empty()) j["error"] = error;
        return j;
    }

    std::string text() const {
        std::string s = command + "\n";
        for (auto& a : assertions)
            s += std::string(a.pass ? "  [pass] " : "  [FAIL] ") + a.name + " {" + a.anchor + "}" +
                 (a.detail.empty() ? "" : ": " + a.detail) + "\n";
        if (!error.empty()) s += "  error: " + error + "\n";
        s += ok() ? "ok\n" : "FAILED\n";
        return s;
    }
};

} // namespace extlab
