#ifndef WDELTA_REPORT_HPP
#define WDELTA_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace wdelta {

// One verification outcome. Skipped checks carry the unmet hypothesis as
// the reason; failed checks carry a counterexample description.
struct Check {
    enum class Status { Pass, Fail, Skip };

    std::string name;
    Status status = Status::Pass;
    std::string hypothesis;  // e.g. "complete: true"
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    void pass(const std::string& name, const std::string& hyp = "") {
        checks.push_back({name, Check::Status::Pass, hyp, ""});
    }
    void fail(const std::string& name, const std::string& detail, const std::string& hyp = "") {
        checks.push_back({name, Check::Status::Fail, hyp, detail});
    }
    void skip(const std::string& name, const std::string& reason, const std::string& hyp = "") {
        checks.push_back({name, Check::Status::Skip, hyp, reason});
    }
    void merge(const Report& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }

    bool any_failed() const {
        for (const auto& c : checks)
            if (c.status == Check::Status::Fail) return true;
        return false;
    }
    bool any_skipped() const {
        for (const auto& c : checks)
            if (c.status == Check::Status::Skip) return true;
        return false;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json j;
            j["name"] = c.name;
            if (!c.hypothesis.empty()) j["hypothesis"] = c.hypothesis;
            switch (c.status) {
                case Check::Status::Pass: j["pass"] = true; break;
                case Check::Status::Fail:
                    j["pass"] = false;
                    j["counterexample"] = c.detail;
                    break;
                case Check::Status::Skip:
                    j["skipped"] = true;
                    j["reason"] = c.detail;
                    break;
            }
            arr.push_back(j);
        }
        return arr;
    }
};

} // namespace wdelta

#endif
