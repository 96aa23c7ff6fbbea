// JSON reports written by reacli.
//
// Schema: {tool_version, q0, inputs, findings[], max_residual, pass}.  Each
// finding is {check, pass, residual, detail, data}; findings are sorted by
// check name before emission so that reports are byte-stable.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rea/report.hpp"

namespace reacli {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportFinding {
    rea::Finding f;
    json data = json::object();
};

struct Report {
    double q0 = 0.5;
    json inputs = json::object();
    std::vector<ReportFinding> findings;

    void add(const rea::Finding& f, json data = json::object());
    void add_all(const rea::Findings& fs);
    bool pass() const;
    double max_residual() const;
};

json to_json(const Report& r);
// Pretty-printed JSON with a trailing newline.
std::string emit_report(const Report& r);
// Inverse of to_json; throws rea::ParseError on schema violations.
Report parse_report(const std::string& text);

}  // namespace reacli
