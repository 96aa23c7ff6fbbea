#include "report.hpp"

#include <algorithm>
#include <cmath>

#include "rea/errors.hpp"

namespace reacli {

void Report::add(const rea::Finding& f, json data) { findings.push_back({f, std::move(data)}); }

void Report::add_all(const rea::Findings& fs) {
    for (const auto& f : fs) add(f);
}

bool Report::pass() const {
    return std::all_of(findings.begin(), findings.end(), [](const ReportFinding& x) { return x.f.pass && !std::isnan(x.f.residual); });
}

double Report::max_residual() const {
    double m = 0;
    for (const auto& x : findings)
        if (std::isfinite(x.f.residual)) m = std::max(m, x.f.residual);
    return m;
}

json to_json(const Report& r) {
    std::vector<const ReportFinding*> order;
    for (const auto& f : r.findings) order.push_back(&f);
    std::stable_sort(order.begin(), order.end(), [](const ReportFinding* a, const ReportFinding* b) { return a->f.check < b->f.check; });
    json out;
    out["tool_version"] = kToolVersion;
    out["q0"] = r.q0;
    out["inputs"] = r.inputs;
    json fs = json::array();
    for (const ReportFinding* f : order) {
        json j;
        j["check"] = f->f.check;
        j["pass"] = f->f.pass;
        j["residual"] = f->f.residual;
        j["detail"] = f->f.detail;
        j["data"] = f->data;
        fs.push_back(std::move(j));
    }
    out["findings"] = std::move(fs);
    out["max_residual"] = r.max_residual();
    out["pass"] = r.pass();
    return out;
}

std::string emit_report(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report parse_report(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw rea::ParseError(std::string("report: ") + e.what());
    }
    for (const char* key : {"tool_version", "q0", "inputs", "findings", "max_residual", "pass"})
        if (!j.contains(key)) throw rea::ParseError(std::string("report: missing key ") + key);
    Report r;
    try {
        r.q0 = j["q0"].get<double>();
        r.inputs = j["inputs"];
        for (const auto& f : j["findings"]) {
            ReportFinding x;
            x.f.check = f.at("check").get<std::string>();
            x.f.pass = f.at("pass").get<bool>();
            x.f.residual = f.at("residual").is_null() ? std::nan("") : f.at("residual").get<double>();
            x.f.detail = f.value("detail", "");
            x.data = f.value("data", json::object());
            r.findings.push_back(std::move(x));
        }
    } catch (const json::exception& e) {
        throw rea::ParseError(std::string("report: ") + e.what());
    }
    return r;
}

}  // namespace reacli
