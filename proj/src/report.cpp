#include "subbergman/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace subbergman {

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

CheckStatus parse_check_status(const std::string& text) {
    if (text == "pass") return CheckStatus::pass;
    if (text == "fail") return CheckStatus::fail;
    if (text == "skipped") return CheckStatus::skipped;
    throw std::invalid_argument("unknown check status '" + text + "'");
}

namespace {

bool same_number(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

nlohmann::json number_to_json(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double number_from_json(const nlohmann::json& j) {
    if (j.is_number()) return j.get<double>();
    const auto s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    throw std::invalid_argument("bad metric value '" + s + "'");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

bool CheckResult::operator==(const CheckResult& other) const {
    if (check != other.check || symbol != other.symbol || status != other.status || reason != other.reason ||
        !same_number(alpha, other.alpha) || !same_number(elapsed_seconds, other.elapsed_seconds) ||
        metrics.size() != other.metrics.size()) {
        return false;
    }
    for (const auto& [k, v] : metrics) {
        const auto it = other.metrics.find(k);
        if (it == other.metrics.end() || !same_number(v, it->second)) return false;
    }
    return true;
}

bool RunReport::any_failed() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

std::size_t RunReport::count(CheckStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == status; }));
}

void RunReport::canonicalize() {
    std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) {
        return std::tie(a.check, a.alpha, a.symbol) < std::tie(b.check, b.alpha, b.symbol);
    });
}

nlohmann::json to_json(const RunReport& report) {
    nlohmann::json j;
    j["schema"] = RunReport::kSchema;
    j["scenario"] = report.scenario;
    j["environment"] = report.environment;
    j["started_at"] = report.started_at;
    j["finished_at"] = report.finished_at;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json metrics = nlohmann::json::object();
        for (const auto& [k, v] : c.metrics) metrics[k] = number_to_json(v);
        j["checks"].push_back({{"check", c.check},
                               {"alpha", number_to_json(c.alpha)},
                               {"symbol", c.symbol},
                               {"status", to_string(c.status)},
                               {"reason", c.reason},
                               {"metrics", metrics},
                               {"elapsed_seconds", c.elapsed_seconds}});
    }
    return j;
}

RunReport report_from_json(const nlohmann::json& j) {
    if (j.at("schema").get<int>() != RunReport::kSchema) {
        throw std::invalid_argument("unsupported report schema " + j.at("schema").dump());
    }
    RunReport r;
    r.scenario = j.at("scenario").get<std::string>();
    r.environment = j.at("environment").get<std::map<std::string, std::string>>();
    r.started_at = j.at("started_at").get<std::string>();
    r.finished_at = j.at("finished_at").get<std::string>();
    for (const auto& c : j.at("checks")) {
        CheckResult cell;
        cell.check = c.at("check").get<std::string>();
        cell.alpha = number_from_json(c.at("alpha"));
        cell.symbol = c.at("symbol").get<std::string>();
        cell.status = parse_check_status(c.at("status").get<std::string>());
        cell.reason = c.at("reason").get<std::string>();
        for (const auto& [k, v] : c.at("metrics").items()) cell.metrics[k] = number_from_json(v);
        cell.elapsed_seconds = c.at("elapsed_seconds").get<double>();
        r.checks.push_back(std::move(cell));
    }
    return r;
}

std::string to_csv(const RunReport& report) {
    std::set<std::string> metric_names;
    for (const auto& c : report.checks)
        for (const auto& [k, v] : c.metrics) metric_names.insert(k);
    std::ostringstream out;
    out << "check,alpha,symbol,status,reason";
    for (const auto& m : metric_names) out << ',' << csv_escape(m);
    out << '\n';
    for (const auto& c : report.checks) {
        out << csv_escape(c.check) << ',' << format_double(c.alpha) << ',' << csv_escape(c.symbol) << ','
            << to_string(c.status) << ',' << csv_escape(c.reason);
        for (const auto& m : metric_names) {
            out << ',';
            const auto it = c.metrics.find(m);
            if (it != c.metrics.end()) out << format_double(it->second);
        }
        out << '\n';
    }
    return out.str();
}

void emit_report(const RunReport& report, const std::string& path, ReportFormat format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing report");
    if (format == ReportFormat::json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        out << to_csv(report);
    }
    out.flush();
    if (!out) throw std::runtime_error("failed while writing report to '" + path + "'");
}

RunReport read_report_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading report");
    return report_from_json(nlohmann::json::parse(in));
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace subbergman
