#ifndef SUBBERGMAN_REPORT_HPP
#define SUBBERGMAN_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace subbergman {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);
CheckStatus parse_check_status(const std::string& text);

/// Outcome of one (check, alpha, symbol) cell.
struct CheckResult {
    std::string check;
    double alpha = 0.0;
    /// Canonical symbol text; empty for symbol-independent checks.
    std::string symbol;
    CheckStatus status = CheckStatus::skipped;
    /// Machine-readable reason for skips and failures, e.g. "precondition:alpha_range".
    std::string reason;
    std::map<std::string, double> metrics;
    double elapsed_seconds = 0.0;

    bool operator==(const CheckResult& other) const;
};

struct RunReport {
    static constexpr int kSchema = 1;

    std::string scenario;
    std::map<std::string, std::string> environment;
    std::string started_at;
    std::string finished_at;
    std::vector<CheckResult> checks;

    bool any_failed() const;
    std::size_t count(CheckStatus status) const;
    /// Sorts cells by (check, alpha, symbol) so output is independent of execution order.
    void canonicalize();

    bool operator==(const RunReport& other) const = default;
};

/// Non-finite metrics are written as the strings "nan", "inf", "-inf".
nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

/// One row per cell; metric columns are the sorted union of metric names.
std::string to_csv(const RunReport& report);

enum class ReportFormat { json, csv };

/// Throws std::runtime_error naming the path and operation on I/O failure.
void emit_report(const RunReport& report, const std::string& path, ReportFormat format);

RunReport read_report_json(const std::string& path);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace subbergman

#endif
