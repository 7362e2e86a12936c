#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace picip {

enum class ReportFormat { Text, Json };

struct RunConfig {
    std::vector<std::string> inputs;
    ReportFormat format = ReportFormat::Text;
    std::optional<int> fail_threshold; // 1..6; any total >= N fails the run
    bool include_metrics = false;
    bool per_class = false; // also score nested classes individually
};

// Flat, serializable view of one finding.
struct ReportFinding {
    std::string kind;
    std::string subject;
    std::vector<std::string> related;
    std::string file;
    int line = 0;
    int column = 0;
    std::string message;

    bool operator==(const ReportFinding&) const = default;
};

struct ClassReport {
    std::string name;
    std::string file;
    std::array<int, 6> causes{}; // C1..C6, each 0 or 1
    int total = 0;
    std::vector<ReportFinding> findings;

    bool operator==(const ClassReport&) const = default;
};

struct MetricsRow {
    std::string name;
    std::string file;
    std::optional<int> dit;
    int noc = 0;
    int tpc = 0;
    int tpac = 0;
    std::optional<int> tac;

    bool operator==(const MetricsRow&) const = default;
};

// Compiler-cycle findings, graph warnings, skipped-declaration notes and
// per-file failures, unified for output.
struct Diagnostic {
    std::string kind;
    std::string subject; // empty for warnings without a subject class
    std::vector<std::string> related;
    std::string file;
    int line = 0;
    int column = 0;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

struct RunReport {
    std::vector<ClassReport> classes; // sorted by file path, then name
    bool has_metrics = false;
    std::vector<MetricsRow> metrics;
    std::vector<Diagnostic> diagnostics;
    int files_parsed = 0;
    int files_failed = 0;

    bool operator==(const RunReport&) const = default;
};

struct RunOutcome {
    RunReport report;
    int exit_code = 0;               // 0 clean, 1 threshold hit, 2 input/parse failure
    std::vector<std::string> errors; // messages for stderr, one per failure
};

// Walks the input paths (directories recursively, lexicographic order),
// parses every .java file and runs the full pipeline. Identical input trees
// produce identical reports regardless of argument order.
RunOutcome run(const RunConfig& config);

// Renders a report; output is deterministic in both formats. JSON key order:
// classes[].{name, file, causes{C1..C6}, total, findings[]}, metrics[] (when
// present), diagnostics[], summary{files_parsed, files_failed}.
std::string format_report(const RunReport& report, ReportFormat format);

// Parses a JSON report back; round-trips format_report(..., Json) exactly.
RunReport parse_report_json(const std::string& text);

// Command-line front end. `args` excludes argv[0]. When --format is absent
// the PICIP_FORMAT environment variable supplies the default.
struct CliParse {
    std::optional<RunConfig> config;
    std::string error;
    bool show_help = false;
};

CliParse parse_cli_args(const std::vector<std::string>& args);
std::string_view cli_usage();

} // namespace picip
