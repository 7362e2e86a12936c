#include "picip/report.hpp"

#include "picip/detectors.hpp"
#include "picip/parser.hpp"
#include "picip/scoring.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace fs = std::filesystem;

namespace picip {

namespace {

// Cause table row labels, C1..C6.
constexpr std::array<std::string_view, 6> kCauseLabels = {
    "The superclass of inner class is its outer class.",
    "The superclass of inner class is inheriting from the outer class of that inner class.",
    "The name of inner class is same with external class.",
    "Overriding methods found in the inner class where cyclic inheritance takes place.",
    "Deep level of inner class (more than one level)",
    "Inheritance at outer class and inner class.",
};

constexpr std::array<std::string_view, 6> kCauseKeys = {"C1", "C2", "C3", "C4", "C5", "C6"};

ReportFinding to_report_finding(const Finding& finding) {
    ReportFinding out;
    out.kind = std::string(to_string(finding.kind));
    out.subject = finding.subject.display();
    for (const QualifiedName& name : finding.related)
        out.related.push_back(name.display());
    out.file = finding.span.file;
    out.line = finding.span.line;
    out.column = finding.span.column;
    out.message = finding.message;
    return out;
}

Diagnostic finding_to_diagnostic(const Finding& finding) {
    Diagnostic diag;
    diag.kind = std::string(to_string(finding.kind));
    diag.subject = finding.subject.display();
    for (const QualifiedName& name : finding.related)
        diag.related.push_back(name.display());
    diag.file = finding.span.file;
    diag.line = finding.span.line;
    diag.column = finding.span.column;
    diag.message = finding.message;
    return diag;
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
    std::sort(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.file, a.line, a.column, a.kind, a.subject, a.message) <
               std::tie(b.file, b.line, b.column, b.kind, b.subject, b.message);
    });
}

std::vector<std::string> collect_java_files(const RunConfig& config, RunOutcome& outcome,
                                            bool& input_error) {
    std::set<std::string> files;
    for (const std::string& input : config.inputs) {
        fs::path path(input);
        std::error_code ec;
        if (fs::is_directory(path, ec)) {
            for (fs::recursive_directory_iterator it(path, ec), end; !ec && it != end;
                 it.increment(ec)) {
                if (it->is_regular_file(ec) && it->path().extension() == ".java")
                    files.insert(it->path().lexically_normal().generic_string());
            }
        } else if (fs::is_regular_file(path, ec)) {
            files.insert(path.lexically_normal().generic_string());
        } else {
            input_error = true;
            outcome.errors.push_back("error: input path does not exist: " + input);
            outcome.report.diagnostics.push_back(
                {"MissingInput", "", {}, input, 0, 0, "input path does not exist"});
        }
    }
    return {files.begin(), files.end()}; // lexicographic order
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

RunOutcome run(const RunConfig& config) {
    RunOutcome outcome;
    RunReport& report = outcome.report;
    bool input_error = false;

    std::vector<std::string> paths = collect_java_files(config, outcome, input_error);

    std::vector<ParsedFile> units;
    for (const std::string& path : paths) {
        std::optional<std::string> text = read_file(path);
        if (!text) {
            ++report.files_failed;
            outcome.errors.push_back("error: cannot read file: " + path);
            report.diagnostics.push_back({"ReadError", "", {}, path, 0, 0, "cannot read file"});
            continue;
        }
        ParseResult parsed = parse_unit({path, std::move(*text)});
        if (parsed.error) {
            ++report.files_failed;
            std::ostringstream msg;
            msg << "error: " << path << ":" << parsed.error->span.line << ":"
                << parsed.error->span.column << ": " << parsed.error->message;
            outcome.errors.push_back(msg.str());
            report.diagnostics.push_back({"ParseError", "", {}, path, parsed.error->span.line,
                                          parsed.error->span.column, parsed.error->message});
            continue;
        }
        ++report.files_parsed;
        for (const std::string& note : parsed.notes)
            report.diagnostics.push_back({"SkippedDeclaration", "", {}, path, 0, 0, note});
        units.push_back({path, std::move(parsed.classes)});
    }

    ClassGraph graph = build_graph(std::move(units));
    for (const GraphWarning& warning : graph.warnings()) {
        const char* kind = warning.kind == GraphWarning::Kind::DuplicateTopLevel
                               ? "DuplicateTopLevel"
                               : "AmbiguousSuperclass";
        report.diagnostics.push_back({kind, "", {}, warning.span.file, warning.span.line,
                                      warning.span.column, warning.message});
    }

    std::vector<Finding> findings = detect_all(graph);
    for (const Finding& finding : findings) {
        if (is_compiler_diagnostic(finding.kind))
            report.diagnostics.push_back(finding_to_diagnostic(finding));
    }

    std::vector<ClassId> subjects = config.per_class ? graph.all() : graph.top_level();
    std::sort(subjects.begin(), subjects.end(), [&](ClassId a, ClassId b) {
        return std::tie(graph.node(a).file, graph.node(a).name) <
               std::tie(graph.node(b).file, graph.node(b).name);
    });
    for (ClassId subject : subjects) {
        PicipScore score = score_class(graph, findings, subject);
        ClassReport row;
        row.name = score.subject.display();
        row.file = graph.node(subject).file;
        for (int i = 0; i < 6; ++i)
            row.causes[i] = score.cause_bits[i] ? 1 : 0;
        row.total = score.total;
        for (const Finding& finding : score.findings)
            row.findings.push_back(to_report_finding(finding));
        report.classes.push_back(std::move(row));
    }

    if (config.include_metrics) {
        report.has_metrics = true;
        std::vector<ClassId> ids = graph.all();
        std::sort(ids.begin(), ids.end(), [&](ClassId a, ClassId b) {
            return std::tie(graph.node(a).file, graph.node(a).name) <
                   std::tie(graph.node(b).file, graph.node(b).name);
        });
        for (ClassId id : ids) {
            MetricsRecord record = compute_metrics(graph, id);
            report.metrics.push_back({record.subject.display(), graph.node(id).file, record.dit,
                                      record.noc, record.tpc, record.tpac, record.tac});
        }
    }

    sort_diagnostics(report.diagnostics);

    if (input_error || report.files_failed > 0) {
        outcome.exit_code = 2;
    } else if (config.fail_threshold) {
        bool hit = std::any_of(report.classes.begin(), report.classes.end(),
                               [&](const ClassReport& c) { return c.total >= *config.fail_threshold; });
        outcome.exit_code = hit ? 1 : 0;
    }
    return outcome;
}

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json finding_to_json(const ReportFinding& finding) {
    ordered_json j;
    j["kind"] = finding.kind;
    j["subject"] = finding.subject;
    j["related"] = finding.related;
    j["file"] = finding.file;
    j["line"] = finding.line;
    j["column"] = finding.column;
    j["message"] = finding.message;
    return j;
}

std::string format_json(const RunReport& report) {
    ordered_json j;
    j["classes"] = ordered_json::array();
    for (const ClassReport& row : report.classes) {
        ordered_json c;
        c["name"] = row.name;
        c["file"] = row.file;
        ordered_json causes;
        for (int i = 0; i < 6; ++i)
            causes[std::string(kCauseKeys[i])] = row.causes[i];
        c["causes"] = causes;
        c["total"] = row.total;
        c["findings"] = ordered_json::array();
        for (const ReportFinding& finding : row.findings)
            c["findings"].push_back(finding_to_json(finding));
        j["classes"].push_back(std::move(c));
    }
    if (report.has_metrics) {
        j["metrics"] = ordered_json::array();
        for (const MetricsRow& row : report.metrics) {
            ordered_json m;
            m["name"] = row.name;
            m["file"] = row.file;
            if (row.dit)
                m["dit"] = *row.dit;
            else
                m["dit"] = nullptr;
            m["noc"] = row.noc;
            m["tpc"] = row.tpc;
            m["tpac"] = row.tpac;
            if (row.tac)
                m["tac"] = *row.tac;
            else
                m["tac"] = nullptr;
            j["metrics"].push_back(std::move(m));
        }
    }
    j["diagnostics"] = ordered_json::array();
    for (const Diagnostic& diag : report.diagnostics) {
        ordered_json d;
        d["kind"] = diag.kind;
        d["subject"] = diag.subject;
        d["related"] = diag.related;
        d["file"] = diag.file;
        d["line"] = diag.line;
        d["column"] = diag.column;
        d["message"] = diag.message;
        j["diagnostics"].push_back(std::move(d));
    }
    j["summary"]["files_parsed"] = report.files_parsed;
    j["summary"]["files_failed"] = report.files_failed;
    return j.dump(2) + "\n";
}

std::string format_text(const RunReport& report) {
    std::size_t width = 0;
    for (std::string_view label : kCauseLabels)
        width = std::max(width, label.size());

    std::ostringstream out;
    for (const ClassReport& row : report.classes) {
        out << "class " << row.name << " (" << row.file << ")\n";
        for (int i = 0; i < 6; ++i) {
            out << "  " << kCauseLabels[i]
                << std::string(width - kCauseLabels[i].size() + 2, ' ') << row.causes[i] << "\n";
        }
        out << "  total: " << row.total << "\n";
        for (const ReportFinding& finding : row.findings) {
            out << "    [" << finding.kind << "] " << finding.file << ":" << finding.line << ":"
                << finding.column << " " << finding.message << "\n";
        }
        out << "\n";
    }
    if (report.has_metrics) {
        out << "metrics:\n";
        for (const MetricsRow& row : report.metrics) {
            out << "  " << row.name << " (" << row.file << ")  dit=";
            row.dit ? out << *row.dit : out << "undefined-due-to-cycle";
            out << " noc=" << row.noc << " tpc=" << row.tpc << " tpac=" << row.tpac << " tac=";
            row.tac ? out << *row.tac : out << "undefined-due-to-cycle";
            out << "\n";
        }
        out << "\n";
    }
    if (!report.diagnostics.empty()) {
        out << "diagnostics:\n";
        for (const Diagnostic& diag : report.diagnostics) {
            out << "  [" << diag.kind << "] " << diag.file;
            if (diag.line > 0)
                out << ":" << diag.line << ":" << diag.column;
            out << " " << diag.message << "\n";
        }
        out << "\n";
    }
    out << "summary: " << report.files_parsed << " files parsed, " << report.files_failed
        << " files failed\n";
    return out.str();
}

} // namespace

std::string format_report(const RunReport& report, ReportFormat format) {
    return format == ReportFormat::Json ? format_json(report) : format_text(report);
}

RunReport parse_report_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    RunReport report;
    for (const auto& c : j.at("classes")) {
        ClassReport row;
        row.name = c.at("name").get<std::string>();
        row.file = c.at("file").get<std::string>();
        for (int i = 0; i < 6; ++i)
            row.causes[i] = c.at("causes").at(std::string(kCauseKeys[i])).get<int>();
        row.total = c.at("total").get<int>();
        for (const auto& f : c.at("findings")) {
            ReportFinding finding;
            finding.kind = f.at("kind").get<std::string>();
            finding.subject = f.at("subject").get<std::string>();
            finding.related = f.at("related").get<std::vector<std::string>>();
            finding.file = f.at("file").get<std::string>();
            finding.line = f.at("line").get<int>();
            finding.column = f.at("column").get<int>();
            finding.message = f.at("message").get<std::string>();
            row.findings.push_back(std::move(finding));
        }
        report.classes.push_back(std::move(row));
    }
    if (j.contains("metrics")) {
        report.has_metrics = true;
        for (const auto& m : j.at("metrics")) {
            MetricsRow row;
            row.name = m.at("name").get<std::string>();
            row.file = m.at("file").get<std::string>();
            if (!m.at("dit").is_null())
                row.dit = m.at("dit").get<int>();
            row.noc = m.at("noc").get<int>();
            row.tpc = m.at("tpc").get<int>();
            row.tpac = m.at("tpac").get<int>();
            if (!m.at("tac").is_null())
                row.tac = m.at("tac").get<int>();
            report.metrics.push_back(std::move(row));
        }
    }
    for (const auto& d : j.at("diagnostics")) {
        Diagnostic diag;
        diag.kind = d.at("kind").get<std::string>();
        diag.subject = d.at("subject").get<std::string>();
        diag.related = d.at("related").get<std::vector<std::string>>();
        diag.file = d.at("file").get<std::string>();
        diag.line = d.at("line").get<int>();
        diag.column = d.at("column").get<int>();
        diag.message = d.at("message").get<std::string>();
        report.diagnostics.push_back(std::move(diag));
    }
    report.files_parsed = j.at("summary").at("files_parsed").get<int>();
    report.files_failed = j.at("summary").at("files_failed").get<int>();
    return report;
}

// ---------------------------------------------------------------------------
// Command line
// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kUsage =
    R"(usage: picip <paths...> [--format text|json] [--fail-threshold N] [--metrics] [--per-class]

Analyzes Java sources for inner-class inheritance problems. Every top-level
class receives six cause indicators summed to a 0-6 total; inheritance cycles
the Java compiler would reject are reported separately as diagnostics.

options:
  --format text|json   output format (default text; PICIP_FORMAT sets the default)
  --fail-threshold N   exit 1 when any class total reaches N (1-6)
  --metrics            include DIT/NOC/TPC/TPAC/TAC for every class
  --per-class          additionally score nested classes
  -h, --help           show this help

exit codes: 0 clean, 1 threshold reached, 2 missing or unparsable input
)";

std::optional<std::string> flag_value(const std::string& arg, std::string_view flag,
                                      const std::vector<std::string>& args, std::size_t& i) {
    if (arg == flag) {
        if (i + 1 >= args.size())
            return std::nullopt;
        return args[++i];
    }
    std::string prefix = std::string(flag) + "=";
    if (arg.rfind(prefix, 0) == 0)
        return arg.substr(prefix.size());
    return std::nullopt;
}

} // namespace

std::string_view cli_usage() {
    return kUsage;
}

CliParse parse_cli_args(const std::vector<std::string>& args) {
    CliParse parse;
    RunConfig config;
    bool format_given = false;

    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg == "--help" || arg == "-h") {
            parse.show_help = true;
            return parse;
        }
        if (arg == "--metrics") {
            config.include_metrics = true;
            continue;
        }
        if (arg == "--per-class") {
            config.per_class = true;
            continue;
        }
        if (arg == "--format" || arg.rfind("--format=", 0) == 0) {
            std::optional<std::string> value = flag_value(arg, "--format", args, i);
            if (!value) {
                parse.error = "--format requires a value (text|json)";
                return parse;
            }
            if (*value == "text") {
                config.format = ReportFormat::Text;
            } else if (*value == "json") {
                config.format = ReportFormat::Json;
            } else {
                parse.error = "unknown format '" + *value + "' (expected text|json)";
                return parse;
            }
            format_given = true;
            continue;
        }
        if (arg == "--fail-threshold" || arg.rfind("--fail-threshold=", 0) == 0) {
            std::optional<std::string> value = flag_value(arg, "--fail-threshold", args, i);
            if (!value) {
                parse.error = "--fail-threshold requires a value (1-6)";
                return parse;
            }
            int n = 0;
            try {
                std::size_t used = 0;
                n = std::stoi(*value, &used);
                if (used != value->size())
                    throw std::invalid_argument(*value);
            } catch (const std::exception&) {
                parse.error = "invalid --fail-threshold '" + *value + "'";
                return parse;
            }
            if (n < 1 || n > 6) {
                parse.error = "--fail-threshold must be within 1-6";
                return parse;
            }
            config.fail_threshold = n;
            continue;
        }
        if (!arg.empty() && arg[0] == '-') {
            parse.error = "unknown option '" + arg + "'";
            return parse;
        }
        config.inputs.push_back(arg);
    }

    if (!format_given) {
        if (const char* env = std::getenv("PICIP_FORMAT")) {
            if (std::string_view(env) == "json")
                config.format = ReportFormat::Json;
            else if (std::string_view(env) == "text")
                config.format = ReportFormat::Text;
        }
    }
    if (config.inputs.empty()) {
        parse.error = "no input paths given";
        return parse;
    }
    parse.config = std::move(config);
    return parse;
}

} // namespace picip
