#include <array>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jnismell/csv.hpp"
#include "jnismell/detect.hpp"
#include "jnismell/history.hpp"
#include "jnismell/report.hpp"
#include "jnismell/scan.hpp"
#include "jnismell/stats.hpp"

namespace {

using namespace jnismell;

// Counts per (release, file) for the 15 smell types, feeding the regression.
using CountsByFile =
    std::map<std::pair<std::string, std::string>, std::array<int, kSmellTypeCount>>;

DetectionConfig config_from(const std::string& config_path) {
    if (config_path.empty()) return DetectionConfig{};
    return load_config_file(config_path);
}

void print_diagnostics(const Diagnostics& diagnostics) {
    for (const Diagnostic& d : diagnostics) std::cerr << d.format() << "\n";
}

std::string basename_of(const std::string& path) {
    std::filesystem::path p(path);
    if (p.filename().empty()) p = p.parent_path();
    std::string name = p.filename().string();
    return name.empty() ? path : name;
}

// Release tags can contain '/', which must not create subdirectories.
std::string release_file_stem(const std::string& release_id) {
    std::string stem = release_id;
    for (char& c : stem)
        if (c == '/' || c == '\\') c = '_';
    return stem;
}

void write_release_outputs(const std::string& out_dir, const ReleaseReport& report,
                           const std::vector<SmellOccurrence>& occurrences,
                           const std::string& format) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    fs::path base = fs::path(out_dir) / release_file_stem(report.release_id);
    if (format == "csv" || format == "both") {
        write_file_atomic(base.string() + ".occurrences.csv",
                          occurrences_csv(report.release_id, occurrences));
        write_file_atomic(base.string() + ".summary.csv", summary_csv(report));
    }
    if (format == "json" || format == "both") {
        write_file_atomic(base.string() + ".report.json",
                          report_json(report, occurrences));
    }
}

// Fisher per release plus the per-system regression and smell ranking, from
// labeled rows and per-file smell counts.
void run_battery(const std::vector<LabelRow>& rows, const CountsByFile& counts,
                 const std::string& system_id, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    // Contingency tables, releases kept in first-appearance order.
    std::vector<std::string> release_order;
    std::map<std::string, ContingencyTable> tables;
    for (const LabelRow& row : rows) {
        if (!tables.count(row.release)) release_order.push_back(row.release);
        ContingencyTable& t = tables[row.release];
        if (row.smelly && row.buggy) ++t.sb;
        else if (row.smelly) ++t.snb;
        else if (row.buggy) ++t.bns;
        else ++t.nbns;
    }
    std::vector<std::pair<std::string, ContingencyTable>> per_release;
    for (const std::string& release : release_order)
        per_release.push_back({release, tables[release]});
    write_file_atomic((fs::path(out_dir) / "fisher.csv").string(),
                      fisher_csv(per_release));

    // Regression over the smelly rows: smell-type counts plus loc and
    // prior_fixes as controls, buggy as the response.
    std::vector<std::string> smell_names;
    for (SmellType type : all_smell_types()) smell_names.push_back(to_string(type));

    FeatureMatrix matrix;
    matrix.column_names = smell_names;
    matrix.column_names.push_back("loc");
    matrix.column_names.push_back("prior_fixes");
    for (const LabelRow& row : rows) {
        if (!row.smelly) continue;
        std::vector<double> features(matrix.column_names.size(), 0.0);
        auto it = counts.find({row.release, row.file});
        if (it != counts.end())
            for (int t = 0; t < kSmellTypeCount; ++t)
                features[t] = it->second[t];
        features[kSmellTypeCount] = row.loc;
        features[kSmellTypeCount + 1] = row.prior_fixes;
        matrix.rows.push_back(std::move(features));
        matrix.response.push_back(row.buggy ? 1 : 0);
    }

    std::vector<std::pair<std::string, RegressionResult>> per_system;
    if (!matrix.rows.empty()) {
        // Constant columns carry no signal and break rank pruning.
        for (size_t c = matrix.column_names.size(); c-- > 0;) {
            bool constant = true;
            for (const auto& row : matrix.rows)
                if (row[c] != matrix.rows.front()[c]) { constant = false; break; }
            if (!constant) continue;
            std::cerr << "note: dropping constant column "
                      << matrix.column_names[c] << "\n";
            matrix.column_names.erase(matrix.column_names.begin() + c);
            for (auto& row : matrix.rows) row.erase(row.begin() + c);
        }

        std::vector<double> prevalence;
        for (size_t c = 0; c < matrix.column_names.size(); ++c) {
            int nonzero = 0;
            for (const auto& row : matrix.rows) nonzero += row[c] != 0.0;
            prevalence.push_back(static_cast<double>(nonzero) / matrix.rows.size());
        }
        for (const std::string& name : prune_collinear(matrix, prevalence, 0.6))
            std::cerr << "note: dropping collinear column " << name << "\n";

        per_system.push_back({system_id, logistic_fit(matrix)});
    }
    write_file_atomic((fs::path(out_dir) / "regression.csv").string(),
                      regression_csv(per_system));
    write_file_atomic((fs::path(out_dir) / "ranking.csv").string(),
                      ranking_csv(rank_smells(per_system, smell_names)));
}

int run_detect(const std::string& input, const std::string& config_path,
               const std::string& format, const std::string& out_dir,
               long long fail_on) {
    DetectionConfig config = config_from(config_path);
    CodebaseModel model = scan_directory(input, "worktree");
    print_diagnostics(model.diagnostics);
    std::vector<SmellOccurrence> occurrences = detect_all(model, config);
    ReleaseReport report = summarize(model, occurrences);
    write_release_outputs(out_dir, report, occurrences, format);

    std::cout << "scanned " << model.files.size() << " files, "
              << report.jni_file_count << " jni, " << report.total_occurrences
              << " occurrences, " << report.smelly_jni_file_count
              << " smelly files\n";
    if (fail_on >= 0 && report.total_occurrences > fail_on) return 1;
    return 0;
}

int run_validate(const std::string& input, const std::string& config_path,
                 const std::string& truth_path) {
    DetectionConfig config = config_from(config_path);
    CodebaseModel model = scan_directory(input, "worktree");
    print_diagnostics(model.diagnostics);
    std::vector<SmellOccurrence> occurrences = detect_all(model, config);
    ValidationMetrics metrics = compare_against_truth(
        aggregate_occurrences(occurrences), load_truth_csv(truth_path));

    std::cout << "tp=" << metrics.tp << " fp=" << metrics.fp
              << " fn=" << metrics.fn << "\n";
    std::cout << "precision="
              << (metrics.precision ? format_fixed(*metrics.precision, 4) : "NA")
              << "\n";
    std::cout << "recall="
              << (metrics.recall ? format_fixed(*metrics.recall, 4) : "NA")
              << "\n";
    return 0;
}

int run_history(const std::string& repo_path, const std::string& releases_arg,
                const std::string& config_path, const std::string& format,
                const std::string& out_dir, const std::string& keywords_path) {
    DetectionConfig config = config_from(config_path);
    GitRepo repo{repo_path};

    std::vector<std::string> tags;
    for (size_t start = 0; start <= releases_arg.size();) {
        size_t comma = releases_arg.find(',', start);
        if (comma == std::string::npos) comma = releases_arg.size();
        std::string tag = releases_arg.substr(start, comma - start);
        if (!tag.empty()) tags.push_back(tag);
        start = comma + 1;
    }
    if (tags.empty()) {
        std::cerr << "error: --releases must name at least one tag\n";
        return 2;
    }

    std::vector<ReleaseWindow> windows;
    try {
        windows = resolve_releases(repo, tags);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::vector<std::string> keywords = keywords_path.empty()
                                            ? default_fix_keywords()
                                            : load_keywords_file(keywords_path);
    std::vector<CommitRecord> commits = load_commits(repo);
    std::vector<CommitRecord> fixes = identify_fix_commits(commits, keywords);
    std::cout << commits.size() << " commits, " << fixes.size()
              << " fix commits\n";

    Diagnostics mining_diagnostics;
    std::vector<FaultLink> links;
    for (const CommitRecord& fix : fixes) {
        std::vector<FaultLink> traced = trace_inducing(repo, fix, &mining_diagnostics);
        links.insert(links.end(), traced.begin(), traced.end());
    }
    print_diagnostics(mining_diagnostics);

    std::map<std::string, std::vector<std::string>> files_per_release;
    std::map<std::string, ReleaseReport> reports;
    std::map<std::string, std::map<std::string, FileMetrics>> metrics;
    CountsByFile counts;

    for (const ReleaseWindow& window : windows) {
        WorktreeGuard worktree(repo, window.commit_hash);
        CodebaseModel model = scan_directory(worktree.path(), window.release_id);
        print_diagnostics(model.diagnostics);
        std::vector<SmellOccurrence> occurrences = detect_all(model, config);
        ReleaseReport report = summarize(model, occurrences);
        write_release_outputs(out_dir, report, occurrences, format);

        std::vector<std::string> jni_files;
        for (const FileSummary& summary : report.file_summaries)
            if (summary.is_jni) jni_files.push_back(summary.file_path);
        for (const SmellOccurrence& occ : occurrences)
            ++counts[{window.release_id, occ.file_path}][static_cast<int>(occ.type)];

        metrics[window.release_id] = release_metrics(
            repo, window.release_id, fixes, worktree.path(), jni_files);
        files_per_release[window.release_id] = std::move(jni_files);

        std::cout << window.release_id << ": " << report.jni_file_count
                  << " jni files, " << report.total_occurrences
                  << " occurrences\n";
        reports[window.release_id] = std::move(report);
    }

    auto labels = label_files(repo, windows, links, files_per_release);

    std::vector<LabelRow> rows;
    for (const ReleaseWindow& window : windows) {
        const ReleaseReport& report = reports[window.release_id];
        const auto& file_metrics_map = metrics[window.release_id];
        for (const FileSummary& summary : report.file_summaries) {
            if (!summary.is_jni) continue;
            LabelRow row;
            row.release = window.release_id;
            row.file = summary.file_path;
            row.smelly = summary.smelly;
            auto label = labels.find({window.release_id, summary.file_path});
            row.buggy = label != labels.end() && label->second;
            row.loc = summary.loc;
            auto m = file_metrics_map.find(summary.file_path);
            if (m != file_metrics_map.end()) {
                row.churn = m->second.churn;
                row.prior_fixes = m->second.prior_bug_fixes;
            }
            rows.push_back(std::move(row));
        }
    }

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    write_file_atomic((fs::path(out_dir) / "labels.csv").string(),
                      labels_csv(rows));
    run_battery(rows, counts, basename_of(repo_path), out_dir);
    std::cout << "wrote labels.csv, fisher.csv, regression.csv, ranking.csv to "
              << out_dir << "\n";
    return 0;
}

int run_stats(const std::string& dir, const std::string& out_arg) {
    namespace fs = std::filesystem;
    std::string out_dir = out_arg.empty() ? dir : out_arg;
    std::vector<LabelRow> rows =
        load_labels_csv((fs::path(dir) / "labels.csv").string());

    std::set<std::string> releases;
    for (const LabelRow& row : rows) releases.insert(row.release);

    CountsByFile counts;
    for (const std::string& release : releases) {
        std::string path =
            (fs::path(dir) / (release_file_stem(release) + ".occurrences.csv"))
                .string();
        for (const auto& fields : parse_csv(read_text_file(path))) {
            if (fields.empty() || (fields.size() == 1 && fields[0].empty()))
                continue;
            if (fields[0] == "release") continue;  // header
            if (fields.size() != 8)
                throw std::runtime_error(path + ": expected 8 columns");
            auto type = smell_type_from_string(fields[5]);
            if (!type)
                throw std::runtime_error(path + ": unknown smell type " + fields[5]);
            ++counts[{fields[0], fields[1]}][static_cast<int>(*type)];
        }
    }

    run_battery(rows, counts, basename_of(dir), out_dir);
    std::cout << "wrote fisher.csv, regression.csv, ranking.csv to " << out_dir
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-language (JNI) design smell detector and fault miner"};
    app.require_subcommand(1);

    std::string config_path, format = "both", out_dir = ".", truth_path;
    std::string keywords_path, releases_arg, input;
    long long fail_on = -1;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--config", config_path,
                        "JSON file overriding detection thresholds");
        if (with_format)
            cmd->add_option("--format", format, "Output format")
                ->check(CLI::IsMember({"csv", "json", "both"}));
        cmd->add_option("--out", out_dir, "Output directory");
    };

    CLI::App* detect =
        app.add_subcommand("detect", "Detect smells in a source tree");
    detect->add_option("path", input, "Source tree to scan")
        ->required()
        ->check(CLI::ExistingDirectory);
    add_common(detect, true);
    detect->add_option("--fail-on", fail_on,
                       "Exit 1 when total occurrences exceed this count");

    CLI::App* history = app.add_subcommand(
        "history", "Detect per release and label files buggy via fix tracing");
    history->add_option("repo", input, "Git repository")
        ->required()
        ->check(CLI::ExistingDirectory);
    history->add_option("--releases", releases_arg, "Comma-separated git tags")
        ->required();
    history->add_option("--keywords", keywords_path,
                        "Fix-commit keyword file, one per line");
    add_common(history, true);

    CLI::App* stats = app.add_subcommand(
        "stats", "Fisher, regression and ranking over produced CSVs");
    stats->add_option("dir", input, "Directory holding labels.csv and occurrence CSVs")
        ->required()
        ->check(CLI::ExistingDirectory);
    std::string stats_out;
    stats->add_option("--out", stats_out, "Output directory (defaults to dir)");

    CLI::App* validate = app.add_subcommand(
        "validate", "Compare detection against a hand-labeled truth CSV");
    validate->add_option("path", input, "Source tree to scan")
        ->required()
        ->check(CLI::ExistingDirectory);
    validate->add_option("--truth", truth_path, "Truth CSV (file,smell_type,count)")
        ->required()
        ->check(CLI::ExistingFile);
    validate->add_option("--config", config_path,
                         "JSON file overriding detection thresholds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (detect->parsed())
            return run_detect(input, config_path, format, out_dir, fail_on);
        if (history->parsed())
            return run_history(input, releases_arg, config_path, format, out_dir,
                               keywords_path);
        if (stats->parsed()) return run_stats(input, stats_out);
        if (validate->parsed())
            return run_validate(input, config_path, truth_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
