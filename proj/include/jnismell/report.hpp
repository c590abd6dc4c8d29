#ifndef JNISMELL_REPORT_HPP
#define JNISMELL_REPORT_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jnismell/detect.hpp"

namespace jnismell {

struct FileSummary {
    std::string file_path;
    bool is_jni = false;
    int loc = 0;
    std::array<int, kSmellTypeCount> counts_by_type{};
    bool smelly = false;

    int total_occurrences() const;
};

struct ReleaseReport {
    std::string release_id;
    std::vector<FileSummary> file_summaries;  // sorted by file_path
    int jni_file_count = 0;
    int smelly_jni_file_count = 0;
    int total_occurrences = 0;
    int jni_loc = 0;
    double pct_jni_files_smelly = 0.0;  // 0 when there is no JNI file
    double density_per_kloc = 0.0;      // occurrences per 1000 JNI lines
    // Fraction of smelly files containing each type.
    std::array<double, kSmellTypeCount> pct_by_type{};
};

ReleaseReport summarize(const CodebaseModel& model,
                        const std::vector<SmellOccurrence>& occurrences);

struct ValidationMetrics {
    long long tp = 0;
    long long fp = 0;
    long long fn = 0;
    std::optional<double> precision;  // absent when tp+fp == 0
    std::optional<double> recall;     // absent when tp+fn == 0
};

ValidationMetrics validation_metrics(long long tp, long long fp, long long fn);

// Integer percent as printed in the comparison tables: floor, rounding up
// only when the fractional part reaches three quarters.
int printed_percent(double ratio);

// Ground truth and detection results aggregated to (file, smell_type) counts.
using OccurrenceCounts = std::map<std::pair<std::string, std::string>, long long>;

OccurrenceCounts aggregate_occurrences(const std::vector<SmellOccurrence>& occurrences);
OccurrenceCounts load_truth_csv(const std::string& path);
ValidationMetrics compare_against_truth(const OccurrenceCounts& detected,
                                        const OccurrenceCounts& truth);

// occurrences CSV: release,file,class,method,parameter,smell_type,line,evidence
std::string occurrences_csv(const std::string& release_id,
                            const std::vector<SmellOccurrence>& occurrences);
// summary CSV: release,file,is_jni,loc,<one column per smell type>,smelly
std::string summary_csv(const ReleaseReport& report);
// JSON mirror of both plus the release ratios (ratios at 4 decimal places).
std::string report_json(const ReleaseReport& report,
                        const std::vector<SmellOccurrence>& occurrences);

// Writes content to path atomically (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content);

// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace jnismell

#endif
