#include "jnismell/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "jnismell/csv.hpp"

namespace jnismell {

int FileSummary::total_occurrences() const {
    int total = 0;
    for (int n : counts_by_type) total += n;
    return total;
}

ReleaseReport summarize(const CodebaseModel& model,
                        const std::vector<SmellOccurrence>& occurrences) {
    // Which files touch the JNI boundary.
    std::set<std::string> jni_files;
    for (const JavaClassFacts& cls : model.java_classes) {
        if (!cls.native_decls.empty() || !cls.native_call_sites.empty() ||
            !cls.library_loads.empty())
            jni_files.insert(cls.file_path);
    }
    std::set<size_t> bound;
    for (const Binding& binding : model.bindings)
        for (size_t impl : binding.impl_indices) bound.insert(impl);
    for (size_t f = 0; f < model.native_functions.size(); ++f) {
        const NativeFunctionFacts& fn = model.native_functions[f];
        if (!fn.jni_api_calls.empty() || bound.count(f) ||
            fn.symbol_name.rfind("Java_", 0) == 0)
            jni_files.insert(fn.file_path);
    }

    std::map<std::string, const SourceFile*> files_by_path;
    for (const SourceFile& file : model.files)
        files_by_path[file.file_path] = &file;

    ReleaseReport report;
    report.release_id = model.release_id;

    std::map<std::string, FileSummary> summaries;
    for (const std::string& path : jni_files) {
        auto it = files_by_path.find(path);
        if (it == files_by_path.end())
            throw std::runtime_error("JNI artifact references file missing from "
                                     "the model: " + path);
        FileSummary summary;
        summary.file_path = path;
        summary.is_jni = true;
        summary.loc = it->second->loc;
        summaries.emplace(path, std::move(summary));
    }

    for (const SmellOccurrence& occ : occurrences) {
        if (!files_by_path.count(occ.file_path))
            throw std::runtime_error("occurrence references file missing from "
                                     "the model: " + occ.file_path);
        auto it = summaries.find(occ.file_path);
        if (it == summaries.end())
            throw std::runtime_error("occurrence on a file without JNI "
                                     "artifacts: " + occ.file_path);
        ++it->second.counts_by_type[static_cast<int>(occ.type)];
        it->second.smelly = true;
    }

    std::array<int, kSmellTypeCount> smelly_files_with_type{};
    for (auto& [path, summary] : summaries) {
        report.file_summaries.push_back(summary);
        ++report.jni_file_count;
        report.jni_loc += summary.loc;
        if (summary.smelly) {
            ++report.smelly_jni_file_count;
            for (int t = 0; t < kSmellTypeCount; ++t)
                if (summary.counts_by_type[t] > 0) ++smelly_files_with_type[t];
        }
    }
    report.total_occurrences = static_cast<int>(occurrences.size());

    if (report.jni_file_count > 0)
        report.pct_jni_files_smelly =
            static_cast<double>(report.smelly_jni_file_count) /
            report.jni_file_count;
    if (report.jni_loc > 0)
        report.density_per_kloc = report.total_occurrences /
                                  (report.jni_loc / 1000.0);
    for (int t = 0; t < kSmellTypeCount; ++t)
        report.pct_by_type[t] =
            report.smelly_jni_file_count == 0
                ? 0.0
                : static_cast<double>(smelly_files_with_type[t]) /
                      report.smelly_jni_file_count;
    return report;
}

ValidationMetrics validation_metrics(long long tp, long long fp, long long fn) {
    ValidationMetrics m;
    m.tp = tp;
    m.fp = fp;
    m.fn = fn;
    if (tp + fp > 0) m.precision = static_cast<double>(tp) / (tp + fp);
    if (tp + fn > 0) m.recall = static_cast<double>(tp) / (tp + fn);
    return m;
}

int printed_percent(double ratio) {
    double pct = ratio * 100.0;
    double whole = std::floor(pct);
    int out = static_cast<int>(whole);
    if (pct - whole >= 0.75) ++out;
    return out;
}

OccurrenceCounts aggregate_occurrences(
    const std::vector<SmellOccurrence>& occurrences) {
    OccurrenceCounts counts;
    for (const SmellOccurrence& occ : occurrences)
        ++counts[{occ.file_path, to_string(occ.type)}];
    return counts;
}

OccurrenceCounts load_truth_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open truth file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();

    OccurrenceCounts counts;
    std::vector<std::vector<std::string>> rows = parse_csv(buffer.str());
    for (size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty() || (row.size() == 1 && row[0].empty())) continue;
        if (r == 0 && !row.empty() && row[0] == "file") continue;  // header
        if (row.size() != 3)
            throw std::runtime_error(path + ": expected 3 columns, got " +
                                     std::to_string(row.size()));
        if (!smell_type_from_string(row[1]))
            throw std::runtime_error(path + ": unknown smell type " + row[1]);
        counts[{row[0], row[1]}] += std::stoll(row[2]);
    }
    return counts;
}

ValidationMetrics compare_against_truth(const OccurrenceCounts& detected,
                                        const OccurrenceCounts& truth) {
    long long tp = 0, fp = 0, fn = 0;
    std::set<std::pair<std::string, std::string>> keys;
    for (const auto& [key, n] : detected) keys.insert(key);
    for (const auto& [key, n] : truth) keys.insert(key);
    for (const auto& key : keys) {
        auto d = detected.find(key);
        auto t = truth.find(key);
        long long nd = d == detected.end() ? 0 : d->second;
        long long nt = t == truth.end() ? 0 : t->second;
        tp += std::min(nd, nt);
        fp += std::max(nd - nt, 0LL);
        fn += std::max(nt - nd, 0LL);
    }
    return validation_metrics(tp, fp, fn);
}

std::string occurrences_csv(const std::string& release_id,
                            const std::vector<SmellOccurrence>& occurrences) {
    std::ostringstream out;
    out << "release,file,class,method,parameter,smell_type,line,evidence\n";
    for (const SmellOccurrence& occ : occurrences) {
        out << csv_row({release_id, occ.file_path, occ.subject, occ.method_name,
                        occ.param_name, to_string(occ.type),
                        occ.line > 0 ? std::to_string(occ.line) : "",
                        occ.evidence});
    }
    return out.str();
}

std::string summary_csv(const ReleaseReport& report) {
    std::ostringstream out;
    out << "release,file,is_jni,loc";
    for (SmellType t : all_smell_types()) out << "," << to_string(t);
    out << ",smelly\n";
    for (const FileSummary& summary : report.file_summaries) {
        std::vector<std::string> fields = {
            report.release_id,
            summary.file_path,
            summary.is_jni ? "1" : "0",
            std::to_string(summary.loc),
        };
        for (int t = 0; t < kSmellTypeCount; ++t)
            fields.push_back(std::to_string(summary.counts_by_type[t]));
        fields.push_back(summary.smelly ? "1" : "0");
        out << csv_row(fields);
    }
    return out.str();
}

std::string report_json(const ReleaseReport& report,
                        const std::vector<SmellOccurrence>& occurrences) {
    nlohmann::ordered_json root;
    root["release"] = report.release_id;
    root["jniFileCount"] = report.jni_file_count;
    root["smellyJniFileCount"] = report.smelly_jni_file_count;
    root["totalOccurrences"] = report.total_occurrences;
    root["jniLoc"] = report.jni_loc;
    // Ratio fields carry exactly four decimals, matching the CSV outputs.
    root["pctJniFilesSmelly"] = format_fixed(report.pct_jni_files_smelly, 4);
    root["densityPerKloc"] = format_fixed(report.density_per_kloc, 4);
    nlohmann::ordered_json by_type = nlohmann::ordered_json::object();
    for (int t = 0; t < kSmellTypeCount; ++t)
        by_type[to_string(static_cast<SmellType>(t))] =
            format_fixed(report.pct_by_type[t], 4);
    root["pctByType"] = std::move(by_type);

    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for (const FileSummary& summary : report.file_summaries) {
        nlohmann::ordered_json row;
        row["file"] = summary.file_path;
        row["isJni"] = summary.is_jni;
        row["loc"] = summary.loc;
        nlohmann::ordered_json counts = nlohmann::ordered_json::object();
        for (int t = 0; t < kSmellTypeCount; ++t)
            counts[to_string(static_cast<SmellType>(t))] =
                summary.counts_by_type[t];
        row["countsByType"] = std::move(counts);
        row["smelly"] = summary.smelly;
        files.push_back(std::move(row));
    }
    root["files"] = std::move(files);

    nlohmann::ordered_json occs = nlohmann::ordered_json::array();
    for (const SmellOccurrence& occ : occurrences) {
        nlohmann::ordered_json row;
        row["file"] = occ.file_path;
        row["class"] = occ.subject;
        row["method"] = occ.method_name;
        row["parameter"] = occ.param_name;
        row["smellType"] = to_string(occ.type);
        row["line"] = occ.line;
        row["evidence"] = occ.evidence;
        occs.push_back(std::move(row));
    }
    root["occurrences"] = std::move(occs);

    return root.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
        if (!out) throw std::runtime_error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace jnismell
