#include "jnismell/history.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jnismell/csv.hpp"
#include "jnismell/report.hpp"
#include "jnismell/text_scan.hpp"

namespace jnismell {
namespace {

// Hash of git's empty tree, used as the diff base for root commits.
constexpr const char* kEmptyTree = "4b825dc642cb6eb9a060e54bf8d69288fbee4904";

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += "'";
    return out;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        std::string line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        start = nl + 1;
    }
    return lines;
}

bool whitespace_only(const std::string& s) {
    return s.find_first_not_of(" \t\r\f\v") == std::string::npos;
}

// "a/foo" -> "foo"; git quotes exotic paths, which we pass through as-is.
std::string strip_diff_prefix(const std::string& path) {
    if (path.size() >= 2 && (path[0] == 'a' || path[0] == 'b') && path[1] == '/')
        return path.substr(2);
    return path;
}

// Resolves numstat rename notation ("old => new", "pre{old => new}post") to
// the post-image path.
std::string numstat_new_path(const std::string& raw) {
    size_t open = raw.find('{');
    size_t arrow = raw.find(" => ");
    if (arrow == std::string::npos) return raw;
    if (open != std::string::npos && open < arrow) {
        size_t close = raw.find('}', arrow);
        if (close != std::string::npos)
            return raw.substr(0, open) + raw.substr(arrow + 4, close - arrow - 4) +
                   raw.substr(close + 1);
    }
    return raw.substr(arrow + 4);
}

int count_lines(const std::string& text) {
    if (text.empty()) return 0;
    int n = 0;
    for (char c : text) n += c == '\n';
    if (text.back() != '\n') ++n;
    return n;
}

int64_t commit_time(const GitRepo& repo, const std::string& hash) {
    std::string out = repo.run({"log", "-1", "--format=%ct", hash});
    return std::stoll(trim(out));
}

}  // namespace

std::pair<int, std::string> GitRepo::try_run(
    const std::vector<std::string>& args) const {
    std::string cmd = "git";
    if (!dir.empty()) cmd += " -C " + shell_quote(dir);
    for (const std::string& arg : args) cmd += " " + shell_quote(arg);
    cmd += " 2>/dev/null";

    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("failed to spawn: " + cmd);
    std::string out;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
        out.append(buffer, got);
    int status = pclose(pipe);
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {exit_code, std::move(out)};
}

std::string GitRepo::run(const std::vector<std::string>& args) const {
    auto [code, out] = try_run(args);
    if (code != 0) {
        std::string what = "git";
        for (const std::string& arg : args) what += " " + arg;
        throw std::runtime_error(what + " failed with status " +
                                 std::to_string(code) + " in " + dir);
    }
    return out;
}

std::vector<CommitRecord> load_commits(const GitRepo& repo) {
    // \x01 separates fields, \x02 terminates records; both are safe inside
    // arbitrary commit messages in practice and never produced by %H/%P/%ct.
    std::string out =
        repo.run({"log", "--pretty=format:%H%x01%P%x01%ct%x01%B%x02"});
    std::vector<CommitRecord> commits;
    size_t start = 0;
    while (start < out.size()) {
        size_t end = out.find('\x02', start);
        if (end == std::string::npos) break;
        std::string record = out.substr(start, end - start);
        start = end + 1;
        // git prints a newline between records; strip the leading remnant.
        size_t first = record.find_first_not_of("\n\r");
        if (first == std::string::npos) continue;
        record = record.substr(first);

        std::vector<std::string> fields;
        size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            size_t sep = record.find('\x01', pos);
            if (sep == std::string::npos)
                throw std::runtime_error("unparseable git log record");
            fields.push_back(record.substr(pos, sep - pos));
            pos = sep + 1;
        }
        fields.push_back(record.substr(pos));

        CommitRecord commit;
        commit.hash = fields[0];
        std::istringstream parents(fields[1]);
        std::string parent;
        while (parents >> parent) commit.parents.push_back(parent);
        commit.timestamp = std::stoll(fields[2]);
        commit.message = fields[3];
        commits.push_back(std::move(commit));
    }
    return commits;
}

const std::vector<std::string>& default_fix_keywords() {
    static const std::vector<std::string> keywords = {
        "fix", "crash", "resolves", "regression", "fall back", "assertion",
        "coverity", "reproducible", "stack-wanted", "steps-wanted", "testcase",
        "fail", "npe", "except", "broken", "bug", "differential testing",
        "error", "addresssanitizer", "hang", "permaorange", "random orange",
        "intermittent", "steps to reproduce", "leak", "stack trace",
        "heap overflow", "freez", "str:", "problem ", "overflow", "avoid",
        " issue", "workaround", "break", "stop"};
    return keywords;
}

std::vector<std::string> load_keywords_file(const std::string& path) {
    std::vector<std::string> keywords;
    for (const std::string& line : split_lines(read_text_file(path))) {
        if (whitespace_only(line)) continue;
        keywords.push_back(to_lower(line));
    }
    if (keywords.empty())
        throw std::runtime_error("keyword file " + path + " has no keywords");
    return keywords;
}

bool is_fix_commit(const CommitRecord& commit,
                   const std::vector<std::string>& keywords) {
    if (keywords.empty())
        throw std::invalid_argument("keyword list must not be empty");
    if (commit.is_merge()) return false;
    std::string message = to_lower(commit.message);
    for (const std::string& keyword : keywords)
        if (message.find(keyword) != std::string::npos) return true;
    return false;
}

std::vector<CommitRecord> identify_fix_commits(
    const std::vector<CommitRecord>& commits,
    const std::vector<std::string>& keywords) {
    std::vector<CommitRecord> fixes;
    for (const CommitRecord& commit : commits)
        if (is_fix_commit(commit, keywords)) fixes.push_back(commit);
    return fixes;
}

std::vector<FileChange> commit_changes(const GitRepo& repo,
                                       const CommitRecord& commit) {
    std::string base = commit.parents.empty() ? kEmptyTree : commit.parents[0];
    std::string out = repo.run({"diff", "-U0", "-M", base, commit.hash});

    std::vector<FileChange> changes;
    FileChange current;
    bool open = false;
    int old_line = 0, new_line = 0;

    auto flush = [&]() {
        if (open) changes.push_back(std::move(current));
        current = FileChange{};
        open = false;
    };

    for (const std::string& line : split_lines(out)) {
        if (starts_with(line, "diff --git ")) {
            flush();
            open = true;
        } else if (!open) {
            continue;
        } else if (starts_with(line, "Binary files ")) {
            current.binary = true;
        } else if (starts_with(line, "--- ")) {
            std::string path = line.substr(4);
            if (path != "/dev/null") current.path = strip_diff_prefix(path);
        } else if (starts_with(line, "+++ ")) {
            // Blame runs against the pre-image, so the old path wins when
            // both sides exist; pure additions only have the new path.
            std::string path = line.substr(4);
            if (current.path.empty() && path != "/dev/null")
                current.path = strip_diff_prefix(path);
        } else if (starts_with(line, "@@ ")) {
            // @@ -oldStart[,oldCount] +newStart[,newCount] @@
            size_t minus = line.find('-');
            size_t plus = line.find('+', minus);
            old_line = std::atoi(line.c_str() + minus + 1);
            new_line = std::atoi(line.c_str() + plus + 1);
        } else if (starts_with(line, "-")) {
            current.deleted_lines.push_back({old_line, line.substr(1)});
            ++old_line;
        } else if (starts_with(line, "+")) {
            current.added_lines.push_back(new_line);
            ++new_line;
        } else if (starts_with(line, " ")) {
            ++old_line;
            ++new_line;
        }
    }
    flush();
    return changes;
}

std::vector<FaultLink> trace_inducing(const GitRepo& repo,
                                      const CommitRecord& fix,
                                      Diagnostics* diagnostics) {
    std::vector<FaultLink> links;
    if (fix.parents.empty()) return links;
    const std::string& parent = fix.parents[0];

    std::set<std::pair<std::string, std::string>> seen;
    for (const FileChange& change : commit_changes(repo, fix)) {
        if (change.binary) {
            if (diagnostics)
                diagnostics->push_back({change.path, 0,
                                        "binary file skipped during fault tracing"});
            continue;
        }
        std::vector<int> lines;
        for (const DeletedLine& deleted : change.deleted_lines)
            if (!whitespace_only(deleted.content)) lines.push_back(deleted.number);
        if (lines.empty()) continue;

        auto [code, blame] = repo.try_run(
            {"blame", "--line-porcelain", parent, "--", change.path});
        if (code != 0) {
            if (diagnostics)
                diagnostics->push_back({change.path, 0,
                                        "blame against parent " + parent +
                                            " failed; file skipped"});
            continue;
        }

        // --line-porcelain repeats the header per line: the first token of
        // each block is "<hash> <orig> <final>"; content lines begin with TAB.
        std::map<int, std::string> line_owner;
        for (const std::string& line : split_lines(blame)) {
            if (line.empty() || line[0] == '\t') continue;
            size_t sp1 = line.find(' ');
            if (sp1 == std::string::npos || sp1 != 40) continue;
            if (line.find_first_not_of("0123456789abcdef") < sp1) continue;
            size_t sp2 = line.find(' ', sp1 + 1);
            if (sp2 == std::string::npos) continue;
            int final_line = std::atoi(line.c_str() + sp2 + 1);
            if (final_line > 0) line_owner[final_line] = line.substr(0, sp1);
        }

        for (int number : lines) {
            auto it = line_owner.find(number);
            if (it == line_owner.end()) continue;
            if (seen.insert({it->second, change.path}).second)
                links.push_back({fix.hash, it->second, change.path});
        }
    }

    std::sort(links.begin(), links.end(),
              [](const FaultLink& a, const FaultLink& b) {
                  return std::tie(a.inducing_hash, a.file_path) <
                         std::tie(b.inducing_hash, b.file_path);
              });
    return links;
}

std::vector<ReleaseWindow> resolve_releases(
    const GitRepo& repo, const std::vector<std::string>& tags) {
    std::vector<ReleaseWindow> releases;
    for (const std::string& tag : tags) {
        auto [code, out] = repo.try_run({"rev-list", "-n", "1", tag});
        if (code != 0 || trim(out).empty()) {
            std::string available = trim(repo.run({"tag", "--list"}));
            std::replace(available.begin(), available.end(), '\n', ' ');
            throw std::runtime_error("unknown release tag '" + tag +
                                     "'; available tags: " +
                                     (available.empty() ? "(none)" : available));
        }
        ReleaseWindow window;
        window.release_id = tag;
        window.commit_hash = trim(out);
        window.tag_time = commit_time(repo, window.commit_hash);
        releases.push_back(std::move(window));
    }
    std::sort(releases.begin(), releases.end(),
              [](const ReleaseWindow& a, const ReleaseWindow& b) {
                  return std::tie(a.tag_time, a.release_id) <
                         std::tie(b.tag_time, b.release_id);
              });
    return releases;
}

std::map<std::pair<std::string, std::string>, bool> label_files(
    const GitRepo& repo, const std::vector<ReleaseWindow>& releases,
    const std::vector<FaultLink>& links,
    const std::map<std::string, std::vector<std::string>>& files_per_release) {
    std::map<std::pair<std::string, std::string>, bool> labels;
    for (const ReleaseWindow& release : releases) {
        auto it = files_per_release.find(release.release_id);
        if (it == files_per_release.end()) continue;
        for (const std::string& file : it->second)
            labels[{release.release_id, file}] = false;
    }

    std::map<std::string, int64_t> when;
    for (const CommitRecord& commit : load_commits(repo))
        when[commit.hash] = commit.timestamp;

    for (const FaultLink& link : links) {
        auto time_it = when.find(link.inducing_hash);
        if (time_it == when.end()) continue;
        int64_t t = time_it->second;
        for (size_t k = 0; k < releases.size(); ++k) {
            int64_t lo = releases[k].tag_time;
            bool last = k + 1 == releases.size();
            int64_t hi = last ? 0 : releases[k + 1].tag_time;
            if (t > lo && (last || t <= hi)) {
                auto label = labels.find({releases[k].release_id, link.file_path});
                if (label != labels.end()) label->second = true;
            }
        }
    }
    return labels;
}

FileMetrics file_metrics(const GitRepo& repo, const std::string& release_tag,
                         const std::string& file_path,
                         const std::vector<CommitRecord>& fix_commits) {
    auto [code, blob] = repo.try_run({"show", release_tag + ":" + file_path});
    if (code != 0)
        throw std::runtime_error(file_path + " is not present at " + release_tag);

    FileMetrics metrics;
    metrics.loc = count_lines(blob);

    std::set<std::string> fix_hashes;
    for (const CommitRecord& commit : fix_commits) fix_hashes.insert(commit.hash);

    std::string out = repo.run({"log", release_tag, "--numstat",
                                "--format=%x01%H", "--", file_path});
    std::string hash;
    for (const std::string& line : split_lines(out)) {
        if (!line.empty() && line[0] == '\x01') {
            hash = line.substr(1);
            if (fix_hashes.count(hash)) ++metrics.prior_bug_fixes;
            continue;
        }
        std::istringstream fields(line);
        std::string added, removed;
        if (!(fields >> added >> removed)) continue;
        if (added != "-") metrics.churn += std::stoll(added);
        if (removed != "-") metrics.churn += std::stoll(removed);
    }
    return metrics;
}

std::map<std::string, FileMetrics> release_metrics(
    const GitRepo& repo, const std::string& release_tag,
    const std::vector<CommitRecord>& fix_commits,
    const std::string& worktree_dir, const std::vector<std::string>& files) {
    std::set<std::string> fix_hashes;
    for (const CommitRecord& commit : fix_commits) fix_hashes.insert(commit.hash);

    std::map<std::string, FileMetrics> by_path;
    std::string out =
        repo.run({"log", release_tag, "--numstat", "--format=%x01%H"});
    bool in_fix = false;
    std::set<std::string> touched;  // paths of the current fix commit
    auto settle = [&]() {
        for (const std::string& path : touched) ++by_path[path].prior_bug_fixes;
        touched.clear();
    };
    for (const std::string& line : split_lines(out)) {
        if (!line.empty() && line[0] == '\x01') {
            settle();
            in_fix = fix_hashes.count(line.substr(1)) > 0;
            continue;
        }
        size_t tab1 = line.find('\t');
        if (tab1 == std::string::npos) continue;
        size_t tab2 = line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos) continue;
        std::string added = line.substr(0, tab1);
        std::string removed = line.substr(tab1 + 1, tab2 - tab1 - 1);
        std::string path = numstat_new_path(line.substr(tab2 + 1));

        FileMetrics& metrics = by_path[path];
        if (added != "-") metrics.churn += std::stoll(added);
        if (removed != "-") metrics.churn += std::stoll(removed);
        if (in_fix) touched.insert(path);
    }
    settle();

    std::map<std::string, FileMetrics> result;
    for (const std::string& file : files) {
        std::filesystem::path on_disk =
            std::filesystem::path(worktree_dir) / file;
        std::ifstream in(on_disk, std::ios::binary);
        if (!in) continue;
        std::ostringstream buffer;
        buffer << in.rdbuf();
        FileMetrics metrics;
        auto it = by_path.find(file);
        if (it != by_path.end()) metrics = it->second;
        metrics.loc = count_lines(buffer.str());
        result[file] = metrics;
    }
    return result;
}

WorktreeGuard::WorktreeGuard(const GitRepo& repo, const std::string& ref)
    : repo_(repo) {
    static int counter = 0;
    std::filesystem::path base = std::filesystem::temp_directory_path();
    std::string name = "jnismell-wt-" + std::to_string(::getpid()) + "-" +
                       std::to_string(counter++);
    path_ = (base / name).string();
    repo_.run({"worktree", "add", "--detach", path_, ref});
}

WorktreeGuard::~WorktreeGuard() {
    if (path_.empty()) return;
    auto [code, out] = repo_.try_run({"worktree", "remove", "--force", path_});
    if (code != 0) {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
        repo_.try_run({"worktree", "prune"});
    }
}

std::string labels_csv(const std::vector<LabelRow>& rows) {
    std::ostringstream out;
    out << "release,file,smelly,buggy,loc,churn,prior_fixes\n";
    for (const LabelRow& row : rows) {
        out << csv_row({row.release, row.file, row.smelly ? "1" : "0",
                        row.buggy ? "1" : "0", std::to_string(row.loc),
                        std::to_string(row.churn),
                        std::to_string(row.prior_fixes)});
    }
    return out.str();
}

std::vector<LabelRow> load_labels_csv(const std::string& path) {
    std::vector<LabelRow> rows;
    for (const auto& fields : parse_csv(read_text_file(path))) {
        if (fields.empty() || (fields.size() == 1 && fields[0].empty())) continue;
        if (fields[0] == "release") continue;  // header
        if (fields.size() != 7)
            throw std::runtime_error(path + ": expected 7 columns, got " +
                                     std::to_string(fields.size()));
        LabelRow row;
        row.release = fields[0];
        row.file = fields[1];
        row.smelly = fields[2] == "1";
        row.buggy = fields[3] == "1";
        row.loc = std::stoi(fields[4]);
        row.churn = std::stoll(fields[5]);
        row.prior_fixes = std::stoi(fields[6]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace jnismell
