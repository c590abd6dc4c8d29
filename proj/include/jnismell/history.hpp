#ifndef JNISMELL_HISTORY_HPP
#define JNISMELL_HISTORY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jnismell/source_model.hpp"

namespace jnismell {

// Thin wrapper over the git CLI. Throws std::runtime_error on failures.
struct GitRepo {
    std::string dir;

    std::string run(const std::vector<std::string>& args) const;
    // Exit status + output, for probes that may legitimately fail.
    std::pair<int, std::string> try_run(const std::vector<std::string>& args) const;
};

struct DeletedLine {
    int number = 0;  // pre-image line number
    std::string content;
};

struct FileChange {
    std::string path;
    std::vector<int> added_lines;
    std::vector<DeletedLine> deleted_lines;
    bool binary = false;
};

struct CommitRecord {
    std::string hash;
    std::string message;
    int64_t timestamp = 0;
    std::vector<std::string> parents;
    bool is_merge() const { return parents.size() >= 2; }
};

// Commits reachable from HEAD, newest first.
std::vector<CommitRecord> load_commits(const GitRepo& repo);

const std::vector<std::string>& default_fix_keywords();
std::vector<std::string> load_keywords_file(const std::string& path);

// Lowercase substring match over the commit message; merge commits excluded.
bool is_fix_commit(const CommitRecord& commit, const std::vector<std::string>& keywords);
std::vector<CommitRecord> identify_fix_commits(const std::vector<CommitRecord>& commits,
                                               const std::vector<std::string>& keywords);

// Per-file changes of `commit` against its first parent (unified diff,
// zero context). Binary files are flagged.
std::vector<FileChange> commit_changes(const GitRepo& repo, const CommitRecord& commit);

struct FaultLink {
    std::string fix_hash;
    std::string inducing_hash;
    std::string file_path;
};

// Blames each non-whitespace deleted line of the fix against the fix's first
// parent; the commits that last touched those lines are the inducing set.
// Files the fix only added to contribute nothing.
std::vector<FaultLink> trace_inducing(const GitRepo& repo, const CommitRecord& fix,
                                      Diagnostics* diagnostics = nullptr);

struct ReleaseWindow {
    std::string release_id;   // tag name
    std::string commit_hash;
    int64_t tag_time = 0;
};

// Resolves tags to commits/times; unknown tag -> std::runtime_error listing
// the tags that do exist.
std::vector<ReleaseWindow> resolve_releases(const GitRepo& repo,
                                            const std::vector<std::string>& tags);

// buggy(file, r_k) iff some inducing commit touching the file falls in
// (time(r_k), time(r_k+1)]; the last window extends to the repository head.
std::map<std::pair<std::string, std::string>, bool> label_files(
    const GitRepo& repo, const std::vector<ReleaseWindow>& releases,
    const std::vector<FaultLink>& links,
    const std::map<std::string, std::vector<std::string>>& files_per_release);

struct FileMetrics {
    int loc = 0;
    long long churn = 0;        // lines added+removed up to the release
    int prior_bug_fixes = 0;    // fix commits touching the file up to the release
};

FileMetrics file_metrics(const GitRepo& repo, const std::string& release_tag,
                         const std::string& file_path,
                         const std::vector<CommitRecord>& fix_commits);

// Batch variant: churn and prior fixes for every path reachable from the tag
// in one history walk; loc is read from `worktree_dir` (a checkout of the
// tag) for just the requested files. Missing files are omitted.
std::map<std::string, FileMetrics> release_metrics(
    const GitRepo& repo, const std::string& release_tag,
    const std::vector<CommitRecord>& fix_commits,
    const std::string& worktree_dir, const std::vector<std::string>& files);

// Removes stale worktrees on destruction even on error paths.
class WorktreeGuard {
  public:
    WorktreeGuard(const GitRepo& repo, const std::string& ref);
    ~WorktreeGuard();
    WorktreeGuard(const WorktreeGuard&) = delete;
    WorktreeGuard& operator=(const WorktreeGuard&) = delete;
    const std::string& path() const { return path_; }

  private:
    GitRepo repo_;
    std::string path_;
};

struct LabelRow {
    std::string release;
    std::string file;
    bool smelly = false;
    bool buggy = false;
    int loc = 0;
    long long churn = 0;
    int prior_fixes = 0;
};

// labels.csv: release,file,smelly,buggy,loc,churn,prior_fixes
std::string labels_csv(const std::vector<LabelRow>& rows);
std::vector<LabelRow> load_labels_csv(const std::string& path);

}  // namespace jnismell

#endif
