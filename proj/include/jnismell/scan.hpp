#ifndef JNISMELL_SCAN_HPP
#define JNISMELL_SCAN_HPP

#include <string>
#include <vector>

#include "jnismell/binding.hpp"
#include "jnismell/detect.hpp"

namespace jnismell {

struct ScanInput {
    std::string path;  // as reported in facts (relative to the scan root)
    std::string text;
};

// Per-file fact extraction over an in-memory file list. The parallel path
// uses OpenMP; the serial path is the reference the parallel one is tested
// against. Results are identical and ordered by input index.
std::vector<FileFacts> extract_facts_serial(const std::vector<ScanInput>& inputs,
                                            const std::string& release_id);
std::vector<FileFacts> extract_facts_parallel(const std::vector<ScanInput>& inputs,
                                              const std::string& release_id);

// Java/C/C++ files under root, path-sorted, paths relative to root.
std::vector<ScanInput> collect_source_files(const std::string& root);

// collect + extract + build_model.
CodebaseModel scan_directory(const std::string& root, const std::string& release_id,
                             ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace jnismell

#endif
