#include "jnismell/scan.hpp"

#include <algorithm>
#include <filesystem>

#include "jnismell/java_parser.hpp"
#include "jnismell/native_parser.hpp"
#include "jnismell/report.hpp"

namespace jnismell {
namespace {

FileFacts extract_one(const ScanInput& input, const std::string& release_id) {
    switch (language_from_extension(input.path)) {
        case Language::Java:
            return parse_java_source(input.path, input.text, release_id);
        case Language::C:
        case Language::Cpp:
            return parse_native_source(input.path, input.text, release_id);
        case Language::Other:
            break;
    }
    FileFacts facts;
    facts.file.file_path = input.path;
    facts.file.language = Language::Other;
    facts.file.loc = count_loc(input.text);
    facts.file.release_id = release_id;
    return facts;
}

}  // namespace

std::vector<FileFacts> extract_facts_serial(const std::vector<ScanInput>& inputs,
                                            const std::string& release_id) {
    std::vector<FileFacts> facts(inputs.size());
    for (size_t i = 0; i < inputs.size(); ++i)
        facts[i] = extract_one(inputs[i], release_id);
    return facts;
}

std::vector<FileFacts> extract_facts_parallel(
    const std::vector<ScanInput>& inputs, const std::string& release_id) {
    std::vector<FileFacts> facts(inputs.size());
    const long long n = static_cast<long long>(inputs.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i)
        facts[i] = extract_one(inputs[i], release_id);
    return facts;
}

std::vector<ScanInput> collect_source_files(const std::string& root) {
    namespace fs = std::filesystem;
    std::vector<ScanInput> inputs;
    fs::path base(root);

    auto options = fs::directory_options::skip_permission_denied;
    for (auto it = fs::recursive_directory_iterator(base, options);
         it != fs::recursive_directory_iterator(); ++it) {
        if (it->is_directory()) {
            if (it->path().filename() == ".git") it.disable_recursion_pending();
            continue;
        }
        if (!it->is_regular_file()) continue;
        fs::path rel = fs::relative(it->path(), base);
        std::string rel_text = rel.generic_string();
        if (language_from_extension(rel_text) == Language::Other) continue;
        inputs.push_back({rel_text, read_text_file(it->path().string())});
    }
    std::sort(inputs.begin(), inputs.end(),
              [](const ScanInput& a, const ScanInput& b) { return a.path < b.path; });
    return inputs;
}

CodebaseModel scan_directory(const std::string& root,
                             const std::string& release_id,
                             ExecutionPolicy policy) {
    std::vector<ScanInput> inputs = collect_source_files(root);
    std::vector<FileFacts> facts = policy == ExecutionPolicy::Parallel
                                       ? extract_facts_parallel(inputs, release_id)
                                       : extract_facts_serial(inputs, release_id);
    return build_model(release_id, std::move(facts));
}

}  // namespace jnismell
