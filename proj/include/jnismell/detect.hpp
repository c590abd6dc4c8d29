#ifndef JNISMELL_DETECT_HPP
#define JNISMELL_DETECT_HPP

#include <optional>
#include <string>
#include <vector>

#include "jnismell/binding.hpp"
#include "jnismell/source_model.hpp"

namespace jnismell {

enum class SmellType {
    NotHandlingExceptions,
    AssumingSafeReturnValue,
    NotSecuringLibraries,
    HardCodingLibraries,
    NotUsingRelativePath,
    TooMuchClustering,
    TooMuchScattering,
    ExcessiveInterLangCommunication,
    LocalReferencesAbuse,
    MemoryManagementMismatch,
    NotCachingObjects,
    ExcessiveObjects,
    UnusedMethodImplementation,
    UnusedMethodDeclaration,
    UnusedParameters,
};

inline constexpr int kSmellTypeCount = 15;

const char* to_string(SmellType type);
std::optional<SmellType> smell_type_from_string(const std::string& name);
const std::vector<SmellType>& all_smell_types();

// Field names double as the JSON config keys.
struct DetectionConfig {
    long long maxLocalReferences = 16;
    long long maxMethodsClustering = 8;
    long long scatterMinClasses = 3;
    long long scatterMaxMethodsPerClass = 3;
    long long maxNativeCallsSameMethod = 8;
    long long maxNativeCallsSameParam = 8;
    long long maxCallsInLoopBound = 8;
    long long maxIdLookupsPerMethod = 2;
    long long maxFieldGetsExcessiveObjects = 3;
    // Optional switch: read the per-class scattering cap as strict <.
    bool scatterCapExclusive = false;

    // Throws std::invalid_argument when any threshold is < 1.
    void validate() const;
};

// Parses a JSON config object. Absent keys keep defaults; unknown keys are an
// error (std::invalid_argument).
DetectionConfig load_config_json(const std::string& json_text);
DetectionConfig load_config_file(const std::string& path);

struct SmellOccurrence {
    SmellType type;
    std::string file_path;
    // Java class fqcn or native symbol the finding is anchored to.
    std::string subject;
    std::string method_name;
    std::string param_name;
    int line = 0;
    std::string evidence;
};

// Stable output order: (file_path, line, type enum order).
bool occurrence_order(const SmellOccurrence& a, const SmellOccurrence& b);

std::vector<SmellOccurrence> detect_not_handling_exceptions(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_assuming_safe_return_value(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_not_securing_libraries(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_hard_coding_libraries(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_not_using_relative_path(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_too_much_clustering(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_too_much_scattering(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_excessive_inter_lang_communication(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_local_references_abuse(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_memory_management_mismatch(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_not_caching_objects(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_excessive_objects(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_unused_method_implementation(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_unused_method_declaration(const CodebaseModel&, const DetectionConfig&);
std::vector<SmellOccurrence> detect_unused_parameters(const CodebaseModel&, const DetectionConfig&);

enum class ExecutionPolicy { Serial, Parallel };

// Runs all fifteen detectors and returns their findings in stable order.
std::vector<SmellOccurrence> detect_all(const CodebaseModel& model,
                                        const DetectionConfig& config,
                                        ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace jnismell

#endif
