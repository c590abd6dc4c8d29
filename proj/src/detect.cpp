#include "jnismell/detect.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace jnismell {

namespace {

using Occurrences = std::vector<SmellOccurrence>;

bool is_identifier_token(const std::string& tok) {
    if (tok.empty()) return false;
    char c = tok[0];
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'))
        return false;
    return tok != "true" && tok != "false" && tok != "null" && tok != "this";
}

bool has_reference_param(const NativeFunctionFacts& fn) {
    static const char* const kRefTypes[] = {
        "jobject", "jclass", "jstring",  "jarray",     "jthrowable",
        "jweak",   "jobjectArray", "jbooleanArray", "jbyteArray",
        "jcharArray", "jshortArray", "jintArray", "jlongArray",
        "jfloatArray", "jdoubleArray",
    };
    for (const auto& [type, name] : fn.params) {
        for (const char* ref : kRefTypes) {
            size_t pos = type.find(ref);
            if (pos == std::string::npos) continue;
            size_t end = pos + std::string(ref).size();
            bool left = pos == 0 || !std::isalnum(static_cast<unsigned char>(
                                        type[pos - 1]));
            bool right = end >= type.size() ||
                         !std::isalnum(static_cast<unsigned char>(type[end]));
            if (left && right) return true;
        }
    }
    return false;
}

bool contains(const std::vector<std::string>& set, const std::string& name) {
    return std::find(set.begin(), set.end(), name) != set.end();
}

// The class file a declaration lives in.
const JavaClassFacts& owner_class(const CodebaseModel& model, size_t flat) {
    return model.java_classes[model.decl_ids[flat].class_index];
}

long long call_count(const CodebaseModel& model, const DeclRef& ref) {
    auto it = model.call_index.find(ref);
    return it == model.call_index.end()
               ? 0
               : static_cast<long long>(it->second.size());
}

}  // namespace

const char* to_string(SmellType type) {
    switch (type) {
        case SmellType::NotHandlingExceptions: return "NotHandlingExceptions";
        case SmellType::AssumingSafeReturnValue: return "AssumingSafeReturnValue";
        case SmellType::NotSecuringLibraries: return "NotSecuringLibraries";
        case SmellType::HardCodingLibraries: return "HardCodingLibraries";
        case SmellType::NotUsingRelativePath: return "NotUsingRelativePath";
        case SmellType::TooMuchClustering: return "TooMuchClustering";
        case SmellType::TooMuchScattering: return "TooMuchScattering";
        case SmellType::ExcessiveInterLangCommunication:
            return "ExcessiveInterLangCommunication";
        case SmellType::LocalReferencesAbuse: return "LocalReferencesAbuse";
        case SmellType::MemoryManagementMismatch:
            return "MemoryManagementMismatch";
        case SmellType::NotCachingObjects: return "NotCachingObjects";
        case SmellType::ExcessiveObjects: return "ExcessiveObjects";
        case SmellType::UnusedMethodImplementation:
            return "UnusedMethodImplementation";
        case SmellType::UnusedMethodDeclaration:
            return "UnusedMethodDeclaration";
        case SmellType::UnusedParameters: return "UnusedParameters";
    }
    return "Unknown";
}

const std::vector<SmellType>& all_smell_types() {
    static const std::vector<SmellType> all = {
        SmellType::NotHandlingExceptions,
        SmellType::AssumingSafeReturnValue,
        SmellType::NotSecuringLibraries,
        SmellType::HardCodingLibraries,
        SmellType::NotUsingRelativePath,
        SmellType::TooMuchClustering,
        SmellType::TooMuchScattering,
        SmellType::ExcessiveInterLangCommunication,
        SmellType::LocalReferencesAbuse,
        SmellType::MemoryManagementMismatch,
        SmellType::NotCachingObjects,
        SmellType::ExcessiveObjects,
        SmellType::UnusedMethodImplementation,
        SmellType::UnusedMethodDeclaration,
        SmellType::UnusedParameters,
    };
    return all;
}

std::optional<SmellType> smell_type_from_string(const std::string& name) {
    for (SmellType t : all_smell_types())
        if (name == to_string(t)) return t;
    return std::nullopt;
}

void DetectionConfig::validate() const {
    struct Entry { const char* name; long long value; };
    const Entry entries[] = {
        {"maxLocalReferences", maxLocalReferences},
        {"maxMethodsClustering", maxMethodsClustering},
        {"scatterMinClasses", scatterMinClasses},
        {"scatterMaxMethodsPerClass", scatterMaxMethodsPerClass},
        {"maxNativeCallsSameMethod", maxNativeCallsSameMethod},
        {"maxNativeCallsSameParam", maxNativeCallsSameParam},
        {"maxCallsInLoopBound", maxCallsInLoopBound},
        {"maxIdLookupsPerMethod", maxIdLookupsPerMethod},
        {"maxFieldGetsExcessiveObjects", maxFieldGetsExcessiveObjects},
    };
    for (const Entry& e : entries)
        if (e.value < 1)
            throw std::invalid_argument(std::string("threshold ") + e.name +
                                        " must be at least 1");
}

DetectionConfig load_config_json(const std::string& json_text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") +
                                    e.what());
    }
    if (!parsed.is_object())
        throw std::invalid_argument("config must be a JSON object");

    DetectionConfig config;
    std::map<std::string, long long*> keys = {
        {"maxLocalReferences", &config.maxLocalReferences},
        {"maxMethodsClustering", &config.maxMethodsClustering},
        {"scatterMinClasses", &config.scatterMinClasses},
        {"scatterMaxMethodsPerClass", &config.scatterMaxMethodsPerClass},
        {"maxNativeCallsSameMethod", &config.maxNativeCallsSameMethod},
        {"maxNativeCallsSameParam", &config.maxNativeCallsSameParam},
        {"maxCallsInLoopBound", &config.maxCallsInLoopBound},
        {"maxIdLookupsPerMethod", &config.maxIdLookupsPerMethod},
        {"maxFieldGetsExcessiveObjects", &config.maxFieldGetsExcessiveObjects},
    };
    for (const auto& [key, value] : parsed.items()) {
        if (key == "scatterCapExclusive") {
            if (!value.is_boolean())
                throw std::invalid_argument("scatterCapExclusive must be a boolean");
            config.scatterCapExclusive = value.get<bool>();
            continue;
        }
        auto it = keys.find(key);
        if (it == keys.end())
            throw std::invalid_argument("unknown config key: " + key);
        if (!value.is_number_integer())
            throw std::invalid_argument("config key " + key +
                                        " must be an integer");
        *it->second = value.get<long long>();
    }
    config.validate();
    return config;
}

DetectionConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_config_json(buffer.str());
}

bool occurrence_order(const SmellOccurrence& a, const SmellOccurrence& b) {
    return std::tie(a.file_path, a.line, a.type, a.subject, a.method_name,
                    a.param_name, a.evidence) <
           std::tie(b.file_path, b.line, b.type, b.subject, b.method_name,
                    b.param_name, b.evidence);
}

Occurrences detect_not_handling_exceptions(const CodebaseModel& model,
                                           const DetectionConfig&) {
    Occurrences out;
    const auto& lookups = id_lookup_apis();
    for (const NativeFunctionFacts& fn : model.native_functions) {
        for (const JniApiCall& call : fn.jni_api_calls) {
            if (!contains(lookups, call.api_name)) continue;
            if (call.null_or_error_checked && call.followed_by_throw_and_return)
                continue;
            SmellOccurrence occ;
            occ.type = SmellType::NotHandlingExceptions;
            occ.file_path = fn.file_path;
            occ.subject = fn.symbol_name;
            occ.method_name = fn.symbol_name;
            occ.line = call.line;
            occ.evidence = call.api_name +
                           " result is not checked with an exception guard";
            out.push_back(std::move(occ));
        }
    }
    return out;
}

Occurrences detect_assuming_safe_return_value(const CodebaseModel& model,
                                              const DetectionConfig&) {
    Occurrences out;
    const auto& unsafe = unsafe_return_apis();
    for (const NativeFunctionFacts& fn : model.native_functions) {
        std::set<std::string> returned(fn.returned_identifiers.begin(),
                                       fn.returned_identifiers.end());
        for (const JniApiCall& call : fn.jni_api_calls) {
            if (!contains(unsafe, call.api_name)) continue;
            if (call.null_or_error_checked) continue;
            if (call.assigned_to.empty()) continue;
            const std::string& value = call.assigned_to;

            bool feeds_return = returned.count(value) != 0;
            bool feeds_global_ref = false;
            for (const JniApiCall& other : fn.jni_api_calls) {
                if (&other == &call) continue;
                bool takes_value = std::find(other.arg_identifiers.begin(),
                                             other.arg_identifiers.end(),
                                             value) != other.arg_identifiers.end();
                if (!takes_value) continue;
                if (other.api_name == "NewGlobalRef" ||
                    other.api_name == "NewWeakGlobalRef")
                    feeds_global_ref = true;
                if (!other.assigned_to.empty() &&
                    returned.count(other.assigned_to))
                    feeds_return = true;
            }
            if (!feeds_return && !feeds_global_ref) continue;

            SmellOccurrence occ;
            occ.type = SmellType::AssumingSafeReturnValue;
            occ.file_path = fn.file_path;
            occ.subject = fn.symbol_name;
            occ.method_name = fn.symbol_name;
            occ.line = call.line;
            occ.evidence = value + " from " + call.api_name +
                           " is used without a null check";
            out.push_back(std::move(occ));
        }
    }
    return out;
}

Occurrences detect_not_securing_libraries(const CodebaseModel& model,
                                          const DetectionConfig&) {
    Occurrences out;
    for (const JavaClassFacts& cls : model.java_classes) {
        for (const LibraryLoad& load : cls.library_loads) {
            if (load.inside_privileged_block) continue;
            SmellOccurrence occ;
            occ.type = SmellType::NotSecuringLibraries;
            occ.file_path = cls.file_path;
            occ.subject = cls.fqcn;
            occ.line = load.line;
            occ.evidence = "library load outside a doPrivileged block";
            out.push_back(std::move(occ));
        }
    }
    return out;
}

Occurrences detect_hard_coding_libraries(const CodebaseModel& model,
                                         const DetectionConfig&) {
    Occurrences out;
    for (const JavaClassFacts& cls : model.java_classes) {
        int qualifying = 0;
        int first_line = 0;
        for (const LibraryLoad& load : cls.library_loads) {
            if (load.path_kind == PathKind::Dynamic) continue;
            if (!load.inside_link_error_try_catch) continue;
            if (load.inside_os_conditional) continue;
            if (qualifying == 0) first_line = load.line;
            ++qualifying;
        }
        if (qualifying < 2) continue;
        SmellOccurrence occ;
        occ.type = SmellType::HardCodingLibraries;
        occ.file_path = cls.file_path;
        occ.subject = cls.fqcn;
        occ.line = first_line;
        occ.evidence = std::to_string(qualifying) +
                       " hard-coded library names tried in " +
                       "UnsatisfiedLinkError fallbacks";
        out.push_back(std::move(occ));
    }
    return out;
}

Occurrences detect_not_using_relative_path(const CodebaseModel& model,
                                           const DetectionConfig&) {
    Occurrences out;
    for (const JavaClassFacts& cls : model.java_classes) {
        for (const LibraryLoad& load : cls.library_loads) {
            if (load.path_kind != PathKind::Absolute) continue;
            SmellOccurrence occ;
            occ.type = SmellType::NotUsingRelativePath;
            occ.file_path = cls.file_path;
            occ.subject = cls.fqcn;
            occ.line = load.line;
            occ.evidence = "library loaded from absolute path " + load.argument;
            out.push_back(std::move(occ));
        }
    }
    return out;
}

Occurrences detect_too_much_clustering(const CodebaseModel& model,
                                       const DetectionConfig& config) {
    Occurrences out;
    for (const JavaClassFacts& cls : model.java_classes) {
        if (static_cast<long long>(cls.native_decls.size()) <
            config.maxMethodsClustering)
            continue;
        bool called_externally = false;
        for (const NativeMethodDecl& decl : cls.native_decls) {
            auto it = model.call_index.find(DeclRef{cls.fqcn, decl.name});
            if (it == model.call_index.end()) continue;
            for (const NativeCallSite& site : it->second) {
                if (site.caller_fqcn != cls.fqcn) {
                    called_externally = true;
                    break;
                }
            }
            if (called_externally) break;
        }
        if (!called_externally) continue;

        SmellOccurrence occ;
        occ.type = SmellType::TooMuchClustering;
        occ.file_path = cls.file_path;
        occ.subject = cls.fqcn;
        occ.line = cls.native_decls.front().declared_at_line;
        occ.evidence = std::to_string(cls.native_decls.size()) +
                       " native methods clustered in one class";
        out.push_back(std::move(occ));
    }
    return out;
}

Occurrences detect_too_much_scattering(const CodebaseModel& model,
                                       const DetectionConfig& config) {
    Occurrences out;
    std::map<std::string, std::vector<const JavaClassFacts*>> native_by_package;
    for (const JavaClassFacts& cls : model.java_classes)
        if (!cls.native_decls.empty())
            native_by_package[cls.package_name].push_back(&cls);

    for (const auto& [package, classes] : native_by_package) {
        if (static_cast<long long>(classes.size()) < config.scatterMinClasses)
            continue;
        bool all_small = true;
        for (const JavaClassFacts* cls : classes) {
            long long n = static_cast<long long>(cls->native_decls.size());
            bool small = config.scatterCapExclusive
                             ? n < config.scatterMaxMethodsPerClass
                             : n <= config.scatterMaxMethodsPerClass;
            if (!small) { all_small = false; break; }
        }
        if (!all_small) continue;

        // One record per participating file.
        std::set<std::string> seen_files;
        for (const JavaClassFacts* cls : classes) {
            if (!seen_files.insert(cls->file_path).second) continue;
            SmellOccurrence occ;
            occ.type = SmellType::TooMuchScattering;
            occ.file_path = cls->file_path;
            occ.subject = cls->fqcn;
            occ.line = cls->native_decls.front().declared_at_line;
            occ.evidence = std::to_string(classes.size()) +
                           " small native classes scattered across package " +
                           (package.empty() ? "<default>" : package);
            out.push_back(std::move(occ));
        }
    }
    return out;
}

Occurrences detect_excessive_inter_lang_communication(
    const CodebaseModel& model, const DetectionConfig& config) {
    Occurrences out;

    struct PerClass {
        std::map<std::string, long long> per_target;
        std::map<std::string, long long> per_arg;
        const NativeCallSite* first_site = nullptr;
        const NativeCallSite* loop_site = nullptr;
    };
    std::map<std::string, PerClass> per_class;

    for (const auto& [ref, sites] : model.call_index) {
        for (const NativeCallSite& site : sites) {
            PerClass& acc = per_class[site.caller_fqcn];
            if (!acc.first_site || site.line < acc.first_site->line)
                acc.first_site = &site;
            ++acc.per_target[ref.owner_fqcn + "." + ref.name];
            std::set<std::string> distinct(site.arg_identifiers.begin(),
                                           site.arg_identifiers.end());
            for (const std::string& arg : distinct)
                if (is_identifier_token(arg)) ++acc.per_arg[arg];
            bool heavy_loop =
                site.loop_depth >= 1 &&
                (!site.loop_bound || *site.loop_bound > config.maxCallsInLoopBound);
            if (heavy_loop && (!acc.loop_site || site.line < acc.loop_site->line))
                acc.loop_site = &site;
        }
    }

    for (const auto& [caller, acc] : per_class) {
        long long max_same_target = 0;
        std::string busiest_target;
        for (const auto& [target, n] : acc.per_target)
            if (n > max_same_target) { max_same_target = n; busiest_target = target; }
        long long max_same_arg = 0;
        std::string busiest_arg;
        for (const auto& [arg, n] : acc.per_arg)
            if (n > max_same_arg) { max_same_arg = n; busiest_arg = arg; }

        bool via_target = max_same_target > config.maxNativeCallsSameMethod;
        bool via_arg = max_same_arg > config.maxNativeCallsSameParam;
        bool via_loop = acc.loop_site != nullptr;
        if (!via_target && !via_arg && !via_loop) continue;

        SmellOccurrence occ;
        occ.type = SmellType::ExcessiveInterLangCommunication;
        occ.file_path = "";
        occ.subject = caller;
        const JavaClassFacts* cls = model.find_class(caller);
        if (cls) occ.file_path = cls->file_path;
        std::ostringstream why;
        if (via_target) {
            occ.line = acc.first_site->line;
            why << max_same_target << " calls to native " << busiest_target;
        } else if (via_arg) {
            occ.line = acc.first_site->line;
            why << max_same_arg << " native calls passing " << busiest_arg;
        } else {
            occ.line = acc.loop_site->line;
            why << "native call inside a loop with "
                << (acc.loop_site->loop_bound
                        ? std::to_string(*acc.loop_site->loop_bound) + " iterations"
                        : std::string("an unknown bound"));
        }
        occ.evidence = why.str();
        out.push_back(std::move(occ));
    }
    return out;
}

Occurrences detect_local_references_abuse(const CodebaseModel& model,
                                          const DetectionConfig& config) {
    Occurrences out;
    const auto& creation = local_ref_creation_apis();
    for (const NativeFunctionFacts& fn : model.native_functions) {
        if (fn.has_delete_local_ref || fn.has_ensure_local_capacity) continue;
        long long weighted = 0;
        for (const JniApiCall& call : fn.jni_api_calls) {
            if (!contains(creation, call.api_name)) continue;
            long long weight = 1;
            if (call.loop_depth > 0) {
                if (call.loop_bound)
                    weight = std::max<long long>(*call.loop_bound, 1);
                else
                    weight = config.maxLocalReferences + 1;
            }
            weighted += weight;
        }
        if (weighted <= config.maxLocalReferences) continue;

        SmellOccurrence occ;
        occ.type = SmellType::LocalReferencesAbuse;
        occ.file_path = fn.file_path;
        occ.subject = fn.symbol_name;
        occ.method_name = fn.symbol_name;
        occ.line = fn.defined_at_line;
        occ.evidence = "creates on the order of " + std::to_string(weighted) +
                       " local references without DeleteLocalRef or "
                       "EnsureLocalCapacity";
        out.push_back(std::move(occ));
    }
    return out;
}

Occurrences detect_memory_management_mismatch(const CodebaseModel& model,
                                              const DetectionConfig&) {
    Occurrences out;
    const auto& acquisitions = resource_acquisition_apis();
    for (const NativeFunctionFacts& fn : model.native_functions) {
        for (const JniApiCall& call : fn.jni_api_calls) {
            if (!contains(acquisitions, call.api_name)) continue;
            if (call.released_by) continue;
            SmellOccurrence occ;
            occ.type = SmellType::MemoryManagementMismatch;
            occ.file_path = fn.file_path;
            occ.subject = fn.symbol_name;
            occ.method_name = fn.symbol_name;
            occ.line = call.line;
            occ.evidence = call.api_name + " without a matching " +
                           release_api_for(call.api_name);
            out.push_back(std::move(occ));
        }
    }
    return out;
}

Occurrences detect_not_caching_objects(const CodebaseModel& model,
                                       const DetectionConfig& config) {
    Occurrences out;
    const auto& cacheable = cacheable_lookup_apis();

    // Java-side call pressure per implementation symbol.
    std::map<std::string, long long> calls_per_impl;
    for (const Binding& binding : model.bindings) {
        if (binding.kind == MatchKind::Unmatched) continue;
        const NativeMethodDecl& decl = model.decl(binding.decl_index);
        long long n = call_count(model, DeclRef{decl.owner_fqcn, decl.name});
        for (size_t impl : binding.impl_indices) {
            const std::string& symbol = model.native_functions[impl].symbol_name;
            calls_per_impl[symbol] = std::max(calls_per_impl[symbol], n);
        }
    }

    for (const NativeFunctionFacts& fn : model.native_functions) {
        if (!has_reference_param(fn)) continue;
        long long lookups = 0;
        const JniApiCall* in_loop = nullptr;
        const JniApiCall* first = nullptr;
        for (const JniApiCall& call : fn.jni_api_calls) {
            if (!contains(cacheable, call.api_name)) continue;
            ++lookups;
            if (!first) first = &call;
            if (call.loop_depth > 0 && !in_loop) in_loop = &call;
        }
        if (lookups == 0) continue;

        bool repeated = lookups > config.maxIdLookupsPerMethod;
        bool called_hot = calls_per_impl.count(fn.symbol_name) &&
                          calls_per_impl[fn.symbol_name] >
                              config.maxNativeCallsSameMethod;
        if (!repeated && !in_loop && !called_hot) continue;

        SmellOccurrence occ;
        occ.type = SmellType::NotCachingObjects;
        occ.file_path = fn.file_path;
        occ.subject = fn.symbol_name;
        occ.method_name = fn.symbol_name;
        occ.line = (in_loop ? in_loop : first)->line;
        if (repeated)
            occ.evidence = std::to_string(lookups) +
                           " ID lookups that could be cached";
        else if (in_loop)
            occ.evidence = "ID lookup inside a loop";
        else
            occ.evidence = "ID lookups in a native method called " +
                           std::to_string(calls_per_impl[fn.symbol_name]) +
                           " times from Java";
        out.push_back(std::move(occ));
    }
    return out;
}

Occurrences detect_excessive_objects(const CodebaseModel& model,
                                     const DetectionConfig& config) {
    Occurrences out;
    const auto& getters = field_get_apis();
    const auto& setters = field_set_apis();
    for (const NativeFunctionFacts& fn : model.native_functions) {
        if (!has_reference_param(fn)) continue;
        long long gets = 0;
        long long sets = 0;
        int first_line = 0;
        for (const JniApiCall& call : fn.jni_api_calls) {
            if (contains(getters, call.api_name)) {
                if (gets == 0) first_line = call.line;
                ++gets;
            }
            if (contains(setters, call.api_name)) ++sets;
        }
        if (gets < config.maxFieldGetsExcessiveObjects || sets > 0) continue;

        SmellOccurrence occ;
        occ.type = SmellType::ExcessiveObjects;
        occ.file_path = fn.file_path;
        occ.subject = fn.symbol_name;
        occ.method_name = fn.symbol_name;
        occ.line = first_line;
        occ.evidence = std::to_string(gets) +
                       " field reads from a passed object; the fields could "
                       "be parameters";
        out.push_back(std::move(occ));
    }
    return out;
}

Occurrences detect_unused_method_implementation(const CodebaseModel& model,
                                                const DetectionConfig&) {
    Occurrences out;
    for (const Binding& binding : model.bindings) {
        if (binding.kind == MatchKind::Unmatched) continue;
        const NativeMethodDecl& decl = model.decl(binding.decl_index);
        if (call_count(model, DeclRef{decl.owner_fqcn, decl.name}) > 0) continue;

        const JavaClassFacts& cls = owner_class(model, binding.decl_index);
        SmellOccurrence occ;
        occ.type = SmellType::UnusedMethodImplementation;
        occ.file_path = cls.file_path;
        occ.subject = decl.owner_fqcn;
        occ.method_name = decl.name;
        occ.line = decl.declared_at_line;
        occ.evidence = "implemented native method never called from Java";
        out.push_back(std::move(occ));
    }
    return out;
}

Occurrences detect_unused_method_declaration(const CodebaseModel& model,
                                             const DetectionConfig&) {
    Occurrences out;
    for (const Binding& binding : model.bindings) {
        if (binding.kind != MatchKind::Unmatched) continue;
        const NativeMethodDecl& decl = model.decl(binding.decl_index);
        if (model.uses_dynamic_registration(decl.owner_fqcn)) continue;

        const JavaClassFacts& cls = owner_class(model, binding.decl_index);
        SmellOccurrence occ;
        occ.type = SmellType::UnusedMethodDeclaration;
        occ.file_path = cls.file_path;
        occ.subject = decl.owner_fqcn;
        occ.method_name = decl.name;
        occ.line = decl.declared_at_line;
        occ.evidence = "native declaration without an exported implementation";
        out.push_back(std::move(occ));
    }
    return out;
}

Occurrences detect_unused_parameters(const CodebaseModel& model,
                                     const DetectionConfig&) {
    Occurrences out;
    for (const Binding& binding : model.bindings) {
        if (binding.kind != MatchKind::Exact) continue;
        const NativeMethodDecl& decl = model.decl(binding.decl_index);
        for (size_t impl_index : binding.impl_indices) {
            const NativeFunctionFacts& fn = model.native_functions[impl_index];
            // Skip the JNIEnv* and jobject/jclass leading arguments.
            for (size_t p = 2; p < fn.params.size(); ++p) {
                const std::string& pname = fn.params[p].second;
                if (pname.empty()) continue;
                if (fn.body_identifier_uses.count(pname)) continue;
                if (p - 2 >= decl.params.size()) break;

                SmellOccurrence occ;
                occ.type = SmellType::UnusedParameters;
                occ.file_path = fn.file_path;
                occ.subject = fn.symbol_name;
                occ.method_name = decl.name;
                occ.param_name = pname;
                occ.line = fn.defined_at_line;
                occ.evidence = "parameter " + pname +
                               " is never used in the implementation";
                out.push_back(std::move(occ));
            }
        }
    }
    return out;
}

std::vector<SmellOccurrence> detect_all(const CodebaseModel& model,
                                        const DetectionConfig& config,
                                        ExecutionPolicy policy) {
    using Detector = Occurrences (*)(const CodebaseModel&,
                                     const DetectionConfig&);
    static const Detector detectors[kSmellTypeCount] = {
        detect_not_handling_exceptions,
        detect_assuming_safe_return_value,
        detect_not_securing_libraries,
        detect_hard_coding_libraries,
        detect_not_using_relative_path,
        detect_too_much_clustering,
        detect_too_much_scattering,
        detect_excessive_inter_lang_communication,
        detect_local_references_abuse,
        detect_memory_management_mismatch,
        detect_not_caching_objects,
        detect_excessive_objects,
        detect_unused_method_implementation,
        detect_unused_method_declaration,
        detect_unused_parameters,
    };

    std::vector<Occurrences> partial(kSmellTypeCount);
    if (policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < kSmellTypeCount; ++i)
            partial[i] = detectors[i](model, config);
    } else {
        for (int i = 0; i < kSmellTypeCount; ++i)
            partial[i] = detectors[i](model, config);
    }

    Occurrences all;
    for (Occurrences& part : partial)
        for (SmellOccurrence& occ : part) all.push_back(std::move(occ));
    std::sort(all.begin(), all.end(), occurrence_order);
    return all;
}

}  // namespace jnismell
