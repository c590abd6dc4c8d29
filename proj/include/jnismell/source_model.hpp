#ifndef JNISMELL_SOURCE_MODEL_HPP
#define JNISMELL_SOURCE_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jnismell {

enum class Language { Java, C, Cpp, Other };

Language language_from_extension(const std::string& path);
const char* to_string(Language lang);

// One scanned file. loc counts non-blank lines.
struct SourceFile {
    std::string file_path;
    Language language = Language::Other;
    int loc = 0;
    std::string release_id;
};

int count_loc(const std::string& text);

// A diagnostic line of the form "WARN <path>:<line> <reason>".
struct Diagnostic {
    std::string file_path;
    int line = 0;
    std::string reason;

    std::string format() const;
};

using Diagnostics = std::vector<Diagnostic>;

// ---- Java-side facts ----

struct NativeMethodDecl {
    std::string owner_fqcn;
    std::string name;
    // (type, name) pairs as written in the declaration
    std::vector<std::pair<std::string, std::string>> params;
    bool is_static = false;
    int declared_at_line = 0;
};

struct NativeCallSite {
    std::string caller_fqcn;
    // Owner as resolved so far: the caller's own class for simple-name calls,
    // or the qualifier text for ClassName.method calls (finalized during
    // model building).
    std::string target_owner;
    std::string target_name;
    int line = 0;
    int loop_depth = 0;
    // Present only when every enclosing loop has a literal integer bound.
    std::optional<long long> loop_bound;
    // Identifier or literal text of each top-level argument.
    std::vector<std::string> arg_identifiers;
};

enum class LoadMechanism { LoadLibrary, Load };
enum class PathKind { NameOnly, Relative, Absolute, Dynamic };

struct LibraryLoad {
    LoadMechanism mechanism = LoadMechanism::LoadLibrary;
    // Literal argument text; empty for Dynamic loads.
    std::string argument;
    PathKind path_kind = PathKind::NameOnly;
    bool inside_privileged_block = false;
    bool inside_link_error_try_catch = false;
    bool inside_os_conditional = false;
    int line = 0;
};

struct JavaClassFacts {
    std::string fqcn;
    std::string package_name;
    std::string file_path;
    std::vector<NativeMethodDecl> native_decls;
    std::vector<LibraryLoad> library_loads;
    std::vector<NativeCallSite> native_call_sites;
};

// ---- native-side facts ----

struct JniApiCall {
    std::string api_name;          // member of jni_vocabulary()
    std::string assigned_to;       // identifier receiving the result, or empty
    int line = 0;
    int loop_depth = 0;
    std::optional<long long> loop_bound;
    bool null_or_error_checked = false;
    bool followed_by_throw_and_return = false;
    // Line of the matching Release* call for acquisition APIs.
    std::optional<int> released_by;
    // Identifier or literal text of each argument.
    std::vector<std::string> arg_identifiers;
};

struct NativeFunctionFacts {
    std::string symbol_name;
    std::string file_path;
    int defined_at_line = 0;
    std::vector<std::pair<std::string, std::string>> params;  // (type, name)
    std::vector<JniApiCall> jni_api_calls;
    // Multiset of identifiers appearing in the body.
    std::map<std::string, int> body_identifier_uses;
    std::vector<std::string> returned_identifiers;
    // Loop-weighted count of local-reference creation calls.
    long long local_ref_creation_count = 0;
    bool has_delete_local_ref = false;
    bool has_ensure_local_capacity = false;
    bool calls_register_natives = false;
    // String literals passed to FindClass/DefineClass in this file's scope,
    // used to link dynamic registration back to Java classes.
    std::vector<std::string> referenced_class_literals;
};

// Per-file extraction result.
struct FileFacts {
    SourceFile file;
    std::vector<JavaClassFacts> java_classes;
    std::vector<NativeFunctionFacts> native_functions;
    Diagnostics diagnostics;
};

// Closed set of JNI API names recorded as facts; anything else that looks
// like a JNI call becomes a diagnostic instead.
const std::vector<std::string>& jni_vocabulary();
bool in_jni_vocabulary(const std::string& name);

// API-name subsets the detectors key on.
const std::vector<std::string>& id_lookup_apis();          // class/field/method id lookups
const std::vector<std::string>& unsafe_return_apis();      // id lookups minus GetObjectClass
const std::vector<std::string>& local_ref_creation_apis();
const std::vector<std::string>& resource_acquisition_apis();
const std::vector<std::string>& field_get_apis();
const std::vector<std::string>& field_set_apis();
const std::vector<std::string>& cacheable_lookup_apis();   // GetFieldID/GetMethodID/GetStaticMethodID

// Matching Release* name for an acquisition API (GetIntArrayElements ->
// ReleaseIntArrayElements).
std::string release_api_for(const std::string& acquisition_api);

}  // namespace jnismell

#endif
