#ifndef JNISMELL_TESTS_RANDOM_MODELS_HPP
#define JNISMELL_TESTS_RANDOM_MODELS_HPP

// Randomized miniature codebases for threshold property tests. Each model is
// a handful of Java classes with native declarations, call sites and library
// loads, plus native functions whose JNI usage can trip every thresholded
// rule: id lookups, field traffic, local-reference churn, loops with and
// without literal bounds, release pairing, and name-mangled exports.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jnismell/binding.hpp"
#include "jnismell/jni_names.hpp"
#include "jnismell/source_model.hpp"

namespace modelgen {

class Rng {
  public:
    explicit Rng(std::uint32_t seed) : gen_(seed) {}

    int range(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(gen_);
    }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(gen_) < p;
    }

  private:
    std::mt19937 gen_;
};

inline jnismell::CodebaseModel random_codebase(Rng& rng) {
    using namespace jnismell;
    std::vector<FileFacts> files;

    struct DeclSpot {
        std::string fqcn;
        std::string file;
        std::string name;
        size_t param_count;
    };
    std::vector<DeclSpot> decls;
    std::vector<std::string> class_fqcns;

    const int packages = rng.range(1, 2);
    for (int p = 0; p < packages; ++p) {
        const std::string pkg = "p" + std::to_string(p);
        const int classes = rng.range(1, 4);
        for (int c = 0; c < classes; ++c) {
            JavaClassFacts cls;
            cls.package_name = pkg;
            cls.fqcn = pkg + ".C" + std::to_string(c);
            cls.file_path = "java/" + pkg + "/C" + std::to_string(c) + ".java";
            class_fqcns.push_back(cls.fqcn);

            const int decl_count = rng.range(0, 10);
            for (int d = 0; d < decl_count; ++d) {
                NativeMethodDecl decl;
                decl.owner_fqcn = cls.fqcn;
                decl.name = "m" + std::to_string(d);
                decl.is_static = rng.chance(0.5);
                decl.declared_at_line = 3 + d;
                const int params = rng.range(0, 2);
                for (int a = 0; a < params; ++a)
                    decl.params.emplace_back("int", "a" + std::to_string(a));
                decls.push_back(
                    {cls.fqcn, cls.file_path, decl.name, decl.params.size()});
                cls.native_decls.push_back(std::move(decl));
            }

            const int loads = rng.range(0, 2);
            for (int l = 0; l < loads; ++l) {
                LibraryLoad load;
                load.line = 40 + l;
                switch (rng.range(0, 3)) {
                    case 0:
                        load.path_kind = PathKind::NameOnly;
                        load.argument = "corelib";
                        break;
                    case 1:
                        load.path_kind = PathKind::Relative;
                        load.argument = "lib/corelib.so";
                        load.mechanism = LoadMechanism::Load;
                        break;
                    case 2:
                        load.path_kind = PathKind::Absolute;
                        load.argument = "/usr/lib/corelib.so";
                        load.mechanism = LoadMechanism::Load;
                        break;
                    default:
                        load.path_kind = PathKind::Dynamic;
                        break;
                }
                load.inside_privileged_block = rng.chance(0.4);
                load.inside_link_error_try_catch = rng.chance(0.4);
                load.inside_os_conditional = rng.chance(0.3);
                cls.library_loads.push_back(load);
            }

            FileFacts facts;
            facts.file = {cls.file_path, Language::Java, 20 + decl_count, "test"};
            facts.java_classes.push_back(std::move(cls));
            files.push_back(std::move(facts));
        }
    }

    // Call sites live with the class that makes the call; build_model resolves
    // them against the declaring class.
    for (const DeclSpot& decl : decls) {
        if (rng.chance(0.35)) continue;  // never called
        const std::string caller =
            rng.chance(0.5) ? decl.fqcn
                            : class_fqcns[static_cast<size_t>(rng.range(
                                  0, static_cast<int>(class_fqcns.size()) - 1))];
        const int sites = rng.range(1, 12);
        const bool same_arg = rng.chance(0.4);
        for (int s = 0; s < sites; ++s) {
            NativeCallSite site;
            site.caller_fqcn = caller;
            site.target_owner = decl.fqcn;
            site.target_name = decl.name;
            site.line = 60 + s;
            if (rng.chance(0.25)) {
                site.loop_depth = 1;
                if (rng.chance(0.6)) site.loop_bound = rng.range(1, 12);
            }
            if (decl.param_count > 0)
                site.arg_identifiers.push_back(
                    same_arg ? "buf" : "v" + std::to_string(s));
            for (FileFacts& facts : files) {
                if (!facts.java_classes.empty() &&
                    facts.java_classes[0].fqcn == caller) {
                    facts.java_classes[0].native_call_sites.push_back(site);
                    break;
                }
            }
        }
    }

    // Native implementations for most declarations, plus the occasional
    // orphan export and unexported helper.
    int file_no = 0;
    for (const DeclSpot& decl : decls) {
        if (rng.chance(0.25)) continue;  // left unimplemented
        NativeFunctionFacts fn;
        fn.symbol_name = mangle_jni_name(decl.fqcn, decl.name);
        if (rng.chance(0.1)) fn.symbol_name += "__I";  // overload export
        fn.file_path = "native/impl" + std::to_string(file_no++) + ".c";
        fn.defined_at_line = 5;
        fn.params.emplace_back("JNIEnv *", "env");
        if (rng.chance(0.7))
            fn.params.emplace_back(rng.chance(0.5) ? "jobject" : "jclass", "self");
        else
            fn.params.emplace_back("jlong", "handle");
        for (size_t a = 0; a < decl.param_count; ++a) {
            const std::string pname = "a" + std::to_string(a);
            fn.params.emplace_back("jint", pname);
            if (rng.chance(0.8)) fn.body_identifier_uses[pname] = 1;
        }

        const int api_calls = rng.range(0, 10);
        for (int k = 0; k < api_calls; ++k) {
            JniApiCall call;
            call.line = 10 + k;
            switch (rng.range(0, 7)) {
                case 0: call.api_name = "GetFieldID"; break;
                case 1: call.api_name = "GetMethodID"; break;
                case 2: call.api_name = "GetStaticMethodID"; break;
                case 3: call.api_name = "FindClass"; break;
                case 4: call.api_name = "GetIntField"; break;
                case 5: call.api_name = "SetIntField"; break;
                case 6: call.api_name = "NewObject"; break;
                default: call.api_name = "GetStringUTFChars"; break;
            }
            if (rng.chance(0.3)) {
                call.loop_depth = 1;
                if (rng.chance(0.6)) call.loop_bound = rng.range(1, 40);
            }
            call.null_or_error_checked = rng.chance(0.5);
            call.followed_by_throw_and_return =
                call.null_or_error_checked && rng.chance(0.7);
            if (rng.chance(0.6)) {
                call.assigned_to = "v" + std::to_string(k);
                if (rng.chance(0.25))
                    fn.returned_identifiers.push_back(call.assigned_to);
            }
            if (call.api_name == "GetStringUTFChars" && rng.chance(0.5))
                call.released_by = call.line + 20;
            call.arg_identifiers = {"env", "self"};
            fn.jni_api_calls.push_back(std::move(call));
        }
        fn.has_delete_local_ref = rng.chance(0.25);
        fn.has_ensure_local_capacity = rng.chance(0.1);

        FileFacts facts;
        facts.file = {fn.file_path, Language::C, 30, "test"};
        facts.native_functions.push_back(std::move(fn));
        files.push_back(std::move(facts));
    }

    if (rng.chance(0.2)) {  // an export no Java class declares
        NativeFunctionFacts fn;
        fn.symbol_name = "Java_ghost_Gone_run";
        fn.file_path = "native/ghost.c";
        fn.defined_at_line = 1;
        fn.params.emplace_back("JNIEnv *", "env");
        FileFacts facts;
        facts.file = {fn.file_path, Language::C, 10, "test"};
        facts.native_functions.push_back(std::move(fn));
        files.push_back(std::move(facts));
    }

    return build_model("test", std::move(files));
}

}  // namespace modelgen

#endif
