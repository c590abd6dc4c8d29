#include "jnismell/binding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "jnismell/jni_names.hpp"

namespace jnismell {

const char* to_string(MatchKind kind) {
    switch (kind) {
        case MatchKind::Exact: return "exact";
        case MatchKind::OverloadSuffixed: return "overload";
        case MatchKind::Unmatched: return "unmatched";
    }
    return "unknown";
}

const JavaClassFacts* CodebaseModel::find_class(const std::string& fqcn) const {
    for (const JavaClassFacts& cls : java_classes)
        if (cls.fqcn == fqcn) return &cls;
    return nullptr;
}

bool CodebaseModel::uses_dynamic_registration(const std::string& fqcn) const {
    return std::find(dynamic_registration_classes.begin(),
                     dynamic_registration_classes.end(),
                     fqcn) != dynamic_registration_classes.end();
}

CodebaseModel build_model(const std::string& release_id,
                          std::vector<FileFacts> per_file) {
    CodebaseModel model;
    model.release_id = release_id;

    // Deterministic order regardless of how the files were gathered.
    std::sort(per_file.begin(), per_file.end(),
              [](const FileFacts& a, const FileFacts& b) {
                  return a.file.file_path < b.file.file_path;
              });

    for (FileFacts& facts : per_file) {
        model.files.push_back(facts.file);
        for (Diagnostic& d : facts.diagnostics)
            model.diagnostics.push_back(std::move(d));
        for (JavaClassFacts& cls : facts.java_classes)
            model.java_classes.push_back(std::move(cls));
        for (NativeFunctionFacts& fn : facts.native_functions)
            model.native_functions.push_back(std::move(fn));
    }

    // Class lookup tables: exact fqcn, and simple name when unambiguous.
    std::map<std::string, size_t> by_fqcn;
    std::map<std::string, std::vector<size_t>> by_simple;
    for (size_t c = 0; c < model.java_classes.size(); ++c) {
        const std::string& fqcn = model.java_classes[c].fqcn;
        by_fqcn.emplace(fqcn, c);
        size_t cut = fqcn.find_last_of(".$");
        std::string simple =
            cut == std::string::npos ? fqcn : fqcn.substr(cut + 1);
        by_simple[simple].push_back(c);
    }

    // Flatten declarations.
    std::map<DeclRef, size_t> decl_by_ref;
    for (size_t c = 0; c < model.java_classes.size(); ++c) {
        const JavaClassFacts& cls = model.java_classes[c];
        for (size_t d = 0; d < cls.native_decls.size(); ++d) {
            model.decl_ids.push_back({c, d});
            decl_by_ref.emplace(DeclRef{cls.fqcn, cls.native_decls[d].name},
                                model.decl_ids.size() - 1);
        }
    }

    // Resolve call sites recorded during parsing. target_owner holds either a
    // fully qualified caller-side resolution or a bare type name.
    for (const JavaClassFacts& cls : model.java_classes) {
        for (const NativeCallSite& site : cls.native_call_sites) {
            size_t target_class = SIZE_MAX;
            auto exact = by_fqcn.find(site.target_owner);
            if (exact != by_fqcn.end()) {
                target_class = exact->second;
            } else {
                auto simple = by_simple.find(site.target_owner);
                if (simple != by_simple.end() && simple->second.size() == 1)
                    target_class = simple->second[0];
            }
            if (target_class == SIZE_MAX) continue;

            const JavaClassFacts& owner = model.java_classes[target_class];
            DeclRef ref{owner.fqcn, site.target_name};
            if (!decl_by_ref.count(ref)) continue;
            NativeCallSite resolved = site;
            resolved.target_owner = owner.fqcn;
            model.call_index[ref].push_back(std::move(resolved));
        }
    }

    // Dynamic registration: a file that calls RegisterNatives and mentions a
    // class literal links that class to native code.
    std::set<std::string> dynamic;
    std::map<std::string, std::vector<const NativeFunctionFacts*>> fns_by_file;
    for (const NativeFunctionFacts& fn : model.native_functions)
        fns_by_file[fn.file_path].push_back(&fn);
    for (const auto& [file, fns] : fns_by_file) {
        bool registers = false;
        for (const NativeFunctionFacts* fn : fns)
            registers = registers || fn->calls_register_natives;
        if (!registers) continue;
        for (const NativeFunctionFacts* fn : fns) {
            for (const std::string& lit : fn->referenced_class_literals) {
                std::string dotted = lit;
                std::replace(dotted.begin(), dotted.end(), '/', '.');
                if (by_fqcn.count(dotted)) dynamic.insert(dotted);
            }
        }
    }
    model.dynamic_registration_classes.assign(dynamic.begin(), dynamic.end());

    // Link declarations to exported symbols. Exact mangled names first, then
    // overload-suffixed exports; whatever remains is unmatched.
    std::map<std::string, std::vector<size_t>> impls_by_symbol;
    for (size_t f = 0; f < model.native_functions.size(); ++f)
        impls_by_symbol[model.native_functions[f].symbol_name].push_back(f);

    std::set<size_t> bound_impls;
    for (size_t flat = 0; flat < model.decl_count(); ++flat) {
        const NativeMethodDecl& decl = model.decl(flat);
        std::string mangled = mangle_jni_name(decl.owner_fqcn, decl.name);

        Binding binding;
        binding.decl_index = flat;

        auto exact = impls_by_symbol.find(mangled);
        if (exact != impls_by_symbol.end()) {
            binding.kind = MatchKind::Exact;
            binding.impl_indices.push_back(exact->second[0]);
            bound_impls.insert(exact->second[0]);
            if (exact->second.size() > 1) {
                for (size_t k = 1; k < exact->second.size(); ++k) {
                    const NativeFunctionFacts& dup =
                        model.native_functions[exact->second[k]];
                    model.diagnostics.push_back(
                        {dup.file_path, dup.defined_at_line,
                         "duplicate export " + mangled + ", first wins"});
                    bound_impls.insert(exact->second[k]);
                }
            }
        } else {
            const std::string prefix = mangled + "__";
            for (const auto& [symbol, impls] : impls_by_symbol) {
                if (symbol.size() <= prefix.size() ||
                    symbol.compare(0, prefix.size(), prefix) != 0)
                    continue;
                for (size_t impl : impls) {
                    binding.impl_indices.push_back(impl);
                    bound_impls.insert(impl);
                }
            }
            binding.kind = binding.impl_indices.empty()
                               ? MatchKind::Unmatched
                               : MatchKind::OverloadSuffixed;
        }
        model.bindings.push_back(std::move(binding));
    }

    for (const Binding& binding : model.bindings) {
        if (binding.kind != MatchKind::Unmatched) continue;
        const NativeMethodDecl& decl = model.decl(binding.decl_index);
        if (!model.uses_dynamic_registration(decl.owner_fqcn)) continue;
        const auto& id = model.decl_ids[binding.decl_index];
        model.diagnostics.push_back(
            {model.java_classes[id.class_index].file_path,
             decl.declared_at_line,
             "native method " + decl.name +
                 " appears to be registered dynamically via RegisterNatives"});
    }

    for (size_t f = 0; f < model.native_functions.size(); ++f) {
        const NativeFunctionFacts& fn = model.native_functions[f];
        if (!fn.symbol_name.compare(0, 5, "Java_") && !bound_impls.count(f)) {
            model.orphan_impls.push_back(f);
            model.diagnostics.push_back(
                {fn.file_path, fn.defined_at_line,
                 "exported symbol " + fn.symbol_name +
                     " matches no native declaration"});
        }
    }

    return model;
}

}  // namespace jnismell
