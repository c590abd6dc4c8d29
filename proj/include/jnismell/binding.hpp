#ifndef JNISMELL_BINDING_HPP
#define JNISMELL_BINDING_HPP

#include <map>
#include <string>
#include <vector>

#include "jnismell/source_model.hpp"

namespace jnismell {

enum class MatchKind { Exact, OverloadSuffixed, Unmatched };

const char* to_string(MatchKind kind);

// Declaration-to-implementation link. decl_index points into
// CodebaseModel::decl(), impl_indices into CodebaseModel::native_functions.
// An overloaded export set can give one declaration several implementations;
// the first one is in path order.
struct Binding {
    size_t decl_index = 0;
    std::vector<size_t> impl_indices;
    MatchKind kind = MatchKind::Unmatched;
};

struct DeclRef {
    std::string owner_fqcn;
    std::string name;

    bool operator<(const DeclRef& o) const {
        return owner_fqcn != o.owner_fqcn ? owner_fqcn < o.owner_fqcn
                                          : name < o.name;
    }
};

struct CodebaseModel {
    std::string release_id;
    std::vector<SourceFile> files;
    std::vector<JavaClassFacts> java_classes;
    std::vector<NativeFunctionFacts> native_functions;
    std::vector<Binding> bindings;
    // Java_-prefixed symbols bound to no declaration.
    std::vector<size_t> orphan_impls;
    // Resolved call sites per declaration.
    std::map<DeclRef, std::vector<NativeCallSite>> call_index;
    // Classes whose natives are registered dynamically.
    std::vector<std::string> dynamic_registration_classes;
    Diagnostics diagnostics;

    struct DeclId {
        size_t class_index;
        size_t decl_in_class;
    };
    std::vector<DeclId> decl_ids;  // flattened declaration order

    const NativeMethodDecl& decl(size_t flat_index) const {
        const DeclId& id = decl_ids[flat_index];
        return java_classes[id.class_index].native_decls[id.decl_in_class];
    }
    size_t decl_count() const { return decl_ids.size(); }

    const JavaClassFacts* find_class(const std::string& fqcn) const;
    bool uses_dynamic_registration(const std::string& fqcn) const;
};

// Assembles per-file facts into a model: flattens declarations, resolves
// call-site targets against the class table, links declarations to exported
// symbols (Exact first, then overload-suffixed), and reports orphans and
// duplicate symbols.
CodebaseModel build_model(const std::string& release_id,
                          std::vector<FileFacts> per_file);

}  // namespace jnismell

#endif
