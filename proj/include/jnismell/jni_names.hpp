#ifndef JNISMELL_JNI_NAMES_HPP
#define JNISMELL_JNI_NAMES_HPP

#include <optional>
#include <string>

namespace jnismell {

// Java_<mangled class>_<mangled method>. Escapes: '_' -> "_1", ';' -> "_2",
// '[' -> "_3", non-ASCII code point -> "_0xxxx" (four lowercase hex digits).
// Package separators '.' become '/' first and then '_'.
std::string mangle_jni_name(const std::string& fqcn, const std::string& method);

struct DemangledName {
    std::string fqcn;
    std::string method;
    // Text after "__" (overload signature), without the underscores.
    std::string overload_suffix;
};

// Inverse of mangle on its image; nullopt for symbols that are not valid
// JNI export names (wrong prefix, malformed escape, empty component).
std::optional<DemangledName> demangle_jni_name(const std::string& symbol);

}  // namespace jnismell

#endif
