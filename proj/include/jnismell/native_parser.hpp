#ifndef JNISMELL_NATIVE_PARSER_HPP
#define JNISMELL_NATIVE_PARSER_HPP

#include <string>

#include "jnismell/source_model.hpp"

namespace jnismell {

// Island parse of one C or C++ source file: function definitions and the JNI
// API calls inside them, in both call syntaxes ((*env)->F(env, ...) and
// env->F(...)). Unknown JNI-looking names become diagnostics, not facts.
FileFacts parse_native_source(const std::string& path, const std::string& text,
                              const std::string& release_id);

}  // namespace jnismell

#endif
