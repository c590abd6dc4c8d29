#ifndef JNISMELL_JAVA_PARSER_HPP
#define JNISMELL_JAVA_PARSER_HPP

#include <string>

#include "jnismell/source_model.hpp"

namespace jnismell {

// Island parse of one Java source file: class declarations, native method
// declarations, library loads with their context flags, and candidate native
// call sites. Tolerant by design; regions it cannot make sense of are skipped
// with a diagnostic.
FileFacts parse_java_source(const std::string& path, const std::string& text,
                            const std::string& release_id);

}  // namespace jnismell

#endif
