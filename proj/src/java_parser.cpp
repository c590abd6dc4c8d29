#include "jnismell/java_parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "jnismell/text_scan.hpp"

namespace jnismell {
namespace {

enum class BlockKind {
    Class,       // class/interface/enum/record body
    Method,      // method or constructor body
    StaticInit,  // static { ... }
    Loop,        // for/while/do
    Try,
    Catch,
    Finally,
    Conditional,  // if/else/switch
    Synchronized,
    Other,  // anonymous class bodies, lambdas, array initializers, bare blocks
};

struct BlockInfo {
    BlockKind kind = BlockKind::Other;
    std::string name;  // class simple name or method name
};

bool has_word(const std::string& s, const std::string& w) {
    size_t pos = 0;
    while ((pos = s.find(w, pos)) != std::string::npos) {
        bool left = pos == 0 || !is_identifier_char(s[pos - 1]);
        bool right = pos + w.size() >= s.size() ||
                     !is_identifier_char(s[pos + w.size()]);
        if (left && right) return true;
        ++pos;
    }
    return false;
}

// Index just past any leading annotations ("@Name", "@Name(...)",
// "@pkg.Name(...)"), so signature parsing starts at the modifiers.
size_t skip_annotations(const std::string& s, size_t i) {
    for (;;) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size() || s[i] != '@') return i;
        ++i;
        while (i < s.size() &&
               (is_identifier_char(s[i]) || s[i] == '.'))
            ++i;
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && s[i] == '(') {
            size_t close = matching_paren(s, i);
            if (close == std::string::npos) return i;
            i = close + 1;
        }
    }
}

std::string first_token(const std::string& s) {
    size_t i = skip_annotations(s, 0);
    if (i >= s.size() || !is_identifier_start(s[i])) return "";
    return identifier_at(s, i);
}

const std::set<std::string>& class_keywords() {
    static const std::set<std::string> kw = {"class", "interface", "enum",
                                             "record"};
    return kw;
}

// Class simple name when the introducer declares a type, else "".
std::string class_name_of(const std::string& intro) {
    for (const std::string& kw : class_keywords()) {
        size_t pos = 0;
        while ((pos = intro.find(kw, pos)) != std::string::npos) {
            bool left = pos == 0 || (!is_identifier_char(intro[pos - 1]) &&
                                     intro[pos - 1] != '.');
            bool right = pos + kw.size() < intro.size() &&
                         !is_identifier_char(intro[pos + kw.size()]);
            if (left && right) {
                size_t j = pos + kw.size();
                while (j < intro.size() &&
                       std::isspace(static_cast<unsigned char>(intro[j])))
                    ++j;
                std::string name = identifier_at(intro, j);
                if (!name.empty()) return name;
            }
            pos += kw.size();
        }
    }
    return "";
}

BlockInfo classify_block(const std::string& introducer) {
    BlockInfo info;
    std::string intro = trim(introducer);
    if (intro.empty()) return info;

    std::string cname = class_name_of(intro);
    if (!cname.empty()) {
        info.kind = BlockKind::Class;
        info.name = cname;
        return info;
    }

    std::string tok = first_token(intro);
    if (tok == "for" || tok == "while" || tok == "do") {
        info.kind = BlockKind::Loop;
        return info;
    }
    if (tok == "try") { info.kind = BlockKind::Try; return info; }
    if (tok == "catch") { info.kind = BlockKind::Catch; return info; }
    if (tok == "finally") { info.kind = BlockKind::Finally; return info; }
    if (tok == "if" || tok == "else" || tok == "switch") {
        info.kind = BlockKind::Conditional;
        return info;
    }
    if (tok == "synchronized") {
        // synchronized(lock) {...} vs. a synchronized method
        size_t at = intro.find("synchronized");
        size_t j = at + 12;
        while (j < intro.size() && std::isspace(static_cast<unsigned char>(intro[j])))
            ++j;
        if (j < intro.size() && intro[j] == '(') {
            info.kind = BlockKind::Synchronized;
            return info;
        }
    }
    if (intro == "static") { info.kind = BlockKind::StaticInit; return info; }
    if (tok == "case" || tok == "default" || tok == "new") return info;

    // Method or constructor: a parenthesized parameter list, a plain
    // identifier in front of it, and no '=' before it (which would make this
    // an initializer expression).
    size_t start = skip_annotations(intro, 0);
    size_t open = std::string::npos;
    for (size_t i = start; i < intro.size(); ++i) {
        char c = intro[i];
        if (c == '(') { open = i; break; }
        if (c == '=' &&
            !(i + 1 < intro.size() && intro[i + 1] == '=') &&
            (i == 0 || (intro[i - 1] != '!' && intro[i - 1] != '<' &&
                        intro[i - 1] != '>' && intro[i - 1] != '=')))
            return info;  // assignment: lambda or array initializer
        if (c == ';') return info;
    }
    if (open == std::string::npos) return info;
    std::string name = identifier_before(intro, open);
    if (name.empty() || name == "new") return info;
    info.kind = BlockKind::Method;
    info.name = name;
    return info;
}

std::string package_of(const MaskedSource& src) {
    const std::string& text = src.text;
    size_t limit = text.find('{');
    if (limit == std::string::npos) limit = text.size();
    size_t pos = 0;
    while ((pos = text.find("package", pos)) != std::string::npos && pos < limit) {
        bool left = pos == 0 || !is_identifier_char(text[pos - 1]);
        bool right = pos + 7 < text.size() && !is_identifier_char(text[pos + 7]);
        if (left && right) {
            size_t semi = text.find(';', pos);
            if (semi == std::string::npos) return "";
            std::string raw = text.substr(pos + 7, semi - pos - 7);
            std::string out;
            for (char c : raw)
                if (!std::isspace(static_cast<unsigned char>(c))) out += c;
            return out;
        }
        ++pos;
    }
    return "";
}

// Backward scan to the '(' matching the ')' at `close`.
size_t matching_open_paren(const std::string& text, size_t close) {
    int depth = 0;
    for (size_t i = close + 1; i-- > 0;) {
        if (text[i] == ')') ++depth;
        else if (text[i] == '(') {
            --depth;
            if (depth == 0) return i;
        }
    }
    return std::string::npos;
}

size_t prev_significant(const std::string& text, size_t pos) {
    while (pos > 0) {
        --pos;
        if (!std::isspace(static_cast<unsigned char>(text[pos]))) return pos;
    }
    return std::string::npos;
}

// True when the dotted receiver chain ending at the '.' before `dot` reaches
// a System or Runtime token, e.g. System.loadLibrary, Runtime.getRuntime().load,
// java.lang.System.loadLibrary.
bool chain_hits_system_or_runtime(const std::string& text, size_t dot) {
    size_t pos = dot;
    for (int hops = 0; hops < 6; ++hops) {
        size_t p = prev_significant(text, pos);
        if (p == std::string::npos) return false;
        if (text[p] == ')') {
            size_t open = matching_open_paren(text, p);
            if (open == std::string::npos) return false;
            p = prev_significant(text, open);
            if (p == std::string::npos) return false;
        }
        if (!is_identifier_char(text[p])) return false;
        size_t end = p + 1;
        size_t begin = end;
        while (begin > 0 && is_identifier_char(text[begin - 1])) --begin;
        std::string id = text.substr(begin, end - begin);
        if (id == "System" || id == "Runtime") return true;
        size_t before = prev_significant(text, begin);
        if (before == std::string::npos || text[before] != '.') return false;
        pos = before;
    }
    return false;
}

struct ParenRegion {
    size_t begin = 0;
    size_t end = 0;
};

// All doPrivileged(...) argument regions in the file.
std::vector<ParenRegion> privileged_regions(const MaskedSource& src) {
    std::vector<ParenRegion> out;
    const std::string& text = src.text;
    size_t pos = 0;
    while ((pos = text.find("doPrivileged", pos)) != std::string::npos) {
        bool left = pos == 0 || !is_identifier_char(text[pos - 1]);
        size_t after = pos + 12;
        bool right = after >= text.size() || !is_identifier_char(text[after]);
        if (left && right) {
            size_t j = after;
            while (j < text.size() &&
                   std::isspace(static_cast<unsigned char>(text[j])))
                ++j;
            if (j < text.size() && text[j] == '(') {
                size_t close = matching_paren(text, j);
                if (close != std::string::npos)
                    out.push_back({j + 1, close});
            }
        }
        pos += 12;
    }
    return out;
}

const char* const kOsMarkers[] = {
    "os.name", "osname",  "os_name", "windows", "linux",  "mac",
    "darwin",  "solaris", "sunos",   "freebsd", "aix",    "platform",
};

bool looks_os_conditional(const std::string& raw_introducer) {
    std::string low = to_lower(raw_introducer);
    for (const char* m : kOsMarkers)
        if (low.find(m) != std::string::npos) return true;
    return false;
}

bool is_java_call_keyword(const std::string& id) {
    static const std::set<std::string> kw = {
        "if",    "for",   "while",  "switch", "catch",        "return",
        "new",   "super", "this",   "assert", "synchronized", "throw",
        "case",  "else",  "do",     "try",    "instanceof",   "native",
    };
    return kw.count(id) != 0;
}

}  // namespace

FileFacts parse_java_source(const std::string& path, const std::string& text,
                            const std::string& release_id) {
    FileFacts out;
    out.file.file_path = path;
    out.file.language = Language::Java;
    out.file.loc = count_loc(text);
    out.file.release_id = release_id;

    MaskedSource src = mask_source(text, CommentStyle::Java);
    BraceTree tree = build_brace_tree(src);
    if (!tree.balanced)
        out.diagnostics.push_back(
            {path, src.line_at(tree.first_unbalanced_offset),
             "unbalanced braces, parse is best-effort from here"});

    const std::string pkg = package_of(src);

    std::vector<BlockInfo> info(tree.blocks.size());
    for (size_t i = 0; i < tree.blocks.size(); ++i)
        info[i] = classify_block(tree.blocks[i].introducer);

    // Class table. fqcn nests named classes with '$'.
    std::map<int, int> class_of_block;  // block index -> java_classes index
    for (size_t i = 0; i < tree.blocks.size(); ++i) {
        if (info[i].kind != BlockKind::Class) continue;
        std::vector<std::string> names{info[i].name};
        for (int p = tree.blocks[i].parent; p != -1; p = tree.blocks[p].parent)
            if (info[p].kind == BlockKind::Class)
                names.push_back(info[p].name);
        std::string joined;
        for (auto it = names.rbegin(); it != names.rend(); ++it) {
            if (!joined.empty()) joined += '$';
            joined += *it;
        }
        JavaClassFacts cls;
        cls.fqcn = pkg.empty() ? joined : pkg + "." + joined;
        cls.package_name = pkg;
        cls.file_path = path;
        class_of_block[static_cast<int>(i)] = static_cast<int>(out.java_classes.size());
        out.java_classes.push_back(std::move(cls));
    }

    // Nearest enclosing named class for an offset; -1 when outside any.
    auto class_index_at = [&](size_t offset) -> int {
        std::vector<int> chain = tree.enclosing_chain(offset);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            auto found = class_of_block.find(*it);
            if (found != class_of_block.end()) return found->second;
        }
        return -1;
    };

    // Pass 1: native method declarations, from statements sitting directly in
    // a class body (child blocks blanked so their contents do not leak in).
    for (const auto& [block_idx, cls_idx] : class_of_block) {
        const BraceBlock& blk = tree.blocks[block_idx];
        if (blk.close <= blk.open) continue;
        std::string direct = src.text.substr(blk.open + 1, blk.close - blk.open - 1);
        size_t base = blk.open + 1;
        for (int child : blk.children) {
            const BraceBlock& cb = tree.blocks[child];
            size_t from = cb.open > base ? cb.open - base : 0;
            size_t to = std::min(cb.close + 1 > base ? cb.close + 1 - base : 0,
                                 direct.size());
            for (size_t k = from; k < to; ++k)
                if (direct[k] != '\n') direct[k] = ' ';
            // A bodied member has no ';' of its own; end the statement at its
            // closing brace so it cannot merge into the declaration after it.
            if (cb.close >= base && cb.close - base < direct.size())
                direct[cb.close - base] = ';';
        }

        size_t stmt_begin = 0;
        for (size_t k = 0; k <= direct.size(); ++k) {
            if (k < direct.size() && direct[k] != ';') continue;
            std::string stmt = direct.substr(stmt_begin, k - stmt_begin);
            size_t stmt_base = base + stmt_begin;
            stmt_begin = k + 1;
            if (!has_word(stmt, "native")) continue;

            size_t sig = skip_annotations(stmt, 0);
            size_t open = stmt.find('(', sig);
            std::string name =
                open == std::string::npos ? "" : identifier_before(stmt, open);
            if (name.empty()) {
                out.diagnostics.push_back(
                    {path, src.line_at(stmt_base),
                     "could not parse native method declaration"});
                continue;
            }
            size_t close = matching_paren(stmt, open);
            if (close == std::string::npos) {
                out.diagnostics.push_back(
                    {path, src.line_at(stmt_base),
                     "could not parse native method declaration"});
                continue;
            }

            NativeMethodDecl decl;
            decl.owner_fqcn = out.java_classes[cls_idx].fqcn;
            decl.name = name;
            decl.is_static = has_word(stmt.substr(0, open), "static");
            size_t name_off = stmt.rfind(name, open);
            decl.declared_at_line = src.line_at(stmt_base + name_off);
            for (const std::string& piece :
                 split_arguments(stmt.substr(open + 1, close - open - 1))) {
                std::string p = trim(piece);
                if (p.empty()) continue;
                std::vector<std::string> ids = identifiers_in(p);
                if (ids.empty()) continue;
                std::string pname = ids.back();
                size_t cut = p.rfind(pname);
                std::string ptype = trim(p.substr(0, cut));
                decl.params.emplace_back(ptype, pname);
            }
            out.java_classes[cls_idx].native_decls.push_back(std::move(decl));
        }
    }

    // Names declared native per class, for unqualified call resolution.
    std::vector<std::set<std::string>> decl_names(out.java_classes.size());
    for (size_t c = 0; c < out.java_classes.size(); ++c)
        for (const auto& d : out.java_classes[c].native_decls)
            decl_names[c].insert(d.name);

    const std::vector<ParenRegion> privileged = privileged_regions(src);
    auto in_privileged = [&](size_t offset) {
        for (const auto& r : privileged)
            if (offset >= r.begin && offset < r.end) return true;
        return false;
    };

    // Context walk shared by loads and calls.
    auto catch_mentions_link_error = [&](int block) {
        return tree.blocks[block].introducer.find("UnsatisfiedLinkError") !=
               std::string::npos;
    };
    auto in_link_error_try = [&](const std::vector<int>& chain) {
        for (int b : chain) {
            if (info[b].kind == BlockKind::Catch && catch_mentions_link_error(b))
                return true;
            if (info[b].kind != BlockKind::Try) continue;
            int parent = tree.blocks[b].parent;
            const std::vector<int>& sibs =
                parent == -1 ? tree.roots : tree.blocks[parent].children;
            auto it = std::find(sibs.begin(), sibs.end(), b);
            for (++it; it != sibs.end(); ++it) {
                if (info[*it].kind == BlockKind::Catch) {
                    if (catch_mentions_link_error(*it)) return true;
                } else if (info[*it].kind != BlockKind::Finally) {
                    break;
                }
            }
        }
        return false;
    };
    auto in_os_conditional = [&](const std::vector<int>& chain) {
        for (int b : chain) {
            if (info[b].kind != BlockKind::Conditional) continue;
            const BraceBlock& blk = tree.blocks[b];
            std::string raw =
                text.substr(blk.introducer_begin, blk.open - blk.introducer_begin);
            if (looks_os_conditional(raw)) return true;
        }
        return false;
    };
    // Loop context below the owning class: depth, and the product of literal
    // bounds when every enclosing loop has one. Covers braced loop blocks and
    // single-statement loop bodies alike.
    const std::vector<LoopRegion> free_loops = braceless_loop_regions(src);
    auto loop_context = [&](size_t offset, const std::vector<int>& chain,
                            int class_block) {
        int depth = 0;
        std::optional<long long> bound = 1;
        bool past_class = class_block < 0;
        for (int b : chain) {
            if (!past_class) {
                if (b == class_block) past_class = true;
                continue;
            }
            if (info[b].kind != BlockKind::Loop) continue;
            ++depth;
            if (bound) {
                auto one = literal_loop_bound(tree.blocks[b].introducer);
                if (one) *bound *= std::max<long long>(*one, 1);
                else bound.reset();
            }
        }
        for (const LoopRegion& r : free_loops) {
            if (offset < r.begin || offset >= r.end) continue;
            ++depth;
            if (bound) {
                if (r.bound) *bound *= std::max<long long>(*r.bound, 1);
                else bound.reset();
            }
        }
        if (depth == 0) bound.reset();
        return std::make_pair(depth, bound);
    };

    // Pass 2: library loads and native call sites, one linear scan.
    const std::string& mt = src.text;
    for (size_t i = 0; i < mt.size(); ++i) {
        if (!is_identifier_start(mt[i])) continue;
        if (i > 0 && is_identifier_char(mt[i - 1])) { // inside an identifier
            while (i + 1 < mt.size() && is_identifier_char(mt[i + 1])) ++i;
            continue;
        }
        std::string id = identifier_at(mt, i);
        size_t after = i + id.size();
        size_t j = after;
        while (j < mt.size() && std::isspace(static_cast<unsigned char>(mt[j])))
            ++j;
        if (j >= mt.size() || mt[j] != '(') { i = after - 1; continue; }

        size_t close = matching_paren(mt, j);
        if (close == std::string::npos) { i = after - 1; continue; }

        size_t prev = prev_significant(mt, i);
        bool dotted = prev != std::string::npos && mt[prev] == '.';

        // Library loads first; they would otherwise look like calls.
        if ((id == "loadLibrary" || id == "load") && dotted &&
            chain_hits_system_or_runtime(mt, prev)) {
            int cls = class_index_at(i);
            if (cls < 0) {
                out.diagnostics.push_back(
                    {path, src.line_at(i), "library load outside any class"});
                i = after - 1;
                continue;
            }
            LibraryLoad load;
            load.mechanism = id == "loadLibrary" ? LoadMechanism::LoadLibrary
                                                 : LoadMechanism::Load;
            load.line = src.line_at(i);
            std::string inside = mt.substr(j + 1, close - j - 1);
            std::vector<std::string> args = split_arguments(inside);
            std::string arg = args.size() == 1 ? trim(args[0]) : "";
            bool literal = arg.size() >= 2 && arg.front() == '"' &&
                           arg.back() == '"' &&
                           std::count(arg.begin(), arg.end(), '"') == 2;
            if (literal) {
                load.argument = src.literal_in(j + 1, close);
                bool has_sep = load.argument.find('/') != std::string::npos ||
                               load.argument.find('\\') != std::string::npos;
                bool absolute =
                    (!load.argument.empty() && load.argument[0] == '/') ||
                    (load.argument.size() >= 2 && load.argument[1] == ':') ||
                    starts_with(load.argument, "\\\\");
                load.path_kind = absolute ? PathKind::Absolute
                                : has_sep ? PathKind::Relative
                                          : PathKind::NameOnly;
            } else {
                load.path_kind = PathKind::Dynamic;
                out.diagnostics.push_back(
                    {path, load.line,
                     "library load argument is not a string literal"});
            }
            std::vector<int> chain = tree.enclosing_chain(i);
            load.inside_privileged_block = in_privileged(i);
            load.inside_link_error_try_catch = in_link_error_try(chain);
            load.inside_os_conditional = in_os_conditional(chain);
            out.java_classes[cls].library_loads.push_back(std::move(load));
            i = after - 1;
            continue;
        }

        if (is_java_call_keyword(id)) { i = after - 1; continue; }

        // Declarations and definitions have a type (or 'new') in front. A
        // keyword or a lambda arrow in that spot still means a call.
        if (prev != std::string::npos &&
            (is_identifier_char(mt[prev]) || mt[prev] == ']' || mt[prev] == '>')) {
            bool expression_context = false;
            if (is_identifier_char(mt[prev])) {
                size_t begin = prev;
                while (begin > 0 && is_identifier_char(mt[begin - 1])) --begin;
                std::string word = mt.substr(begin, prev - begin + 1);
                expression_context = word == "return" || word == "else" ||
                                     word == "throw" || word == "assert" ||
                                     word == "case" || word == "do";
            } else if (mt[prev] == '>' && prev > 0 && mt[prev - 1] == '-') {
                expression_context = true;
            }
            if (!expression_context) {
                i = after - 1;
                continue;
            }
        }

        int cls = class_index_at(i);
        if (cls < 0) { i = after - 1; continue; }

        std::string qualifier;
        if (dotted) qualifier = identifier_before(mt, prev);

        const std::string& caller = out.java_classes[cls].fqcn;
        bool qualified_by_type =
            !qualifier.empty() && std::isupper(static_cast<unsigned char>(qualifier[0]));
        bool names_own_class =
            qualified_by_type &&
            (qualifier == caller || ends_with(caller, "." + qualifier) ||
             ends_with(caller, "$" + qualifier));

        std::string owner;
        if (qualified_by_type && !names_own_class) {
            owner = qualifier;  // resolved against the class table later
        } else if (decl_names[cls].count(id) != 0) {
            owner = caller;  // unqualified, instance-qualified, or Self.method
        } else {
            i = after - 1;
            continue;
        }

        NativeCallSite site;
        site.caller_fqcn = caller;
        site.target_name = id;
        site.target_owner = owner;
        site.line = src.line_at(i);

        std::vector<int> chain = tree.enclosing_chain(i);
        int class_block = -1;
        for (int b : chain) {
            auto found = class_of_block.find(b);
            if (found != class_of_block.end() && found->second == cls)
                class_block = b;
        }
        auto [depth, bound] = loop_context(i, chain, class_block);
        site.loop_depth = depth;
        site.loop_bound = bound;
        for (const std::string& piece :
             split_arguments(mt.substr(j + 1, close - j - 1))) {
            std::string tok = argument_token(trim(piece));
            if (!tok.empty()) site.arg_identifiers.push_back(tok);
        }
        out.java_classes[cls].native_call_sites.push_back(std::move(site));
        i = after - 1;
    }

    return out;
}

}  // namespace jnismell
