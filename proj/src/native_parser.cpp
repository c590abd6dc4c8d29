#include "jnismell/native_parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "jnismell/text_scan.hpp"

namespace jnismell {
namespace {

enum class BlockKind {
    Function,
    Container,  // namespace, extern "C", struct/class/union bodies
    Loop,
    Conditional,
    Try,
    Catch,
    Other,
};

struct BlockInfo {
    BlockKind kind = BlockKind::Other;
    std::string name;
};

std::string first_token(const std::string& s) {
    size_t i = 0;
    while (i < s.size() && !is_identifier_start(s[i])) {
        // skip C++ attributes [[...]] in front of declarations
        if (s[i] == '[' && i + 1 < s.size() && s[i + 1] == '[') {
            size_t end = s.find("]]", i);
            if (end == std::string::npos) break;
            i = end + 2;
            continue;
        }
        ++i;
    }
    return identifier_at(s, i);
}

BlockInfo classify_block(const std::string& introducer) {
    BlockInfo info;
    std::string intro = trim(introducer);
    if (intro.empty()) return info;

    std::string tok = first_token(intro);
    if (tok == "for" || tok == "while" || tok == "do") {
        info.kind = BlockKind::Loop;
        return info;
    }
    if (tok == "if" || tok == "else" || tok == "switch") {
        info.kind = BlockKind::Conditional;
        return info;
    }
    if (tok == "try") { info.kind = BlockKind::Try; return info; }
    if (tok == "catch") { info.kind = BlockKind::Catch; return info; }
    if (tok == "namespace" || tok == "extern") {
        info.kind = BlockKind::Container;
        return info;
    }
    if (tok == "struct" || tok == "class" || tok == "union" || tok == "enum" ||
        tok == "typedef") {
        // type definition bodies can hold methods in C++
        info.kind = intro.find('(') == std::string::npos ? BlockKind::Container
                                                         : BlockKind::Other;
        if (tok == "typedef" || tok == "enum") info.kind = BlockKind::Other;
        return info;
    }
    if (tok == "return" || tok == "case" || tok == "default") return info;

    // Function definition: an identifier directly before a parenthesized
    // parameter list, with no top-level '=' in front of it.
    size_t open = std::string::npos;
    int angle = 0;
    for (size_t i = 0; i < intro.size(); ++i) {
        char c = intro[i];
        if (c == '<') ++angle;
        else if (c == '>') angle = std::max(0, angle - 1);
        else if (c == '(' && angle == 0) { open = i; break; }
        else if (c == ';') return info;
        else if (c == '=' && (i + 1 >= intro.size() || intro[i + 1] != '=') &&
                 (i == 0 || (intro[i - 1] != '=' && intro[i - 1] != '!' &&
                             intro[i - 1] != '<' && intro[i - 1] != '>')))
            return info;
    }
    if (open == std::string::npos) return info;
    std::string name = identifier_before(intro, open);
    if (name.empty()) return info;
    info.kind = BlockKind::Function;
    info.name = name;
    return info;
}

size_t prev_significant(const std::string& text, size_t pos) {
    while (pos > 0) {
        --pos;
        if (!std::isspace(static_cast<unsigned char>(text[pos]))) return pos;
    }
    return std::string::npos;
}

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

// True when [begin, end) reads like a cast: identifiers, whitespace and
// pointer/namespace punctuation only.
bool looks_like_cast(const std::string& text, size_t begin, size_t end) {
    bool any = false;
    for (size_t i = begin; i < end; ++i) {
        char c = text[i];
        if (is_identifier_char(c)) { any = true; continue; }
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*' ||
            c == '&' || c == ':' || c == '<' || c == '>' || c == ',')
            continue;
        return false;
    }
    return any;
}

const std::set<std::string>& jni_prefixes() {
    static const std::set<std::string> p = {
        "Get",    "Set",     "New",   "Release",  "Call",   "Find",
        "Alloc",  "To",      "Ensure", "Delete",  "Exception", "Throw",
        "Push",   "Pop",     "Register", "Monitor", "Is",   "From",
    };
    return p;
}

bool jni_looking(const std::string& name) {
    for (const std::string& p : jni_prefixes()) {
        if (name.size() > p.size() && starts_with(name, p) &&
            std::isupper(static_cast<unsigned char>(name[p.size()])))
            return true;
    }
    return false;
}

// Condition region and guarded body of one if statement.
struct IfRegion {
    size_t cond_begin = 0;
    size_t cond_end = 0;
    size_t body_begin = 0;
    size_t body_end = 0;
};

std::vector<IfRegion> if_regions(const MaskedSource& src) {
    std::vector<IfRegion> out;
    const std::string& text = src.text;
    size_t pos = 0;
    while ((pos = text.find("if", pos)) != std::string::npos) {
        bool left = pos == 0 || !is_identifier_char(text[pos - 1]);
        bool right = pos + 2 >= text.size() || !is_identifier_char(text[pos + 2]);
        if (!left || !right) { pos += 2; continue; }
        size_t j = pos + 2;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        if (j >= text.size() || text[j] != '(') { pos += 2; continue; }
        size_t close = matching_paren(text, j);
        if (close == std::string::npos) { pos += 2; continue; }

        IfRegion region;
        region.cond_begin = j + 1;
        region.cond_end = close;
        size_t body = close + 1;
        while (body < text.size() &&
               std::isspace(static_cast<unsigned char>(text[body])))
            ++body;
        if (body < text.size() && text[body] == '{') {
            int depth = 0;
            size_t k = body;
            for (; k < text.size(); ++k) {
                if (text[k] == '{') ++depth;
                else if (text[k] == '}' && --depth == 0) break;
            }
            region.body_begin = body + 1;
            region.body_end = std::min(k, text.size());
        } else {
            size_t k = body;
            int depth = 0;
            while (k < text.size()) {
                char c = text[k];
                if (c == '(' || c == '[' || c == '{') ++depth;
                else if (c == ')' || c == ']' || c == '}') --depth;
                else if (c == ';' && depth == 0) break;
                ++k;
            }
            region.body_begin = body;
            region.body_end = k;
        }
        out.push_back(region);
        pos += 2;
    }
    return out;
}

size_t find_word_from(const std::string& text, const std::string& w,
                      size_t from, size_t to) {
    size_t pos = from;
    while (pos < to && (pos = text.find(w, pos)) != std::string::npos && pos < to) {
        bool left = pos == 0 || !is_identifier_char(text[pos - 1]);
        bool right = pos + w.size() >= text.size() ||
                     !is_identifier_char(text[pos + w.size()]);
        if (left && right) return pos;
        ++pos;
    }
    return std::string::npos;
}

}  // namespace

FileFacts parse_native_source(const std::string& path, const std::string& text,
                              const std::string& release_id) {
    FileFacts out;
    out.file.file_path = path;
    out.file.language = language_from_extension(path);
    out.file.loc = count_loc(text);
    out.file.release_id = release_id;

    MaskedSource src = mask_source(text, CommentStyle::C);
    BraceTree tree = build_brace_tree(src);
    if (!tree.balanced)
        out.diagnostics.push_back(
            {path, src.line_at(tree.first_unbalanced_offset),
             "unbalanced braces, parse is best-effort from here"});

    std::vector<BlockInfo> info(tree.blocks.size());
    for (size_t i = 0; i < tree.blocks.size(); ++i)
        info[i] = classify_block(tree.blocks[i].introducer);

    const std::vector<LoopRegion> free_loops = braceless_loop_regions(src);
    const std::vector<IfRegion> guards = if_regions(src);
    const std::string& mt = src.text;

    auto inside_if_condition = [&](size_t offset) -> const IfRegion* {
        for (const IfRegion& g : guards)
            if (offset >= g.cond_begin && offset < g.cond_end) return &g;
        return nullptr;
    };
    auto guard_has_bailout = [&](const IfRegion& g) {
        return find_word_from(mt, "return", g.body_begin, g.body_end) !=
                   std::string::npos ||
               find_word_from(mt, "Throw", g.body_begin, g.body_end) !=
                   std::string::npos ||
               find_word_from(mt, "ThrowNew", g.body_begin, g.body_end) !=
                   std::string::npos ||
               find_word_from(mt, "goto", g.body_begin, g.body_end) !=
                   std::string::npos;
    };

    for (size_t bi = 0; bi < tree.blocks.size(); ++bi) {
        if (info[bi].kind != BlockKind::Function) continue;
        int parent = tree.blocks[bi].parent;
        if (parent != -1 && info[parent].kind != BlockKind::Container) continue;

        const BraceBlock& blk = tree.blocks[bi];
        NativeFunctionFacts fn;
        fn.symbol_name = info[bi].name;
        fn.file_path = path;

        // Parameters from the introducer's last parameter list.
        const std::string& intro = blk.introducer;
        size_t open = std::string::npos;
        {
            int angle = 0;
            for (size_t i = 0; i < intro.size(); ++i) {
                char c = intro[i];
                if (c == '<') ++angle;
                else if (c == '>') angle = std::max(0, angle - 1);
                else if (c == '(' && angle == 0) { open = i; break; }
            }
        }
        size_t close = open == std::string::npos
                           ? std::string::npos
                           : matching_paren(intro, open);
        if (close != std::string::npos) {
            for (const std::string& piece :
                 split_arguments(intro.substr(open + 1, close - open - 1))) {
                std::string p = trim(piece);
                if (p.empty() || p == "void") continue;
                std::vector<std::string> ids = identifiers_in(p);
                if (ids.empty()) continue;
                std::string pname = ids.back();
                size_t cut = p.rfind(pname);
                // Unnamed parameter: the final identifier is the type itself
                // (possibly decorated with '*').
                bool unnamed = trim(p.substr(cut + pname.size())).find('*') !=
                                   std::string::npos ||
                               ids.size() == 1;
                if (p.back() == '*' || unnamed)
                    fn.params.emplace_back(p, "");
                else
                    fn.params.emplace_back(trim(p.substr(0, cut)), pname);
            }
            size_t name_off = intro.rfind(fn.symbol_name, open);
            fn.defined_at_line =
                src.line_at(blk.introducer_begin + (name_off == std::string::npos
                                                        ? 0
                                                        : name_off));
        } else {
            fn.defined_at_line = src.line_at(blk.introducer_begin);
        }

        const size_t body_begin = blk.open + 1;
        const size_t body_end = blk.close;

        // Identifier multiset and return expressions.
        {
            std::string body = mt.substr(body_begin, body_end - body_begin);
            for (const std::string& id : identifiers_in(body))
                ++fn.body_identifier_uses[id];
            size_t pos = 0;
            while ((pos = find_word_from(mt, "return", body_begin + pos,
                                         body_end)) != std::string::npos) {
                size_t stop = mt.find(';', pos);
                if (stop == std::string::npos || stop > body_end) stop = body_end;
                for (const std::string& id :
                     identifiers_in(mt.substr(pos + 6, stop - pos - 6)))
                    fn.returned_identifiers.push_back(id);
                pos = stop - body_begin;
            }
        }

        // Loop context helpers for this function body.
        auto loop_context = [&](size_t offset) {
            int depth = 0;
            std::optional<long long> bound = 1;
            std::vector<int> chain = tree.enclosing_chain(offset);
            bool below = false;
            for (int b : chain) {
                if (!below) {
                    if (b == static_cast<int>(bi)) below = true;
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

        // JNI calls: env->F(...), (*env)->F(env, ...), env.F(...).
        struct RawCall {
            size_t name_pos = 0;
            size_t args_begin = 0;
            size_t args_end = 0;
        };
        std::vector<RawCall> raw;
        for (size_t i = body_begin; i + 1 < body_end; ++i) {
            bool arrow = mt[i] == '-' && mt[i + 1] == '>';
            bool dot = mt[i] == '.';
            if (!arrow && !dot) continue;

            size_t name_pos = i + (arrow ? 2 : 1);
            while (name_pos < body_end &&
                   std::isspace(static_cast<unsigned char>(mt[name_pos])))
                ++name_pos;
            if (name_pos >= body_end || !is_identifier_start(mt[name_pos]))
                continue;
            std::string name = identifier_at(mt, name_pos);
            size_t paren = name_pos + name.size();
            while (paren < body_end &&
                   std::isspace(static_cast<unsigned char>(mt[paren])))
                ++paren;
            if (paren >= body_end || mt[paren] != '(') continue;
            size_t args_close = matching_paren(mt, paren);
            if (args_close == std::string::npos || args_close > body_end)
                continue;

            // Receiver: identifier, or (*x) for the C function-table style.
            size_t recv = prev_significant(mt, i);
            if (recv == std::string::npos) continue;
            bool star_form = false;
            std::string receiver;
            if (mt[recv] == ')') {
                size_t ropen = matching_open_paren(mt, recv);
                if (ropen == std::string::npos || ropen < body_begin) continue;
                std::string inner = trim(mt.substr(ropen + 1, recv - ropen - 1));
                if (inner.size() > 1 && inner[0] == '*') {
                    receiver = trim(inner.substr(1));
                    star_form = receiver.find('(') == std::string::npos;
                }
                if (!star_form) continue;
            } else if (is_identifier_char(mt[recv])) {
                size_t end = recv + 1;
                size_t begin = end;
                while (begin > body_begin && is_identifier_char(mt[begin - 1]))
                    --begin;
                receiver = mt.substr(begin, end - begin);
            } else {
                continue;
            }

            bool env_receiver =
                to_lower(receiver).find("env") != std::string::npos;
            if (dot && !env_receiver) continue;

            if (!in_jni_vocabulary(name)) {
                if (env_receiver && jni_looking(name))
                    out.diagnostics.push_back(
                        {path, src.line_at(name_pos),
                         "unrecognized JNI-style call " + name});
                continue;
            }
            if (!env_receiver && !star_form) {
                out.diagnostics.push_back(
                    {path, src.line_at(name_pos),
                     "JNI-style call " + name + " on receiver " + receiver +
                         ", not recorded"});
                continue;
            }
            raw.push_back({name_pos, paren + 1, args_close});
        }

        for (const RawCall& rc : raw) {
            std::string name = identifier_at(mt, rc.name_pos);
            JniApiCall call;
            call.api_name = name;
            call.line = src.line_at(rc.name_pos);
            auto [depth, bound] = loop_context(rc.name_pos);
            call.loop_depth = depth;
            call.loop_bound = bound;
            for (const std::string& piece : split_arguments(
                     mt.substr(rc.args_begin, rc.args_end - rc.args_begin))) {
                std::string tok = argument_token(trim(piece));
                if (!tok.empty()) call.arg_identifiers.push_back(tok);
            }

            // Assignment target: walk back over the receiver and any casts.
            size_t back = rc.name_pos;
            // move to start of receiver expression
            size_t recv = prev_significant(mt, back);
            while (recv != std::string::npos && recv >= body_begin &&
                   (mt[recv] == '>' || mt[recv] == '-' || mt[recv] == '.'))
                recv = prev_significant(mt, recv);
            if (recv != std::string::npos && mt[recv] == ')') {
                size_t ropen = matching_open_paren(mt, recv);
                if (ropen != std::string::npos)
                    recv = prev_significant(mt, ropen);
            } else if (recv != std::string::npos &&
                       is_identifier_char(mt[recv])) {
                while (recv > body_begin && is_identifier_char(mt[recv - 1]))
                    --recv;
                recv = prev_significant(mt, recv);
            }
            while (recv != std::string::npos && recv >= body_begin &&
                   mt[recv] == ')') {
                size_t ropen = matching_open_paren(mt, recv);
                if (ropen == std::string::npos ||
                    !looks_like_cast(mt, ropen + 1, recv))
                    break;
                recv = prev_significant(mt, ropen);
            }
            if (recv != std::string::npos && mt[recv] == '=' &&
                (recv == 0 || (mt[recv - 1] != '=' && mt[recv - 1] != '!' &&
                               mt[recv - 1] != '<' && mt[recv - 1] != '>')) &&
                (recv + 1 >= mt.size() || mt[recv + 1] != '=')) {
                call.assigned_to = identifier_before(mt, recv);
            }

            // Null/error checking and the guard's bail-out behaviour.
            size_t stmt_end = mt.find(';', rc.args_end);
            if (stmt_end == std::string::npos || stmt_end > body_end)
                stmt_end = body_end;
            const IfRegion* guard = nullptr;
            if (const IfRegion* g = inside_if_condition(rc.name_pos)) {
                call.null_or_error_checked = true;
                guard = g;
            } else if (!call.assigned_to.empty()) {
                size_t use = find_word_from(mt, call.assigned_to, stmt_end,
                                            body_end);
                size_t scan_to = use == std::string::npos ? body_end : use;
                if (use != std::string::npos) {
                    if (const IfRegion* g = inside_if_condition(use)) {
                        call.null_or_error_checked = true;
                        guard = g;
                    }
                }
                if (!call.null_or_error_checked) {
                    for (const char* probe : {"ExceptionCheck",
                                              "ExceptionOccurred"}) {
                        size_t at = find_word_from(mt, probe, stmt_end, scan_to);
                        if (at == std::string::npos) continue;
                        call.null_or_error_checked = true;
                        guard = inside_if_condition(at);
                        break;
                    }
                }
            }
            if (guard) call.followed_by_throw_and_return = guard_has_bailout(*guard);

            fn.jni_api_calls.push_back(std::move(call));
        }

        // Pair acquisitions with their releases.
        for (JniApiCall& call : fn.jni_api_calls) {
            const auto& acq = resource_acquisition_apis();
            if (std::find(acq.begin(), acq.end(), call.api_name) == acq.end())
                continue;
            std::string release = release_api_for(call.api_name);
            for (const JniApiCall& other : fn.jni_api_calls) {
                if (other.api_name != release) continue;
                if (!call.assigned_to.empty()) {
                    if (std::find(other.arg_identifiers.begin(),
                                  other.arg_identifiers.end(),
                                  call.assigned_to) ==
                        other.arg_identifiers.end())
                        continue;
                }
                call.released_by = other.line;
                break;
            }
        }

        // Derived counters and flags.
        const auto& creation = local_ref_creation_apis();
        for (const JniApiCall& call : fn.jni_api_calls) {
            if (call.api_name == "DeleteLocalRef") fn.has_delete_local_ref = true;
            if (call.api_name == "EnsureLocalCapacity")
                fn.has_ensure_local_capacity = true;
            if (call.api_name == "RegisterNatives") fn.calls_register_natives = true;
            if (std::find(creation.begin(), creation.end(), call.api_name) !=
                creation.end()) {
                long long weight = 1;
                if (call.loop_depth > 0 && call.loop_bound)
                    weight = std::max<long long>(*call.loop_bound, 1);
                fn.local_ref_creation_count += weight;
            }
        }

        // Class literals handed to FindClass/DefineClass.
        for (const RawCall& rc : raw) {
            std::string name = identifier_at(mt, rc.name_pos);
            if (name != "FindClass" && name != "DefineClass") continue;
            std::string lit = src.literal_in(rc.args_begin, rc.args_end);
            if (!lit.empty()) fn.referenced_class_literals.push_back(lit);
        }

        out.native_functions.push_back(std::move(fn));
    }

    return out;
}

}  // namespace jnismell
