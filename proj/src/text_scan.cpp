#include "jnismell/text_scan.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>

namespace jnismell {

int MaskedSource::line_at(size_t offset) const {
    auto it = std::upper_bound(line_starts.begin(), line_starts.end(), offset);
    return static_cast<int>(it - line_starts.begin());
}

std::string MaskedSource::literal_in(size_t from, size_t to) const {
    auto it = literals.lower_bound(from);
    if (it != literals.end() && it->first < to) return it->second;
    return "";
}

MaskedSource mask_source(const std::string& text, CommentStyle) {
    MaskedSource out;
    out.text.assign(text.size(), ' ');
    out.line_starts.push_back(0);

    enum class State { Code, LineComment, BlockComment, Str, Chr };
    State state = State::Code;
    char prev_code = '\0';  // last significant char seen in code state
    size_t literal_start = 0;
    std::string literal;

    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\n') out.line_starts.push_back(i + 1);

        switch (state) {
            case State::Code:
                if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
                    state = State::LineComment;
                    ++i;
                    if (i < text.size() && text[i] == '\n') {
                        out.line_starts.push_back(i + 1);
                        out.text[i] = '\n';
                        state = State::Code;
                    }
                } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
                    state = State::BlockComment;
                    ++i;
                } else if (c == '"') {
                    state = State::Str;
                    literal_start = i;
                    literal.clear();
                    out.text[i] = '"';
                } else if (c == '\'' && !std::isdigit(static_cast<unsigned char>(prev_code))) {
                    state = State::Chr;
                    out.text[i] = '\'';
                } else {
                    out.text[i] = c;
                    if (!std::isspace(static_cast<unsigned char>(c))) prev_code = c;
                }
                break;
            case State::LineComment:
                if (c == '\n') {
                    out.text[i] = '\n';
                    state = State::Code;
                }
                break;
            case State::BlockComment:
                if (c == '\n') out.text[i] = '\n';
                if (c == '*' && i + 1 < text.size() && text[i + 1] == '/') {
                    ++i;
                    state = State::Code;
                }
                break;
            case State::Str:
                if (c == '\\' && i + 1 < text.size()) {
                    literal += c;
                    literal += text[i + 1];
                    ++i;
                } else if (c == '"') {
                    out.text[i] = '"';
                    out.literals[literal_start] = literal;
                    state = State::Code;
                    prev_code = '"';
                } else {
                    if (c == '\n') {
                        // unterminated literal; bail out of it at line end
                        out.text[i] = '\n';
                        out.literals[literal_start] = literal;
                        state = State::Code;
                    } else {
                        literal += c;
                    }
                }
                break;
            case State::Chr:
                if (c == '\\' && i + 1 < text.size()) {
                    ++i;
                } else if (c == '\'') {
                    out.text[i] = '\'';
                    state = State::Code;
                    prev_code = '\'';
                } else if (c == '\n') {
                    out.text[i] = '\n';
                    state = State::Code;
                }
                break;
        }
    }
    return out;
}

int BraceTree::enclosing(size_t offset) const {
    int best = -1;
    for (size_t i = 0; i < blocks.size(); ++i) {
        const BraceBlock& b = blocks[i];
        if (b.open < offset && offset < b.close) {
            if (best < 0 || b.open > blocks[best].open) best = static_cast<int>(i);
        }
    }
    return best;
}

std::vector<int> BraceTree::enclosing_chain(size_t offset) const {
    std::vector<int> chain;
    int cur = enclosing(offset);
    while (cur >= 0) {
        chain.push_back(cur);
        cur = blocks[cur].parent;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

BraceTree build_brace_tree(const MaskedSource& src) {
    BraceTree tree;
    const std::string& text = src.text;
    std::vector<int> stack;
    size_t boundary = 0;
    int paren_depth = 0;

    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') {
            ++paren_depth;
        } else if (c == ')') {
            if (paren_depth > 0) --paren_depth;
        } else if (c == ';' && paren_depth == 0) {
            boundary = i + 1;
        } else if (c == '{') {
            BraceBlock block;
            block.open = i;
            block.introducer_begin = boundary;
            block.introducer = trim(text.substr(boundary, i - boundary));
            block.parent = stack.empty() ? -1 : stack.back();
            int index = static_cast<int>(tree.blocks.size());
            if (block.parent >= 0)
                tree.blocks[block.parent].children.push_back(index);
            else
                tree.roots.push_back(index);
            tree.blocks.push_back(block);
            stack.push_back(index);
            boundary = i + 1;
            paren_depth = 0;
        } else if (c == '}') {
            if (stack.empty()) {
                if (tree.balanced) {
                    tree.balanced = false;
                    tree.first_unbalanced_offset = i;
                }
            } else {
                tree.blocks[stack.back()].close = i;
                stack.pop_back();
            }
            boundary = i + 1;
            paren_depth = 0;
        }
    }
    if (!stack.empty()) {
        if (tree.balanced) {
            tree.balanced = false;
            tree.first_unbalanced_offset = tree.blocks[stack.front()].open;
        }
        // close unterminated blocks at EOF so downstream code can still look
        // at what was parsed
        for (int idx : stack) tree.blocks[idx].close = text.size();
    }
    return tree;
}

bool is_identifier_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_identifier_char(char c) {
    return is_identifier_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

std::string identifier_before(const std::string& text, size_t end) {
    size_t i = end;
    while (i > 0 && std::isspace(static_cast<unsigned char>(text[i - 1]))) --i;
    size_t stop = i;
    while (i > 0 && is_identifier_char(text[i - 1])) --i;
    if (i == stop) return "";
    if (!is_identifier_start(text[i])) return "";
    return text.substr(i, stop - i);
}

std::string identifier_at(const std::string& text, size_t pos) {
    if (pos >= text.size() || !is_identifier_start(text[pos])) return "";
    size_t end = pos;
    while (end < text.size() && is_identifier_char(text[end])) ++end;
    return text.substr(pos, end - pos);
}

size_t matching_paren(const std::string& text, size_t open) {
    if (open >= text.size() || text[open] != '(') return std::string::npos;
    int depth = 0;
    for (size_t i = open; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        else if (text[i] == ')') {
            --depth;
            if (depth == 0) return i;
        }
    }
    return std::string::npos;
}

std::vector<std::string> split_arguments(const std::string& args) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : args) {
        if (c == '(' || c == '[' || c == '{') ++depth;
        else if (c == ')' || c == ']' || c == '}') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    std::string last = trim(cur);
    if (!last.empty() || !out.empty()) out.push_back(last);
    if (out.size() == 1 && out[0].empty()) out.clear();
    return out;
}

std::vector<std::string> identifiers_in(const std::string& text) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < text.size()) {
        if (is_identifier_start(text[i])) {
            size_t start = i;
            while (i < text.size() && is_identifier_char(text[i])) ++i;
            out.push_back(text.substr(start, i - start));
        } else {
            ++i;
        }
    }
    return out;
}

std::string argument_token(const std::string& arg) {
    std::string a = trim(arg);
    if (a.empty()) return "";
    // peel leading casts and unary operators
    while (!a.empty()) {
        if (a[0] == '(' ) {
            size_t close = matching_paren(a, 0);
            if (close == std::string::npos) break;
            std::string rest = trim(a.substr(close + 1));
            if (rest.empty()) {
                a = trim(a.substr(1, close - 1));  // fully parenthesized
            } else {
                a = rest;  // cast
            }
            continue;
        }
        if (a[0] == '&' || a[0] == '*' || a[0] == '!' || a[0] == '+' || a[0] == '-' || a[0] == '~') {
            a = trim(a.substr(1));
            continue;
        }
        break;
    }
    if (a.empty()) return "";
    if (a[0] == '"') return "";
    if (std::isdigit(static_cast<unsigned char>(a[0]))) {
        size_t end = 0;
        while (end < a.size() && (std::isalnum(static_cast<unsigned char>(a[end])) ||
                                  a[end] == '.' || a[end] == 'x' || a[end] == 'X'))
            ++end;
        return a.substr(0, end);
    }
    if (is_identifier_start(a[0])) {
        std::string id = identifier_at(a, 0);
        if (id == "new") {
            std::string rest = trim(a.substr(3));
            return identifier_at(rest, 0);
        }
        return id;
    }
    return "";
}

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<LoopRegion> braceless_loop_regions(const MaskedSource& src) {
    std::vector<LoopRegion> out;
    const std::string& text = src.text;
    for (const char* kw : {"for", "while"}) {
        const size_t klen = kw[0] == 'f' ? 3 : 5;
        size_t pos = 0;
        while ((pos = text.find(kw, pos)) != std::string::npos) {
            bool left = pos == 0 || !is_identifier_char(text[pos - 1]);
            bool right = pos + klen >= text.size() ||
                         !is_identifier_char(text[pos + klen]);
            if (!left || !right) { pos += klen; continue; }
            size_t j = pos + klen;
            while (j < text.size() &&
                   std::isspace(static_cast<unsigned char>(text[j])))
                ++j;
            if (j >= text.size() || text[j] != '(') { pos += klen; continue; }
            size_t close = matching_paren(text, j);
            if (close == std::string::npos) { pos += klen; continue; }
            size_t body = close + 1;
            while (body < text.size() &&
                   std::isspace(static_cast<unsigned char>(text[body])))
                ++body;
            // '{' is a braced loop; ';' is either an empty body or the tail
            // of a do-while.
            if (body >= text.size() || text[body] == '{' || text[body] == ';') {
                pos += klen;
                continue;
            }
            size_t end = body;
            int depth = 0;
            bool entered_braces = false;
            while (end < text.size()) {
                char c = text[end];
                if (c == '(' || c == '[') {
                    ++depth;
                } else if (c == ')' || c == ']') {
                    --depth;
                } else if (c == '{') {
                    if (depth == 0) entered_braces = true;
                    ++depth;
                } else if (c == '}') {
                    --depth;
                    if (depth < 0) break;  // enclosing block closed first
                    if (depth == 0 && entered_braces) {
                        ++end;  // a braced sub-statement is the whole body
                        break;
                    }
                } else if (c == ';' && depth == 0) {
                    break;
                }
                ++end;
            }
            LoopRegion region;
            region.begin = body;
            region.end = end;
            region.bound =
                literal_loop_bound(text.substr(pos, close + 1 - pos));
            out.push_back(region);
            pos += klen;
        }
    }
    return out;
}

namespace {

std::optional<long long> parse_integer_literal(const std::string& tok) {
    if (tok.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(tok.c_str(), &end, 0);
    if (errno != 0 || end == tok.c_str()) return std::nullopt;
    // Allow integer suffixes (L, u, etc.) but nothing else.
    for (const char* p = end; *p; ++p) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*p)));
        if (c != 'l' && c != 'u') return std::nullopt;
    }
    return v;
}

}  // namespace

std::optional<long long> literal_loop_bound(const std::string& introducer) {
    std::string head = trim(introducer);
    // Parse the last header in the text: stacked braceless loops leave every
    // preceding header in the same introducer, and those outer loops are
    // counted separately as braceless regions.
    size_t last = std::string::npos;
    for (size_t pos = 0; (pos = head.find("for", pos)) != std::string::npos;
         pos += 3) {
        bool left = pos == 0 || !is_identifier_char(head[pos - 1]);
        bool right =
            pos + 3 >= head.size() || !is_identifier_char(head[pos + 3]);
        if (left && right) last = pos;
    }
    if (last == std::string::npos) return std::nullopt;
    head = head.substr(last);
    size_t open = head.find('(');
    if (open == std::string::npos) return std::nullopt;
    size_t close = matching_paren(head, open);
    if (close == std::string::npos) return std::nullopt;
    std::string inside = head.substr(open + 1, close - open - 1);

    // Split the classic three-clause header; range-for has no ';'.
    std::vector<std::string> clauses;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i < inside.size(); ++i) {
        char c = inside[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (c == ';' && depth == 0) {
            clauses.push_back(inside.substr(start, i - start));
            start = i + 1;
        }
    }
    clauses.push_back(inside.substr(start));
    if (clauses.size() != 3) return std::nullopt;

    const std::string init = trim(clauses[0]);
    const std::string cond = trim(clauses[1]);

    // Condition shaped like "i < N" or "i <= N" with a literal N.
    size_t lt = cond.find('<');
    if (lt == std::string::npos || (lt + 1 < cond.size() && cond[lt + 1] == '<'))
        return std::nullopt;
    bool inclusive = lt + 1 < cond.size() && cond[lt + 1] == '=';
    std::string rhs = trim(cond.substr(lt + (inclusive ? 2 : 1)));
    auto limit = parse_integer_literal(rhs);
    if (!limit) return std::nullopt;

    // Starting value from "... = L" in the init clause; default 0.
    long long base = 0;
    size_t eq = init.rfind('=');
    if (eq != std::string::npos) {
        auto b = parse_integer_literal(trim(init.substr(eq + 1)));
        if (!b) return std::nullopt;
        base = *b;
    }
    long long bound = *limit - base + (inclusive ? 1 : 0);
    if (bound < 0) bound = 0;
    return bound;
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string to_lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

}  // namespace jnismell
