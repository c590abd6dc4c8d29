#include "jnismell/jni_names.hpp"

#include <cstdint>
#include <cstdio>
#include <vector>

namespace jnismell {
namespace {

// Decodes the UTF-8 sequence at s[i]; advances i. Returns 0xFFFD on bad input.
uint32_t decode_utf8(const std::string& s, size_t& i) {
    unsigned char c = s[i];
    if (c < 0x80) {
        ++i;
        return c;
    }
    int extra;
    uint32_t cp;
    if ((c & 0xE0) == 0xC0) { extra = 1; cp = c & 0x1F; }
    else if ((c & 0xF0) == 0xE0) { extra = 2; cp = c & 0x0F; }
    else if ((c & 0xF8) == 0xF0) { extra = 3; cp = c & 0x07; }
    else { ++i; return 0xFFFD; }
    if (i + extra >= s.size()) {  // missing continuation bytes
        ++i;
        return 0xFFFD;
    }
    for (int k = 1; k <= extra; ++k) {
        unsigned char cc = s[i + k];
        if ((cc & 0xC0) != 0x80) { ++i; return 0xFFFD; }
        cp = (cp << 6) | (cc & 0x3F);
    }
    i += extra + 1;
    return cp;
}

void encode_utf8(uint32_t cp, std::string& out) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

void append_escaped(uint32_t cp, std::string& out) {
    if (cp == '/') {
        out += '_';
    } else if (cp == '_') {
        out += "_1";
    } else if (cp == ';') {
        out += "_2";
    } else if (cp == '[') {
        out += "_3";
    } else if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z') ||
               (cp >= '0' && cp <= '9')) {
        out += static_cast<char>(cp);
    } else if (cp <= 0xFFFF) {
        // everything else, including ASCII punctuation like '$'
        char buf[16];
        std::snprintf(buf, sizeof(buf), "_0%04x", cp);
        out += buf;
    } else {
        // UTF-16 surrogate pair, one escape per unit
        uint32_t v = cp - 0x10000;
        char buf[16];
        std::snprintf(buf, sizeof(buf), "_0%04x_0%04x", 0xD800 + (v >> 10),
                      0xDC00 + (v & 0x3FF));
        out += buf;
    }
}

void mangle_text(const std::string& text, std::string& out) {
    size_t i = 0;
    while (i < text.size()) {
        uint32_t cp = decode_utf8(text, i);
        append_escaped(cp, out);
    }
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

std::string mangle_jni_name(const std::string& fqcn, const std::string& method) {
    std::string slashed;
    slashed.reserve(fqcn.size());
    for (char c : fqcn) slashed += (c == '.') ? '/' : c;

    std::string out = "Java_";
    mangle_text(slashed, out);
    out += '_';
    mangle_text(method, out);
    return out;
}

std::optional<DemangledName> demangle_jni_name(const std::string& symbol) {
    const std::string prefix = "Java_";
    if (symbol.size() <= prefix.size() || symbol.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;

    std::string rest = symbol.substr(prefix.size());
    std::vector<std::string> components;
    std::string cur;
    std::string suffix;
    bool has_suffix = false;
    bool cur_started = false;
    uint32_t pending_high_surrogate = 0;

    auto flush_cp = [&](uint32_t cp) {
        if (pending_high_surrogate) {
            if (cp >= 0xDC00 && cp <= 0xDFFF) {
                uint32_t full = 0x10000 +
                                ((pending_high_surrogate - 0xD800) << 10) +
                                (cp - 0xDC00);
                encode_utf8(full, cur);
            } else {
                encode_utf8(pending_high_surrogate, cur);
                encode_utf8(cp, cur);
            }
            pending_high_surrogate = 0;
        } else if (cp >= 0xD800 && cp <= 0xDBFF) {
            pending_high_surrogate = cp;
        } else {
            encode_utf8(cp, cur);
        }
    };

    size_t i = 0;
    const size_t n = rest.size();
    while (i < n) {
        char c = rest[i];
        if (c != '_') {
            cur += c;
            cur_started = true;
            ++i;
            continue;
        }
        if (i + 1 >= n) return std::nullopt;  // trailing separator
        char d = rest[i + 1];
        if (d == '1') { cur += '_'; cur_started = true; i += 2; continue; }
        if (d == '2') { cur += ';'; cur_started = true; i += 2; continue; }
        if (d == '3') { cur += '['; cur_started = true; i += 2; continue; }
        if (d == '0') {
            if (i + 5 >= n) return std::nullopt;
            uint32_t cp = 0;
            for (int k = 2; k <= 5; ++k) {
                char h = rest[i + k];
                if (h >= 'A' && h <= 'F') return std::nullopt;  // hex must be lowercase
                int v = hex_value(h);
                if (v < 0) return std::nullopt;
                cp = cp * 16 + static_cast<uint32_t>(v);
            }
            flush_cp(cp);
            cur_started = true;
            i += 6;
            continue;
        }
        // separator
        if (pending_high_surrogate) {
            encode_utf8(pending_high_surrogate, cur);
            pending_high_surrogate = 0;
        }
        if (!cur_started) {
            // two separators in a row: overload marker, unless we have not
            // seen any component yet
            if (components.empty()) return std::nullopt;
            suffix = rest.substr(i + 1);
            has_suffix = true;
            break;
        }
        components.push_back(cur);
        cur.clear();
        cur_started = false;
        ++i;
    }
    if (pending_high_surrogate) encode_utf8(pending_high_surrogate, cur);
    if (!has_suffix) {
        if (!cur_started) return std::nullopt;
        components.push_back(cur);
    }
    if (components.size() < 2) return std::nullopt;

    DemangledName out;
    out.method = components.back();
    components.pop_back();
    for (size_t k = 0; k < components.size(); ++k) {
        if (k) out.fqcn += '.';
        out.fqcn += components[k];
    }
    out.overload_suffix = suffix;
    return out;
}

}  // namespace jnismell
