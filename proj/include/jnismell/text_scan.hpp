#ifndef JNISMELL_TEXT_SCAN_HPP
#define JNISMELL_TEXT_SCAN_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jnismell {

// Source text with comments and string/char literal contents blanked out.
// Quote characters stay in place so call shapes survive, and the original
// literal text is kept in a side table keyed by the opening quote offset.
struct MaskedSource {
    std::string text;                       // same length as the input
    std::map<size_t, std::string> literals; // offset of opening quote -> contents
    std::vector<size_t> line_starts;        // offset of each line start

    int line_at(size_t offset) const;
    // Literal starting at or after `from` and before `to`; empty if none.
    std::string literal_in(size_t from, size_t to) const;
};

enum class CommentStyle { C, Java };

MaskedSource mask_source(const std::string& text, CommentStyle style);

// Hierarchical view of the brace structure. Introducer text is whatever sits
// between the previous statement boundary and the opening brace; it is what
// classifies the block (class header, function header, loop, try, catch...).
struct BraceBlock {
    size_t open = 0;   // offset of '{'
    size_t close = 0;  // offset of matching '}'
    std::string introducer;
    size_t introducer_begin = 0;
    int parent = -1;
    std::vector<int> children;
};

struct BraceTree {
    std::vector<BraceBlock> blocks;  // preorder
    std::vector<int> roots;
    bool balanced = true;
    size_t first_unbalanced_offset = 0;

    // Innermost block containing `offset`, or -1.
    int enclosing(size_t offset) const;
    // Chain of blocks from root to innermost around `offset`.
    std::vector<int> enclosing_chain(size_t offset) const;
};

BraceTree build_brace_tree(const MaskedSource& src);

bool is_identifier_char(char c);
bool is_identifier_start(char c);

// Identifier ending at `end` (exclusive), scanning backwards over whitespace.
std::string identifier_before(const std::string& text, size_t end);

// Reads the identifier starting at `pos`; empty when none.
std::string identifier_at(const std::string& text, size_t pos);

// Offset of the matching ')' for the '(' at `open`, or npos.
size_t matching_paren(const std::string& text, size_t open);

// Splits an argument list (text between the parens) at top-level commas.
std::vector<std::string> split_arguments(const std::string& args);

// All identifiers in a text span, in order.
std::vector<std::string> identifiers_in(const std::string& text);

// First identifier-or-literal token of an argument expression: an identifier
// for `foo`, `&foo`, `(jclass) foo`; the literal text for numbers; empty
// otherwise.
std::string argument_token(const std::string& arg);

// Literal iteration bound of a loop header like "for (i = 0; i < 32; i++)";
// nullopt for while/do loops and non-literal conditions.
std::optional<long long> literal_loop_bound(const std::string& introducer);

// A for/while loop whose body is a single statement without braces. `begin`
// and `end` delimit the body; `bound` as in literal_loop_bound.
struct LoopRegion {
    size_t begin = 0;
    size_t end = 0;
    std::optional<long long> bound;
};

std::vector<LoopRegion> braceless_loop_regions(const MaskedSource& src);

std::string trim(const std::string& s);

bool starts_with(const std::string& s, const std::string& prefix);
bool ends_with(const std::string& s, const std::string& suffix);
std::string to_lower(const std::string& s);

}  // namespace jnismell

#endif
