#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "jnismell/csv.hpp"
#include "jnismell/jni_names.hpp"
#include "jnismell/source_model.hpp"
#include "jnismell/text_scan.hpp"

using namespace jnismell;

TEST_SUITE("source masking") {

TEST_CASE("line comments are blanked, newlines survive") {
    MaskedSource m = mask_source("int a; // trailing note\nint b;\n", CommentStyle::C);
    CHECK(m.text.size() == 31);
    CHECK(m.text.substr(0, 7) == "int a; ");
    CHECK(m.text.find("trailing") == std::string::npos);
    CHECK(m.text[23] == '\n');
    CHECK(m.text.substr(24, 6) == "int b;");
}

TEST_CASE("block comments spanning lines keep line structure") {
    MaskedSource m = mask_source("a /* one\ntwo */ b", CommentStyle::C);
    CHECK(m.text.find("one") == std::string::npos);
    CHECK(m.text.find("two") == std::string::npos);
    CHECK(m.text[8] == '\n');
    CHECK(m.text[16] == 'b');
    CHECK(m.line_starts.size() == 2);
}

TEST_CASE("string literals keep quotes, contents go to the side table") {
    std::string src = "f(\"hello, world\");";
    MaskedSource m = mask_source(src, CommentStyle::Java);
    CHECK(m.text[2] == '"');
    CHECK(m.text[15] == '"');
    CHECK(m.text.find("hello") == std::string::npos);
    REQUIRE(m.literals.count(2) == 1);
    CHECK(m.literals.at(2) == "hello, world");
}

TEST_CASE("escaped quotes do not end the literal") {
    MaskedSource m = mask_source("x = \"a\\\"b\";", CommentStyle::Java);
    REQUIRE(m.literals.count(4) == 1);
    CHECK(m.literals.at(4) == "a\\\"b");
    CHECK(m.text[9] == '"');
    CHECK(m.text[10] == ';');
}

TEST_CASE("comment markers inside strings are literal text") {
    MaskedSource m = mask_source("p(\"// not a comment\"); q();", CommentStyle::C);
    CHECK(m.literals.at(2) == "// not a comment");
    CHECK(m.text.find("q()") != std::string::npos);
}

TEST_CASE("char literals are masked including escapes") {
    MaskedSource m = mask_source("c = '\\''; d = 'x';", CommentStyle::C);
    CHECK(m.text[4] == '\'');
    CHECK(m.text[7] == '\'');
    CHECK(m.text.find('x') == std::string::npos);
}

TEST_CASE("digit separators are not char literals") {
    // 1'000'000 must stay code or the rest of the line would vanish
    MaskedSource m = mask_source("long n = 1'000'000; f(n);", CommentStyle::C);
    CHECK(m.text.find("f(n)") != std::string::npos);
}

TEST_CASE("line_at is 1-based") {
    MaskedSource m = mask_source("a\nbb\nccc\n", CommentStyle::C);
    CHECK(m.line_at(0) == 1);
    CHECK(m.line_at(2) == 2);
    CHECK(m.line_at(3) == 2);
    CHECK(m.line_at(5) == 3);
}

TEST_CASE("literal_in finds the first literal inside a window") {
    MaskedSource m = mask_source("f(\"a\"); g(\"b\");", CommentStyle::C);
    CHECK(m.literal_in(0, 7) == "a");
    CHECK(m.literal_in(7, 15) == "b");
    CHECK(m.literal_in(5, 9) == "");
}

}  // suite

TEST_SUITE("brace tree") {

TEST_CASE("nesting, parents and introducers") {
    std::string src = "class Foo {\n  void bar() {\n    int x;\n  }\n}\n";
    MaskedSource m = mask_source(src, CommentStyle::Java);
    BraceTree t = build_brace_tree(m);
    REQUIRE(t.blocks.size() == 2);
    CHECK(t.balanced);
    CHECK(t.roots == std::vector<int>{0});
    CHECK(t.blocks[0].introducer == "class Foo");
    CHECK(t.blocks[0].parent == -1);
    CHECK(t.blocks[1].introducer == "void bar()");
    CHECK(t.blocks[1].parent == 0);
    CHECK(t.blocks[0].children == std::vector<int>{1});
    CHECK(t.blocks[0].close == src.rfind('}'));
}

TEST_CASE("statement boundary resets the introducer") {
    std::string src = "int a = 0; if (a) { f(); }";
    BraceTree t = build_brace_tree(mask_source(src, CommentStyle::C));
    REQUIRE(t.blocks.size() == 1);
    CHECK(t.blocks[0].introducer == "if (a)");
}

TEST_CASE("semicolons inside parens do not cut a loop header") {
    std::string src = "for (int i = 0; i < 3; i++) { g(i); }";
    BraceTree t = build_brace_tree(mask_source(src, CommentStyle::C));
    REQUIRE(t.blocks.size() == 1);
    CHECK(t.blocks[0].introducer == "for (int i = 0; i < 3; i++)");
}

TEST_CASE("stray closing brace flags the tree") {
    std::string src = "void f() { }\n}";
    BraceTree t = build_brace_tree(mask_source(src, CommentStyle::C));
    CHECK_FALSE(t.balanced);
    CHECK(t.first_unbalanced_offset == src.size() - 1);
}

TEST_CASE("unterminated block closes at end of input") {
    std::string src = "void f() { g();";
    BraceTree t = build_brace_tree(mask_source(src, CommentStyle::C));
    REQUIRE(t.blocks.size() == 1);
    CHECK_FALSE(t.balanced);
    CHECK(t.blocks[0].close == src.size());
}

TEST_CASE("enclosing and enclosing_chain") {
    std::string src = "namespace a { struct B { void c() { int body; } }; }";
    MaskedSource m = mask_source(src, CommentStyle::C);
    BraceTree t = build_brace_tree(m);
    REQUIRE(t.blocks.size() == 3);
    size_t body = src.find("body");
    int inner = t.enclosing(body);
    REQUIRE(inner >= 0);
    CHECK(t.blocks[inner].introducer == "void c()");
    std::vector<int> chain = t.enclosing_chain(body);
    REQUIRE(chain.size() == 3);
    CHECK(t.blocks[chain[0]].introducer == "namespace a");
    CHECK(t.blocks[chain[2]].introducer == "void c()");
    CHECK(t.enclosing(0) == -1);
}

}  // suite

TEST_SUITE("identifier scanning") {

TEST_CASE("identifier_before skips whitespace and rejects leading digits") {
    std::string s = "foo.bar  (x)";
    CHECK(identifier_before(s, 9) == "bar");
    CHECK(identifier_before(s, 3) == "foo");
    CHECK(identifier_before(s, 4) == "");  // ends at the dot
    CHECK(identifier_before("a 9x", 4) == "");  // 9x is not an identifier
    CHECK(identifier_before("   ", 3) == "");
}

TEST_CASE("identifier_at reads forward") {
    CHECK(identifier_at("abc(", 0) == "abc");
    CHECK(identifier_at("_x9 y", 0) == "_x9");
    CHECK(identifier_at("9abc", 0) == "");
    CHECK(identifier_at("$v", 0) == "$v");
    CHECK(identifier_at("abc", 99) == "");
}

TEST_CASE("matching_paren handles nesting") {
    std::string s = "f(g(a, b), c)";
    CHECK(matching_paren(s, 1) == 12);
    CHECK(matching_paren(s, 3) == 8);
    CHECK(matching_paren("f(a", 1) == std::string::npos);
    CHECK(matching_paren("abc", 0) == std::string::npos);
}

TEST_CASE("split_arguments respects nesting") {
    CHECK(split_arguments("a, b") == std::vector<std::string>{"a", "b"});
    CHECK(split_arguments("f(a, b), c") == std::vector<std::string>{"f(a, b)", "c"});
    CHECK(split_arguments("x[i, j], y") == std::vector<std::string>{"x[i, j]", "y"});
    CHECK(split_arguments("") == std::vector<std::string>{});
    CHECK(split_arguments("  ") == std::vector<std::string>{});
    CHECK(split_arguments("a,") == std::vector<std::string>{"a", ""});
}

TEST_CASE("identifiers_in preserves order") {
    CHECK(identifiers_in("env->GetFieldID(cls, name)") ==
          std::vector<std::string>{"env", "GetFieldID", "cls", "name"});
}

TEST_CASE("argument_token peels casts and unary operators") {
    CHECK(argument_token("foo") == "foo");
    CHECK(argument_token("&foo") == "foo");
    CHECK(argument_token("*ptr") == "ptr");
    CHECK(argument_token("!flag") == "flag");
    CHECK(argument_token("(jclass) foo") == "foo");
    CHECK(argument_token("(foo)") == "foo");
    CHECK(argument_token("(jlong)(jint) v") == "v");
    CHECK(argument_token("new Foo()") == "Foo");
    CHECK(argument_token("a + b") == "a");
}

TEST_CASE("argument_token on literals") {
    CHECK(argument_token("123") == "123");
    CHECK(argument_token("0x1F") == "0x1F");
    CHECK(argument_token("3.5f") == "3.5f");
    CHECK(argument_token("-7") == "7");
    CHECK(argument_token("\"text\"") == "");
    CHECK(argument_token("") == "");
}

}  // suite

TEST_SUITE("loop bounds") {

TEST_CASE("classic counted loops") {
    CHECK(literal_loop_bound("for (int i = 0; i < 32; i++)") == 32);
    CHECK(literal_loop_bound("for (i = 2; i <= 10; ++i)") == 9);
    CHECK(literal_loop_bound("for (size_t k = 0; k < 0x10; k++)") == 16);
    CHECK(literal_loop_bound("for (long i = 0; i < 100L; i++)") == 100);
}

TEST_CASE("non-literal or non-counted loops have no bound") {
    CHECK_FALSE(literal_loop_bound("for (int i = 0; i < n; i++)").has_value());
    CHECK_FALSE(literal_loop_bound("while (x < 10)").has_value());
    CHECK_FALSE(literal_loop_bound("for (auto& x : xs)").has_value());
    CHECK_FALSE(literal_loop_bound("for (int i = 0; i << 2; i++)").has_value());
    CHECK_FALSE(literal_loop_bound("for (int i = n; i < 10; i++)").has_value());
}

TEST_CASE("empty iteration space clamps to zero") {
    CHECK(literal_loop_bound("for (int i = 10; i < 3; ++i)") == 0);
}

TEST_CASE("braceless loop bodies are found with their bounds") {
    std::string src = "void f() {\n  for (int i = 0; i < 5; i++) doit(i);\n  while (p) step(p);\n}\n";
    MaskedSource m = mask_source(src, CommentStyle::C);
    std::vector<LoopRegion> regions = braceless_loop_regions(m);
    REQUIRE(regions.size() == 2);
    CHECK(src.substr(regions[0].begin, regions[0].end - regions[0].begin) == "doit(i)");
    CHECK(regions[0].bound == 5);
    CHECK(src.substr(regions[1].begin, regions[1].end - regions[1].begin) == "step(p)");
    CHECK_FALSE(regions[1].bound.has_value());
}

TEST_CASE("braced loops and do-while tails are not braceless bodies") {
    std::string src = "do { f(); } while (x);\nfor (int i = 0; i < 3; i++) { g(); }\nfor (;;);";
    std::vector<LoopRegion> regions = braceless_loop_regions(mask_source(src, CommentStyle::C));
    CHECK(regions.empty());
}

TEST_CASE("identifier prefixes do not match loop keywords") {
    std::string src = "int reinforce = 0; befor (x) call();";
    CHECK(braceless_loop_regions(mask_source(src, CommentStyle::C)).empty());
}

}  // suite

TEST_SUITE("string helpers") {

TEST_CASE("trim, prefixes, case") {
    CHECK(trim("  a b \t") == "a b");
    CHECK(trim("") == "");
    CHECK(trim(" \n ") == "");
    CHECK(starts_with("foobar", "foo"));
    CHECK_FALSE(starts_with("fo", "foo"));
    CHECK(ends_with("test.java", ".java"));
    CHECK_FALSE(ends_with("java", ".java"));
    CHECK(to_lower("LoadLibrary-X") == "loadlibrary-x");
}

}  // suite

TEST_SUITE("source files") {

TEST_CASE("language from extension") {
    CHECK(language_from_extension("A.java") == Language::Java);
    CHECK(language_from_extension("x/y/b.c") == Language::C);
    CHECK(language_from_extension("b.h") == Language::C);
    CHECK(language_from_extension("c.cc") == Language::Cpp);
    CHECK(language_from_extension("c.cpp") == Language::Cpp);
    CHECK(language_from_extension("c.cxx") == Language::Cpp);
    CHECK(language_from_extension("c.hpp") == Language::Cpp);
    CHECK(language_from_extension("readme.txt") == Language::Other);
    CHECK(language_from_extension("Makefile") == Language::Other);
}

TEST_CASE("loc counts non-blank lines") {
    CHECK(count_loc("") == 0);
    CHECK(count_loc("\n\n") == 0);
    CHECK(count_loc("a\n") == 1);
    CHECK(count_loc("a\n \t\nb") == 2);     // no trailing newline
    CHECK(count_loc("  \t \r\n x\n") == 1);
}

TEST_CASE("diagnostic format") {
    Diagnostic d{"src/a.c", 12, "unknown construct"};
    CHECK(d.format() == "WARN src/a.c:12 unknown construct");
}

}  // suite

TEST_SUITE("jni name mangling") {

TEST_CASE("plain names") {
    CHECK(mangle_jni_name("pkg.Cls", "method") == "Java_pkg_Cls_method");
    CHECK(mangle_jni_name("HelloWorld", "print") == "Java_HelloWorld_print");
    CHECK(mangle_jni_name("a.b.c.Deep", "go") == "Java_a_b_c_Deep_go");
}

TEST_CASE("underscore, semicolon and bracket escapes") {
    CHECK(mangle_jni_name("com.x_y.Nat_ive", "do_it") == "Java_com_x_1y_Nat_1ive_do_1it");
    CHECK(mangle_jni_name("p.C", "m;[") == "Java_p_C_m_2_3");
}

TEST_CASE("inner-class dollar uses the unicode escape") {
    CHECK(mangle_jni_name("a.B$C", "f") == "Java_a_B_00024C_f");
}

TEST_CASE("non-ascii goes through utf-16 escapes") {
    CHECK(mangle_jni_name("p.C", "π") == "Java_p_C__003c0");
    CHECK(mangle_jni_name("p.C", "中") == "Java_p_C__04e2d");
    // a supplementary code point becomes a surrogate pair
    CHECK(mangle_jni_name("p.C", "\U0001F600") == "Java_p_C__0d83d_0de00");
}

TEST_CASE("demangle inverts mangle") {
    auto d = demangle_jni_name("Java_pkg_Cls_method");
    REQUIRE(d.has_value());
    CHECK(d->fqcn == "pkg.Cls");
    CHECK(d->method == "method");
    CHECK(d->overload_suffix == "");

    d = demangle_jni_name("Java_com_x_1y_Nat_1ive_do_1it");
    REQUIRE(d.has_value());
    CHECK(d->fqcn == "com.x_y.Nat_ive");
    CHECK(d->method == "do_it");
}

TEST_CASE("overload suffix is split off") {
    auto d = demangle_jni_name("Java_p_C_m__ILjava_lang_String_2");
    REQUIRE(d.has_value());
    CHECK(d->fqcn == "p.C");
    CHECK(d->method == "m");
    CHECK(d->overload_suffix == "ILjava_lang_String_2");
}

TEST_CASE("surrogate pairs reassemble") {
    auto d = demangle_jni_name("Java_p_C__0d83d_0de00");
    REQUIRE(d.has_value());
    CHECK(d->method == "\U0001F600");
}

TEST_CASE("invalid symbols are rejected") {
    CHECK_FALSE(demangle_jni_name("NotJava_p_C_m").has_value());
    CHECK_FALSE(demangle_jni_name("Java_").has_value());
    CHECK_FALSE(demangle_jni_name("Java_onlyone").has_value());
    CHECK_FALSE(demangle_jni_name("Java_a_b_").has_value());      // trailing separator
    CHECK_FALSE(demangle_jni_name("Java_a_b_0d8").has_value());   // short escape
    CHECK_FALSE(demangle_jni_name("Java_a_b_00A3x").has_value()); // uppercase hex
    CHECK_FALSE(demangle_jni_name("Java_a_b_0zzzz").has_value()); // non-hex
    CHECK_FALSE(demangle_jni_name("Java___x").has_value());       // suffix before any name
}

TEST_CASE("ten thousand generated names round-trip") {
    // code points drawn from the troublesome corners: separators-in-waiting,
    // escape characters, BMP and supplementary unicode
    const std::vector<std::string> pool = {
        "a", "b", "z", "A", "Q", "Z", "0", "5", "9", "_", "$", ";", "[",
        "é", "π", "中", "\U0001F600"};
    std::mt19937 gen(424242);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> comp_count(1, 3);
    std::uniform_int_distribution<int> comp_len(1, 8);

    auto make_component = [&] {
        // Java identifiers never start with a digit; the name scheme relies
        // on that (a digit after a separator would read as an escape).
        int len = comp_len(gen);
        std::string s;
        while (s.empty()) {
            std::string first = pool[pick(gen)];
            if (first[0] < '0' || first[0] > '9') s = first;
        }
        for (int i = 1; i < len; ++i) s += pool[pick(gen)];
        return s;
    };

    int checked = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        int parts = comp_count(gen);
        std::string fqcn;
        for (int p = 0; p < parts; ++p) {
            if (p) fqcn += '.';
            fqcn += make_component();
        }
        std::string method = make_component();

        std::string symbol = mangle_jni_name(fqcn, method);
        for (char c : symbol) {
            bool linker_safe = is_identifier_char(c) && c != '$';
            if (!linker_safe) FAIL("unsafe char in symbol: ", symbol);
        }
        auto d = demangle_jni_name(symbol);
        if (!d.has_value()) FAIL("demangle failed for: ", symbol);
        if (d->fqcn != fqcn || d->method != method || !d->overload_suffix.empty())
            FAIL("round-trip mismatch: ", fqcn, " ", method, " -> ", symbol);
        ++checked;
    }
    CHECK(checked == 10000);
}

}  // suite

TEST_SUITE("csv") {

TEST_CASE("fields quote only when needed") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("") == "");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
    CHECK(csv_field("cr\rhere") == "\"cr\rhere\"");
}

TEST_CASE("rows join with commas and end with a newline") {
    CHECK(csv_row({"a", "b,c", ""}) == "a,\"b,c\",\n");
    CHECK(csv_row({}) == "\n");
}

TEST_CASE("parse handles quoting, empties and crlf") {
    auto rows = parse_csv("a,b\r\n\"x,y\",\"q\"\"q\"\nlast,\n");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"a", "b"});
    CHECK(rows[1] == std::vector<std::string>{"x,y", "q\"q"});
    CHECK(rows[2] == std::vector<std::string>{"last", ""});
}

TEST_CASE("quoted newlines stay inside the field") {
    auto rows = parse_csv("\"one\ntwo\",3\n");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == std::vector<std::string>{"one\ntwo", "3"});
}

TEST_CASE("writer output parses back unchanged") {
    std::vector<std::string> fields = {"x", "a,b", "q\"q", "line\nbreak", ""};
    auto rows = parse_csv(csv_row(fields));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == fields);
}

TEST_CASE("format_fixed") {
    CHECK(format_fixed(8.136696501220504, 4) == "8.1367");
    CHECK(format_fixed(0.5, 2) == "0.50");
    CHECK(format_fixed(-1.5, 2) == "-1.50");
    CHECK(format_fixed(-0.00004, 4) == "0.0000");  // no negative zero
    CHECK(format_fixed(100.0, 0) == "100");
}

}  // suite
