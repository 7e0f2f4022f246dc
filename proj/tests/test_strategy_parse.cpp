#include <doctest.h>

#include "pg/errors.hpp"
#include "pg/strategy_parse.hpp"

using namespace pg;

namespace {
const std::set<std::string> kRules = {"reduce", "negate", "open", "a", "b", "c"};

std::string ast(const std::string& text) { return to_string(*parse_strategy(text, kRules)); }
}  // namespace

TEST_CASE("atoms parse") {
    CHECK(ast("id") == "id");
    CHECK(ast("fail") == "fail");
    CHECK(ast("reduce") == "reduce");
    CHECK(ast("pnotempty") == "pnotempty");
    CHECK(ast("crtpos") == "crtpos");
    CHECK(ast("allsuc") == "allsuc");
    CHECK(ast("onesuc") == "onesuc");
    CHECK(ast("nextsuc") == "nextsuc");
    CHECK(ast("setpos(3,5)") == "setpos(3,5)");
}

TEST_CASE("sugar expands to the defining forms") {
    CHECK(ast("repeat*(reduce)") == "while(reduce)do(reduce)min(-1)max(-1)");
    CHECK(ast("repeat+(reduce)") == "while(reduce)do(reduce)min(1)max(-1)");
    CHECK(ast("not(a)") == "if(a)then(fail)else(id)");
    CHECK(ast("try(a)") == "if(a)then(a)else(id)");
    CHECK(ast("a orelse b") == "if(a)then(a)else(b)");
    // sugar equals its written-out expansion, token for token
    CHECK(ast("a orelse b") == ast("if(a)then(a)else(b)"));
    CHECK(ast("try(a)") == ast("if(a)then(a)else(id)"));
}

TEST_CASE("operator precedence and associativity") {
    // ';' right-associative
    CHECK(ast("a; b; c") == "(a; (b; c))");
    // orelse/+ bind looser than ';'
    CHECK(ast("a; b orelse c") == "if((a; b))then((a; b))else(c)");
    CHECK(ast("a + b; c") == "(a + (b; c))");
    CHECK(ast("(a orelse b); c") == "(if(a)then(a)else(b); c)");
}

TEST_CASE("constructs parse") {
    CHECK(ast("while(a)do(b)min(0)max(-1)") == "while(a)do(b)min(0)max(-1)");
    CHECK(ast("if(a)then(b)else(c)") == "if(a)then(b)else(c)");
    CHECK(ast("ppick(a, b, c)") == "ppick(a,b,c)");
    CHECK(ast("atomic(a; b)") == "atomic((a; b))");
    CHECK(ast("par(a, b)") == "par(a,b)");
    CHECK(ast("ipar(a, b)") == "ipar(a,b)");
    CHECK(ast("multi(a, 2, -1)") == "multi(a,2,-1)");
}

TEST_CASE("position expressions parse") {
    CHECK(ast("union(crtpos, allsuc)") == "union(crtpos,allsuc)");
    CHECK(ast("inter(crtpos, compl(crtpos))") == "inter(crtpos,compl(crtpos))");
    CHECK(ast("minus(allsuc, crtpos)") == "minus(allsuc,crtpos)");
    CHECK(ast("property(name==\"ghost\", graph)") == "property(name==\"ghost\",graph)");
    CHECK(ast("property(interface, pos)") == "property(interface,pos)");
    CHECK(ast("property(name==\"a\" or name==\"b\" and not name==\"c\", graph)") ==
          "property((name==\"a\" or (name==\"b\" and not name==\"c\")),graph)");
    CHECK(ast("property(portstate(slot)==\"exit\", graph)") ==
          "property(portstate(slot)==\"exit\",graph)");
}

TEST_CASE("unknown rule names are rejected with a location") {
    CHECK_THROWS_AS(parse_strategy("nosuch", kRules), ParseError);
    try {
        parse_strategy("a;\n  nosuch", kRules);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("syntax errors carry locations") {
    CHECK_THROWS_AS(parse_strategy("if(a)then(b)", kRules), ParseError);
    CHECK_THROWS_AS(parse_strategy("while(a)do(b)", kRules), ParseError);
    CHECK_THROWS_AS(parse_strategy("ppick()", kRules), ParseError);
    CHECK_THROWS_AS(parse_strategy("a;", kRules), ParseError);
    CHECK_THROWS_AS(parse_strategy("a b", kRules), ParseError);
    CHECK_THROWS_AS(parse_strategy("", kRules), ParseError);
}

TEST_CASE("par, ipar and multi operands must be rule applications") {
    CHECK_THROWS_AS(parse_strategy("par(id, a)", kRules), ParseError);
    CHECK_THROWS_AS(parse_strategy("multi(par(a,b), 0, 1)", kRules), ParseError);
    CHECK(ast("multi(reduce, 0, -1)") == "multi(reduce,0,-1)");
}

TEST_CASE("comments and whitespace are ignored") {
    CHECK(ast("a ; # tail\n b") == "(a; b)");
    CHECK(ast("  repeat*( reduce )  ") == "while(reduce)do(reduce)min(-1)max(-1)");
}
