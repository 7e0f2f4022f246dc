#include "pg/strategy_parse.hpp"

#include <cctype>

#include "pg/errors.hpp"

namespace pg {
namespace {

enum class Tok { Ident, Int, Str, LParen, RParen, Comma, Semi, Plus, EqEq, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    long long value = 0;
    std::size_t line = 1;
    std::size_t col = 1;
};

const std::set<std::string> kKeywords = {
    "id",     "fail",   "par",      "ipar",     "multi",   "crtpos",    "allsuc",
    "onesuc", "nextsuc", "setpos",  "property", "union",   "inter",     "compl",
    "minus",  "ppick",  "while",    "do",       "min",     "max",       "if",
    "then",   "else",   "pnotempty", "atomic",  "repeat*", "repeat+",   "not",
    "orelse", "try",    "graph",    "pos",      "name",    "portstate", "or",
    "and",    "interface"};

struct Lexer {
    const std::string& src;
    std::size_t at = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    void advance() {
        if (at < src.size() && src[at] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++at;
    }

    void skip_space() {
        while (at < src.size()) {
            char c = src[at];
            if (c == '#') {
                while (at < src.size() && src[at] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token next() {
        skip_space();
        Token t;
        t.line = line;
        t.col = col;
        if (at >= src.size()) return t;
        char c = src[at];
        if (c == '(') { advance(); t.kind = Tok::LParen; return t; }
        if (c == ')') { advance(); t.kind = Tok::RParen; return t; }
        if (c == ',') { advance(); t.kind = Tok::Comma; return t; }
        if (c == ';') { advance(); t.kind = Tok::Semi; return t; }
        if (c == '=') {
            advance();
            if (at < src.size() && src[at] == '=') { advance(); t.kind = Tok::EqEq; return t; }
            throw ParseError("expected '=='", t.line, t.col);
        }
        if (c == '"') {
            advance();
            std::string s;
            while (at < src.size() && src[at] != '"') {
                s += src[at];
                advance();
            }
            if (at >= src.size()) throw ParseError("unterminated string", t.line, t.col);
            advance();
            t.kind = Tok::Str;
            t.text = std::move(s);
            return t;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::string s(1, c);
            advance();
            while (at < src.size() && std::isdigit(static_cast<unsigned char>(src[at]))) {
                s += src[at];
                advance();
            }
            if (s == "-") throw ParseError("stray '-'", t.line, t.col);
            t.kind = Tok::Int;
            t.value = std::stoll(s);
            t.text = std::move(s);
            return t;
        }
        if (c == '+') { advance(); t.kind = Tok::Plus; return t; }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (at < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[at])) || src[at] == '_' ||
                    src[at] == '-')) {
                // '-' only continues an identifier when followed by a letter or
                // digit, so "a -1" still lexes as ident, minus-int.
                if (src[at] == '-') {
                    if (at + 1 >= src.size() ||
                        !(std::isalnum(static_cast<unsigned char>(src[at + 1])) ||
                          src[at + 1] == '_'))
                        break;
                }
                s += src[at];
                advance();
            }
            // repeat* / repeat+ are single keywords.
            if (s == "repeat" && at < src.size() && (src[at] == '*' || src[at] == '+')) {
                s += src[at];
                advance();
            }
            t.kind = Tok::Ident;
            t.text = std::move(s);
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.col);
    }
};

struct Parser {
    std::vector<Token> toks;
    std::size_t at = 0;
    const std::set<std::string>& rules;

    Parser(const std::string& text, const std::set<std::string>& known) : rules(known) {
        Lexer lx(text);
        while (true) {
            Token t = lx.next();
            bool end = t.kind == Tok::End;
            toks.push_back(std::move(t));
            if (end) break;
        }
    }

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = at + ahead;
        return i < toks.size() ? toks[i] : toks.back();
    }
    Token take() { return toks[std::min(at++, toks.size() - 1)]; }

    [[noreturn]] void fail(const std::string& msg, const Token& t) {
        throw ParseError(msg, t.line, t.col);
    }

    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(std::string("expected ") + what, peek());
        take();
    }

    void expect_ident(const std::string& word) {
        if (peek().kind != Tok::Ident || peek().text != word)
            fail("expected '" + word + "'", peek());
        take();
    }

    bool at_ident(const std::string& word) const {
        return peek().kind == Tok::Ident && peek().text == word;
    }

    int parse_int() {
        if (peek().kind != Tok::Int) fail("expected an integer", peek());
        return static_cast<int>(take().value);
    }

    NodeId parse_node_id() {
        if (peek().kind != Tok::Int) fail("expected a node id", peek());
        return take().value;
    }

    std::string parse_string() {
        if (peek().kind != Tok::Str) fail("expected a quoted string", peek());
        return take().text;
    }

    // ---- predicates ----

    PredPtr parse_pred() { return parse_pred_or(); }

    PredPtr parse_pred_or() {
        PredPtr lhs = parse_pred_and();
        while (at_ident("or")) {
            take();
            PredPtr rhs = parse_pred_and();
            lhs = std::make_shared<const PropertyPred>(PropertyPred{PredOr{lhs, rhs}});
        }
        return lhs;
    }

    PredPtr parse_pred_and() {
        PredPtr lhs = parse_pred_not();
        while (at_ident("and")) {
            take();
            PredPtr rhs = parse_pred_not();
            lhs = std::make_shared<const PropertyPred>(PropertyPred{PredAnd{lhs, rhs}});
        }
        return lhs;
    }

    PredPtr parse_pred_not() {
        if (at_ident("not")) {
            take();
            return std::make_shared<const PropertyPred>(PropertyPred{PredNot{parse_pred_not()}});
        }
        if (peek().kind == Tok::LParen) {
            take();
            PredPtr p = parse_pred();
            expect(Tok::RParen, "')'");
            return p;
        }
        if (at_ident("name")) {
            take();
            expect(Tok::EqEq, "'=='");
            return std::make_shared<const PropertyPred>(PropertyPred{PredName{parse_string()}});
        }
        if (at_ident("portstate")) {
            take();
            expect(Tok::LParen, "'('");
            if (peek().kind != Tok::Ident) fail("expected a port name", peek());
            std::string port = take().text;
            expect(Tok::RParen, "')'");
            expect(Tok::EqEq, "'=='");
            return std::make_shared<const PropertyPred>(
                PropertyPred{PredPortState{port, parse_string()}});
        }
        if (at_ident("interface")) {
            take();
            return std::make_shared<const PropertyPred>(PropertyPred{PredInterface{}});
        }
        fail("expected a predicate", peek());
    }

    // ---- position expressions ----

    PosPtr parse_pos() {
        const Token& t = peek();
        if (t.kind != Tok::Ident) fail("expected a position transformation", t);
        auto mk = [](PositionExpr e) { return std::make_shared<const PositionExpr>(std::move(e)); };
        if (t.text == "crtpos") { take(); return mk({PosCrt{}}); }
        if (t.text == "allsuc") { take(); return mk({PosAllSuc{}}); }
        if (t.text == "onesuc") { take(); return mk({PosOneSuc{}}); }
        if (t.text == "nextsuc") { take(); return mk({PosNextSuc{}}); }
        if (t.text == "setpos") {
            take();
            expect(Tok::LParen, "'('");
            PosSet ps;
            ps.ids.push_back(parse_node_id());
            while (peek().kind == Tok::Comma) {
                take();
                ps.ids.push_back(parse_node_id());
            }
            expect(Tok::RParen, "')'");
            return mk({std::move(ps)});
        }
        if (t.text == "property") {
            take();
            expect(Tok::LParen, "'('");
            PredPtr pred = parse_pred();
            expect(Tok::Comma, "','");
            PropertyScope scope;
            if (at_ident("graph")) scope = PropertyScope::WholeGraph;
            else if (at_ident("pos")) scope = PropertyScope::CurrentPos;
            else fail("expected 'graph' or 'pos'", peek());
            take();
            expect(Tok::RParen, "')'");
            return mk({PosProperty{pred, scope}});
        }
        if (t.text == "union" || t.text == "inter" || t.text == "minus") {
            std::string op = take().text;
            expect(Tok::LParen, "'('");
            PosPtr a = parse_pos();
            expect(Tok::Comma, "','");
            PosPtr b = parse_pos();
            expect(Tok::RParen, "')'");
            if (op == "union") return mk({PosUnion{a, b}});
            if (op == "inter") return mk({PosInter{a, b}});
            return mk({PosMinus{a, b}});
        }
        if (t.text == "compl") {
            take();
            expect(Tok::LParen, "'('");
            PosPtr a = parse_pos();
            expect(Tok::RParen, "')'");
            return mk({PosCompl{a}});
        }
        fail("expected a position transformation", t);
    }

    // ---- applications ----

    AppPtr parse_app() {
        const Token& t = peek();
        if (t.kind != Tok::Ident) fail("expected a rule application", t);
        auto mk = [](ApplicationExpr e) {
            return std::make_shared<const ApplicationExpr>(std::move(e));
        };
        if (t.text == "id") { take(); return mk({AppId{}}); }
        if (t.text == "fail") { take(); return mk({AppFail{}}); }
        if (t.text == "par" || t.text == "ipar") {
            std::string op = take().text;
            expect(Tok::LParen, "'('");
            AppPtr a = parse_rule_operand();
            expect(Tok::Comma, "','");
            AppPtr b = parse_rule_operand();
            expect(Tok::RParen, "')'");
            if (op == "par") return mk({AppPar{a, b}});
            return mk({AppInterleave{a, b}});
        }
        if (t.text == "multi") {
            take();
            expect(Tok::LParen, "'('");
            AppPtr a = parse_rule_operand();
            expect(Tok::Comma, "','");
            int mn = parse_int();
            expect(Tok::Comma, "','");
            int mx = parse_int();
            expect(Tok::RParen, "')'");
            return mk({AppMulti{a, mn, mx}});
        }
        if (!kKeywords.count(t.text)) {
            Token name = take();
            if (!rules.count(name.text)) fail("unknown rule name '" + name.text + "'", name);
            return mk({AppRule{name.text}});
        }
        fail("expected a rule application", t);
    }

    AppPtr parse_rule_operand() {
        const Token& t = peek();
        if (t.kind != Tok::Ident || kKeywords.count(t.text))
            fail("par/ipar/multi operands must be rule applications", t);
        return parse_app();
    }

    // ---- strategies ----

    StratPtr parse_strategy_expr() { return parse_choice(); }

    // orelse and + (loosest, right-associative)
    StratPtr parse_choice() {
        StratPtr lhs = parse_seq();
        if (peek().kind == Tok::Plus) {
            take();
            return make_strat({StratAmb{lhs, parse_choice()}});
        }
        if (at_ident("orelse")) {
            take();
            return strat_orelse(lhs, parse_choice());
        }
        return lhs;
    }

    // ';' (right-associative)
    StratPtr parse_seq() {
        StratPtr lhs = parse_primary();
        if (peek().kind == Tok::Semi) {
            take();
            return strat_seq(lhs, parse_seq());
        }
        return lhs;
    }

    StratPtr parse_primary() {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            take();
            StratPtr s = parse_strategy_expr();
            expect(Tok::RParen, "')'");
            return s;
        }
        if (t.kind != Tok::Ident) fail("expected a strategy", t);
        const std::string& w = t.text;

        if (w == "pnotempty") { take(); return make_strat({StratPnotEmpty{}}); }
        if (w == "atomic") {
            take();
            expect(Tok::LParen, "'('");
            StratPtr s = parse_strategy_expr();
            expect(Tok::RParen, "')'");
            return make_strat({StratAtomic{s}});
        }
        if (w == "ppick") {
            take();
            expect(Tok::LParen, "'('");
            StratPPick pp;
            pp.options.push_back(parse_strategy_expr());
            while (peek().kind == Tok::Comma) {
                take();
                pp.options.push_back(parse_strategy_expr());
            }
            expect(Tok::RParen, "')'");
            return make_strat({std::move(pp)});
        }
        if (w == "while") {
            take();
            expect(Tok::LParen, "'('");
            StratPtr cond = parse_strategy_expr();
            expect(Tok::RParen, "')'");
            expect_ident("do");
            expect(Tok::LParen, "'('");
            StratPtr body = parse_strategy_expr();
            expect(Tok::RParen, "')'");
            expect_ident("min");
            expect(Tok::LParen, "'('");
            int mn = parse_int();
            expect(Tok::RParen, "')'");
            expect_ident("max");
            expect(Tok::LParen, "'('");
            int mx = parse_int();
            expect(Tok::RParen, "')'");
            return strat_while(cond, body, mn, mx);
        }
        if (w == "if") {
            take();
            expect(Tok::LParen, "'('");
            StratPtr cond = parse_strategy_expr();
            expect(Tok::RParen, "')'");
            expect_ident("then");
            expect(Tok::LParen, "'('");
            StratPtr then_b = parse_strategy_expr();
            expect(Tok::RParen, "')'");
            expect_ident("else");
            expect(Tok::LParen, "'('");
            StratPtr else_b = parse_strategy_expr();
            expect(Tok::RParen, "')'");
            return strat_if(cond, then_b, else_b);
        }
        if (w == "repeat*" || w == "repeat+" || w == "not" || w == "try") {
            std::string op = take().text;
            expect(Tok::LParen, "'('");
            StratPtr s = parse_strategy_expr();
            expect(Tok::RParen, "')'");
            if (op == "repeat*") return strat_repeat_star(s);
            if (op == "repeat+") return strat_repeat_plus(s);
            if (op == "not") return strat_not(s);
            return strat_try(s);
        }
        if (w == "crtpos" || w == "allsuc" || w == "onesuc" || w == "nextsuc" || w == "setpos" ||
            w == "property" || w == "union" || w == "inter" || w == "compl" || w == "minus")
            return make_strat({StratPos{parse_pos()}});

        return make_strat({StratApp{parse_app()}});
    }
};

}  // namespace

StratPtr parse_strategy(const std::string& text, const std::set<std::string>& known_rules) {
    Parser p(text, known_rules);
    StratPtr s = p.parse_strategy_expr();
    if (p.peek().kind != Tok::End)
        throw ParseError("trailing content after strategy", p.peek().line, p.peek().col);
    return s;
}

}  // namespace pg
