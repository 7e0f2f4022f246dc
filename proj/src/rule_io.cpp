#include "pg/rule_io.hpp"

#include <sstream>

#include "pg/errors.hpp"

namespace pg {
namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string drop_comment(const std::string& s) {
    auto h = s.find('#');
    return h == std::string::npos ? s : s.substr(0, h);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

NodeId parse_id(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected a node id, got '" + s + "'", line);
    }
}

PortRef parse_port_ref(const std::string& s, std::size_t line) {
    auto dot = s.find('.');
    if (dot == std::string::npos)
        throw ParseError("expected <id>.<port>, got '" + s + "'", line);
    return PortRef{parse_id(strip(s.substr(0, dot)), line), strip(s.substr(dot + 1))};
}

struct Cursor {
    std::vector<std::pair<std::size_t, std::string>> lines;  // (lineno, text)
    std::size_t at = 0;

    bool done() const { return at >= lines.size(); }
    const std::string& peek() const { return lines[at].second; }
    std::size_t lineno() const { return done() ? (lines.empty() ? 1 : lines.back().first) : lines[at].first; }
    void next() { ++at; }
};

bool is_header(const std::string& s) {
    return s == "SIGNATURE" || s == "AGENTS" || s == "LHS" || s == "RHS" ||
           s == "INTERFACE" || s == "M" || s == "NODES" || s == "EDGES" ||
           s.rfind("RULE ", 0) == 0 || s == "RULE";
}

// Parses the NODES/EDGES sections of one rule side. Constraint annotations
// (port! / port?) are only accepted when `lhs` is true.
void parse_side(Cursor& cur, const PSignature& sig, PortGraph& g,
                std::map<PortRef, PortConstraint>* constraints, bool lhs) {
    g.signature = sig;
    enum { None, Nodes, Edges } section = None;
    while (!cur.done()) {
        const std::string& line = cur.peek();
        if (line == "NODES") { section = Nodes; cur.next(); continue; }
        if (line == "EDGES") { section = Edges; cur.next(); continue; }
        if (is_header(line)) break;
        std::size_t ln = cur.lineno();
        if (section == None) throw ParseError("expected NODES or EDGES", ln);
        if (section == Nodes) {
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw ParseError("node line needs '<id> : <name> ...'", ln);
            NodeId id = parse_id(strip(line.substr(0, colon)), ln);
            std::istringstream rest(line.substr(colon + 1));
            std::string name;
            rest >> name;
            if (!sig.has(name))
                throw ParseError("node name '" + name + "' not in signature", ln);
            if (g.has_node(id))
                throw ParseError("duplicate node id " + std::to_string(id), ln);
            Node& n = g.add_node(id, name);
            std::string tok;
            while (rest >> tok) {
                std::string port = tok;
                std::string state;
                auto eq = port.find('=');
                if (eq != std::string::npos) {
                    state = port.substr(eq + 1);
                    port = port.substr(0, eq);
                }
                PortConstraint pc = PortConstraint::Any;
                if (!port.empty() && (port.back() == '!' || port.back() == '?')) {
                    pc = port.back() == '!' ? PortConstraint::MustBeConnected
                                            : PortConstraint::MustBeFree;
                    port.pop_back();
                }
                Port* p = n.find_port(port);
                if (!p) throw ParseError("node has no port '" + port + "'", ln);
                if (pc != PortConstraint::Any) {
                    if (!lhs) throw ParseError("constraint annotations are lhs-only", ln);
                    (*constraints)[PortRef{id, port}] = pc;
                }
                if (eq != std::string::npos) {
                    if (state.empty()) throw ParseError("empty state token", ln);
                    p->state = state;
                }
            }
        } else {
            auto sep = line.find("--");
            if (sep == std::string::npos)
                throw ParseError("edge line needs '<id>.<port> -- <id>.<port>'", ln);
            g.add_edge(parse_port_ref(strip(line.substr(0, sep)), ln),
                       parse_port_ref(strip(line.substr(sep + 2)), ln));
        }
        cur.next();
    }
}

}  // namespace

RuleFile parse_rules(const std::string& text) {
    RuleFile rf;
    Cursor cur;
    {
        std::istringstream in(text);
        std::string raw;
        std::size_t lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = strip(drop_comment(raw));
            if (!line.empty()) cur.lines.emplace_back(lineno, line);
        }
    }

    while (!cur.done()) {
        const std::string line = cur.peek();
        std::size_t ln = cur.lineno();
        if (line == "SIGNATURE") {
            cur.next();
            while (!cur.done() && !is_header(cur.peek())) {
                const std::string& l = cur.peek();
                std::size_t sln = cur.lineno();
                auto colon = l.find(':');
                if (colon == std::string::npos)
                    throw ParseError("signature line needs '<name> : <ports>'", sln);
                std::string name = strip(l.substr(0, colon));
                std::vector<std::string> ports = split(l.substr(colon + 1), ',');
                if (!rf.signature.entries.emplace(name, ports).second)
                    throw ParseError("node name '" + name + "' declared twice", sln);
                cur.next();
            }
        } else if (line == "AGENTS") {
            cur.next();
            while (!cur.done() && !is_header(cur.peek())) {
                AgentDecl d;
                d.symbol = cur.peek();
                cur.next();
                if (cur.done() || cur.peek().rfind("arity ", 0) != 0)
                    throw ParseError("expected 'arity <n>' after agent symbol", cur.lineno());
                d.arity = static_cast<int>(parse_id(strip(cur.peek().substr(6)), cur.lineno()));
                cur.next();
                if (cur.done() || cur.peek().rfind("principal ", 0) != 0)
                    throw ParseError("expected 'principal <port>'", cur.lineno());
                d.principal = strip(cur.peek().substr(10));
                cur.next();
                rf.agents.push_back(std::move(d));
            }
        } else if (line.rfind("RULE", 0) == 0) {
            std::string name = strip(line.substr(4));
            if (name.empty()) throw ParseError("RULE needs a name", ln);
            cur.next();
            Rule r;
            r.name = name;
            if (cur.done() || cur.peek() != "LHS") throw ParseError("expected LHS", cur.lineno());
            cur.next();
            parse_side(cur, rf.signature, r.lhs, &r.constraints, true);
            if (cur.done() || cur.peek() != "RHS") throw ParseError("expected RHS", cur.lineno());
            cur.next();
            parse_side(cur, rf.signature, r.rhs, nullptr, false);
            for (const auto& n : r.rhs.nodes)
                if (r.lhs.has_node(n.id))
                    throw ParseError("rule " + name + ": lhs and rhs share node id " +
                                     std::to_string(n.id), cur.lineno());
            if (!cur.done() && cur.peek() == "INTERFACE") {
                cur.next();
                while (!cur.done() && !is_header(cur.peek())) {
                    const std::string& l = cur.peek();
                    std::size_t iln = cur.lineno();
                    auto arrow = l.find("->");
                    if (arrow == std::string::npos)
                        throw ParseError("interface line needs '->'", iln);
                    PortRef key = parse_port_ref(strip(l.substr(0, arrow)), iln);
                    if (!r.lhs.has_node(key.node))
                        throw ParseError("interface key " + to_string(key) + " is not an lhs port", iln);
                    std::string rhs_text = strip(l.substr(arrow + 2));
                    if (rhs_text == "BLACKHOLE") {
                        r.interface[key];  // explicit empty target set
                    } else {
                        for (auto& t : split(rhs_text, ',')) {
                            PortRef target = parse_port_ref(t, iln);
                            if (r.lhs.has_node(target.node)) {
                                // wire entry; store each unordered pair once
                                auto lo = std::min(key, target);
                                auto hi = std::max(key, target);
                                bool dup = false;
                                for (const auto& [x, y] : r.wires)
                                    if (x == lo && y == hi) dup = true;
                                if (!dup) r.wires.emplace_back(lo, hi);
                            } else {
                                r.interface[key].push_back(target);
                            }
                        }
                    }
                    cur.next();
                }
            }
            if (!cur.done() && cur.peek() == "M") {
                cur.next();
                while (!cur.done() && !is_header(cur.peek())) {
                    for (auto& tok : split(cur.peek(), ','))
                        if (!tok.empty()) r.m_subgraph.insert(parse_id(tok, cur.lineno()));
                    cur.next();
                }
            }
            auto report = validate_rule(r);
            if (!report.empty()) throw ParseError(report.front(), ln);
            rf.rules.push_back(std::move(r));
        } else {
            throw ParseError("unexpected content '" + line + "'", ln);
        }
    }

    auto sig_report = rf.signature.validate();
    if (!sig_report.empty()) throw ParseError(sig_report.front(), 1);
    return rf;
}

}  // namespace pg
