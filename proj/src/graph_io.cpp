#include "pg/graph_io.hpp"

#include <algorithm>
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

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

bool valid_port(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
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
    PortRef r;
    r.node = parse_id(strip(s.substr(0, dot)), line);
    r.port = strip(s.substr(dot + 1));
    if (!valid_port(r.port)) throw ParseError("bad port name '" + r.port + "'", line);
    return r;
}

enum class Section { None, Signature, Nodes, Edges, Position };

}  // namespace

LocatedGraph parse_graph(const std::string& text) {
    LocatedGraph lg;
    Section section = Section::None;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool saw_nodes = false;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(drop_comment(raw));
        if (line.empty()) continue;

        if (line == "SIGNATURE") { section = Section::Signature; continue; }
        if (line == "NODES") { section = Section::Nodes; saw_nodes = true; continue; }
        if (line == "EDGES") { section = Section::Edges; continue; }
        if (line == "POSITION") { section = Section::Position; continue; }

        switch (section) {
        case Section::None:
            throw ParseError("content before any section header", lineno);
        case Section::Signature: {
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw ParseError("signature line needs '<name> : <ports>'", lineno);
            std::string name = strip(line.substr(0, colon));
            if (!valid_name(name)) throw ParseError("bad node name '" + name + "'", lineno);
            std::vector<std::string> ports;
            for (auto& p : split(line.substr(colon + 1), ',')) {
                if (!valid_port(p)) throw ParseError("bad port name '" + p + "'", lineno);
                ports.push_back(p);
            }
            if (!lg.graph.signature.entries.emplace(name, ports).second)
                throw ParseError("node name '" + name + "' declared twice", lineno);
            break;
        }
        case Section::Nodes: {
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw ParseError("node line needs '<id> : <name> ...'", lineno);
            NodeId id = parse_id(strip(line.substr(0, colon)), lineno);
            std::istringstream rest(line.substr(colon + 1));
            std::string name;
            rest >> name;
            if (!lg.graph.signature.has(name))
                throw ParseError("node name '" + name + "' not in signature", lineno);
            if (lg.graph.has_node(id))
                throw ParseError("duplicate node id " + std::to_string(id), lineno);
            Node& n = lg.graph.add_node(id, name);
            std::string tok;
            while (rest >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw ParseError("expected <port>=<state>, got '" + tok + "'", lineno);
                std::string port = tok.substr(0, eq);
                std::string state = tok.substr(eq + 1);
                Port* p = n.find_port(port);
                if (!p) throw ParseError("node has no port '" + port + "'", lineno);
                if (state.empty() || !valid_name(state))
                    throw ParseError("bad state token '" + state + "'", lineno);
                p->state = state;
            }
            break;
        }
        case Section::Edges: {
            auto sep = line.find("--");
            if (sep == std::string::npos)
                throw ParseError("edge line needs '<id>.<port> -- <id>.<port>'", lineno);
            PortRef x = parse_port_ref(strip(line.substr(0, sep)), lineno);
            PortRef y = parse_port_ref(strip(line.substr(sep + 2)), lineno);
            lg.graph.add_edge(x, y);
            break;
        }
        case Section::Position: {
            for (auto& tok : split(line, ','))
                if (!tok.empty()) lg.position.members.insert(parse_id(tok, lineno));
            break;
        }
        }
    }

    if (!saw_nodes && lg.graph.signature.entries.empty())
        throw ParseError("empty graph text", lineno == 0 ? 1 : lineno);
    return lg;
}

std::string print_graph(const LocatedGraph& lg) {
    std::ostringstream out;
    out << "SIGNATURE\n";
    for (const auto& [name, ports] : lg.graph.signature.entries) {
        out << name << " : ";
        for (std::size_t i = 0; i < ports.size(); ++i)
            out << (i ? ", " : "") << ports[i];
        out << "\n";
    }
    out << "NODES\n";
    for (const auto& n : lg.graph.nodes) {
        out << n.id << " : " << n.name;
        for (const auto& p : n.ports)
            if (p.state) out << " " << p.name << "=" << *p.state;
        out << "\n";
    }
    out << "EDGES\n";
    std::vector<Edge> es = lg.graph.edges;
    std::sort(es.begin(), es.end());
    for (const auto& e : es)
        out << to_string(e.a) << " -- " << to_string(e.b) << "\n";
    if (!lg.position.empty()) {
        out << "POSITION\n";
        bool first = true;
        for (NodeId id : lg.position.members) {
            out << (first ? "" : ", ") << id;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace pg
