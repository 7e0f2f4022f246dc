#include "pg/graph.hpp"

#include <algorithm>

#include "pg/errors.hpp"

namespace pg {

const std::vector<std::string>* PSignature::ports(const std::string& node_name) const {
    auto it = entries.find(node_name);
    return it == entries.end() ? nullptr : &it->second;
}

bool PSignature::port_known(const std::string& node_name, const std::string& port) const {
    const auto* ps = ports(node_name);
    if (!ps) return false;
    return std::find(ps->begin(), ps->end(), port) != ps->end();
}

std::vector<std::string> PSignature::validate() const {
    std::vector<std::string> out;
    std::map<std::string, std::string> owner;  // port name -> node name
    for (const auto& [name, ports] : entries) {
        if (ports.empty())
            out.push_back("signature: node name '" + name + "' has an empty port set");
        std::set<std::string> seen;
        for (const auto& p : ports) {
            if (!seen.insert(p).second)
                out.push_back("signature: duplicate port '" + p + "' for node name '" + name + "'");
            auto [it, fresh] = owner.emplace(p, name);
            if (!fresh && it->second != name)
                out.push_back("signature: port '" + p + "' shared by node names '" + it->second +
                              "' and '" + name + "'");
        }
    }
    return out;
}

std::vector<std::string> PSignature::merge(const PSignature& other) {
    std::vector<std::string> out;
    for (const auto& [name, ports] : other.entries) {
        auto it = entries.find(name);
        if (it == entries.end()) {
            entries.emplace(name, ports);
        } else if (it->second != ports) {
            out.push_back("signature conflict: node name '" + name +
                          "' declared with different port sets");
        }
    }
    auto disjoint = validate();
    out.insert(out.end(), disjoint.begin(), disjoint.end());
    return out;
}

std::string to_string(const PortRef& p) {
    return std::to_string(p.node) + "." + p.port;
}

const Port* Node::find_port(const std::string& port_name) const {
    for (const auto& p : ports)
        if (p.name == port_name) return &p;
    return nullptr;
}

Port* Node::find_port(const std::string& port_name) {
    for (auto& p : ports)
        if (p.name == port_name) return &p;
    return nullptr;
}

Edge::Edge(PortRef x, PortRef y) {
    if (y < x) std::swap(x, y);
    a = std::move(x);
    b = std::move(y);
}

Position position_union(const Position& x, const Position& y) {
    Position r = x;
    r.members.insert(y.members.begin(), y.members.end());
    return r;
}

Position position_inter(const Position& x, const Position& y) {
    Position r;
    for (NodeId n : x.members)
        if (y.contains(n)) r.members.insert(n);
    return r;
}

Position position_minus(const Position& x, const Position& y) {
    Position r;
    for (NodeId n : x.members)
        if (!y.contains(n)) r.members.insert(n);
    return r;
}

const Node* PortGraph::find_node(NodeId id) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id,
                               [](const Node& n, NodeId v) { return n.id < v; });
    return (it != nodes.end() && it->id == id) ? &*it : nullptr;
}

Node* PortGraph::find_node(NodeId id) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id,
                               [](const Node& n, NodeId v) { return n.id < v; });
    return (it != nodes.end() && it->id == id) ? &*it : nullptr;
}

NodeId PortGraph::max_node_id() const {
    return nodes.empty() ? 0 : nodes.back().id;
}

Node& PortGraph::add_node(NodeId id, const std::string& name) {
    Node n;
    n.id = id;
    n.name = name;
    if (const auto* ps = signature.ports(name)) {
        for (const auto& p : *ps) n.ports.push_back(Port{p, std::nullopt});
        std::sort(n.ports.begin(), n.ports.end(),
                  [](const Port& x, const Port& y) { return x.name < y.name; });
    }
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id,
                               [](const Node& m, NodeId v) { return m.id < v; });
    if (it != nodes.end() && it->id == id)
        throw EngineError("duplicate node id " + std::to_string(id));
    return *nodes.insert(it, std::move(n));
}

void PortGraph::add_edge(const PortRef& x, const PortRef& y) {
    Edge e{x, y};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    edges.insert(it, e);
}

const Edge* PortGraph::edge_at(const PortRef& p) const {
    for (const auto& e : edges)
        if (e.a == p || e.b == p) return &e;
    return nullptr;
}

std::optional<PortRef> PortGraph::neighbor_of(const PortRef& p) const {
    const Edge* e = edge_at(p);
    if (!e) return std::nullopt;
    return e->other(p);
}

std::set<NodeId> PortGraph::node_ids() const {
    std::set<NodeId> out;
    for (const auto& n : nodes) out.insert(n.id);
    return out;
}

std::vector<std::string> validate(const PortGraph& g) {
    std::vector<std::string> out = g.signature.validate();

    std::set<NodeId> ids;
    for (const auto& n : g.nodes) {
        if (!ids.insert(n.id).second)
            out.push_back("duplicate node id " + std::to_string(n.id));
        const auto* ps = g.signature.ports(n.name);
        if (!ps) {
            out.push_back("node " + std::to_string(n.id) + ": unknown node name '" + n.name + "'");
            continue;
        }
        std::set<std::string> expected(ps->begin(), ps->end());
        std::set<std::string> actual;
        for (const auto& p : n.ports) {
            if (!actual.insert(p.name).second)
                out.push_back("node " + std::to_string(n.id) + ": duplicate port '" + p.name + "'");
            if (!expected.count(p.name))
                out.push_back("node " + std::to_string(n.id) + ": unknown port '" + p.name +
                              "' for name '" + n.name + "'");
        }
        for (const auto& p : expected)
            if (!actual.count(p))
                out.push_back("node " + std::to_string(n.id) + ": missing port '" + p + "'");
    }

    std::map<PortRef, int> uses;
    for (const auto& e : g.edges) {
        for (const PortRef* pr : {&e.a, &e.b}) {
            const Node* n = g.find_node(pr->node);
            if (!n) {
                out.push_back("edge endpoint references missing node " + std::to_string(pr->node));
                continue;
            }
            if (!n->find_port(pr->port))
                out.push_back("edge endpoint " + to_string(*pr) + ": unknown port");
        }
        if (e.a == e.b)
            out.push_back("edge joins port " + to_string(e.a) + " to itself");
        uses[e.a]++;
        uses[e.b]++;
    }
    for (const auto& [p, count] : uses)
        if (count > 1)
            out.push_back("port used twice: " + to_string(p));

    return out;
}

std::vector<std::string> validate(const LocatedGraph& lg) {
    std::vector<std::string> out = validate(lg.graph);
    for (NodeId n : lg.position.members)
        if (!lg.graph.has_node(n))
            out.push_back("position member " + std::to_string(n) + " is not a node of the graph");
    return out;
}

std::vector<PortRef> free_ports(const PortGraph& g) {
    std::set<PortRef> used;
    for (const auto& e : g.edges) {
        used.insert(e.a);
        used.insert(e.b);
    }
    std::vector<PortRef> out;
    for (const auto& n : g.nodes)
        for (const auto& p : n.ports) {
            PortRef r{n.id, p.name};
            if (!used.count(r)) out.push_back(std::move(r));
        }
    return out;
}

Position interface_nodes(const PortGraph& g) {
    Position out;
    for (const auto& p : free_ports(g)) out.members.insert(p.node);
    return out;
}

Position successors(const PortGraph& g, const Position& pos) {
    Position out;
    for (const auto& e : g.edges) {
        if (pos.contains(e.a.node)) out.members.insert(e.b.node);
        if (pos.contains(e.b.node)) out.members.insert(e.a.node);
    }
    return out;
}

Position designated_successors(const PortGraph& g, const Position& pos,
                               const std::map<std::string, std::string>& designation) {
    Position out;
    for (NodeId id : pos.members) {
        const Node* n = g.find_node(id);
        if (!n) continue;
        auto it = designation.find(n->name);
        if (it == designation.end())
            throw EngineError("no designated port for node name '" + n->name + "'");
        if (auto nb = g.neighbor_of(PortRef{id, it->second}))
            out.members.insert(nb->node);
    }
    return out;
}

}  // namespace pg
