#include "pg/rule.hpp"

#include <algorithm>

namespace pg {
namespace {

bool has_port(const PortGraph& g, const PortRef& p) {
    const Node* n = g.find_node(p.node);
    return n && n->find_port(p.port);
}

}  // namespace

std::vector<std::string> validate_rule(const Rule& r) {
    std::vector<std::string> out;
    auto tag = [&](const std::string& msg) { out.push_back("rule " + r.name + ": " + msg); };

    for (const auto& v : validate(r.lhs)) tag("lhs: " + v);
    for (const auto& v : validate(r.rhs)) tag("rhs: " + v);
    if (!(r.lhs.signature == r.rhs.signature)) tag("lhs and rhs signatures differ");
    if (r.lhs.nodes.empty()) tag("lhs is empty");

    std::set<PortRef> wired;
    for (const auto& [x, y] : r.wires) {
        if (!has_port(r.lhs, x)) tag("wire endpoint " + to_string(x) + " is not an lhs port");
        if (!has_port(r.lhs, y)) tag("wire endpoint " + to_string(y) + " is not an lhs port");
        if (x == y) tag("wire joins " + to_string(x) + " to itself");
        if (!wired.insert(x).second) tag("port " + to_string(x) + " wired twice");
        if (!wired.insert(y).second) tag("port " + to_string(y) + " wired twice");
    }

    for (const auto& [key, targets] : r.interface) {
        if (!has_port(r.lhs, key)) tag("interface key " + to_string(key) + " is not an lhs port");
        if (wired.count(key) && !targets.empty())
            tag("port " + to_string(key) + " is both wired and mapped to rhs ports");
        for (const auto& t : targets)
            if (!has_port(r.rhs, t)) tag("interface target " + to_string(t) + " is not an rhs port");
    }

    for (NodeId id : r.m_subgraph)
        if (!r.rhs.has_node(id)) tag("M member " + std::to_string(id) + " is not an rhs node");

    for (const auto& [p, c] : r.constraints) {
        (void)c;
        if (!has_port(r.lhs, p)) tag("constraint on " + to_string(p) + ": not an lhs port");
    }

    return out;
}

}  // namespace pg
