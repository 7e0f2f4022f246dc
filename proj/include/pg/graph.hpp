#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pg {

using NodeId = std::int64_t;

// Assigns each node name its fixed set of port names. Port-name sets of
// distinct node names are disjoint, so a port name identifies its owner kind.
struct PSignature {
    std::map<std::string, std::vector<std::string>> entries;

    bool has(const std::string& node_name) const { return entries.count(node_name) > 0; }
    const std::vector<std::string>* ports(const std::string& node_name) const;
    bool port_known(const std::string& node_name, const std::string& port) const;

    // Disjointness and nonemptiness violations, one message each.
    std::vector<std::string> validate() const;

    // Adds the entries of `other`; a name mapped to a different port set is a
    // conflict and is reported instead of merged.
    std::vector<std::string> merge(const PSignature& other);

    bool operator==(const PSignature&) const = default;
};

struct PortRef {
    NodeId node = 0;
    std::string port;

    auto operator<=>(const PortRef&) const = default;
};

std::string to_string(const PortRef& p);

struct Port {
    std::string name;
    std::optional<std::string> state;  // uninterpreted token; absence is distinct

    bool operator==(const Port&) const = default;
};

struct Node {
    NodeId id = 0;
    std::string name;
    std::vector<Port> ports;  // sorted by port name

    const Port* find_port(const std::string& port_name) const;
    Port* find_port(const std::string& port_name);

    bool operator==(const Node&) const = default;
};

// Undirected attachment between two ports. Endpoints are kept in sorted order
// so edge identity does not depend on writing direction.
struct Edge {
    PortRef a;
    PortRef b;

    Edge() = default;
    Edge(PortRef x, PortRef y);

    PortRef other(const PortRef& p) const { return p == a ? b : a; }
    bool touches(NodeId n) const { return a.node == n || b.node == n; }

    auto operator<=>(const Edge&) const = default;
};

struct Position {
    std::set<NodeId> members;

    bool contains(NodeId n) const { return members.count(n) > 0; }
    bool empty() const { return members.empty(); }
    std::size_t size() const { return members.size(); }

    bool operator==(const Position&) const = default;
};

Position position_union(const Position& x, const Position& y);
Position position_inter(const Position& x, const Position& y);
Position position_minus(const Position& x, const Position& y);

struct PortGraph {
    PSignature signature;
    std::vector<Node> nodes;  // sorted by id
    std::vector<Edge> edges;  // sorted, no duplicates in a valid graph

    const Node* find_node(NodeId id) const;
    Node* find_node(NodeId id);
    bool has_node(NodeId id) const { return find_node(id) != nullptr; }
    NodeId max_node_id() const;

    // Node creation keeps `nodes` ordered and instantiates the port list from
    // the signature (all states absent unless set afterwards).
    Node& add_node(NodeId id, const std::string& name);
    void add_edge(const PortRef& x, const PortRef& y);

    // The unique edge at a port, if any (valid graphs have at most one).
    const Edge* edge_at(const PortRef& p) const;
    std::optional<PortRef> neighbor_of(const PortRef& p) const;

    std::set<NodeId> node_ids() const;

    bool operator==(const PortGraph&) const = default;
};

struct LocatedGraph {
    PortGraph graph;
    Position position;

    bool operator==(const LocatedGraph&) const = default;
};

// Report-based invariant check: empty result iff the graph satisfies the
// signature, port-list, edge-endpoint and one-edge-per-port invariants.
std::vector<std::string> validate(const PortGraph& g);
std::vector<std::string> validate(const LocatedGraph& lg);

// Ports with no incident edge, sorted.
std::vector<PortRef> free_ports(const PortGraph& g);

// Nodes owning at least one free port.
Position interface_nodes(const PortGraph& g);

// Immediate successors of pos members; replaces pos rather than augmenting it.
Position successors(const PortGraph& g, const Position& pos);

// Successors through one designated port per node name (for interaction nets,
// the principal port). Throws EngineError if a member's name has no entry.
Position designated_successors(const PortGraph& g, const Position& pos,
                               const std::map<std::string, std::string>& designation);

}  // namespace pg
