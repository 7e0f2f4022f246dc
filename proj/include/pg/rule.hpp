#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pg/graph.hpp"

namespace pg {

enum class PortConstraint {
    Any,              // black port: connected or free
    MustBeConnected,  // white port
    MustBeFree,       // crossed port
};

// State token an LHS port may carry to demand "no state" on the host port.
inline constexpr const char* kNoStateToken = "_none";

// A rewrite rule. The interface routes boundary edges of the matched image:
// each LHS port maps to a set of RHS ports (its external edge is recreated
// there), to nothing (black hole: external edges are deleted), or to another
// LHS port (wire: the two external partners are connected directly).
struct Rule {
    std::string name;
    PortGraph lhs;
    std::map<PortRef, PortConstraint> constraints;  // LHS ports; absent = Any
    PortGraph rhs;
    std::map<PortRef, std::vector<PortRef>> interface;  // L port -> R ports; empty vec = black hole
    std::vector<std::pair<PortRef, PortRef>> wires;     // unordered L-L pairs
    std::set<NodeId> m_subgraph;                        // R node ids added to the position

    PortConstraint constraint_of(const PortRef& p) const {
        auto it = constraints.find(p);
        return it == constraints.end() ? PortConstraint::Any : it->second;
    }
};

// Structural well-formedness: interface keys are L ports, targets are R ports,
// wires join L ports, M is a subset of R nodes, sides share the signature, and
// no L port is routed both to R ports and into a wire.
std::vector<std::string> validate_rule(const Rule& r);

}  // namespace pg
