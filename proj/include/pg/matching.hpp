#pragma once

#include <map>
#include <vector>

#include "pg/graph.hpp"
#include "pg/rule.hpp"

namespace pg {

// Injective node map from a rule's LHS into a host graph. The port map is
// induced: equally named ports correspond.
struct Match {
    std::map<NodeId, NodeId> node_map;  // L node id -> host node id

    std::set<NodeId> image() const;
    bool disjoint_with(const Match& other) const;
    bool operator==(const Match&) const = default;
};

// All injective matches of rule.lhs into host.graph whose image overlaps
// host.position, sorted by the tuple of host ids assigned to the LHS nodes in
// (name, id) order. Preserves node names, edges, port states (an LHS port
// without a state matches any state; the "_none" token demands no state) and
// port constraints.
std::vector<Match> find_matches(const Rule& rule, const LocatedGraph& host);

// True iff find_matches would be nonempty; stops at the first match.
bool match_exists(const Rule& rule, const LocatedGraph& host);

// Re-checks a previously found match against the current host.
bool match_is_valid(const Rule& rule, const LocatedGraph& host, const Match& m);

// All tuples (m1..mk), mi a match of rules[i], images pairwise node-disjoint,
// each overlapping the position; lexicographic in the per-rule match orders.
std::vector<std::vector<Match>> find_disjoint_tuples(const std::vector<const Rule*>& rules,
                                                     const LocatedGraph& host);

}  // namespace pg
