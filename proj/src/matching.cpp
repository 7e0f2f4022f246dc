#include "pg/matching.hpp"

#include <algorithm>

namespace pg {

std::set<NodeId> Match::image() const {
    std::set<NodeId> out;
    for (const auto& [l, h] : node_map) out.insert(h);
    return out;
}

bool Match::disjoint_with(const Match& other) const {
    auto mine = image();
    for (const auto& [l, h] : other.node_map)
        if (mine.count(h)) return false;
    return true;
}

namespace {

struct Matcher {
    const Rule& rule;
    const LocatedGraph& host;
    bool stop_at_first;

    std::map<PortRef, PortRef> host_adj;   // port -> partner
    std::vector<const Node*> order;        // LHS processing order
    std::vector<std::vector<std::pair<std::size_t, PortRef>>> forced;
    // forced[i]: for order[i], (index of earlier order slot, via which L edge
    // endpoints): pair (slot of the already-assigned node, L ports (theirs, ours))
    struct ForcedEdge {
        std::size_t from_slot;
        std::string from_port;  // port on the assigned node
        std::string own_port;   // port on the node being placed
    };
    std::vector<std::vector<ForcedEdge>> anchors_via;

    std::map<NodeId, NodeId> assignment;  // L id -> host id
    std::set<NodeId> used_hosts;
    std::vector<Match> results;

    explicit Matcher(const Rule& r, const LocatedGraph& h, bool first)
        : rule(r), host(h), stop_at_first(first) {
        for (const auto& e : host.graph.edges) {
            host_adj[e.a] = e.b;
            host_adj[e.b] = e.a;
        }
        build_order();
    }

    // Process order: repeatedly pick an unplaced LHS node, preferring one
    // connected to an already-placed node (its candidate is forced through
    // the host edge); ties and fresh components by (name, id).
    void build_order() {
        std::vector<const Node*> pending;
        for (const auto& n : rule.lhs.nodes) pending.push_back(&n);
        std::sort(pending.begin(), pending.end(), [](const Node* a, const Node* b) {
            return std::tie(a->name, a->id) < std::tie(b->name, b->id);
        });
        std::map<NodeId, std::size_t> slot_of;
        while (!pending.empty()) {
            std::size_t pick = pending.size();
            for (std::size_t i = 0; i < pending.size(); ++i) {
                if (connected_to_placed(pending[i]->id, slot_of)) { pick = i; break; }
            }
            if (pick == pending.size()) pick = 0;  // new component anchor
            const Node* n = pending[pick];
            pending.erase(pending.begin() + pick);
            std::size_t slot = order.size();
            slot_of[n->id] = slot;
            order.push_back(n);
            anchors_via.push_back(collect_forced(n->id, slot_of));
        }
    }

    bool connected_to_placed(NodeId id, const std::map<NodeId, std::size_t>& slot_of) const {
        for (const auto& e : rule.lhs.edges) {
            if (e.a.node == id && slot_of.count(e.b.node) && e.b.node != id) return true;
            if (e.b.node == id && slot_of.count(e.a.node) && e.a.node != id) return true;
        }
        return false;
    }

    std::vector<ForcedEdge> collect_forced(NodeId id, const std::map<NodeId, std::size_t>& slot_of) {
        std::vector<ForcedEdge> out;
        for (const auto& e : rule.lhs.edges) {
            if (e.a.node == id && e.b.node != id) {
                auto it = slot_of.find(e.b.node);
                if (it != slot_of.end() && it->second < order.size())
                    out.push_back({it->second, e.b.port, e.a.port});
            } else if (e.b.node == id && e.a.node != id) {
                auto it = slot_of.find(e.a.node);
                if (it != slot_of.end() && it->second < order.size())
                    out.push_back({it->second, e.a.port, e.b.port});
            }
        }
        return out;
    }

    bool node_compatible(const Node& lnode, const Node& hnode) const {
        if (lnode.name != hnode.name) return false;
        for (const auto& lp : lnode.ports) {
            const Port* hp = hnode.find_port(lp.name);
            if (!hp) return false;
            if (lp.state) {
                if (*lp.state == kNoStateToken) {
                    if (hp->state) return false;
                } else if (!hp->state || *hp->state != *lp.state) {
                    return false;
                }
            }
            PortRef lref{lnode.id, lp.name};
            PortRef href{hnode.id, lp.name};
            switch (rule.constraint_of(lref)) {
            case PortConstraint::Any: break;
            case PortConstraint::MustBeFree:
                if (host_adj.count(href)) return false;
                break;
            case PortConstraint::MustBeConnected:
                if (!host_adj.count(href)) return false;
                break;
            }
        }
        return true;
    }

    // Every L edge among assigned nodes must exist between the images.
    bool edges_ok(NodeId just_placed) const {
        for (const auto& e : rule.lhs.edges) {
            if (e.a.node != just_placed && e.b.node != just_placed) continue;
            auto ia = assignment.find(e.a.node);
            auto ib = assignment.find(e.b.node);
            if (ia == assignment.end() || ib == assignment.end()) continue;
            PortRef ha{ia->second, e.a.port};
            auto it = host_adj.find(ha);
            if (it == host_adj.end()) return false;
            if (!(it->second == PortRef{ib->second, e.b.port})) return false;
        }
        return true;
    }

    bool overlaps_position() const {
        for (const auto& [l, h] : assignment)
            if (host.position.contains(h)) return true;
        return false;
    }

    bool extend(std::size_t slot) {
        if (slot == order.size()) {
            if (!overlaps_position()) return false;
            results.push_back(Match{assignment});
            return stop_at_first;
        }
        const Node* lnode = order[slot];
        const auto& via = anchors_via[slot];

        auto try_candidate = [&](const Node* hnode) -> bool {
            if (!hnode || used_hosts.count(hnode->id)) return false;
            if (!node_compatible(*lnode, *hnode)) return false;
            assignment[lnode->id] = hnode->id;
            used_hosts.insert(hnode->id);
            bool done = edges_ok(lnode->id) && extend(slot + 1);
            used_hosts.erase(hnode->id);
            assignment.erase(lnode->id);
            return done;
        };

        if (!via.empty()) {
            // Candidate forced through the first connecting edge.
            const ForcedEdge& f = via.front();
            NodeId anchor_host = assignment.at(order[f.from_slot]->id);
            auto it = host_adj.find(PortRef{anchor_host, f.from_port});
            if (it == host_adj.end()) return false;
            if (it->second.port != f.own_port) return false;
            return try_candidate(host.graph.find_node(it->second.node));
        }
        for (const auto& hnode : host.graph.nodes)
            if (try_candidate(&hnode)) return true;
        return false;
    }
};

std::vector<std::size_t> canonical_l_order(const PortGraph& lhs) {
    std::vector<std::size_t> idx(lhs.nodes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const Node& x = lhs.nodes[a];
        const Node& y = lhs.nodes[b];
        return std::tie(x.name, x.id) < std::tie(y.name, y.id);
    });
    return idx;
}

void sort_matches(const Rule& rule, std::vector<Match>& ms) {
    auto order = canonical_l_order(rule.lhs);
    auto key = [&](const Match& m) {
        std::vector<NodeId> k;
        k.reserve(order.size());
        for (std::size_t i : order) k.push_back(m.node_map.at(rule.lhs.nodes[i].id));
        return k;
    };
    std::sort(ms.begin(), ms.end(),
              [&](const Match& a, const Match& b) { return key(a) < key(b); });
}

}  // namespace

std::vector<Match> find_matches(const Rule& rule, const LocatedGraph& host) {
    if (rule.lhs.nodes.empty()) return {};
    Matcher m(rule, host, false);
    m.extend(0);
    sort_matches(rule, m.results);
    return m.results;
}

bool match_exists(const Rule& rule, const LocatedGraph& host) {
    if (rule.lhs.nodes.empty()) return false;
    Matcher m(rule, host, true);
    m.extend(0);
    return !m.results.empty();
}

bool match_is_valid(const Rule& rule, const LocatedGraph& host, const Match& m) {
    for (const auto& ms : find_matches(rule, host))
        if (ms == m) return true;
    return false;
}

std::vector<std::vector<Match>> find_disjoint_tuples(const std::vector<const Rule*>& rules,
                                                     const LocatedGraph& host) {
    std::vector<std::vector<Match>> per_rule;
    for (const Rule* r : rules) per_rule.push_back(find_matches(*r, host));

    std::vector<std::vector<Match>> out;
    std::vector<Match> tuple;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == per_rule.size()) {
            out.push_back(tuple);
            return;
        }
        for (const auto& m : per_rule[i]) {
            bool ok = true;
            for (const auto& prev : tuple)
                if (!prev.disjoint_with(m)) { ok = false; break; }
            if (!ok) continue;
            tuple.push_back(m);
            self(self, i + 1);
            tuple.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace pg
