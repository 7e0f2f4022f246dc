#include "pg/rewrite.hpp"

#include <algorithm>

#include "pg/errors.hpp"

namespace pg {
namespace {

// Maps a host port of the matched image back to the LHS port it realizes.
struct ImageIndex {
    std::map<NodeId, NodeId> host_to_l;  // host node -> L node

    explicit ImageIndex(const Match& m) {
        for (const auto& [l, h] : m.node_map) host_to_l[h] = l;
    }
    bool matched(NodeId host_node) const { return host_to_l.count(host_node) > 0; }
    PortRef l_port(const PortRef& host_port) const {
        return PortRef{host_to_l.at(host_port.node), host_port.port};
    }
};

}  // namespace

std::pair<LocatedGraph, RewriteRecord> apply_match(const LocatedGraph& host, const Rule& rule,
                                                   const Match& m, IdSource& ids) {
    for (const auto& [l, h] : m.node_map)
        if (!host.graph.has_node(h))
            throw EngineError("rule " + rule.name + ": match references missing node " +
                              std::to_string(h));

    ImageIndex image(m);

    RewriteRecord rec;
    rec.rule_name = rule.name;
    rec.match = m;
    rec.p_before = host.position;
    for (const auto& [h, l] : image.host_to_l) rec.deleted.push_back(h);
    std::sort(rec.deleted.begin(), rec.deleted.end());

    LocatedGraph out;
    out.graph.signature = host.graph.signature;

    // Surviving nodes.
    for (const auto& n : host.graph.nodes)
        if (!image.matched(n.id)) out.graph.nodes.push_back(n);

    // Fresh copy of the RHS, ids handed out in RHS id order.
    std::map<NodeId, NodeId> fresh;
    for (const auto& rn : rule.rhs.nodes) {
        NodeId id = ids.fresh();
        fresh[rn.id] = id;
        rec.created.push_back(id);
        Node n = rn;
        n.id = id;
        out.graph.nodes.push_back(std::move(n));
    }
    std::sort(out.graph.nodes.begin(), out.graph.nodes.end(),
              [](const Node& a, const Node& b) { return a.id < b.id; });

    std::set<PortRef> occupied;
    auto add_edge_checked = [&](const PortRef& a, const PortRef& b) {
        if (a == b)
            throw RuleApplicationError("rule " + rule.name + ": rewiring would join port " +
                                       to_string(a) + " to itself");
        for (const PortRef* p : {&a, &b})
            if (!occupied.insert(*p).second)
                throw RuleApplicationError("rule " + rule.name + ": rewiring would use port " +
                                           to_string(*p) + " twice");
        out.graph.add_edge(a, b);
    };

    // Surviving host edges.
    for (const auto& e : host.graph.edges)
        if (!image.matched(e.a.node) && !image.matched(e.b.node)) add_edge_checked(e.a, e.b);

    // RHS-internal edges.
    for (const auto& e : rule.rhs.edges)
        add_edge_checked(PortRef{fresh.at(e.a.node), e.a.port},
                         PortRef{fresh.at(e.b.node), e.b.port});

    // Boundary reconstruction. Every maximal chain
    //   terminal --host edge-- [wired port ~ wired port --host edge--]* terminal
    // contributes one new edge between its terminals, where a terminal is an
    // external host port or the fresh copy of an interface target. Chains that
    // end at a free or unrouted port contribute nothing; closed chains vanish.
    std::map<PortRef, PortRef> wire_partner;
    for (const auto& [x, y] : rule.wires) {
        wire_partner[x] = y;
        wire_partner[y] = x;
    }
    auto single_target = [&](const PortRef& lp) -> std::optional<PortRef> {
        auto it = rule.interface.find(lp);
        if (it == rule.interface.end() || it->second.size() != 1) return std::nullopt;
        return PortRef{fresh.at(it->second.front().node), it->second.front().port};
    };
    std::set<PortRef> consumed;  // L ports already woven into a chain
    // Walks outward from an L port through its host edge, passing through
    // wires; returns the terminal port or nullopt for free/dead/cyclic ends.
    auto walk = [&](PortRef start_l) -> std::optional<PortRef> {
        PortRef cur = start_l;
        while (true) {
            PortRef hcur{m.node_map.at(cur.node), cur.port};
            const Edge* e = host.graph.edge_at(hcur);
            if (!e) return std::nullopt;
            PortRef partner = e->other(hcur);
            if (!image.matched(partner.node)) return partner;
            PortRef lp = image.l_port(partner);
            if (consumed.count(lp)) return std::nullopt;  // closed chain
            consumed.insert(lp);
            if (auto target = single_target(lp)) return target;
            auto it = wire_partner.find(lp);
            if (it == wire_partner.end()) return std::nullopt;  // edge dies unrouted
            cur = it->second;
            if (consumed.count(cur)) return std::nullopt;
            consumed.insert(cur);
        }
    };
    for (const auto& [lport, targets] : rule.interface) {
        PortRef hport{m.node_map.at(lport.node), lport.port};
        const Edge* e = host.graph.edge_at(hport);
        if (!e) continue;
        if (targets.empty()) continue;  // explicit black hole
        if (targets.size() > 1)
            throw RuleApplicationError("rule " + rule.name + ": fan-out from " + to_string(lport) +
                                       " onto connected port " + to_string(e->other(hport)) +
                                       " violates one-edge-per-port");
        if (consumed.count(lport)) continue;
        consumed.insert(lport);
        PortRef own{fresh.at(targets.front().node), targets.front().port};
        if (auto other = walk(lport)) add_edge_checked(own, *other);
    }
    for (const auto& [x, y] : rule.wires) {
        if (consumed.count(x) || consumed.count(y)) continue;
        consumed.insert(x);
        consumed.insert(y);
        auto endA = walk(x);
        auto endB = walk(y);
        if (endA && endB) add_edge_checked(*endA, *endB);
    }

    // Position update.
    for (NodeId n : host.position.members)
        if (!image.matched(n)) out.position.members.insert(n);
    for (NodeId rid : rule.m_subgraph) {
        rec.m_image.insert(fresh.at(rid));
        out.position.members.insert(fresh.at(rid));
    }
    rec.p_after = out.position;
    return {std::move(out), std::move(rec)};
}

RewriteOutcome rewrite_once(const LocatedGraph& host, const Rule& rule, Rng& rng, IdSource& ids) {
    RewriteOutcome out;
    auto matches = find_matches(rule, host);
    if (matches.empty()) {
        out.outcome = Outcome::Fail;
        out.graph = host;
        return out;
    }
    std::size_t pick = 0;
    if (matches.size() > 1) {
        pick = std::uniform_int_distribution<std::size_t>(0, matches.size() - 1)(rng);
        out.draws.push_back(pick);
    }
    auto [g, rec] = apply_match(host, rule, matches[pick], ids);
    out.outcome = Outcome::Id;
    out.graph = std::move(g);
    out.records.push_back(std::move(rec));
    return out;
}

RewriteOutcome apply_parallel(const LocatedGraph& host, const std::vector<const Rule*>& rules,
                              ParMode mode, Rng& rng, IdSource& ids) {
    RewriteOutcome out;
    auto tuples = find_disjoint_tuples(rules, host);
    if (!tuples.empty()) {
        std::size_t pick = 0;
        if (tuples.size() > 1) {
            pick = std::uniform_int_distribution<std::size_t>(0, tuples.size() - 1)(rng);
            out.draws.push_back(pick);
        }
        LocatedGraph cur = host;
        for (std::size_t i = 0; i < rules.size(); ++i) {
            auto [g, rec] = apply_match(cur, *rules[i], tuples[pick][i], ids);
            cur = std::move(g);
            out.records.push_back(std::move(rec));
        }
        out.outcome = Outcome::Id;
        out.graph = std::move(cur);
        return out;
    }
    if (mode == ParMode::All) {
        out.outcome = Outcome::Fail;
        out.graph = host;
        return out;
    }
    // AtLeastOne: no disjoint tuple; apply whichever sides are individually
    // applicable, left first (the sides conflict, so at most one can run).
    std::vector<const Rule*> applicable;
    for (const Rule* r : rules)
        if (match_exists(*r, host)) applicable.push_back(r);
    if (applicable.empty()) {
        out.outcome = Outcome::Fail;
        out.graph = host;
        return out;
    }
    if (applicable.size() == static_cast<std::size_t>(rules.size()))
        out.notes.push_back("interleave: operands overlap, applying left operand only");
    RewriteOutcome one = rewrite_once(host, *applicable.front(), rng, ids);
    one.notes.insert(one.notes.begin(), out.notes.begin(), out.notes.end());
    return one;
}

RewriteOutcome apply_multi(const LocatedGraph& host, const Rule& rule, int m, int n, Rng& rng,
                           IdSource& ids) {
    RewriteOutcome out;
    int min_needed = std::max(m, 0);
    auto matches = find_matches(rule, host);
    std::shuffle(matches.begin(), matches.end(), rng);

    std::vector<Match> selected;
    std::set<NodeId> used;
    for (const auto& cand : matches) {
        if (n >= 0 && static_cast<int>(selected.size()) == n) break;
        auto img = cand.image();
        bool clash = false;
        for (NodeId x : img)
            if (used.count(x)) { clash = true; break; }
        if (clash) continue;
        used.insert(img.begin(), img.end());
        selected.push_back(cand);
    }

    if (static_cast<int>(selected.size()) < min_needed) {
        out.outcome = Outcome::Fail;
        out.graph = host;
        return out;
    }
    LocatedGraph cur = host;
    for (const auto& sel : selected) {
        auto [g, rec] = apply_match(cur, rule, sel, ids);
        cur = std::move(g);
        out.records.push_back(std::move(rec));
    }
    out.outcome = Outcome::Id;
    out.graph = std::move(cur);
    return out;
}

}  // namespace pg
