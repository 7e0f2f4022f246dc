#include "pg/inet.hpp"

#include <algorithm>
#include <functional>

#include "pg/errors.hpp"
#include "pg/strategy.hpp"

namespace pg {

std::vector<std::string> validate_inet(const INetRuleSet& rs) {
    std::vector<std::string> out;

    std::map<std::string, const AgentDecl*> decls;
    for (const auto& d : rs.declarations) {
        if (!decls.emplace(d.symbol, &d).second)
            out.push_back("agent '" + d.symbol + "' declared twice");
        const auto* ports = rs.signature.ports(d.symbol);
        if (!ports) {
            out.push_back("agent '" + d.symbol + "' missing from the signature");
            continue;
        }
        if (static_cast<int>(ports->size()) != d.arity + 1)
            out.push_back("agent '" + d.symbol + "': arity " + std::to_string(d.arity) +
                          " needs " + std::to_string(d.arity + 1) + " ports, signature has " +
                          std::to_string(ports->size()));
        if (std::find(ports->begin(), ports->end(), d.principal) == ports->end())
            out.push_back("agent '" + d.symbol + "': principal port '" + d.principal +
                          "' not in the signature");
    }

    std::map<std::pair<std::string, std::string>, std::string> pair_rule;
    for (const auto& r : rs.rules) {
        auto bad = [&](const std::string& msg) { out.push_back("rule " + r.name + ": " + msg); };
        if (r.lhs.nodes.size() != 2) {
            bad("lhs must be exactly two agents");
            continue;
        }
        const Node& a = r.lhs.nodes[0];
        const Node& b = r.lhs.nodes[1];
        auto da = decls.find(a.name);
        auto db = decls.find(b.name);
        if (da == decls.end() || db == decls.end()) {
            bad("lhs agents must be declared");
            continue;
        }
        if (r.lhs.edges.size() != 1) {
            bad("lhs must contain exactly the active-pair edge");
            continue;
        }
        Edge expect{PortRef{a.id, da->second->principal}, PortRef{b.id, db->second->principal}};
        if (!(r.lhs.edges.front() == expect))
            bad("not an active pair: lhs edge must join the principal ports");

        std::size_t lhs_free = (da->second->arity) + (db->second->arity);
        std::size_t rhs_free = free_ports(r.rhs).size() + 2 * r.wires.size();
        if (lhs_free != rhs_free)
            bad("rhs has " + std::to_string(rhs_free) + " free ports, lhs has " +
                std::to_string(lhs_free));

        auto key = std::minmax(a.name, b.name);
        auto [it, fresh] = pair_rule.emplace(std::make_pair(key.first, key.second), r.name);
        if (!fresh)
            bad("duplicate pair (" + key.first + "," + key.second + "): rule '" + it->second +
                "' already covers it");
    }
    return out;
}

std::map<std::string, std::string> principal_designation(const INetRuleSet& rs) {
    std::map<std::string, std::string> out;
    for (const auto& d : rs.declarations) out[d.symbol] = d.principal;
    return out;
}

StratPtr inf_strategy(const std::vector<std::string>& rule_names) {
    if (rule_names.empty()) throw EngineError("inf_strategy: empty rule list");
    StratPtr chain = strat_rule(rule_names.back());
    for (auto it = rule_names.rbegin() + 1; it != rule_names.rend(); ++it)
        chain = strat_orelse(strat_rule(*it), chain);

    auto interface_pos = std::make_shared<const PositionExpr>(PositionExpr{PosProperty{
        std::make_shared<const PropertyPred>(PropertyPred{PredInterface{}}),
        PropertyScope::WholeGraph}});
    StratPtr reset = make_strat({StratPos{interface_pos}});
    StratPtr advance =
        strat_seq(make_strat({StratPos{std::make_shared<const PositionExpr>(
                      PositionExpr{PosNextSuc{}})}}),
                  make_strat({StratPnotEmpty{}}));
    return strat_repeat_star(strat_orelse(strat_seq(chain, reset), advance));
}

namespace {

// Iterated neighborhood refinement; returns a color per node, equal colors
// meaning "not yet distinguished".
std::map<NodeId, std::string> refine_colors(const PortGraph& g) {
    std::map<NodeId, std::string> color;
    for (const auto& n : g.nodes) {
        std::string c = n.name + "(";
        for (const auto& p : n.ports) {
            c += p.name;
            if (p.state) c += "=" + *p.state;
            c += g.edge_at(PortRef{n.id, p.name}) ? "*" : "_";
            c += ";";
        }
        color[n.id] = c + ")";
    }
    for (std::size_t round = 0; round < g.nodes.size(); ++round) {
        std::map<NodeId, std::string> next;
        for (const auto& n : g.nodes) {
            std::vector<std::string> nb;
            for (const auto& p : n.ports)
                if (auto partner = g.neighbor_of(PortRef{n.id, p.name}))
                    nb.push_back(p.name + ">" + partner->port + ">" + color[partner->node]);
            std::sort(nb.begin(), nb.end());
            std::string c = color[n.id] + "[";
            for (const auto& s : nb) c += s + "|";
            next[n.id] = c + "]";
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

}  // namespace

bool graphs_isomorphic(const PortGraph& a, const PortGraph& b) {
    if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;

    auto ca = refine_colors(a);
    auto cb = refine_colors(b);
    std::multiset<std::string> ma, mb;
    for (const auto& [id, c] : ca) ma.insert(c);
    for (const auto& [id, c] : cb) mb.insert(c);
    if (ma != mb) return false;

    // Backtracking assignment within color classes.
    std::vector<const Node*> order;
    for (const auto& n : a.nodes) order.push_back(&n);
    std::map<NodeId, NodeId> map_ab;
    std::set<NodeId> used;

    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == order.size()) return true;
        const Node* an = order[i];
        for (const auto& bn : b.nodes) {
            if (used.count(bn.id) || cb[bn.id] != ca[an->id]) continue;
            bool ok = true;
            for (const auto& p : an->ports) {
                auto pa = a.neighbor_of(PortRef{an->id, p.name});
                auto pb = b.neighbor_of(PortRef{bn.id, p.name});
                if (pa.has_value() != pb.has_value()) { ok = false; break; }
                if (!pa) continue;
                if (pa->port != pb->port) { ok = false; break; }
                auto it = map_ab.find(pa->node);
                if (it != map_ab.end() && it->second != pb->node) { ok = false; break; }
            }
            if (!ok) continue;
            map_ab[an->id] = bn.id;
            used.insert(bn.id);
            if (rec(i + 1)) return true;
            used.erase(bn.id);
            map_ab.erase(an->id);
        }
        return false;
    };
    return rec(0);
}

}  // namespace pg
