#pragma once

// Shared generators and oracles used by both the unit tests and the
// acceptance suite. Everything here is independent of the engine internals it
// checks: the matcher oracle enumerates injective maps directly, and the case
// generator only produces inputs.

#include <algorithm>
#include <functional>
#include <random>

#include "pg/matching.hpp"
#include "pg/trace.hpp"
#include "test_helpers.hpp"

namespace pgtest {

struct CaseGen {
    std::mt19937_64 rng;

    explicit CaseGen(std::uint64_t seed) : rng(seed) {}

    pg::LocatedGraph graph(int max_nodes = 8) {
        pg::LocatedGraph lg;
        lg.graph.signature = toy_signature();
        int n = 1 + static_cast<int>(rng() % max_nodes);
        for (pg::NodeId i = 1; i <= n; ++i) {
            pg::Node& node = lg.graph.add_node(i, rng() % 2 ? "A" : "B");
            if (rng() % 5 == 0) node.ports[rng() % node.ports.size()].state = "s";
            if (rng() % 2) lg.position.members.insert(i);
        }
        auto fp = pg::free_ports(lg.graph);
        std::shuffle(fp.begin(), fp.end(), rng);
        while (fp.size() >= 2) {
            pg::PortRef a = fp.back(); fp.pop_back();
            pg::PortRef b = fp.back(); fp.pop_back();
            if (rng() % 2) lg.graph.add_edge(a, b);
        }
        return lg;
    }

    // Random pattern over the toy signature, for the matching oracle.
    pg::Rule pattern() {
        pg::Rule r;
        r.name = "pat";
        r.lhs.signature = toy_signature();
        r.rhs.signature = r.lhs.signature;
        int k = 1 + static_cast<int>(rng() % 3);
        for (pg::NodeId i = 1; i <= k; ++i) {
            pg::Node& ln = r.lhs.add_node(i, rng() % 2 ? "A" : "B");
            if (rng() % 5 == 0) ln.ports[rng() % ln.ports.size()].state = "s";
            if (rng() % 5 == 0)
                r.constraints[{i, ln.ports[rng() % ln.ports.size()].name}] =
                    rng() % 2 ? pg::PortConstraint::MustBeFree
                              : pg::PortConstraint::MustBeConnected;
        }
        auto lfp = pg::free_ports(r.lhs);
        std::shuffle(lfp.begin(), lfp.end(), rng);
        if (lfp.size() >= 2 && rng() % 2) {
            pg::PortRef a = lfp.back(); lfp.pop_back();
            pg::PortRef b = lfp.back(); lfp.pop_back();
            if (!r.constraints.count(a) && !r.constraints.count(b)) r.lhs.add_edge(a, b);
        }
        return r;
    }

    // Strategy text over the engine_rules() names; whiles are max-bounded so
    // every generated case terminates.
    std::string strategy(int depth) {
        auto rule = [&]() {
            static const char* names[] = {"dropA", "dropB", "dupA", "a2b"};
            return std::string(names[rng() % 4]);
        };
        if (depth <= 0) {
            switch (rng() % 6) {
            case 0: return std::string("id");
            case 1: return std::string("fail");
            case 2: return std::string("pnotempty");
            case 3: return std::string("crtpos");
            case 4: return std::string("allsuc");
            default: return rule();
            }
        }
        switch (rng() % 10) {
        case 0: return strategy(depth - 1) + "; " + strategy(depth - 1);
        case 1: return "(" + strategy(depth - 1) + ") + (" + strategy(depth - 1) + ")";
        case 2: return "ppick(" + strategy(depth - 1) + ", " + strategy(depth - 1) + ")";
        case 3:
            return "while(" + strategy(depth - 1) + ")do(" + strategy(depth - 1) + ")min(" +
                   std::to_string(static_cast<int>(rng() % 3) - 1) + ")max(" +
                   std::to_string(rng() % 4) + ")";
        case 4:
            return "if(" + strategy(depth - 1) + ")then(" + strategy(depth - 1) + ")else(" +
                   strategy(depth - 1) + ")";
        case 5: return "atomic(" + strategy(depth - 1) + ")";
        case 6: return "try(" + strategy(depth - 1) + ")";
        case 7: return "not(" + strategy(depth - 1) + ")";
        case 8: return "(" + strategy(depth - 1) + ") orelse (" + strategy(depth - 1) + ")";
        default: return "multi(" + rule() + ", " + std::to_string(rng() % 2) + ", " +
                        std::to_string(static_cast<int>(rng() % 4) - 1) + ")";
        }
    }
};

inline void walk_records(const std::vector<pg::TraceStep>& steps,
                         const std::function<void(const pg::TraceStep&,
                                                  const pg::RewriteRecord&)>& fn) {
    for (const auto& st : steps) {
        for (const auto& rec : st.records) fn(st, rec);
        walk_records(st.children, fn);
    }
}

// Independent matching oracle: every injective node map, filtered by the
// match invariants, sorted canonically.
inline std::vector<pg::Match> brute_force_matches(const pg::Rule& rule,
                                                  const pg::LocatedGraph& host) {
    using namespace pg;
    std::vector<const Node*> lnodes;
    for (const auto& n : rule.lhs.nodes) lnodes.push_back(&n);
    std::vector<Match> out;
    std::vector<NodeId> hosts;
    for (const auto& n : host.graph.nodes) hosts.push_back(n.id);

    std::vector<NodeId> chosen(lnodes.size());
    std::vector<bool> used(hosts.size(), false);

    auto valid = [&]() {
        Match m;
        for (std::size_t i = 0; i < lnodes.size(); ++i) m.node_map[lnodes[i]->id] = chosen[i];
        for (std::size_t i = 0; i < lnodes.size(); ++i) {
            const Node* ln = lnodes[i];
            const Node* hn = host.graph.find_node(chosen[i]);
            if (ln->name != hn->name) return false;
            for (const auto& lp : ln->ports) {
                const Port* hp = hn->find_port(lp.name);
                if (lp.state) {
                    if (*lp.state == std::string(kNoStateToken)) {
                        if (hp->state) return false;
                    } else if (!hp->state || *hp->state != *lp.state) {
                        return false;
                    }
                }
                bool connected = host.graph.edge_at(PortRef{hn->id, lp.name}) != nullptr;
                switch (rule.constraint_of(PortRef{ln->id, lp.name})) {
                case PortConstraint::Any: break;
                case PortConstraint::MustBeFree:
                    if (connected) return false;
                    break;
                case PortConstraint::MustBeConnected:
                    if (!connected) return false;
                    break;
                }
            }
        }
        for (const auto& e : rule.lhs.edges) {
            Edge want{PortRef{m.node_map.at(e.a.node), e.a.port},
                      PortRef{m.node_map.at(e.b.node), e.b.port}};
            if (std::find(host.graph.edges.begin(), host.graph.edges.end(), want) ==
                host.graph.edges.end())
                return false;
        }
        for (const auto& [l, h] : m.node_map)
            if (host.position.contains(h)) return true;
        return false;
    };

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == lnodes.size()) {
            if (valid()) {
                Match m;
                for (std::size_t k = 0; k < lnodes.size(); ++k)
                    m.node_map[lnodes[k]->id] = chosen[k];
                out.push_back(std::move(m));
            }
            return;
        }
        for (std::size_t h = 0; h < hosts.size(); ++h) {
            if (used[h]) continue;
            used[h] = true;
            chosen[i] = hosts[h];
            self(self, i + 1);
            used[h] = false;
        }
    };
    if (!lnodes.empty()) rec(rec, 0);

    std::vector<const pg::Node*> order = lnodes;
    std::sort(order.begin(), order.end(), [](const Node* a, const Node* b) {
        return std::tie(a->name, a->id) < std::tie(b->name, b->id);
    });
    auto key = [&](const Match& m) {
        std::vector<NodeId> k;
        for (const Node* n : order) k.push_back(m.node_map.at(n->id));
        return k;
    };
    std::sort(out.begin(), out.end(),
              [&](const Match& a, const Match& b) { return key(a) < key(b); });
    return out;
}

}  // namespace pgtest
