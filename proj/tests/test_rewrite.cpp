#include <doctest.h>

#include "pg/errors.hpp"
#include "pg/rewrite.hpp"
#include "pg/rule_io.hpp"
#include "test_helpers.hpp"

using namespace pg;

namespace {

RuleFile toy_rules() {
    // identity: rewrites an A in place, all ports carried over.
    // drop: deletes an A, black-holing its edges.
    // relink: A-B pair replaced by one B keeping the pair's outer edges.
    std::string text =
        "SIGNATURE\n"
        "A : a1, a2, a3\n"
        "B : b1, b2\n"
        "RULE identity\n"
        "LHS\nNODES\n1 : A\nEDGES\n"
        "RHS\nNODES\n101 : A\nEDGES\n"
        "INTERFACE\n1.a1 -> 101.a1\n1.a2 -> 101.a2\n1.a3 -> 101.a3\n"
        "M\n101\n"
        "RULE drop\n"
        "LHS\nNODES\n1 : A\nEDGES\n"
        "RHS\nNODES\nINTERFACE\nM\n"
        "RULE splice\n"
        "LHS\nNODES\n1 : A\nEDGES\n"
        "RHS\nNODES\nINTERFACE\n1.a1 -> 1.a2\nM\n"
        "RULE fanout\n"
        "LHS\nNODES\n1 : A\nEDGES\n"
        "RHS\nNODES\n101 : B\n102 : B\nEDGES\n"
        "INTERFACE\n1.a1 -> 101.b1, 102.b1\nM\n";
    return parse_rules(text);
}

const Rule& rule_named(const RuleFile& rf, const std::string& name) {
    for (const auto& r : rf.rules)
        if (r.name == name) return r;
    throw std::runtime_error("no rule " + name);
}

}  // namespace

TEST_CASE("identity-like rule reproduces the graph up to fresh ids") {
    RuleFile rf = toy_rules();
    LocatedGraph host;
    host.graph.signature = rf.signature;
    host.graph.add_node(1, "A");
    host.graph.add_node(2, "B");
    host.graph.add_edge({1, "a1"}, {2, "b1"});
    host.position.members = {1};

    IdSource ids(3);
    Match m;
    m.node_map[1] = 1;
    auto [out, rec] = apply_match(host, rule_named(rf, "identity"), m, ids);

    CHECK(out.graph.nodes.size() == 2);
    CHECK(rec.created == std::vector<NodeId>{3});
    CHECK(rec.deleted == std::vector<NodeId>{1});
    const Node* fresh = out.graph.find_node(3);
    REQUIRE(fresh);
    CHECK(fresh->name == "A");
    CHECK(out.graph.neighbor_of(PortRef{3, "a1"}) == PortRef{2, "b1"});
    CHECK(out.position.members == std::set<NodeId>{3});
    CHECK(rec.p_after == out.position);
    CHECK(validate(out.graph).empty());
}

TEST_CASE("empty M removes the matched image from the position") {
    RuleFile rf = toy_rules();
    LocatedGraph host;
    host.graph.signature = rf.signature;
    host.graph.add_node(1, "A");
    host.graph.add_node(2, "A");
    host.position.members = {1, 2};

    IdSource ids(10);
    Match m;
    m.node_map[1] = 1;
    auto [out, rec] = apply_match(host, rule_named(rf, "drop"), m, ids);
    CHECK(out.position.members == std::set<NodeId>{2});
    CHECK(out.graph.nodes.size() == 1);
    CHECK(rec.m_image.empty());
}

TEST_CASE("black-holed ports lose their external edges") {
    RuleFile rf = toy_rules();
    LocatedGraph host;
    host.graph.signature = rf.signature;
    host.graph.add_node(1, "A");
    host.graph.add_node(2, "B");
    host.graph.add_node(3, "B");
    host.graph.add_edge({1, "a1"}, {2, "b1"});
    host.graph.add_edge({1, "a2"}, {3, "b1"});
    host.position.members = {1};

    IdSource ids(10);
    Match m;
    m.node_map[1] = 1;
    auto [out, rec] = apply_match(host, rule_named(rf, "drop"), m, ids);
    CHECK(out.graph.edges.empty());
    CHECK(free_ports(out.graph).size() == 4);
    CHECK(validate(out.graph).empty());
}

TEST_CASE("wire interface connects the external partners directly") {
    RuleFile rf = toy_rules();
    LocatedGraph host;
    host.graph.signature = rf.signature;
    host.graph.add_node(1, "A");
    host.graph.add_node(2, "B");
    host.graph.add_node(3, "B");
    host.graph.add_edge({1, "a1"}, {2, "b1"});
    host.graph.add_edge({1, "a2"}, {3, "b1"});
    host.position.members = {1};

    IdSource ids(10);
    Match m;
    m.node_map[1] = 1;
    auto [out, rec] = apply_match(host, rule_named(rf, "splice"), m, ids);
    CHECK(out.graph.nodes.size() == 2);
    CHECK(out.graph.neighbor_of(PortRef{2, "b1"}) == PortRef{3, "b1"});
    CHECK(validate(out.graph).empty());
}

TEST_CASE("wire with one free side just frees the other partner") {
    RuleFile rf = toy_rules();
    LocatedGraph host;
    host.graph.signature = rf.signature;
    host.graph.add_node(1, "A");
    host.graph.add_node(2, "B");
    host.graph.add_edge({1, "a1"}, {2, "b1"});  // a2 free
    host.position.members = {1};

    IdSource ids(10);
    Match m;
    m.node_map[1] = 1;
    auto [out, rec] = apply_match(host, rule_named(rf, "splice"), m, ids);
    CHECK(out.graph.edges.empty());
    CHECK(validate(out.graph).empty());
}

TEST_CASE("fan-out onto a connected external port is an error") {
    RuleFile rf = toy_rules();
    LocatedGraph host;
    host.graph.signature = rf.signature;
    host.graph.add_node(1, "A");
    host.graph.add_node(2, "B");
    host.graph.add_edge({1, "a1"}, {2, "b1"});
    host.position.members = {1};

    IdSource ids(10);
    Match m;
    m.node_map[1] = 1;
    CHECK_THROWS_AS(apply_match(host, rule_named(rf, "fanout"), m, ids), RuleApplicationError);

    // with the port free, the fan-out entry is vacuous and the rule applies
    LocatedGraph free_host;
    free_host.graph.signature = rf.signature;
    free_host.graph.add_node(1, "A");
    free_host.position.members = {1};
    IdSource ids2(10);
    auto [out, rec] = apply_match(free_host, rule_named(rf, "fanout"), m, ids2);
    CHECK(out.graph.nodes.size() == 2);
}

TEST_CASE("rewrite_once fails without mutation and applies a unique match") {
    RuleFile rf = toy_rules();
    LocatedGraph host;
    host.graph.signature = rf.signature;
    host.graph.add_node(1, "B");
    host.position.members = {1};

    Rng rng(1);
    IdSource ids(10);
    auto out = rewrite_once(host, rule_named(rf, "drop"), rng, ids);
    CHECK(out.outcome == Outcome::Fail);
    CHECK(out.graph == host);

    host.graph.add_node(2, "A");
    host.position.members.insert(2);
    auto out2 = rewrite_once(host, rule_named(rf, "drop"), rng, ids);
    CHECK(out2.outcome == Outcome::Id);
    CHECK(out2.records.size() == 1);
    CHECK(out2.draws.empty());  // single match, no draw
}

TEST_CASE("rewrite_once picks uniformly among symmetric matches") {
    RuleFile rf = toy_rules();
    LocatedGraph host;
    host.graph.signature = rf.signature;
    host.graph.add_node(1, "A");
    host.graph.add_node(2, "A");
    host.position.members = {1, 2};
    const Rule& drop = rule_named(rf, "drop");

    // seeded determinism
    {
        Rng r1(77), r2(77);
        IdSource i1(10), i2(10);
        auto a = rewrite_once(host, drop, r1, i1);
        auto b = rewrite_once(host, drop, r2, i2);
        CHECK(a.records.front().deleted == b.records.front().deleted);
    }
    // frequency over 10k seeded trials: 0.5 +- 0.02
    int first = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        Rng rng(1000 + t);
        IdSource ids(10);
        auto out = rewrite_once(host, drop, rng, ids);
        if (out.records.front().deleted == std::vector<NodeId>{1}) ++first;
    }
    double freq = static_cast<double>(first) / trials;
    CHECK(freq > 0.48);
    CHECK(freq < 0.52);
}

TEST_CASE("apply_parallel All wants disjoint tuples") {
    RuleFile rf = toy_rules();
    const Rule& drop = rule_named(rf, "drop");
    const Rule& identity = rule_named(rf, "identity");

    LocatedGraph host;
    host.graph.signature = rf.signature;
    host.graph.add_node(1, "A");
    host.graph.add_node(2, "A");
    host.position.members = {1, 2};

    Rng rng(5);
    IdSource ids(10);
    SUBCASE("disjoint redexes rewrite together in one step") {
        auto out = apply_parallel(host, {&drop, &identity}, ParMode::All, rng, ids);
        CHECK(out.outcome == Outcome::Id);
        CHECK(out.records.size() == 2);
        CHECK(out.graph.graph.nodes.size() == 1);
    }
    SUBCASE("All fails when only one side is applicable") {
        LocatedGraph one;
        one.graph.signature = rf.signature;
        one.graph.add_node(1, "A");
        one.position.members = {1};
        auto out = apply_parallel(one, {&drop, &identity}, ParMode::All, rng, ids);
        CHECK(out.outcome == Outcome::Fail);
        CHECK(out.graph == one);
    }
    SUBCASE("AtLeastOne applies the left side when not disjointly possible") {
        LocatedGraph one;
        one.graph.signature = rf.signature;
        one.graph.add_node(1, "A");
        one.position.members = {1};
        auto out = apply_parallel(one, {&drop, &identity}, ParMode::AtLeastOne, rng, ids);
        CHECK(out.outcome == Outcome::Id);
        REQUIRE(out.records.size() == 1);
        CHECK(out.records.front().rule_name == "drop");
        CHECK(!out.notes.empty());
    }
}

TEST_CASE("apply_multi packs disjoint matches greedily") {
    RuleFile rf = toy_rules();
    const Rule& drop = rule_named(rf, "drop");

    LocatedGraph host;
    host.graph.signature = rf.signature;
    for (NodeId i = 1; i <= 5; ++i) {
        host.graph.add_node(i, "A");
        host.position.members.insert(i);
    }
    Rng rng(9);
    IdSource ids(10);

    SUBCASE("max caps the packing") {
        auto out = apply_multi(host, drop, 2, 3, rng, ids);
        CHECK(out.outcome == Outcome::Id);
        CHECK(out.records.size() == 3);
        CHECK(out.graph.graph.nodes.size() == 2);
    }
    SUBCASE("unsatisfied minimum fails untouched") {
        LocatedGraph one;
        one.graph.signature = rf.signature;
        one.graph.add_node(1, "A");
        one.position.members = {1};
        auto out = apply_multi(one, drop, 2, -1, rng, ids);
        CHECK(out.outcome == Outcome::Fail);
        CHECK(out.graph == one);
    }
    SUBCASE("unbounded maximum takes a maximal packing") {
        auto out = apply_multi(host, drop, 0, -1, rng, ids);
        CHECK(out.outcome == Outcome::Id);
        CHECK(out.records.size() == 5);  // disjoint single-node matches: all fire
        CHECK(out.graph.graph.nodes.empty());
    }
    SUBCASE("negative minimum is treated as zero") {
        LocatedGraph none;
        none.graph.signature = rf.signature;
        none.graph.add_node(1, "B");
        none.position.members = {1};
        auto out = apply_multi(none, drop, -1, -1, rng, ids);
        CHECK(out.outcome == Outcome::Id);
        CHECK(out.records.empty());
    }
}

TEST_CASE("position update follows P' = (P minus image) union m_image") {
    RuleFile rf = toy_rules();
    LocatedGraph host;
    host.graph.signature = rf.signature;
    host.graph.add_node(1, "A");
    host.graph.add_node(2, "A");
    host.graph.add_node(3, "B");
    host.position.members = {1, 3};

    IdSource ids(10);
    Match m;
    m.node_map[1] = 1;
    auto [out, rec] = apply_match(host, rule_named(rf, "identity"), m, ids);
    Position expect = position_minus(rec.p_before, Position{{1}});
    for (NodeId x : rec.m_image) expect.members.insert(x);
    CHECK(out.position == expect);
}

TEST_CASE("boundary edges are conserved or black-holed, never invented") {
    // identity carries every boundary edge across; drop deletes them all
    RuleFile rf = toy_rules();
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        LocatedGraph host;
        host.graph.signature = rf.signature;
        int n = 2 + static_cast<int>(rng() % 5);
        for (NodeId i = 1; i <= n; ++i) {
            host.graph.add_node(i, rng() % 2 ? "A" : "B");
            host.position.members.insert(i);
        }
        auto fp = free_ports(host.graph);
        std::shuffle(fp.begin(), fp.end(), rng);
        while (fp.size() >= 2) {
            PortRef a = fp.back(); fp.pop_back();
            PortRef b = fp.back(); fp.pop_back();
            if (rng() % 2) host.graph.add_edge(a, b);
        }
        NodeId target = 0;
        for (const auto& node : host.graph.nodes)
            if (node.name == "A") target = node.id;
        if (target == 0) continue;

        std::size_t touching = 0;  // boundary edges plus self-edges on the target
        for (const auto& e : host.graph.edges)
            if (e.touches(target)) ++touching;

        Match m;
        m.node_map[1] = target;
        IdSource ids(100);
        auto [kept, rec1] = apply_match(host, rule_named(rf, "identity"), m, ids);
        CHECK(kept.graph.edges.size() == host.graph.edges.size());
        auto [gone, rec2] = apply_match(host, rule_named(rf, "drop"), m, ids);
        CHECK(gone.graph.edges.size() == host.graph.edges.size() - touching);
        CHECK(validate(kept.graph).empty());
        CHECK(validate(gone.graph).empty());
    }
}
