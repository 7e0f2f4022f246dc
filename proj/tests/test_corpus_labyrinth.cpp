#include <doctest.h>

#include <fstream>
#include <sstream>

#include "pg/corpus.hpp"
#include "pg/errors.hpp"
#include "pg/strategy_parse.hpp"
#include "test_helpers.hpp"

using namespace pg;
using namespace pg::corpus;

namespace {

std::string slurp(const std::string& rel) {
    std::ifstream f(pgtest::repo_path(rel));
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

EngineConfig lab_config(std::uint64_t seed, long long budget = 2'000'000) {
    EngineConfig cfg;
    cfg.seed = seed;
    cfg.max_engine_steps = budget;
    load_rule_file(cfg, parse_rules(slurp("corpus/labyrinth/rules.txt")));
    return cfg;
}

int count_named(const PortGraph& g, const std::string& name) {
    int n = 0;
    for (const auto& node : g.nodes)
        if (node.name == name) ++n;
    return n;
}

}  // namespace

TEST_CASE("strategy file parses to the assembled text") {
    EngineConfig cfg = lab_config(0);
    auto from_file = parse_strategy(slurp("corpus/labyrinth/strategy.txt"), cfg.rule_names());
    auto assembled = parse_strategy(labyrinth_strategy_text(), cfg.rule_names());
    CHECK(to_string(*from_file) == to_string(*assembled));
}

TEST_CASE("maze generator produces connected mazes with reachable exits") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Maze m = make_maze(seed, 5, 4, 1, true);
        CHECK(m.exit_cell >= 0);
        CHECK(m.exit_cell != m.start);
        CHECK(bfs_path_cells(m) >= 2);
        auto lg = labyrinth_graph(m);
        CHECK(validate(lg).empty());
        CHECK(count_named(lg.graph, "Labyrinth") == m.cells());
        CHECK(count_named(lg.graph, "ExitMark") == 1);
        CHECK(count_named(lg.graph, "Pather") == 1);
        CHECK(lg.position.size() == 1);
    }
}

TEST_CASE("a straight corridor draws its full length") {
    // 1x5 corridor, exit at the far end: every cell lies on the path.
    Maze m;
    m.width = 5;
    m.height = 1;
    m.start = 0;
    m.exit_cell = 4;
    for (int i = 0; i + 1 < 5; ++i) m.passages.push_back({i, i + 1});
    REQUIRE(bfs_path_cells(m) == 5);

    EngineConfig cfg = lab_config(3);
    auto s = parse_strategy(labyrinth_strategy_text(), cfg.rule_names());
    auto res = eval_strategy(s, labyrinth_graph(m), cfg);
    CHECK(res.outcome == Outcome::Id);
    CHECK(count_named(res.graph.graph, "PATH") == 5);
    CHECK(count_named(res.graph.graph, "Drawer") == 0);
    CHECK(count_named(res.graph.graph, "Pather") == 0);
    CHECK(validate(res.graph.graph).empty());
}

TEST_CASE("start on the exit cell draws a single PATH cell") {
    Maze m;
    m.width = 2;
    m.height = 1;
    m.start = 0;
    m.exit_cell = 0;
    m.passages.push_back({0, 1});
    EngineConfig cfg = lab_config(1);
    auto res = eval_strategy(parse_strategy(labyrinth_strategy_text(), cfg.rule_names()),
                             labyrinth_graph(m), cfg);
    CHECK(res.outcome == Outcome::Id);
    CHECK(count_named(res.graph.graph, "PATH") == 1);
}

TEST_CASE("generated mazes draw exactly the BFS shortest path") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 11ULL}) {
        Maze m = make_maze(seed, 5, 5, 2, true);
        int expect = bfs_path_cells(m);
        REQUIRE(expect > 0);
        EngineConfig cfg = lab_config(seed);
        auto s = parse_strategy(labyrinth_strategy_text(), cfg.rule_names());
        auto res = eval_strategy(s, labyrinth_graph(m), cfg);
        CAPTURE(seed);
        CHECK(res.outcome == Outcome::Id);
        CHECK(count_named(res.graph.graph, "PATH") == expect);
        CHECK(validate(res.graph.graph).empty());
    }
}

TEST_CASE("split rules all carry an empty M and moves leave P") {
    EngineConfig cfg = lab_config(0);
    int splits = 0;
    for (const auto& [name, rule] : cfg.rules) {
        if (name.rfind("split", 0) == 0) {
            CHECK(rule.m_subgraph.empty());
            ++splits;
        }
    }
    CHECK(splits == 15);

    // during step 1, no Pather created by a split sits in P until the
    // property reset restores it
    Maze m = make_maze(5, 4, 4, 1, true);
    auto s = parse_strategy(labyrinth_strategy_text(), cfg.rule_names());
    auto res = eval_strategy(s, labyrinth_graph(m), cfg);
    REQUIRE(res.outcome == Outcome::Id);
    for (const auto& st : res.trace.steps) {
        if (st.kind != TraceStep::Kind::Rule || st.label.rfind("split", 0) != 0) continue;
        for (const auto& rec : st.records)
            for (NodeId created : rec.created)
                CHECK(!st.p_after.contains(created));
    }
}

TEST_CASE("scrambled split order walks the long branch of the crafted maze") {
    Maze m = crafted_branching_maze();
    REQUIRE(bfs_path_cells(m) == 3);

    EngineConfig good = lab_config(2);
    auto res_good = eval_strategy(
        parse_strategy(labyrinth_strategy_text(), good.rule_names()), labyrinth_graph(m), good);
    CHECK(res_good.outcome == Outcome::Id);
    CHECK(count_named(res_good.graph.graph, "PATH") == 3);

    EngineConfig bad = lab_config(2);
    auto res_bad = eval_strategy(
        parse_strategy(labyrinth_scrambled_strategy_text(), bad.rule_names()),
        labyrinth_graph(m), bad);
    CHECK(res_bad.outcome == Outcome::Id);
    CHECK(count_named(res_bad.graph.graph, "PATH") == 7);  // longer than BFS
}

TEST_CASE("an exitless maze exhausts the step budget") {
    Maze m = make_maze(9, 4, 4, 0, false);
    EngineConfig cfg = lab_config(9, 50000);
    auto s = parse_strategy(labyrinth_strategy_text(), cfg.rule_names());
    CHECK_THROWS_AS(eval_strategy(s, labyrinth_graph(m), cfg), StepBudgetExhausted);
}

TEST_CASE("cp2 duplicates a direction list and eps erases one") {
    EngineConfig cfg = lab_config(0);
    const std::vector<std::string> dirs = {"N", "E", "S", "W"};
    std::mt19937_64 rng(17);

    for (int k = 0; k <= 6; ++k) {
        // cp2 fed with a k-list; outputs dangle free
        LocatedGraph lg;
        lg.graph.signature = labyrinth_graph(crafted_branching_maze()).graph.signature;
        lg.graph.add_node(1, "cp2");
        std::vector<std::string> want;
        NodeId prev = 1;
        for (int i = 0; i < k; ++i) {
            std::string d = dirs[rng() % 4];
            want.push_back(d);
            NodeId id = 2 + i;
            lg.graph.add_node(id, d);
            std::string prev_port = std::string(1, static_cast<char>(std::tolower(d[0]))) + "prev";
            if (i == 0)
                lg.graph.add_edge({1, "c2arg"}, {id, prev_port});
            else {
                const Node* pn = lg.graph.find_node(prev);
                std::string next_port =
                    std::string(1, static_cast<char>(std::tolower(pn->name[0]))) + "next";
                lg.graph.add_edge({prev, next_port}, {id, prev_port});
            }
            prev = id;
        }
        for (const auto& n : lg.graph.nodes) lg.position.members.insert(n.id);

        auto s = parse_strategy(
            "repeat*(cp2N orelse cp2E orelse cp2S orelse cp2W orelse cp2end)", cfg.rule_names());
        auto res = eval_strategy(s, lg, cfg);
        REQUIRE(res.outcome == Outcome::Id);
        CHECK(count_named(res.graph.graph, "cp2") == 0);

        // structural oracle: exactly two floating lists, each spelling `want`
        std::vector<std::vector<std::string>> lists;
        for (const auto& n : res.graph.graph.nodes) {
            std::string prev_port =
                std::string(1, static_cast<char>(std::tolower(n.name[0]))) + "prev";
            if (res.graph.graph.edge_at(PortRef{n.id, prev_port})) continue;  // not a head
            std::vector<std::string> seq;
            const Node* cur = &n;
            while (cur) {
                seq.push_back(cur->name);
                std::string next_port =
                    std::string(1, static_cast<char>(std::tolower(cur->name[0]))) + "next";
                auto nb = res.graph.graph.neighbor_of(PortRef{cur->id, next_port});
                cur = nb ? res.graph.graph.find_node(nb->node) : nullptr;
            }
            lists.push_back(std::move(seq));
        }
        if (k == 0) {
            CHECK(res.graph.graph.nodes.empty());
        } else {
            REQUIRE(lists.size() == 2);
            CHECK(lists[0] == want);
            CHECK(lists[1] == want);
        }

        // eps erases the same list completely
        LocatedGraph eg = lg;
        eg.graph.nodes.erase(eg.graph.nodes.begin());  // drop the cp2 (id 1)
        std::vector<Edge> kept;
        for (const auto& e : eg.graph.edges)
            if (!e.touches(1)) kept.push_back(e);
        eg.graph.edges = kept;
        eg.graph.add_node(99, "eps");
        if (k > 0) {
            const Node* head = eg.graph.find_node(2);
            std::string prev_port =
                std::string(1, static_cast<char>(std::tolower(head->name[0]))) + "prev";
            eg.graph.add_edge({99, "earg"}, {2, prev_port});
        }
        eg.position.members.clear();
        for (const auto& n : eg.graph.nodes) eg.position.members.insert(n.id);
        auto es = parse_strategy("repeat*(epsN orelse epsE orelse epsS orelse epsW orelse epsEnd)",
                                 cfg.rule_names());
        auto eres = eval_strategy(es, eg, cfg);
        REQUIRE(eres.outcome == Outcome::Id);
        CHECK(eres.graph.graph.nodes.empty());
    }
}

TEST_CASE("optional cleanup removes stuck Pathers and their lists") {
    Maze m = make_maze(21, 4, 4, 3, true);  // openings make reconnections likely
    EngineConfig cfg = lab_config(21);
    auto s = parse_strategy(labyrinth_strategy_text(), cfg.rule_names());
    auto res = eval_strategy(s, labyrinth_graph(m), cfg);
    REQUIRE(res.outcome == Outcome::Id);
    int path_before = count_named(res.graph.graph, "PATH");

    auto cleanup = parse_strategy(labyrinth_cleanup_strategy_text(), cfg.rule_names());
    auto cleaned = eval_strategy(cleanup, res.graph, cfg);
    CHECK(cleaned.outcome == Outcome::Id);
    CHECK(count_named(cleaned.graph.graph, "Pather") == 0);
    CHECK(count_named(cleaned.graph.graph, "eps") == 0);
    CHECK(count_named(cleaned.graph.graph, "N") == 0);
    CHECK(count_named(cleaned.graph.graph, "E") == 0);
    CHECK(count_named(cleaned.graph.graph, "S") == 0);
    CHECK(count_named(cleaned.graph.graph, "W") == 0);
    CHECK(count_named(cleaned.graph.graph, "PATH") == path_before);
    CHECK(validate(cleaned.graph.graph).empty());
}

TEST_CASE("a full labyrinth run replays to the same final graph") {
    Maze m = make_maze(7, 4, 4, 1, true);
    EngineConfig cfg = lab_config(7);
    auto s = parse_strategy(labyrinth_strategy_text(), cfg.rule_names());
    LocatedGraph initial = labyrinth_graph(m);
    auto res = eval_strategy(s, initial, cfg);
    REQUIRE(res.outcome == Outcome::Id);
    CHECK(replay(res.trace, initial, cfg) == res.graph);
}

TEST_CASE("manifest-driven labyrinth case passes") {
    auto cases = load_manifest("corpus/manifest.txt", PG_SOURCE_DIR);
    for (const auto& c : cases) {
        if (c.name != "labyrinth") continue;
        auto report = run_case(c, c.seed, PG_SOURCE_DIR);
        for (const auto& p : report.properties) {
            CAPTURE(p.name);
            CAPTURE(p.detail);
            CHECK(p.pass);
        }
    }
}

TEST_CASE("cp3 triplicates a direction list") {
    EngineConfig cfg = lab_config(0);
    const std::vector<std::string> dirs = {"N", "E", "S", "W"};
    std::mt19937_64 rng(29);
    for (int k = 1; k <= 6; ++k) {
        LocatedGraph lg;
        lg.graph.signature = labyrinth_graph(crafted_branching_maze()).graph.signature;
        lg.graph.add_node(1, "cp3");
        std::vector<std::string> want;
        NodeId prev = 1;
        for (int i = 0; i < k; ++i) {
            std::string d = dirs[rng() % 4];
            want.push_back(d);
            NodeId id = 2 + i;
            lg.graph.add_node(id, d);
            std::string prev_port = std::string(1, static_cast<char>(std::tolower(d[0]))) + "prev";
            if (i == 0)
                lg.graph.add_edge({1, "c3arg"}, {id, prev_port});
            else {
                const Node* pn = lg.graph.find_node(prev);
                std::string next_port =
                    std::string(1, static_cast<char>(std::tolower(pn->name[0]))) + "next";
                lg.graph.add_edge({prev, next_port}, {id, prev_port});
            }
            prev = id;
        }
        for (const auto& n : lg.graph.nodes) lg.position.members.insert(n.id);

        auto s = parse_strategy(
            "repeat*(cp3N orelse cp3E orelse cp3S orelse cp3W orelse cp3end)", cfg.rule_names());
        auto res = eval_strategy(s, lg, cfg);
        REQUIRE(res.outcome == Outcome::Id);
        CHECK(count_named(res.graph.graph, "cp3") == 0);

        std::vector<std::vector<std::string>> lists;
        for (const auto& n : res.graph.graph.nodes) {
            std::string prev_port =
                std::string(1, static_cast<char>(std::tolower(n.name[0]))) + "prev";
            if (res.graph.graph.edge_at(PortRef{n.id, prev_port})) continue;
            std::vector<std::string> seq;
            const Node* cur = &n;
            while (cur) {
                seq.push_back(cur->name);
                std::string next_port =
                    std::string(1, static_cast<char>(std::tolower(cur->name[0]))) + "next";
                auto nb = res.graph.graph.neighbor_of(PortRef{cur->id, next_port});
                cur = nb ? res.graph.graph.find_node(nb->node) : nullptr;
            }
            lists.push_back(std::move(seq));
        }
        REQUIRE(lists.size() == 3);
        for (const auto& l : lists) CHECK(l == want);
    }
}
