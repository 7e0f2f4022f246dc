#include <fstream>
#include <random>
#include <sstream>

#include "pg/corpus.hpp"
#include "pg/errors.hpp"
#include "pg/graph_io.hpp"
#include "pg/matching.hpp"
#include "pg/strategy_parse.hpp"

namespace pg::corpus {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw EngineError("cannot read file: " + path);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long count_nodes_named(const PortGraph& g, const std::string& name) {
    long long n = 0;
    for (const auto& node : g.nodes)
        if (node.name == name) ++n;
    return n;
}

// Replays one step onto g, mirroring the engine's committed effects.
void audit_apply(const TraceStep& st, LocatedGraph& g, const EngineConfig& cfg) {
    if (st.kind == TraceStep::Kind::Note) return;
    if (st.kind == TraceStep::Kind::Atomic) {
        for (const auto& c : st.children) audit_apply(c, g, cfg);
        return;
    }
    if (st.kind == TraceStep::Kind::Position) {
        g.position = st.p_after;
        return;
    }
    for (const auto& rec : st.records) {
        IdSource ids(g.graph.max_node_id() + 1);
        ids.prime(rec.created);
        auto [next, unused] = apply_match(g, cfg.rules.at(rec.rule_name), rec.match, ids);
        g = std::move(next);
    }
    g.position = st.p_after;
}

}  // namespace

EngineConfig load_case_config(const CorpusCase& c, std::uint64_t seed,
                              const std::string& root_dir) {
    EngineConfig cfg;
    cfg.seed = seed;
    RuleFile rf = parse_rules(read_file(root_dir + "/" + c.rule_file));
    load_rule_file(cfg, rf);
    return cfg;
}

std::vector<CorpusCase> load_manifest(const std::string& manifest_path,
                                      const std::string& root_dir) {
    std::ifstream f(root_dir + "/" + manifest_path);
    if (!f) throw EngineError("cannot read manifest: " + manifest_path);
    std::vector<CorpusCase> out;
    CorpusCase cur;
    bool open = false;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(f, raw)) {
        ++lineno;
        std::string line = strip(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        std::istringstream in(line);
        std::string key;
        in >> key;
        if (key == "case") {
            if (open) throw ParseError("nested case", lineno);
            in >> cur.name;
            open = true;
        } else if (!open) {
            throw ParseError("content outside a case block", lineno);
        } else if (key == "graph") {
            in >> cur.graph_file;
        } else if (key == "rules") {
            in >> cur.rule_file;
        } else if (key == "strategy") {
            in >> cur.strategy_file;
        } else if (key == "seed") {
            in >> cur.seed;
        } else if (key == "expect") {
            std::string prop;
            while (in >> prop) cur.expected.push_back(prop);
        } else if (key == "end") {
            out.push_back(std::move(cur));
            cur = CorpusCase{};
            open = false;
        } else {
            throw ParseError("unknown manifest key '" + key + "'", lineno);
        }
    }
    if (open) throw ParseError("unterminated case block", lineno);
    return out;
}

namespace {

using Props = std::vector<PropertyResult>;

void check(Props& props, const std::string& name, bool ok, const std::string& detail) {
    props.push_back({name, ok, detail});
}

EvalResult run_text(const std::string& strategy_text, const LocatedGraph& host,
                    EngineConfig& cfg) {
    StratPtr s = parse_strategy(strategy_text, cfg.rule_names());
    return eval_strategy(s, host, cfg);
}

void run_arithmetic(const CorpusCase& c, std::uint64_t seed, const std::string& root,
                    Props& props) {
    EngineConfig cfg = load_case_config(c, seed, root);
    std::string strategy = read_file(root + "/" + c.strategy_file);
    std::mt19937_64 rng(seed);
    auto pick = [&](long long z) {
        int r = static_cast<int>(rng() % 4);
        return NumberSpec{z, static_cast<int>(std::max(z, 0LL)) + r,
                          static_cast<int>(std::max(-z, 0LL)) + r};
    };
    auto rand_z = [&]() { return static_cast<long long>(rng() % 19) - 9; };

    {
        auto res = run_text("repeat*(reduce)", encode_number(1, 4, 3), cfg);
        auto [p, q] = decode_parts(res.graph.graph);
        check(props, "reduce-4m3",
              res.outcome == Outcome::Id && p - q == 1 && std::min(p, q) == 0,
              "p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
    bool add_ok = true, neg_ok = true, sub_ok = true;
    std::string detail_add, detail_neg, detail_sub;
    for (int i = 0; i < 20; ++i) {
        long long z1 = rand_z(), z2 = rand_z();
        auto res = run_text(strategy, addition_net(pick(z1), pick(z2)), cfg);
        long long got = decode_number(res.graph.graph);
        if (res.outcome != Outcome::Id || got != z1 + z2) {
            add_ok = false;
            detail_add = std::to_string(z1) + "+" + std::to_string(z2) + " decoded to " +
                         std::to_string(got);
        }
        auto resn = run_text(strategy, negation_net(pick(z1)), cfg);
        long long gotn = decode_number(resn.graph.graph);
        if (resn.outcome != Outcome::Id || gotn != -z1) {
            neg_ok = false;
            detail_neg = "-(" + std::to_string(z1) + ") decoded to " + std::to_string(gotn);
        }
        auto ress = run_text(strategy, subtraction_net(pick(z1), pick(z2)), cfg);
        long long gots = decode_number(ress.graph.graph);
        if (ress.outcome != Outcome::Id || gots != z1 - z2) {
            sub_ok = false;
            detail_sub = std::to_string(z1) + "-" + std::to_string(z2) + " decoded to " +
                         std::to_string(gots);
        }
    }
    check(props, "addition-oracle", add_ok, detail_add);
    check(props, "negation-oracle", neg_ok, detail_neg);
    check(props, "subtraction-oracle", sub_ok, detail_sub);
}

void run_vonkoch(const CorpusCase& c, std::uint64_t seed, const std::string& root, Props& props) {
    for (int m : {3, 6, 12}) {
        EngineConfig cfg = load_case_config(c, seed, root);
        auto res = run_text(vonkoch_strategy_text(m), vonkoch_triangle(), cfg);
        bool count_ok = static_cast<int>(res.graph.graph.nodes.size()) == 3 + 3 * m;
        bool pos_ok = res.graph.position.size() == 1;
        for (const auto& st : res.trace.steps)
            if (st.changes_graph() && st.p_after.size() != 1) pos_ok = false;
        check(props, "count-3plus3m-m" + std::to_string(m),
              res.outcome == Outcome::Id && count_ok,
              "nodes=" + std::to_string(res.graph.graph.nodes.size()));
        check(props, "singleton-pos-m" + std::to_string(m), pos_ok, "");
    }
    {
        // Control: with M disabled P empties after one step and the loop
        // stalls, so the balanced count must fail.
        EngineConfig cfg = load_case_config(c, seed, root);
        auto res = run_text(vonkoch_strategy_text(3, false), vonkoch_triangle(), cfg);
        bool diverged = static_cast<int>(res.graph.graph.nodes.size()) != 3 + 3 * 3;
        check(props, "control-no-m-breaks-count", diverged,
              "nodes=" + std::to_string(res.graph.graph.nodes.size()));
    }
}

void run_pacman(const CorpusCase& c, std::uint64_t seed, const std::string& root, Props& props) {
    EngineConfig cfg = load_case_config(c, seed, root);
    cfg.max_engine_steps = 200000;
    LocatedGraph board = parse_graph(read_file(root + "/" + c.graph_file));
    std::string strategy = read_file(root + "/" + c.strategy_file);

    bool terminated = true;
    EvalResult res;
    try {
        res = run_text(strategy, board, cfg);
    } catch (const StepBudgetExhausted&) {
        terminated = false;
    }
    check(props, "terminates", terminated && res.outcome == Outcome::Id, "");
    if (!terminated) return;
    check(props, "pacman-eaten", count_nodes_named(res.graph.graph, "End") == 1, "");

    // Trace audit: after every Property(Y,G) step P is exactly the
    // ghost/pac-man/End nodes, and each ghost acts at most once per loop
    // iteration (keyed on the ghost-refocus step, since pacAI's flee rules may
    // rebuild a ghost under a fresh id before the ghost loop starts).
    std::set<std::string> ghost_rules;
    for (const auto& r : pacman_ghost_rule_names()) ghost_rules.insert(r);
    LocatedGraph g = board;
    bool p_ok = true, ghost_ok = true;
    std::set<NodeId> iteration_ghosts;
    std::set<NodeId> acted;
    for (const auto& st : res.trace.steps) {
        if (st.kind == TraceStep::Kind::Rule && ghost_rules.count(st.label)) {
            for (NodeId d : st.records.front().deleted) {
                const Node* n = g.graph.find_node(d);
                if (n && n->name == "ghost") {
                    if (!iteration_ghosts.count(d) || acted.count(d)) ghost_ok = false;
                    acted.insert(d);
                }
            }
        }
        audit_apply(st, g, cfg);
        if (st.kind != TraceStep::Kind::Position) continue;
        bool mentions_ghost = st.label.find("name==\"ghost\"") != std::string::npos;
        bool mentions_pac = st.label.find("name==\"pac-man\"") != std::string::npos;
        if (mentions_ghost && mentions_pac) {
            std::set<NodeId> expect;
            for (const auto& n : g.graph.nodes)
                if (n.name == "ghost" || n.name == "pac-man" || n.name == "End")
                    expect.insert(n.id);
            if (st.p_after.members != expect) p_ok = false;
        } else if (mentions_ghost) {
            iteration_ghosts.clear();
            for (const auto& n : g.graph.nodes)
                if (n.name == "ghost") iteration_ghosts.insert(n.id);
            acted.clear();
        }
    }
    check(props, "loop-position-exact", p_ok, "");
    check(props, "ghost-at-most-one-action", ghost_ok, "");
}

void run_labyrinth(const CorpusCase& c, std::uint64_t seed, const std::string& root,
                   Props& props) {
    {
        EngineConfig cfg = load_case_config(c, seed, root);
        cfg.max_engine_steps = 2000000;
        Maze maze = make_maze(seed, 6, 6, 2, true);
        auto res = run_text(read_file(root + "/" + c.strategy_file), labyrinth_graph(maze), cfg);
        long long path_count = count_nodes_named(res.graph.graph, "PATH");
        int expect = bfs_path_cells(maze);
        check(props, "path-equals-bfs",
              res.outcome == Outcome::Id && path_count == expect,
              "path=" + std::to_string(path_count) + " bfs=" + std::to_string(expect));
    }
    {
        EngineConfig cfg = load_case_config(c, seed, root);
        cfg.max_engine_steps = 50000;
        Maze maze = make_maze(seed + 1, 5, 5, 0, false);
        bool exhausted = false;
        try {
            run_text(read_file(root + "/" + c.strategy_file), labyrinth_graph(maze), cfg);
        } catch (const StepBudgetExhausted&) {
            exhausted = true;
        }
        check(props, "exitless-exhausts-budget", exhausted, "");
    }
}

}  // namespace

CaseReport run_case(const CorpusCase& c, std::uint64_t seed, const std::string& root_dir) {
    CaseReport report;
    report.case_name = c.name;
    if (c.name == "arithmetic") run_arithmetic(c, seed, root_dir, report.properties);
    else if (c.name == "vonkoch") run_vonkoch(c, seed, root_dir, report.properties);
    else if (c.name == "pacman") run_pacman(c, seed, root_dir, report.properties);
    else if (c.name == "labyrinth") run_labyrinth(c, seed, root_dir, report.properties);
    else throw EngineError("unknown corpus case '" + c.name + "'");

    // Every expected property id must have been produced.
    for (const auto& want : c.expected) {
        bool found = false;
        for (const auto& p : report.properties)
            if (p.name == want || p.name.rfind(want, 0) == 0) found = true;
        if (!found) report.properties.push_back({want, false, "property was not exercised"});
    }
    return report;
}

}  // namespace pg::corpus
