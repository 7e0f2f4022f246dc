#include "pg/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "pg/engine.hpp"
#include "pg/errors.hpp"
#include "pg/export.hpp"
#include "pg/graph_io.hpp"
#include "pg/inet.hpp"
#include "pg/strategy_parse.hpp"

namespace pg {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw EngineError("cannot read file: " + path);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

}  // namespace

int run(const RunRequest& req, std::ostream& err) {
    LocatedGraph host;
    EngineConfig cfg;
    cfg.seed = req.seed;
    cfg.max_engine_steps = req.max_steps;
    StratPtr strategy;

    try {
        host = parse_graph(read_file(req.graph_path));

        PSignature combined = host.graph.signature;
        std::vector<AgentDecl> agents;
        std::vector<Rule> all_rules;
        for (const auto& path : req.rule_paths) {
            RuleFile rf = parse_rules(read_file(path));
            auto conflicts = combined.merge(rf.signature);
            for (const auto& c : conflicts) err << path << ": " << c << "\n";
            if (!conflicts.empty()) return 2;
            load_rule_file(cfg, rf);
            agents.insert(agents.end(), rf.agents.begin(), rf.agents.end());
            all_rules.insert(all_rules.end(), rf.rules.begin(), rf.rules.end());
        }

        auto report = validate(host);
        for (const auto& v : report) err << req.graph_path << ": " << v << "\n";
        if (!report.empty()) return 2;

        if (!agents.empty()) {
            INetRuleSet rs;
            rs.signature = combined;
            rs.declarations = agents;
            // Only rules over declared agents are subject to the
            // interaction-net constraints.
            std::set<std::string> symbols;
            for (const auto& a : agents) symbols.insert(a.symbol);
            for (const auto& r : all_rules) {
                bool all_declared = !r.lhs.nodes.empty();
                for (const auto& n : r.lhs.nodes)
                    if (!symbols.count(n.name)) all_declared = false;
                if (all_declared) rs.rules.push_back(r);
            }
            auto inet_report = validate_inet(rs);
            for (const auto& v : inet_report) err << "interaction-net check: " << v << "\n";
            if (!inet_report.empty()) return 2;
        }

        std::string text = req.strategy_text;
        if (text.empty() && !req.strategy_path.empty()) text = read_file(req.strategy_path);
        if (text.empty()) {
            if (req.validate_only) return 0;
            err << "no strategy given (use --strategy or --strategy-file)\n";
            return 2;
        }
        strategy = parse_strategy(text, cfg.rule_names());
        if (req.validate_only) return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const EngineError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    EvalResult result;
    try {
        result = eval_strategy(strategy, host, cfg);
    } catch (const StepBudgetExhausted& e) {
        err << "nontermination: " << e.what() << "\n";
        return 3;
    } catch (const EngineError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (!req.out_path.empty()) {
            std::ofstream f(req.out_path);
            if (!f) throw EngineError("cannot write file: " + req.out_path);
            f << print_graph(result.graph);
        }
        if (!req.trace_path.empty()) {
            std::ofstream f(req.trace_path);
            if (!f) throw EngineError("cannot write file: " + req.trace_path);
            f << print_trace(result.trace);
        }
        if (!req.export_dir.empty()) export_snapshots(result.trace, host, cfg, req.export_dir);
    } catch (const EngineError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    return result.outcome == Outcome::Id ? 0 : 1;
}

}  // namespace pg
