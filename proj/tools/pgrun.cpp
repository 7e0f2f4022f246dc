#include <iostream>

#include <CLI11.hpp>

#include "pg/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"port-graph rewriting engine with a positional strategy language"};

    pg::RunRequest req;
    app.add_option("--graph", req.graph_path, "input graph file")->required();
    app.add_option("--rules", req.rule_paths, "rule file (repeatable)");
    app.add_option("--strategy", req.strategy_text, "inline strategy expression");
    app.add_option("--strategy-file", req.strategy_path, "strategy expression file");
    app.add_option("--seed", req.seed, "rng seed (default 0)");
    app.add_option("--max-steps", req.max_steps, "engine step budget (default 1000000)");
    app.add_option("--out", req.out_path, "write the final graph here");
    app.add_option("--trace", req.trace_path, "write the derivation trace here");
    app.add_option("--export-dir", req.export_dir, "write per-step DOT snapshots here");
    app.add_flag("--validate-only", req.validate_only, "load and validate inputs, then exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return pg::run(req, std::cerr);
}
