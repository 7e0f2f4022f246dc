#include "pg/export.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pg/errors.hpp"
#include "pg/matching.hpp"

namespace pg {
namespace {

// Applies one recorded step to g (same mechanics as replay).
void apply_step(const TraceStep& st, LocatedGraph& g, const EngineConfig& cfg) {
    if (st.kind == TraceStep::Kind::Note) return;
    if (st.kind == TraceStep::Kind::Atomic) {
        for (const auto& c : st.children) apply_step(c, g, cfg);
        return;
    }
    if (st.kind == TraceStep::Kind::Position) {
        g.position = st.p_after;
        return;
    }
    for (const auto& rec : st.records) {
        auto it = cfg.rules.find(rec.rule_name);
        if (it == cfg.rules.end())
            throw EngineError("export: unknown rule '" + rec.rule_name + "'");
        IdSource ids(g.graph.max_node_id() + 1);
        ids.prime(rec.created);
        auto [next, unused] = apply_match(g, it->second, rec.match, ids);
        g = std::move(next);
    }
    g.position = st.p_after;
}

}  // namespace

std::string to_dot(const LocatedGraph& lg) {
    std::ostringstream out;
    out << "graph portgraph {\n";
    out << "  node [shape=ellipse];\n";
    for (const auto& n : lg.graph.nodes) {
        out << "  n" << n.id << " [label=\"" << n.name << "#" << n.id;
        for (const auto& p : n.ports)
            if (p.state) out << "\\n" << p.name << "=" << *p.state;
        out << "\"";
        if (lg.position.contains(n.id)) out << ", peripheries=2, style=bold";
        out << "];\n";
    }
    for (const auto& e : lg.graph.edges) {
        out << "  n" << e.a.node << " -- n" << e.b.node << " [taillabel=\"" << e.a.port
            << "\", headlabel=\"" << e.b.port << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::size_t export_snapshots(const DerivationTrace& trace, const LocatedGraph& initial,
                             const EngineConfig& cfg, const std::string& outdir) {
    namespace fs = std::filesystem;
    fs::create_directories(outdir);

    std::size_t count = 0;
    auto write = [&](const LocatedGraph& g) {
        std::ostringstream name;
        name << "snap_";
        std::string num = std::to_string(count);
        for (std::size_t i = num.size(); i < 4; ++i) name << '0';
        name << num << ".dot";
        std::ofstream f(fs::path(outdir) / name.str());
        if (!f) throw EngineError("export: cannot write to " + outdir);
        f << to_dot(g);
        ++count;
    };

    LocatedGraph g = initial;
    write(g);
    for (const auto& st : trace.steps) {
        apply_step(st, g, cfg);
        write(g);
    }
    return count;
}

}  // namespace pg
