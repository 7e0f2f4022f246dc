#include "pg/trace.hpp"

#include <sstream>

namespace pg {
namespace {

void print_ids(std::ostringstream& out, const std::vector<NodeId>& ids) {
    out << "[";
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
    out << "]";
}

void print_pos(std::ostringstream& out, const Position& p) {
    out << "[";
    bool first = true;
    for (NodeId n : p.members) {
        out << (first ? "" : ",") << n;
        first = false;
    }
    out << "]";
}

void print_record(std::ostringstream& out, const RewriteRecord& rec) {
    out << "rec rule=" << rec.rule_name << " match={";
    bool first = true;
    for (const auto& [l, h] : rec.match.node_map) {
        out << (first ? "" : ",") << l << "->" << h;
        first = false;
    }
    out << "} created=";
    print_ids(out, rec.created);
    out << " deleted=";
    print_ids(out, rec.deleted);
    out << " m=[";
    first = true;
    for (NodeId n : rec.m_image) {
        out << (first ? "" : ",") << n;
        first = false;
    }
    out << "]";
}

std::size_t count_inner(const TraceStep& s) {
    if (s.kind != TraceStep::Kind::Atomic) return 1;
    std::size_t n = 0;
    for (const auto& c : s.children) n += count_inner(c);
    return n;
}

}  // namespace

const char* to_string(TraceStep::Kind k) {
    switch (k) {
    case TraceStep::Kind::Rule: return "rule";
    case TraceStep::Kind::Parallel: return "parallel";
    case TraceStep::Kind::Multi: return "multi";
    case TraceStep::Kind::Position: return "position";
    case TraceStep::Kind::Note: return "note";
    case TraceStep::Kind::Atomic: return "atomic";
    }
    return "?";
}

std::string print_trace(const DerivationTrace& trace) {
    std::ostringstream out;
    std::size_t n = 0;
    for (const auto& s : trace.steps) {
        out << "step " << n++ << " kind=" << to_string(s.kind);
        if (!s.label.empty()) out << " label=" << s.label;
        if (s.kind == TraceStep::Kind::Atomic) out << " inner=" << count_inner(s);
        if (!s.draws.empty()) {
            out << " draws=[";
            for (std::size_t i = 0; i < s.draws.size(); ++i) out << (i ? "," : "") << s.draws[i];
            out << "]";
        }
        out << " p_before=";
        print_pos(out, s.p_before);
        out << " p_after=";
        print_pos(out, s.p_after);
        out << "\n";
        for (const auto& rec : s.records) {
            out << "  ";
            print_record(out, rec);
            out << "\n";
        }
        for (const auto& note : s.notes) out << "  note " << note << "\n";
    }
    return out.str();
}

}  // namespace pg
