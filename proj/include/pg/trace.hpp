#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pg/rewrite.hpp"

namespace pg {

// One engine step. Atomic steps collapse a whole subtree into one step for
// printing/export; the children stay available for replay.
struct TraceStep {
    enum class Kind { Rule, Parallel, Multi, Position, Note, Atomic };

    Kind kind = Kind::Note;
    std::string label;  // rule name, position expression, or note text
    std::vector<RewriteRecord> records;
    Position p_before;
    Position p_after;
    std::vector<std::uint64_t> draws;
    std::vector<std::string> notes;
    std::vector<TraceStep> children;  // Atomic only

    bool changes_graph() const {
        return kind == Kind::Rule || kind == Kind::Parallel || kind == Kind::Multi ||
               kind == Kind::Position || kind == Kind::Atomic;
    }
};

struct DerivationTrace {
    std::vector<TraceStep> steps;
};

const char* to_string(TraceStep::Kind k);

// One record per step, stable field order; atomic subtrees print as a single
// collapsed record.
std::string print_trace(const DerivationTrace& trace);

}  // namespace pg
