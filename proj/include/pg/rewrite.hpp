#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <vector>

#include "pg/graph.hpp"
#include "pg/matching.hpp"
#include "pg/rule.hpp"

namespace pg {

using Rng = std::mt19937_64;

// Monotone fresh-id supply. A replay primes it with the ids recorded by the
// original run so rewritten nodes come back bit-identical.
class IdSource {
public:
    explicit IdSource(NodeId start = 1) : next_(start) {}

    NodeId fresh() {
        if (!script_.empty()) {
            NodeId id = script_.front();
            script_.pop_front();
            next_ = std::max(next_, id + 1);
            return id;
        }
        return next_++;
    }

    void prime(const std::vector<NodeId>& ids) {
        script_.insert(script_.end(), ids.begin(), ids.end());
    }

private:
    std::deque<NodeId> script_;
    NodeId next_;
};

enum class Outcome { Id, Fail };

struct RewriteRecord {
    std::string rule_name;
    Match match;
    std::vector<NodeId> created;  // fresh ids, in RHS id order
    std::vector<NodeId> deleted;  // matched image, sorted
    std::set<NodeId> m_image;     // fresh ids of the M subgraph
    Position p_before;
    Position p_after;
};

struct RewriteOutcome {
    Outcome outcome = Outcome::Fail;
    LocatedGraph graph;
    std::vector<RewriteRecord> records;
    std::vector<std::uint64_t> draws;  // match/tuple selection draws
    std::vector<std::string> notes;
};

// One-step replacement of the matched image by a fresh copy of rule.rhs.
// Boundary edges are rewired through the rule interface (per-port fan-out to
// several targets is an error when the external edge exists), wire entries
// connect external partners directly (chains through adjacent wires collapse,
// closed chains vanish), and unrouted ports lose their external edges. The
// position becomes (P \ image) + image of M.
std::pair<LocatedGraph, RewriteRecord> apply_match(const LocatedGraph& host, const Rule& rule,
                                                   const Match& m, IdSource& ids);

// Applies one uniformly chosen match, or fails with the host untouched.
RewriteOutcome rewrite_once(const LocatedGraph& host, const Rule& rule, Rng& rng, IdSource& ids);

enum class ParMode { All, AtLeastOne };

// All: one uniformly chosen tuple of pairwise-disjoint matches, all applied in
// one step. AtLeastOne: like All when a disjoint tuple exists; otherwise the
// applicable sides individually (left first when both apply but not
// disjointly); Fail only when neither applies.
RewriteOutcome apply_parallel(const LocatedGraph& host, const std::vector<const Rule*>& rules,
                              ParMode mode, Rng& rng, IdSource& ids);

// Greedy randomized maximal packing of disjoint matches, truncated to n when
// n >= 0; fails (host untouched) when fewer than max(m, 0) were packed.
RewriteOutcome apply_multi(const LocatedGraph& host, const Rule& rule, int m, int n, Rng& rng,
                           IdSource& ids);

}  // namespace pg
