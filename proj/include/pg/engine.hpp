#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pg/rule.hpp"
#include "pg/rule_io.hpp"
#include "pg/strategy.hpp"
#include "pg/trace.hpp"

namespace pg {

struct EngineConfig {
    std::uint64_t seed = 0;
    long long max_engine_steps = 1'000'000;
    std::map<std::string, Rule> rules;
    std::map<std::string, std::string> designation;  // node name -> port, for nextsuc

    std::set<std::string> rule_names() const {
        std::set<std::string> out;
        for (const auto& [k, v] : rules) out.insert(k);
        return out;
    }
};

// Merges a parsed rule file into the config (rules by name, principal-port
// designations from the AGENTS block). Throws EngineError on duplicates.
void load_rule_file(EngineConfig& cfg, const RuleFile& rf);

struct EvalResult {
    Outcome outcome = Outcome::Fail;
    LocatedGraph graph;
    DerivationTrace trace;
};

// Evaluates a position transformation. OneSuc draws from rng; NextSuc uses
// cfg.designation; setpos drops unresolvable ids (noted in `notes`).
Position eval_position(const PositionExpr& t, const LocatedGraph& host, Rng& rng,
                       const EngineConfig& cfg, std::vector<std::uint64_t>* draws = nullptr,
                       std::vector<std::string>* notes = nullptr);

// Runs a strategy to Id or Fail. Every recursive evaluation step decrements a
// global budget of cfg.max_engine_steps; exhaustion throws StepBudgetExhausted.
EvalResult eval_strategy(const StratPtr& strategy, const LocatedGraph& host,
                         const EngineConfig& cfg);

// Re-applies the trace's recorded matches (and fresh ids) to the initial
// graph; returns the reproduced final graph. Throws ReplayDivergence naming
// the first step that no longer fits.
LocatedGraph replay(const DerivationTrace& trace, const LocatedGraph& initial,
                    const EngineConfig& cfg);

}  // namespace pg
