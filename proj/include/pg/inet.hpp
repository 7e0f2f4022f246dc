#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pg/graph.hpp"
#include "pg/rule.hpp"

namespace pg {

struct StrategyExpr;

struct AgentDecl {
    std::string symbol;
    int arity = 0;          // number of auxiliary ports
    std::string principal;  // principal port name
};

struct INetRuleSet {
    PSignature signature;  // port sets of the declared symbols
    std::vector<AgentDecl> declarations;
    std::vector<Rule> rules;
};

// Interaction-net discipline: every declaration has arity+1 ports with the
// principal among them; every rule LHS is exactly two declared agents joined
// on their principal ports; RHS free-port count (wire ends included) equals
// LHS free-port count; at most one rule per unordered agent pair.
std::vector<std::string> validate_inet(const INetRuleSet& rs);

// Symbol -> principal port, for NextSuc.
std::map<std::string, std::string> principal_designation(const INetRuleSet& rs);

// Interface-normal-form strategy over the given rule names:
//   repeat*(((r1 orelse r2 orelse ...); property(interface, graph))
//           orelse (nextsuc; pnotempty))
// Throws EngineError on an empty rule list.
std::shared_ptr<const StrategyExpr> inf_strategy(const std::vector<std::string>& rule_names);

// Isomorphism up to node-id renaming (names, port states and port-level
// adjacency preserved). Degree-refinement first, brute force within classes.
bool graphs_isomorphic(const PortGraph& a, const PortGraph& b);

}  // namespace pg
