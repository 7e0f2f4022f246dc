#pragma once

#include <string>
#include <vector>

#include "pg/inet.hpp"
#include "pg/rule.hpp"

namespace pg {

// Parsed rule file. Format (line oriented, '#' comments):
//   SIGNATURE
//   <name> : <port>(, <port>)*
//   AGENTS                      (optional interaction-net declarations)
//   <symbol>
//   arity <n>
//   principal <port>
//   RULE <name>
//   LHS
//   NODES
//   <id> : <name> <port-entry>*  (port-entry: port[!|?][=state]; ! connected, ? free)
//   EDGES
//   <id>.<port> -- <id>.<port>
//   RHS
//   ... (same sections; states only, no !/? annotations)
//   INTERFACE
//   <Lid>.<port> -> <id>.<port>(, <id>.<port>)*   (R ids = rewiring, L ids = wire)
//   <Lid>.<port> -> BLACKHOLE
//   M
//   <Rid>(, <Rid>)*
// Within one RULE block, LHS and RHS node ids must be disjoint.
struct RuleFile {
    PSignature signature;
    std::vector<AgentDecl> agents;
    std::vector<Rule> rules;
};

RuleFile parse_rules(const std::string& text);

}  // namespace pg
