#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pg/graph.hpp"

namespace pg {

// ---- Property predicates over nodes ----------------------------------------

struct PropertyPred;
using PredPtr = std::shared_ptr<const PropertyPred>;

struct PredName { std::string value; };                       // name == "..."
struct PredPortState { std::string port; std::string value; } ;  // portstate(p) == "..."
struct PredInterface {};                                      // node has a free port
struct PredAnd { PredPtr lhs, rhs; };
struct PredOr { PredPtr lhs, rhs; };
struct PredNot { PredPtr inner; };

struct PropertyPred {
    std::variant<PredName, PredPortState, PredInterface, PredAnd, PredOr, PredNot> node;
};

bool eval_pred(const PropertyPred& p, const PortGraph& g, const Node& n);
std::string to_string(const PropertyPred& p);
bool pred_equal(const PropertyPred& a, const PropertyPred& b);

// ---- Position transformations ----------------------------------------------

struct PositionExpr;
using PosPtr = std::shared_ptr<const PositionExpr>;

enum class PropertyScope { WholeGraph, CurrentPos };

struct PosCrt {};
struct PosAllSuc {};
struct PosOneSuc {};
struct PosNextSuc {};
struct PosSet { std::vector<NodeId> ids; };
struct PosProperty { PredPtr pred; PropertyScope scope = PropertyScope::WholeGraph; };
struct PosUnion { PosPtr lhs, rhs; };
struct PosInter { PosPtr lhs, rhs; };
struct PosCompl { PosPtr inner; };
struct PosMinus { PosPtr lhs, rhs; };

struct PositionExpr {
    std::variant<PosCrt, PosAllSuc, PosOneSuc, PosNextSuc, PosSet, PosProperty, PosUnion, PosInter,
                 PosCompl, PosMinus>
        node;
};

std::string to_string(const PositionExpr& t);
bool pos_equal(const PositionExpr& a, const PositionExpr& b);

// ---- Rule applications -----------------------------------------------------

struct ApplicationExpr;
using AppPtr = std::shared_ptr<const ApplicationExpr>;

struct AppId {};
struct AppFail {};
struct AppRule { std::string rule; };
struct AppPar { AppPtr lhs, rhs; };         // A || A'
struct AppInterleave { AppPtr lhs, rhs; };  // A ||| A'
struct AppMulti { AppPtr inner; int min = 0; int max = -1; };

struct ApplicationExpr {
    std::variant<AppId, AppFail, AppRule, AppPar, AppInterleave, AppMulti> node;
};

std::string to_string(const ApplicationExpr& a);
bool app_equal(const ApplicationExpr& a, const ApplicationExpr& b);

// ---- Strategies --------------------------------------------------------------

struct StrategyExpr;
using StratPtr = std::shared_ptr<const StrategyExpr>;

struct StratPos { PosPtr expr; };
struct StratApp { AppPtr expr; };
struct StratSeq { StratPtr first, second; };
struct StratAmb { StratPtr lhs, rhs; };  // S + S'
struct StratPPick { std::vector<StratPtr> options; };
struct StratWhile { StratPtr cond, body; int min = -1; int max = -1; };
struct StratIf { StratPtr cond, then_branch, else_branch; };
struct StratPnotEmpty {};
struct StratAtomic { StratPtr inner; };

struct StrategyExpr {
    std::variant<StratPos, StratApp, StratSeq, StratAmb, StratPPick, StratWhile, StratIf,
                 StratPnotEmpty, StratAtomic>
        node;
};

std::string to_string(const StrategyExpr& s);
bool strat_equal(const StrategyExpr& a, const StrategyExpr& b);

// Convenience constructors used by the parser, sugar expansion and builders.
StratPtr make_strat(StrategyExpr e);
StratPtr strat_id();
StratPtr strat_fail();
StratPtr strat_rule(const std::string& name);
StratPtr strat_seq(StratPtr a, StratPtr b);
StratPtr strat_if(StratPtr c, StratPtr t, StratPtr e);
StratPtr strat_while(StratPtr c, StratPtr b, int mn, int mx);
StratPtr strat_orelse(StratPtr a, StratPtr b);   // if(a) then(a) else(b)
StratPtr strat_try(StratPtr s);                  // if(s) then(s) else(id)
StratPtr strat_not(StratPtr s);                  // if(s) then(fail) else(id)
StratPtr strat_repeat_star(StratPtr s);          // while(s) do(s) min(-1) max(-1)
StratPtr strat_repeat_plus(StratPtr s);          // while(s) do(s) min(1) max(-1)

}  // namespace pg
