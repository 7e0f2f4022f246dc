#include "pg/strategy.hpp"

#include <sstream>

namespace pg {

// ---- predicates ---------------------------------------------------------

bool eval_pred(const PropertyPred& p, const PortGraph& g, const Node& n) {
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PredName>) {
                return n.name == v.value;
            } else if constexpr (std::is_same_v<T, PredPortState>) {
                const Port* port = n.find_port(v.port);
                return port && port->state && *port->state == v.value;
            } else if constexpr (std::is_same_v<T, PredInterface>) {
                for (const auto& port : n.ports)
                    if (!g.edge_at(PortRef{n.id, port.name})) return true;
                return false;
            } else if constexpr (std::is_same_v<T, PredAnd>) {
                return eval_pred(*v.lhs, g, n) && eval_pred(*v.rhs, g, n);
            } else if constexpr (std::is_same_v<T, PredOr>) {
                return eval_pred(*v.lhs, g, n) || eval_pred(*v.rhs, g, n);
            } else {
                return !eval_pred(*v.inner, g, n);
            }
        },
        p.node);
}

std::string to_string(const PropertyPred& p) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PredName>) {
                return "name==\"" + v.value + "\"";
            } else if constexpr (std::is_same_v<T, PredPortState>) {
                return "portstate(" + v.port + ")==\"" + v.value + "\"";
            } else if constexpr (std::is_same_v<T, PredInterface>) {
                return "interface";
            } else if constexpr (std::is_same_v<T, PredAnd>) {
                return "(" + to_string(*v.lhs) + " and " + to_string(*v.rhs) + ")";
            } else if constexpr (std::is_same_v<T, PredOr>) {
                return "(" + to_string(*v.lhs) + " or " + to_string(*v.rhs) + ")";
            } else {
                return "not " + to_string(*v.inner);
            }
        },
        p.node);
}

bool pred_equal(const PropertyPred& a, const PropertyPred& b) {
    return to_string(a) == to_string(b);
}

// ---- position expressions ------------------------------------------------

std::string to_string(const PositionExpr& t) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PosCrt>) {
                return "crtpos";
            } else if constexpr (std::is_same_v<T, PosAllSuc>) {
                return "allsuc";
            } else if constexpr (std::is_same_v<T, PosOneSuc>) {
                return "onesuc";
            } else if constexpr (std::is_same_v<T, PosNextSuc>) {
                return "nextsuc";
            } else if constexpr (std::is_same_v<T, PosSet>) {
                std::ostringstream out;
                out << "setpos(";
                for (std::size_t i = 0; i < v.ids.size(); ++i) out << (i ? "," : "") << v.ids[i];
                out << ")";
                return out.str();
            } else if constexpr (std::is_same_v<T, PosProperty>) {
                return "property(" + to_string(*v.pred) + "," +
                       (v.scope == PropertyScope::WholeGraph ? "graph" : "pos") + ")";
            } else if constexpr (std::is_same_v<T, PosUnion>) {
                return "union(" + to_string(*v.lhs) + "," + to_string(*v.rhs) + ")";
            } else if constexpr (std::is_same_v<T, PosInter>) {
                return "inter(" + to_string(*v.lhs) + "," + to_string(*v.rhs) + ")";
            } else if constexpr (std::is_same_v<T, PosCompl>) {
                return "compl(" + to_string(*v.inner) + ")";
            } else {
                return "minus(" + to_string(*v.lhs) + "," + to_string(*v.rhs) + ")";
            }
        },
        t.node);
}

bool pos_equal(const PositionExpr& a, const PositionExpr& b) {
    return to_string(a) == to_string(b);
}

// ---- applications ----------------------------------------------------------

std::string to_string(const ApplicationExpr& a) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, AppId>) {
                return "id";
            } else if constexpr (std::is_same_v<T, AppFail>) {
                return "fail";
            } else if constexpr (std::is_same_v<T, AppRule>) {
                return v.rule;
            } else if constexpr (std::is_same_v<T, AppPar>) {
                return "par(" + to_string(*v.lhs) + "," + to_string(*v.rhs) + ")";
            } else if constexpr (std::is_same_v<T, AppInterleave>) {
                return "ipar(" + to_string(*v.lhs) + "," + to_string(*v.rhs) + ")";
            } else {
                return "multi(" + to_string(*v.inner) + "," + std::to_string(v.min) + "," +
                       std::to_string(v.max) + ")";
            }
        },
        a.node);
}

bool app_equal(const ApplicationExpr& a, const ApplicationExpr& b) {
    return to_string(a) == to_string(b);
}

// ---- strategies -----------------------------------------------------------

std::string to_string(const StrategyExpr& s) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, StratPos>) {
                return to_string(*v.expr);
            } else if constexpr (std::is_same_v<T, StratApp>) {
                return to_string(*v.expr);
            } else if constexpr (std::is_same_v<T, StratSeq>) {
                return "(" + to_string(*v.first) + "; " + to_string(*v.second) + ")";
            } else if constexpr (std::is_same_v<T, StratAmb>) {
                return "(" + to_string(*v.lhs) + " + " + to_string(*v.rhs) + ")";
            } else if constexpr (std::is_same_v<T, StratPPick>) {
                std::string out = "ppick(";
                for (std::size_t i = 0; i < v.options.size(); ++i)
                    out += (i ? "," : "") + to_string(*v.options[i]);
                return out + ")";
            } else if constexpr (std::is_same_v<T, StratWhile>) {
                return "while(" + to_string(*v.cond) + ")do(" + to_string(*v.body) + ")min(" +
                       std::to_string(v.min) + ")max(" + std::to_string(v.max) + ")";
            } else if constexpr (std::is_same_v<T, StratIf>) {
                return "if(" + to_string(*v.cond) + ")then(" + to_string(*v.then_branch) +
                       ")else(" + to_string(*v.else_branch) + ")";
            } else if constexpr (std::is_same_v<T, StratPnotEmpty>) {
                return "pnotempty";
            } else {
                return "atomic(" + to_string(*v.inner) + ")";
            }
        },
        s.node);
}

bool strat_equal(const StrategyExpr& a, const StrategyExpr& b) {
    return to_string(a) == to_string(b);
}

StratPtr make_strat(StrategyExpr e) { return std::make_shared<const StrategyExpr>(std::move(e)); }

StratPtr strat_id() {
    return make_strat({StratApp{std::make_shared<const ApplicationExpr>(ApplicationExpr{AppId{}})}});
}

StratPtr strat_fail() {
    return make_strat({StratApp{std::make_shared<const ApplicationExpr>(ApplicationExpr{AppFail{}})}});
}

StratPtr strat_rule(const std::string& name) {
    return make_strat(
        {StratApp{std::make_shared<const ApplicationExpr>(ApplicationExpr{AppRule{name}})}});
}

StratPtr strat_seq(StratPtr a, StratPtr b) { return make_strat({StratSeq{a, b}}); }

StratPtr strat_if(StratPtr c, StratPtr t, StratPtr e) { return make_strat({StratIf{c, t, e}}); }

StratPtr strat_while(StratPtr c, StratPtr b, int mn, int mx) {
    return make_strat({StratWhile{c, b, mn, mx}});
}

StratPtr strat_orelse(StratPtr a, StratPtr b) { return strat_if(a, a, b); }

StratPtr strat_try(StratPtr s) { return strat_if(s, s, strat_id()); }

StratPtr strat_not(StratPtr s) { return strat_if(s, strat_fail(), strat_id()); }

StratPtr strat_repeat_star(StratPtr s) { return strat_while(s, s, -1, -1); }

StratPtr strat_repeat_plus(StratPtr s) { return strat_while(s, s, 1, -1); }

}  // namespace pg
