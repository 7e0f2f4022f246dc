#include "pg/engine.hpp"

#include <algorithm>

#include "pg/errors.hpp"
#include "pg/matching.hpp"

namespace pg {

void load_rule_file(EngineConfig& cfg, const RuleFile& rf) {
    for (const auto& r : rf.rules)
        if (!cfg.rules.emplace(r.name, r).second)
            throw EngineError("duplicate rule name '" + r.name + "'");
    for (const auto& a : rf.agents) {
        auto [it, fresh] = cfg.designation.emplace(a.symbol, a.principal);
        if (!fresh && it->second != a.principal)
            throw EngineError("conflicting principal port for agent '" + a.symbol + "'");
    }
}

Position eval_position(const PositionExpr& t, const LocatedGraph& host, Rng& rng,
                       const EngineConfig& cfg, std::vector<std::uint64_t>* draws,
                       std::vector<std::string>* notes) {
    return std::visit(
        [&](const auto& v) -> Position {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PosCrt>) {
                return host.position;
            } else if constexpr (std::is_same_v<T, PosAllSuc>) {
                return successors(host.graph, host.position);
            } else if constexpr (std::is_same_v<T, PosOneSuc>) {
                Position all = successors(host.graph, host.position);
                if (all.empty()) return all;
                std::vector<NodeId> flat(all.members.begin(), all.members.end());
                std::size_t pick = 0;
                if (flat.size() > 1) {
                    pick = std::uniform_int_distribution<std::size_t>(0, flat.size() - 1)(rng);
                    if (draws) draws->push_back(pick);
                }
                Position out;
                out.members.insert(flat[pick]);
                return out;
            } else if constexpr (std::is_same_v<T, PosNextSuc>) {
                return designated_successors(host.graph, host.position, cfg.designation);
            } else if constexpr (std::is_same_v<T, PosSet>) {
                Position out;
                for (NodeId id : v.ids) {
                    if (host.graph.has_node(id))
                        out.members.insert(id);
                    else if (notes)
                        notes->push_back("setpos: dropped unknown id " + std::to_string(id));
                }
                return out;
            } else if constexpr (std::is_same_v<T, PosProperty>) {
                // Predicates are evaluated against the full graph; the scope
                // only restricts the candidate nodes.
                Position out;
                for (const auto& n : host.graph.nodes) {
                    if (v.scope == PropertyScope::CurrentPos && !host.position.contains(n.id))
                        continue;
                    if (eval_pred(*v.pred, host.graph, n)) out.members.insert(n.id);
                }
                return out;
            } else if constexpr (std::is_same_v<T, PosUnion>) {
                Position a = eval_position(*v.lhs, host, rng, cfg, draws, notes);
                Position b = eval_position(*v.rhs, host, rng, cfg, draws, notes);
                return position_union(a, b);
            } else if constexpr (std::is_same_v<T, PosInter>) {
                Position a = eval_position(*v.lhs, host, rng, cfg, draws, notes);
                Position b = eval_position(*v.rhs, host, rng, cfg, draws, notes);
                return position_inter(a, b);
            } else if constexpr (std::is_same_v<T, PosCompl>) {
                Position inner = eval_position(*v.inner, host, rng, cfg, draws, notes);
                Position out;
                for (const auto& n : host.graph.nodes)
                    if (!inner.contains(n.id)) out.members.insert(n.id);
                return out;
            } else {
                Position a = eval_position(*v.lhs, host, rng, cfg, draws, notes);
                Position b = eval_position(*v.rhs, host, rng, cfg, draws, notes);
                return position_minus(a, b);
            }
        },
        t.node);
}

namespace {

class Engine {
public:
    Engine(const EngineConfig& cfg, const LocatedGraph& initial)
        : cfg_(cfg), rng_(cfg.seed), budget_(cfg.max_engine_steps),
          ids_(initial.graph.max_node_id() + 1) {}

    Outcome run(const StrategyExpr& s, LocatedGraph& g, std::vector<TraceStep>& steps) {
        spend();
        return std::visit([&](const auto& v) { return eval(v, g, steps); }, s.node);
    }

    Rng& rng() { return rng_; }

private:
    const EngineConfig& cfg_;
    Rng rng_;
    long long budget_;
    IdSource ids_;

    void spend() {
        if (--budget_ < 0) throw StepBudgetExhausted(cfg_.max_engine_steps);
    }

    const Rule& rule_of(const std::string& name) const {
        auto it = cfg_.rules.find(name);
        if (it == cfg_.rules.end()) throw EngineError("unknown rule '" + name + "'");
        return it->second;
    }

    // Conditions and AMB probes run against a copy; bare applicability checks
    // skip the copy since matching is pure and their effects are discarded.
    Outcome probe(const StrategyExpr& s, const LocatedGraph& g) {
        if (const auto* app = std::get_if<StratApp>(&s.node)) {
            if (std::holds_alternative<AppId>(app->expr->node)) { spend(); return Outcome::Id; }
            if (std::holds_alternative<AppFail>(app->expr->node)) { spend(); return Outcome::Fail; }
            if (const auto* r = std::get_if<AppRule>(&app->expr->node)) {
                spend();
                return match_exists(rule_of(r->rule), g) ? Outcome::Id : Outcome::Fail;
            }
        }
        if (std::holds_alternative<StratPnotEmpty>(s.node)) {
            spend();
            return g.position.empty() ? Outcome::Fail : Outcome::Id;
        }
        if (std::holds_alternative<StratPos>(s.node)) {
            // Position transformations always succeed and the probe's change
            // is discarded with the copy.
            spend();
            return Outcome::Id;
        }
        LocatedGraph copy = g;
        IdSource ids_backup = ids_;
        std::vector<TraceStep> discarded;
        Outcome out = run(s, copy, discarded);
        ids_ = ids_backup;
        return out;
    }

    void commit_rewrite(TraceStep::Kind kind, const std::string& label, RewriteOutcome&& rw,
                        LocatedGraph& g, std::vector<TraceStep>& steps) {
        TraceStep st;
        st.kind = kind;
        st.label = label;
        st.p_before = g.position;
        st.records = std::move(rw.records);
        st.draws = std::move(rw.draws);
        st.notes = std::move(rw.notes);
        g = std::move(rw.graph);
        st.p_after = g.position;
        for (NodeId n : g.position.members)
            if (!g.graph.has_node(n))
                throw EngineError("position soundness violated after " + label);
        steps.push_back(std::move(st));
    }

    Outcome eval(const StratPos& v, LocatedGraph& g, std::vector<TraceStep>& steps) {
        TraceStep st;
        st.kind = TraceStep::Kind::Position;
        st.label = to_string(*v.expr);
        st.p_before = g.position;
        g.position = eval_position(*v.expr, g, rng_, cfg_, &st.draws, &st.notes);
        st.p_after = g.position;
        steps.push_back(std::move(st));
        return Outcome::Id;
    }

    Outcome eval(const StratApp& v, LocatedGraph& g, std::vector<TraceStep>& steps) {
        return eval_app(*v.expr, g, steps);
    }

    Outcome eval_app(const ApplicationExpr& a, LocatedGraph& g, std::vector<TraceStep>& steps) {
        return std::visit(
            [&](const auto& v) -> Outcome {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, AppId>) {
                    return Outcome::Id;
                } else if constexpr (std::is_same_v<T, AppFail>) {
                    return Outcome::Fail;
                } else if constexpr (std::is_same_v<T, AppRule>) {
                    RewriteOutcome rw = rewrite_once(g, rule_of(v.rule), rng_, ids_);
                    if (rw.outcome == Outcome::Fail) return Outcome::Fail;
                    commit_rewrite(TraceStep::Kind::Rule, v.rule, std::move(rw), g, steps);
                    return Outcome::Id;
                } else if constexpr (std::is_same_v<T, AppPar> ||
                                     std::is_same_v<T, AppInterleave>) {
                    constexpr bool all = std::is_same_v<T, AppPar>;
                    std::vector<const Rule*> rs = {&rule_of(rule_name_of(*v.lhs)),
                                                   &rule_of(rule_name_of(*v.rhs))};
                    RewriteOutcome rw = apply_parallel(
                        g, rs, all ? ParMode::All : ParMode::AtLeastOne, rng_, ids_);
                    if (rw.outcome == Outcome::Fail) return Outcome::Fail;
                    commit_rewrite(TraceStep::Kind::Parallel, to_string(a), std::move(rw), g,
                                   steps);
                    return Outcome::Id;
                } else {
                    RewriteOutcome rw = apply_multi(g, rule_of(rule_name_of(*v.inner)), v.min,
                                                    v.max, rng_, ids_);
                    if (rw.outcome == Outcome::Fail) return Outcome::Fail;
                    commit_rewrite(TraceStep::Kind::Multi, to_string(a), std::move(rw), g, steps);
                    return Outcome::Id;
                }
            },
            a.node);
    }

    static const std::string& rule_name_of(const ApplicationExpr& a) {
        const auto* r = std::get_if<AppRule>(&a.node);
        if (!r) throw EngineError("par/ipar/multi operands must be rule applications");
        return r->rule;
    }

    Outcome eval(const StratSeq& v, LocatedGraph& g, std::vector<TraceStep>& steps) {
        if (run(*v.first, g, steps) == Outcome::Fail) return Outcome::Fail;
        return run(*v.second, g, steps);
    }

    Outcome eval(const StratIf& v, LocatedGraph& g, std::vector<TraceStep>& steps) {
        Outcome c = probe(*v.cond, g);
        return run(c == Outcome::Id ? *v.then_branch : *v.else_branch, g, steps);
    }

    Outcome eval(const StratWhile& v, LocatedGraph& g, std::vector<TraceStep>& steps) {
        LocatedGraph entry = g;
        std::vector<TraceStep> loop_steps;
        int counter = 0;
        while (true) {
            if (v.max >= 0 && counter >= v.max) break;
            if (probe(*v.cond, g) == Outcome::Fail) break;
            if (run(*v.body, g, loop_steps) == Outcome::Fail) break;
            ++counter;
        }
        if (v.min >= 0 && counter < v.min) {
            // Fail purity: a failing while leaves its input untouched.
            g = std::move(entry);
            TraceStep note;
            note.kind = TraceStep::Kind::Note;
            note.label = "while: min unmet after " + std::to_string(counter) +
                         " iterations, rolled back";
            note.p_before = g.position;
            note.p_after = g.position;
            steps.push_back(std::move(note));
            return Outcome::Fail;
        }
        for (auto& st : loop_steps) steps.push_back(std::move(st));
        return Outcome::Id;
    }

    Outcome eval(const StratAmb& v, LocatedGraph& g, std::vector<TraceStep>& steps) {
        for (const StratPtr& side : {v.lhs, v.rhs}) {
            Rng snapshot = rng_;
            if (probe(*side, g) == Outcome::Id) {
                // Same draws as the probe, so the commit reproduces it.
                rng_ = snapshot;
                return run(*side, g, steps);
            }
        }
        return Outcome::Fail;
    }

    Outcome eval(const StratPPick& v, LocatedGraph& g, std::vector<TraceStep>& steps) {
        std::size_t pick = 0;
        if (v.options.size() > 1)
            pick = std::uniform_int_distribution<std::size_t>(0, v.options.size() - 1)(rng_);
        TraceStep note;
        note.kind = TraceStep::Kind::Note;
        note.label = "ppick chose option " + std::to_string(pick);
        note.draws.push_back(pick);
        note.p_before = g.position;
        note.p_after = g.position;
        steps.push_back(std::move(note));
        return run(*v.options[pick], g, steps);
    }

    Outcome eval(const StratPnotEmpty&, LocatedGraph& g, std::vector<TraceStep>&) {
        return g.position.empty() ? Outcome::Fail : Outcome::Id;
    }

    Outcome eval(const StratAtomic& v, LocatedGraph& g, std::vector<TraceStep>& steps) {
        TraceStep st;
        st.kind = TraceStep::Kind::Atomic;
        st.label = "atomic";
        st.p_before = g.position;
        Outcome out = run(*v.inner, g, st.children);
        st.p_after = g.position;
        steps.push_back(std::move(st));
        return out;
    }

    const EngineConfig& config() const { return cfg_; }
};

void replay_steps(const std::vector<TraceStep>& steps, LocatedGraph& g, const EngineConfig& cfg,
                  std::size_t& n) {
    for (const auto& st : steps) {
        switch (st.kind) {
        case TraceStep::Kind::Note:
            break;
        case TraceStep::Kind::Atomic:
            replay_steps(st.children, g, cfg, n);
            break;
        case TraceStep::Kind::Position:
            if (!(g.position == st.p_before))
                throw ReplayDivergence("step " + std::to_string(n) +
                                       ": position before does not match");
            g.position = st.p_after;
            break;
        default: {
            for (const auto& rec : st.records) {
                auto it = cfg.rules.find(rec.rule_name);
                if (it == cfg.rules.end())
                    throw ReplayDivergence("step " + std::to_string(n) + ": unknown rule '" +
                                           rec.rule_name + "'");
                if (!match_is_valid(it->second, g, rec.match))
                    throw ReplayDivergence("step " + std::to_string(n) +
                                           ": recorded match no longer valid for rule '" +
                                           rec.rule_name + "'");
                IdSource ids(g.graph.max_node_id() + 1);
                ids.prime(rec.created);
                auto [next, new_rec] = apply_match(g, it->second, rec.match, ids);
                if (new_rec.created != rec.created)
                    throw ReplayDivergence("step " + std::to_string(n) +
                                           ": created ids diverged");
                g = std::move(next);
            }
            if (!(g.position == st.p_after))
                throw ReplayDivergence("step " + std::to_string(n) +
                                       ": position after does not match");
            break;
        }
        }
        ++n;
    }
}

}  // namespace

EvalResult eval_strategy(const StratPtr& strategy, const LocatedGraph& host,
                         const EngineConfig& cfg) {
    if (!strategy) throw EngineError("null strategy");
    if (cfg.max_engine_steps <= 0) throw EngineError("max_engine_steps must be positive");
    for (NodeId n : host.position.members)
        if (!host.graph.has_node(n))
            throw EngineError("initial position references missing node " + std::to_string(n));

    Engine engine(cfg, host);
    EvalResult result;
    result.graph = host;
    result.outcome = engine.run(*strategy, result.graph, result.trace.steps);
    return result;
}

LocatedGraph replay(const DerivationTrace& trace, const LocatedGraph& initial,
                    const EngineConfig& cfg) {
    LocatedGraph g = initial;
    std::size_t n = 0;
    replay_steps(trace.steps, g, cfg, n);
    return g;
}

}  // namespace pg
