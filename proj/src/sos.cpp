#include "gp/sos.hpp"

#include "gp/canonical.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gp {

namespace {

// body ++ rest[from..]
CommandSeq concat(const CommandSeq& body, const CommandSeq& rest, std::size_t from) {
    CommandSeq out;
    out.reserve(body.size() + rest.size() - from);
    out.insert(out.end(), body.begin(), body.end());
    out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(from),
               rest.end());
    return out;
}

bool digraph_has_cycle(const std::vector<std::vector<int>>& adj) {
    std::vector<int> indeg(adj.size(), 0);
    for (const auto& succ : adj)
        for (int t : succ)
            ++indeg[t];
    std::deque<int> q;
    for (std::size_t i = 0; i < adj.size(); ++i)
        if (indeg[i] == 0)
            q.push_back(static_cast<int>(i));
    std::size_t removed = 0;
    while (!q.empty()) {
        int c = q.front();
        q.pop_front();
        ++removed;
        for (int t : adj[c])
            if (--indeg[t] == 0)
                q.push_back(t);
    }
    return removed != adj.size();
}

} // namespace

CommandPtr Engine::lower_derived(const CommandPtr& c) {
    if (std::holds_alternative<Command::Skip>(c->node)) {
        if (!skip_call_) {
            Command n;
            n.node = Command::RuleSetCall{{kSkipSchemaName}, true};
            n.pos = c->pos;
            skip_call_ = make_command(std::move(n));
        }
        return skip_call_;
    }
    if (std::holds_alternative<Command::Fail>(c->node)) {
        if (!fail_call_) {
            Command n;
            n.node = Command::RuleSetCall{{}, true};
            n.pos = c->pos;
            fail_call_ = make_command(std::move(n));
        }
        return fail_call_;
    }
    if (auto* it = std::get_if<Command::IfThen>(&c->node)) {
        auto hit = lower_cache_.find(c.get());
        if (hit != lower_cache_.end())
            return hit->second;
        if (!skip_cmd_) {
            Command sk;
            sk.node = Command::Skip{};
            sk.pos = c->pos;
            skip_cmd_ = make_command(std::move(sk));
        }
        Command n;
        n.node = Command::IfThenElse{it->cond, it->then_branch, {skip_cmd_}};
        n.pos = c->pos;
        CommandPtr low = make_command(std::move(n));
        lower_cache_.emplace(c.get(), low);
        return low;
    }
    return c;
}

std::vector<const CompiledSchema*>
Engine::resolve_rules(const Command::RuleSetCall& call) {
    std::vector<int> idx;
    idx.reserve(call.rules.size());
    for (const std::string& name : call.rules) {
        auto it = prog_.schema_index.find(name);
        if (it == prog_.schema_index.end())
            throw std::logic_error("call of unknown schema '" + name + "'");
        idx.push_back(it->second);
    }
    // set semantics, deterministic order = declaration order
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    std::vector<const CompiledSchema*> out;
    out.reserve(idx.size());
    for (int i : idx)
        out.push_back(&prog_.schemata[static_cast<std::size_t>(i)]);
    return out;
}

void Engine::record_diags(const std::vector<std::string>& diags) {
    for (const std::string& d : diags)
        ++diagnostics_[d];
}

StepResult Engine::step(const Configuration& cfg, Meter& meter) {
    StepResult out;
    const CommandSeq& rest = cfg.rest;
    const CommandPtr& head = rest.front();
    bool tail = rest.size() > 1;

    // Derived commands lower by one explicit micro-step.
    if (std::holds_alternative<Command::Skip>(head->node) ||
        std::holds_alternative<Command::Fail>(head->node) ||
        std::holds_alternative<Command::IfThen>(head->node)) {
        const char* tag = std::holds_alternative<Command::Skip>(head->node)
                              ? "[Skip]"
                          : std::holds_alternative<Command::Fail>(head->node)
                              ? "[Fail]"
                              : "[If3]";
        CommandSeq nrest;
        nrest.reserve(rest.size());
        nrest.push_back(lower_derived(head));
        nrest.insert(nrest.end(), rest.begin() + 1, rest.end());
        Successor s;
        s.cfg = Configuration::running(std::move(nrest), cfg.graph);
        s.info.rule = tag;
        s.info.note = "lowered";
        rules_fired_.insert(tag);
        out.successors.push_back(std::move(s));
        return out;
    }

    if (auto* call = std::get_if<Command::RuleSetCall>(&head->node)) {
        std::vector<std::string> diags;
        std::vector<Derivation> ders =
            derive_all(resolve_rules(*call), cfg.graph, &diags);
        record_diags(diags);
        if (ders.empty()) {
            Successor s;
            s.cfg = Configuration::failed();
            s.info.rule = "[Call2]";
            s.info.note = "no rule applicable";
            rules_fired_.insert("[Call2]");
            if (tail)
                rules_fired_.insert("[Seq3]");
            out.successors.push_back(std::move(s));
            return out;
        }
        std::vector<const Graph*> graphs;
        graphs.reserve(ders.size());
        for (const Derivation& d : ders)
            graphs.push_back(&d.result);
        std::vector<std::string> keys = batch_canonical_keys(graphs);
        std::set<std::string> seen;
        for (std::size_t i = 0; i < ders.size(); ++i) {
            if (!seen.insert(keys[i]).second)
                continue; // same result up to isomorphism
            Derivation& d = ders[i];
            Successor s;
            if (tail)
                s.cfg = Configuration::running(
                    CommandSeq(rest.begin() + 1, rest.end()), std::move(d.result));
            else
                s.cfg = Configuration::done(std::move(d.result));
            s.info.rule = "[Call1]";
            s.info.schema = d.schema->name;
            s.info.match = d.match.summary();
            out.successors.push_back(std::move(s));
        }
        rules_fired_.insert("[Call1]");
        if (tail)
            rules_fired_.insert("[Seq2]");
        return out;
    }

    if (auto* ite = std::get_if<Command::IfThenElse>(&head->node)) {
        Meter fresh(budget_);
        Meter& m = mode_ == Mode::Sampled ? meter : fresh;
        CondOutcome c = evaluate_condition_program(ite->cond, cfg.graph, m);
        if (c.kind == CondOutcome::Kind::Succeeds) {
            Successor s;
            // then-branch runs on the graph the conditional started from
            s.cfg = Configuration::running(concat(ite->then_branch, rest, 1),
                                           cfg.graph);
            s.info.rule = "[If1]";
            s.info.note = "condition succeeded";
            rules_fired_.insert("[If1]");
            if (tail)
                rules_fired_.insert("[Seq1]");
            out.successors.push_back(std::move(s));
            return out;
        }
        if (c.kind == CondOutcome::Kind::FinitelyFails) {
            Successor s;
            s.cfg = Configuration::running(concat(ite->else_branch, rest, 1),
                                           cfg.graph);
            s.info.rule = "[If2]";
            s.info.note = "condition finitely fails";
            rules_fired_.insert("[If2]");
            if (tail)
                rules_fired_.insert("[Seq1]");
            out.successors.push_back(std::move(s));
            return out;
        }
        out.stuck = true;
        out.stuck_budget = c.reason == CondOutcome::Reason::BudgetExhausted;
        out.stuck_reason =
            out.stuck_budget
                ? "condition evaluation exhausted the budget"
                : "condition can diverge or get stuck; neither branch applies";
        return out;
    }

    if (auto* bang = std::get_if<Command::Bang>(&head->node)) {
        Meter fresh(budget_);
        Meter& m = mode_ == Mode::Sampled ? meter : fresh;
        ExploreOutcome body = explore(bang->body, cfg.graph, m, false);
        if (!body.results.empty()) {
            for (std::size_t i = 0; i < body.results.size(); ++i) {
                Successor s;
                // the loop continues on each body result; rest is unchanged
                s.cfg = Configuration::running(rest, body.results[i]);
                s.info.rule = "[Alap1]";
                s.info.note = "body result " + std::to_string(i + 1) + "/" +
                              std::to_string(body.results.size());
                out.successors.push_back(std::move(s));
            }
            rules_fired_.insert("[Alap1]");
            if (tail)
                rules_fired_.insert("[Seq1]");
            out.complete = body.complete;
            return out;
        }
        if (body.complete && !body.saw_stuck && !body.has_cycle) {
            // every body run ends in fail: the loop terminates here
            Successor s;
            if (tail)
                s.cfg = Configuration::running(
                    CommandSeq(rest.begin() + 1, rest.end()), cfg.graph);
            else
                s.cfg = Configuration::done(cfg.graph);
            s.info.rule = "[Alap2]";
            s.info.note = "body finitely fails";
            rules_fired_.insert("[Alap2]");
            if (tail)
                rules_fired_.insert("[Seq2]");
            out.successors.push_back(std::move(s));
            return out;
        }
        out.stuck = true;
        out.stuck_budget = !body.complete;
        out.stuck_reason =
            out.stuck_budget
                ? "loop body exploration exhausted the budget"
                : "loop body can diverge or get stuck without producing a result";
        return out;
    }

    // MacroCall: cannot occur after expansion
    out.stuck = true;
    out.stuck_reason = "internal: unexpanded macro call";
    return out;
}

CondOutcome Engine::evaluate_condition_program(const CommandSeq& c, const Graph& g,
                                               Meter& meter) {
    ExploreOutcome o = explore(c, g, meter, true);
    CondOutcome out;
    if (!o.results.empty()) {
        out.kind = CondOutcome::Kind::Succeeds;
        out.witness = o.results.front();
        return out;
    }
    if (o.complete && !o.saw_stuck && !o.has_cycle) {
        out.kind = CondOutcome::Kind::FinitelyFails;
        return out;
    }
    out.kind = CondOutcome::Kind::Unknown;
    out.reason = o.complete ? CondOutcome::Reason::DivergenceSuspected
                            : CondOutcome::Reason::BudgetExhausted;
    return out;
}

ExploreOutcome Engine::explore(const CommandSeq& start, const Graph& g,
                               Meter& meter, bool stop_at_first_result) {
    CacheKey cache_key;
    bool use_cache = mode_ == Mode::Exhaustive;
    if (use_cache) {
        std::vector<const Command*> rp;
        rp.reserve(start.size());
        for (const CommandPtr& c : start)
            rp.push_back(c.get());
        cache_key = CacheKey(std::move(rp), canonical_key(g), stop_at_first_result);
        auto hit = explore_cache_.find(cache_key);
        if (hit != explore_cache_.end())
            return hit->second;
    }

    ExploreOutcome out;

    struct State {
        Configuration cfg;
        std::uint64_t depth;
    };
    std::vector<State> states;
    std::map<std::pair<std::vector<const Command*>, std::string>, int> visited;
    std::vector<std::vector<int>> adj;
    std::deque<int> frontier;
    std::set<std::string> result_seen;
    bool stopped_early = false;
    bool frontier_cut = false;

    auto intern = [&](Configuration cfg, std::uint64_t depth) {
        std::vector<const Command*> rp;
        rp.reserve(cfg.rest.size());
        for (const CommandPtr& c : cfg.rest)
            rp.push_back(c.get());
        auto vkey = std::make_pair(std::move(rp), canonical_key(cfg.graph));
        auto it = visited.find(vkey);
        if (it != visited.end())
            return std::make_pair(it->second, false);
        int idx = static_cast<int>(states.size());
        visited.emplace(std::move(vkey), idx);
        states.push_back(State{std::move(cfg), depth});
        adj.emplace_back();
        return std::make_pair(idx, true);
    };

    frontier.push_back(intern(Configuration::running(start, g), 0).first);

    while (!frontier.empty() && !stopped_early) {
        int cur = frontier.front();
        frontier.pop_front();
        if (states[static_cast<std::size_t>(cur)].depth >=
            budget_.max_steps_per_path) {
            frontier_cut = true;
            continue;
        }
        if (!meter.charge()) {
            frontier_cut = true;
            break;
        }
        StepResult sr = step(states[static_cast<std::size_t>(cur)].cfg, meter);
        if (sr.stuck) {
            if (sr.stuck_budget)
                out.budget_hit = true;
            else
                out.saw_stuck = true;
            continue;
        }
        if (!sr.complete)
            out.budget_hit = true;
        std::uint64_t depth = states[static_cast<std::size_t>(cur)].depth;
        for (Successor& s : sr.successors) {
            if (s.cfg.kind == Configuration::Kind::Done) {
                std::string key = canonical_key(s.cfg.graph);
                if (result_seen.insert(key).second) {
                    if (out.results.size() >= budget_.max_results) {
                        out.truncated_results = true;
                    } else {
                        out.results.push_back(std::move(s.cfg.graph));
                        out.result_keys.push_back(std::move(key));
                        if (stop_at_first_result) {
                            stopped_early = true;
                            break;
                        }
                    }
                }
            } else if (s.cfg.kind == Configuration::Kind::Failed) {
                out.saw_fail = true;
            } else {
                auto [idx, fresh] = intern(std::move(s.cfg), depth + 1);
                adj[static_cast<std::size_t>(cur)].push_back(idx);
                if (fresh)
                    frontier.push_back(idx);
            }
        }
    }

    if (frontier_cut || out.truncated_results)
        out.budget_hit = true;
    // A cycle among explored configurations is a genuine infinite run even
    // if the exploration was cut short elsewhere.
    out.has_cycle = digraph_has_cycle(adj);
    out.complete = !out.budget_hit && !stopped_early;
    out.configurations = states.size();

    if (use_cache)
        explore_cache_.emplace(std::move(cache_key), out);
    return out;
}

} // namespace gp
