#include "oracle/oracle.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>

// A second interpreter for the transition rules, structured nothing like
// the engine: configurations are explored as a digraph over exact graph
// forms (no canonicalization), loop bodies and conditions are evaluated by
// direct recursion, and divergence is a reachable cycle.

namespace oracle {

namespace {

using gp::CommandSeq;
using gp::CompiledProgram;
using gp::Graph;

struct NCfg {
    enum class Kind { Running, Done, Failed } kind = Kind::Running;
    CommandSeq rest;
    Graph graph;
};

std::string cfg_key(const NCfg& c) {
    switch (c.kind) {
    case NCfg::Kind::Failed:
        return "FAIL";
    case NCfg::Kind::Done:
        return "DONE|" + exact_key(c.graph);
    default:
        return gp::print_seq(c.rest) + "|" + exact_key(c.graph);
    }
}

struct Walker {
    const CompiledProgram& prog;
    long long states_left;
    bool overflow = false;

    explicit Walker(const CompiledProgram& p, long long cap)
        : prog(p), states_left(cap) {}

    // One application of every rule in the set, as successor graphs.
    std::vector<Graph> all_derivations(const std::vector<std::string>& names,
                                       const Graph& g) {
        std::vector<Graph> out;
        std::set<std::string> seen; // set semantics for duplicated names
        for (const std::string& name : names) {
            if (!seen.insert(name).second)
                continue;
            const gp::CompiledSchema* s = prog.find_schema(name);
            if (!s)
                throw std::logic_error("oracle: unknown rule " + name);
            for (const FoundMatch& m : oracle::find_matches(*s, g)) {
                std::optional<Graph> h = oracle::apply(*s, m, g);
                if (h)
                    out.push_back(std::move(*h));
            }
        }
        return out;
    }

    struct StepOut {
        std::vector<NCfg> succ;
        bool stuck = false;
        bool undecided = false; // recursion hit the cap
    };

    static NCfg advance(const CommandSeq& tail, Graph g) {
        if (tail.empty())
            return NCfg{NCfg::Kind::Done, {}, std::move(g)};
        return NCfg{NCfg::Kind::Running, tail, std::move(g)};
    }

    StepOut step(const NCfg& cfg) {
        StepOut out;
        const gp::Command& head = *cfg.rest.front();
        CommandSeq tail(cfg.rest.begin() + 1, cfg.rest.end());

        if (auto* call = std::get_if<gp::cmd::RuleSetCall>(&head.node)) {
            std::vector<Graph> hs = all_derivations(call->rules, cfg.graph);
            if (hs.empty()) {
                out.succ.push_back(NCfg{NCfg::Kind::Failed, {}, {}});
            } else {
                for (Graph& h : hs)
                    out.succ.push_back(advance(tail, std::move(h)));
            }
            return out;
        }
        if (std::holds_alternative<gp::cmd::Skip>(head.node)) {
            out.succ.push_back(advance(tail, cfg.graph));
            return out;
        }
        if (std::holds_alternative<gp::cmd::Fail>(head.node)) {
            out.succ.push_back(NCfg{NCfg::Kind::Failed, {}, {}});
            return out;
        }
        if (auto* bang = std::get_if<gp::cmd::Bang>(&head.node)) {
            RunResult body = explore(bang->body, cfg.graph);
            if (!body.complete) {
                out.undecided = true;
                return out;
            }
            for (const Graph& h : body.graphs)
                out.succ.push_back(NCfg{NCfg::Kind::Running, cfg.rest, h});
            bool finitely_fails = body.graphs.empty() && !body.stuck_observed &&
                                  !body.can_diverge;
            if (finitely_fails)
                out.succ.push_back(advance(tail, cfg.graph));
            if (out.succ.empty())
                out.stuck = true;
            return out;
        }

        // Conditionals; the else-less form gets an implicit skip branch.
        const CommandSeq* cond = nullptr;
        const CommandSeq* then_branch = nullptr;
        CommandSeq else_branch;
        if (auto* ite = std::get_if<gp::cmd::IfThenElse>(&head.node)) {
            cond = &ite->cond;
            then_branch = &ite->then_branch;
            else_branch = ite->else_branch;
        } else if (auto* it = std::get_if<gp::cmd::IfThen>(&head.node)) {
            cond = &it->cond;
            then_branch = &it->then_branch;
            else_branch.push_back(
                gp::make_command(gp::Command{gp::cmd::Skip{}, {}}));
        } else {
            throw std::logic_error("oracle: macro call survived expansion");
        }

        RunResult c = explore(*cond, cfg.graph);
        if (!c.complete) {
            out.undecided = true;
            return out;
        }
        if (!c.graphs.empty()) {
            CommandSeq next(*then_branch);
            next.insert(next.end(), tail.begin(), tail.end());
            out.succ.push_back(NCfg{NCfg::Kind::Running, std::move(next),
                                    cfg.graph}); // the original graph
        } else if (!c.stuck_observed && !c.can_diverge) {
            CommandSeq next(else_branch);
            next.insert(next.end(), tail.begin(), tail.end());
            out.succ.push_back(
                NCfg{NCfg::Kind::Running, std::move(next), cfg.graph});
        } else {
            out.stuck = true;
        }
        return out;
    }

    RunResult explore(const CommandSeq& seq, const Graph& g) {
        RunResult res;
        std::map<std::string, int> index;
        std::vector<NCfg> cfgs;
        std::vector<std::vector<int>> succs;
        std::deque<int> frontier;

        auto intern = [&](NCfg c) {
            std::string key = cfg_key(c);
            auto it = index.find(key);
            if (it != index.end())
                return it->second;
            int id = static_cast<int>(cfgs.size());
            index.emplace(std::move(key), id);
            cfgs.push_back(std::move(c));
            succs.emplace_back();
            frontier.push_back(id);
            return id;
        };

        intern(NCfg{NCfg::Kind::Running, seq, g});
        while (!frontier.empty()) {
            if (--states_left < 0) {
                overflow = true;
                res.complete = false;
                return res;
            }
            int id = frontier.front();
            frontier.pop_front();
            NCfg cfg = cfgs[static_cast<std::size_t>(id)]; // copy: cfgs grows
            switch (cfg.kind) {
            case NCfg::Kind::Done: {
                bool fresh = true;
                for (const Graph& seen : res.graphs)
                    if (iso(seen, cfg.graph)) {
                        fresh = false;
                        break;
                    }
                if (fresh)
                    res.graphs.push_back(cfg.graph);
                continue;
            }
            case NCfg::Kind::Failed:
                res.fail_observed = true;
                continue;
            case NCfg::Kind::Running:
                break;
            }
            StepOut so = step(cfg);
            if (so.undecided) {
                res.complete = false;
                return res;
            }
            if (so.stuck) {
                res.stuck_observed = true;
                continue;
            }
            for (NCfg& s : so.succ) {
                int to = intern(std::move(s)); // may reallocate succs
                succs[static_cast<std::size_t>(id)].push_back(to);
            }
        }

        // Divergence = a cycle reachable in the explored digraph.
        std::vector<int> colour(cfgs.size(), 0);
        std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
        colour[0] = 1;
        while (!stack.empty()) {
            auto& [id, next] = stack.back();
            auto& out_edges = succs[static_cast<std::size_t>(id)];
            if (next == out_edges.size()) {
                colour[static_cast<std::size_t>(id)] = 2;
                stack.pop_back();
                continue;
            }
            int to = out_edges[next++];
            if (colour[static_cast<std::size_t>(to)] == 1) {
                res.can_diverge = true;
                break;
            }
            if (colour[static_cast<std::size_t>(to)] == 0) {
                colour[static_cast<std::size_t>(to)] = 1;
                stack.emplace_back(to, 0);
            }
        }
        return res;
    }
};

} // namespace

RunResult run_all(const CompiledProgram& prog, const CommandSeq& seq,
                  const Graph& g, long long max_states) {
    Walker w(prog, max_states);
    RunResult r = w.explore(seq, g);
    if (w.overflow)
        r.complete = false;
    return r;
}

} // namespace oracle
