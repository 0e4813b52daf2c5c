#include "gp/run.hpp"

#include "gp/canonical.hpp"
#include "gp/hostgraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <random>

namespace gp {

std::string format_trace_line(const TraceLine& t) {
    std::string out = "step " + std::to_string(t.index) + " " + t.rule;
    if (!t.schema.empty())
        out += " schema=" + t.schema;
    if (!t.match.empty())
        out += " match=" + t.match;
    if (!t.note.empty())
        out += " (" + t.note + ")";
    if (t.failed)
        out += " graph=fail";
    else
        out += " graph=" + std::to_string(t.nodes) + "n/" +
               std::to_string(t.edges) + "e";
    return out;
}

SampleRun run_sampled(const CompiledProgram& prog, const Graph& g,
                      std::uint64_t seed, const Budget& budget) {
    Engine engine(prog, budget, Engine::Mode::Sampled);
    Meter meter(budget);
    std::mt19937_64 rng(seed);
    SampleRun out;
    Configuration cfg = Configuration::running(prog.ast.main, g);

    auto finish = [&](SampleRun::Outcome o) {
        out.outcome = o;
        out.configurations = meter.configurations;
        out.diagnostics = engine.diagnostics();
        return out;
    };

    while (out.steps < budget.max_steps_per_path) {
        if (!meter.charge()) {
            out.stuck_reason = "configuration budget exhausted";
            return finish(SampleRun::Outcome::Stuck);
        }
        StepResult sr = engine.step(cfg, meter);
        if (sr.stuck) {
            out.stuck_reason = sr.stuck_reason;
            return finish(SampleRun::Outcome::Stuck);
        }
        std::size_t pick =
            sr.successors.size() == 1
                ? 0
                : static_cast<std::size_t>(rng() % sr.successors.size());
        Successor& s = sr.successors[pick];

        ++out.steps;
        TraceLine t;
        t.index = out.steps;
        t.rule = s.info.rule;
        t.schema = s.info.schema;
        t.match = s.info.match;
        t.note = s.info.note;
        if (s.cfg.kind == Configuration::Kind::Failed) {
            t.failed = true;
        } else {
            t.nodes = s.cfg.graph.node_count();
            t.edges = s.cfg.graph.edge_count();
        }
        out.trace.push_back(std::move(t));

        if (s.cfg.kind == Configuration::Kind::Done) {
            out.result = std::move(s.cfg.graph);
            return finish(SampleRun::Outcome::Result);
        }
        if (s.cfg.kind == Configuration::Kind::Failed)
            return finish(SampleRun::Outcome::Fail);
        cfg = std::move(s.cfg);
    }
    out.stuck_reason = "step limit reached";
    return finish(SampleRun::Outcome::StepLimit);
}

ResultSet run_all(const CompiledProgram& prog, const Graph& g,
                  const Budget& budget) {
    Engine engine(prog, budget, Engine::Mode::Exhaustive);
    Meter meter(budget);
    ExploreOutcome o = engine.explore(prog.ast.main, g, meter, false);
    ResultSet rs;
    rs.graphs = std::move(o.results);
    rs.keys = std::move(o.result_keys);
    rs.fail_observed = o.saw_fail;
    rs.stuck_observed = o.saw_stuck;
    rs.bottom_suspected =
        o.saw_stuck || o.has_cycle || o.budget_hit || o.truncated_results;
    rs.complete = o.complete;
    rs.truncated = o.truncated_results;
    rs.configurations = meter.configurations;
    rs.diagnostics = engine.diagnostics();
    rs.rules_fired = engine.rules_fired();
    return rs;
}

namespace {

std::vector<std::size_t> key_order(const ResultSet& rs) {
    std::vector<std::size_t> idx(rs.graphs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return rs.keys[a] < rs.keys[b];
    });
    return idx;
}

std::string verdict(const ResultSet& rs) {
    if (!rs.complete)
        return "unknown (budget)";
    if (rs.graphs.empty() && rs.fail_observed && !rs.bottom_suspected)
        return "finitely fails";
    if (rs.bottom_suspected)
        return "complete (can diverge or get stuck)";
    return "complete";
}

const char* yn(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string render_report(const ResultSet& rs) {
    std::string out = "results: " + std::to_string(rs.graphs.size());
    if (rs.truncated)
        out += " (truncated)";
    out += "\n";
    std::size_t n = 0;
    for (std::size_t i : key_order(rs)) {
        out += "result " + std::to_string(++n) + " key=" + key_digest(rs.keys[i]) +
               "\n";
        out += serialize_host(rs.graphs[i]);
    }
    out += "flags: fail_observed=" + std::string(yn(rs.fail_observed)) +
           " bottom_suspected=" + yn(rs.bottom_suspected) +
           " stuck_observed=" + yn(rs.stuck_observed) + "\n";
    out += "configurations: " + std::to_string(rs.configurations) + "\n";
    for (const auto& [msg, count] : rs.diagnostics)
        out += "note: " + msg + " (x" + std::to_string(count) + ")\n";
    out += "verdict: " + verdict(rs) + "\n";
    return out;
}

std::string render_report_json(const ResultSet& rs) {
    nlohmann::json j;
    j["results"] = nlohmann::json::array();
    for (std::size_t i : key_order(rs)) {
        nlohmann::json r;
        r["key"] = key_digest(rs.keys[i]);
        r["graph"] = serialize_host(rs.graphs[i]);
        j["results"].push_back(std::move(r));
    }
    j["count"] = rs.graphs.size();
    j["fail_observed"] = rs.fail_observed;
    j["bottom_suspected"] = rs.bottom_suspected;
    j["stuck_observed"] = rs.stuck_observed;
    j["complete"] = rs.complete;
    j["truncated"] = rs.truncated;
    j["configurations"] = rs.configurations;
    j["verdict"] = verdict(rs);
    nlohmann::json notes = nlohmann::json::array();
    for (const auto& [msg, count] : rs.diagnostics)
        notes.push_back({{"message", msg}, {"count", count}});
    j["notes"] = std::move(notes);
    return j.dump(2);
}

std::string semantics_report(const CompiledProgram& prog, const Graph& g,
                             const Budget& budget, bool json) {
    ResultSet rs = run_all(prog, g, budget);
    return json ? render_report_json(rs) : render_report(rs);
}

} // namespace gp
