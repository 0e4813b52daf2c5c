#ifndef GP_RUN_HPP
#define GP_RUN_HPP

#include "gp/sos.hpp"

namespace gp {

struct TraceLine {
    std::uint64_t index = 0;
    std::string rule;
    std::string schema;
    std::string match;
    std::string note;
    bool failed = false; // step ended in the fail configuration
    std::size_t nodes = 0;
    std::size_t edges = 0;
};

// "step 3 [Call1] schema=colour1 match=1->0 2->2; a=0 i=0 x=0 y=0 graph=3n/3e"
std::string format_trace_line(const TraceLine& t);

struct SampleRun {
    enum class Outcome { Result, Fail, StepLimit, Stuck };
    Outcome outcome = Outcome::Stuck;
    std::optional<Graph> result; // Outcome::Result
    std::vector<TraceLine> trace;
    std::string stuck_reason;
    std::uint64_t steps = 0;
    std::uint64_t configurations = 0; // shared-budget usage
    std::map<std::string, std::uint64_t> diagnostics;
};

// One nondeterministic execution: repeatedly take one step, choosing among
// the successors with the seeded generator (successor index = next draw
// mod successor count; single successors consume no draw). Nested
// condition evaluations share the configuration budget. A pure function of
// (program, graph, seed, budget).
SampleRun run_sampled(const CompiledProgram& prog, const Graph& g,
                      std::uint64_t seed, const Budget& budget);

// The bounded semantic function: all result graphs reachable from
// (main, g), up to isomorphism, with failure/bottom observations. When
// complete is true the set and the flags are exact; otherwise the budget
// cut the tree and bottom_suspected is set.
struct ResultSet {
    std::vector<Graph> graphs;     // distinct up to isomorphism, discovery order
    std::vector<std::string> keys; // parallel canonical keys
    bool fail_observed = false;    // some run ends in fail (diagnostic; fail is not a result)
    bool bottom_suspected = false; // divergence, stuckness, or a budget cut
    bool stuck_observed = false;   // some run certainly gets stuck
    bool complete = false;
    bool truncated = false; // max_results reached
    std::uint64_t configurations = 0;
    std::map<std::string, std::uint64_t> diagnostics;
    std::set<std::string> rules_fired;
};

ResultSet run_all(const CompiledProgram& prog, const Graph& g,
                  const Budget& budget);

// Stable summaries of a ResultSet: graphs ordered by canonical key, then
// flags, verdict and budget usage. The JSON form carries the same fields.
std::string render_report(const ResultSet& rs);
std::string render_report_json(const ResultSet& rs);

// run_all + render in one call.
std::string semantics_report(const CompiledProgram& prog, const Graph& g,
                             const Budget& budget, bool json = false);

} // namespace gp

#endif
