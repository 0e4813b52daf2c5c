#ifndef GP_SOS_HPP
#define GP_SOS_HPP

#include "gp/apply.hpp"

#include <cstdint>
#include <map>
#include <set>

namespace gp {

// Exploration limits. Finite failure and divergence are undecidable in
// general; the budgets keep every answer either exact (when exploration
// completes) or explicitly unknown. Defaults are desk-scale and arbitrary.
struct Budget {
    std::uint64_t max_steps_per_path = 10000;
    std::uint64_t max_configurations = 1000000;
    std::uint64_t max_results = 256;
};

// Countdown of configurations processed, shareable between an execution
// and its nested condition evaluations.
struct Meter {
    Budget budget;
    std::uint64_t configurations = 0;

    explicit Meter(const Budget& b) : budget(b) {}
    bool charge() {
        if (configurations >= budget.max_configurations)
            return false;
        ++configurations;
        return true;
    }
};

// Interpreter state: a rest program with a graph, a final graph, or the
// failure state.
struct Configuration {
    enum class Kind { Running, Done, Failed };
    Kind kind = Kind::Running;
    CommandSeq rest; // Running
    Graph graph;     // Running / Done

    static Configuration running(CommandSeq rest, Graph g) {
        return {Kind::Running, std::move(rest), std::move(g)};
    }
    static Configuration done(Graph g) { return {Kind::Done, {}, std::move(g)}; }
    static Configuration failed() { return {Kind::Failed, {}, {}}; }
};

struct StepInfo {
    std::string rule;   // "[Call1]" ... "[Alap2]", "[Skip]", "[Fail]", "[If3]"
    std::string schema; // driving schema, when a derivation fired
    std::string match;  // match summary, when a derivation fired
    std::string note;
};

struct Successor {
    Configuration cfg;
    StepInfo info;
};

struct StepResult {
    std::vector<Successor> successors;
    bool stuck = false;        // no inference rule applies (or is provable within budget)
    bool stuck_budget = false; // inconclusive for budget reasons only
    std::string stuck_reason;
    bool complete = true;      // successor list provably exhaustive
};

// Verdict of the finite-failure oracle for a condition program.
struct CondOutcome {
    enum class Kind { Succeeds, FinitelyFails, Unknown };
    enum class Reason { None, BudgetExhausted, DivergenceSuspected };
    Kind kind = Kind::Unknown;
    Reason reason = Reason::None;
    std::optional<Graph> witness; // Succeeds
};

// Full record of one bounded breadth-first exploration of a computation
// tree. When complete is true the explored space is the entire reachable
// configuration digraph, so the flags are exact: has_cycle iff some run
// diverges, saw_stuck iff some run gets stuck, results = all reachable
// proper results.
struct ExploreOutcome {
    std::vector<Graph> results; // distinct up to isomorphism, discovery order
    std::vector<std::string> result_keys;
    bool complete = false;
    bool saw_fail = false;
    bool saw_stuck = false;
    bool budget_hit = false;
    bool has_cycle = false;
    bool truncated_results = false;
    std::uint64_t configurations = 0;
};

// Small-step engine over a compiled program. Exhaustive mode gives every
// nested condition evaluation a fresh meter and caches outcomes; Sampled
// mode shares one meter across the whole run for reproducible budget
// accounting.
class Engine {
public:
    enum class Mode { Exhaustive, Sampled };

    Engine(const CompiledProgram& prog, Budget budget, Mode mode)
        : prog_(prog), budget_(budget), mode_(mode) {}

    // Skip -> call of the reserved identity schema; Fail -> call of the
    // empty rule set; IfThen -> IfThenElse with skip else-branch; anything
    // else unchanged. Lowered forms are interned so configuration keys
    // stay pointer-stable.
    CommandPtr lower_derived(const CommandPtr& c);

    // All successors of a running configuration under the inference rules,
    // or a stuck report when neither branch rule of a conditional/loop can
    // be established.
    StepResult step(const Configuration& cfg, Meter& meter);

    // Bounded finite-failure oracle over the computation tree of c on g.
    CondOutcome evaluate_condition_program(const CommandSeq& c, const Graph& g,
                                           Meter& meter);

    // Breadth-first exploration with memoization on (rest program,
    // canonical graph key). stop_at_first_result makes it an existence
    // check (first Done leaf in search order wins).
    ExploreOutcome explore(const CommandSeq& start, const Graph& g, Meter& meter,
                           bool stop_at_first_result);

    const Budget& budget() const { return budget_; }
    const CompiledProgram& program() const { return prog_; }

    // Every inference rule observed so far (conformance bookkeeping).
    const std::set<std::string>& rules_fired() const { return rules_fired_; }
    // Division-by-zero notes with occurrence counts.
    const std::map<std::string, std::uint64_t>& diagnostics() const {
        return diagnostics_;
    }

private:
    const CompiledProgram& prog_;
    Budget budget_;
    Mode mode_;

    CommandPtr skip_call_;
    CommandPtr fail_call_;
    std::map<const Command*, CommandPtr> lower_cache_;

    std::set<std::string> rules_fired_;
    std::map<std::string, std::uint64_t> diagnostics_;

    using CacheKey = std::tuple<std::vector<const Command*>, std::string, bool>;
    std::map<CacheKey, ExploreOutcome> explore_cache_;

    CommandPtr skip_cmd_; // shared else-branch for lowered IfThen
    std::vector<const CompiledSchema*> resolve_rules(const Command::RuleSetCall& call);
    void record_diags(const std::vector<std::string>& diags);
};

} // namespace gp

#endif
