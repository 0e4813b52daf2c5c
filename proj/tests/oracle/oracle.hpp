// Independent reference implementations used to cross-check the engine.
// Everything here is deliberately naive: exhaustive enumeration and
// set-based construction, sharing no logic with the library beyond the
// data types themselves.
#ifndef GP_TEST_ORACLE_HPP
#define GP_TEST_ORACLE_HPP

#include "gp/run.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

// ---- isomorphism by brute force over all node bijections ----
bool iso(const gp::Graph& a, const gp::Graph& b);

// Exact-form key: labels in id order plus sorted edge triples. Equal keys
// mean equal graphs as built, not merely isomorphic ones.
std::string exact_key(const gp::Graph& g);

// ---- reference expression/condition evaluation ----
std::optional<gp::Atom>
eval_expr_ref(const gp::Expr& e,
              const std::vector<std::optional<gp::Atom>>& bindings,
              const gp::CompiledSchema& s);

std::optional<gp::Label>
eval_label_ref(const gp::LabelExpr& l,
               const std::vector<std::optional<gp::Atom>>& bindings,
               const gp::CompiledSchema& s);

// ---- matching by exhaustive injective-map enumeration ----
struct FoundMatch {
    std::vector<gp::NodeId> node_image; // by left node index
    std::vector<gp::EdgeId> edge_image; // by left edge index
    std::vector<std::optional<gp::Atom>> bindings; // by schema variable index
};

std::vector<FoundMatch> find_matches(const gp::CompiledSchema& s,
                                     const gp::Graph& host);

// ---- derivation by literal set construction ----
std::optional<gp::Graph> apply(const gp::CompiledSchema& s, const FoundMatch& m,
                               const gp::Graph& host);

// ---- naive small-step interpreter ----
// Explores the reachable configuration digraph over exact graph forms,
// recursing for loop bodies and conditions, and reads off results, failure,
// stuckness and divergence (a reachable cycle). complete=false means the
// state cap was hit and nothing else can be trusted.
struct RunResult {
    std::vector<gp::Graph> graphs; // distinct up to iso()
    bool fail_observed = false;
    bool stuck_observed = false;
    bool can_diverge = false;
    bool complete = true;
};

RunResult run_all(const gp::CompiledProgram& prog, const gp::CommandSeq& seq,
                  const gp::Graph& g, long long max_states = 200000);

// ---- series-parallel recognition by exhaustive reduction ----
// True iff some sequence of parallel-edge merges and degree-two node
// contractions (both only between distinct nodes) ends in a single
// non-loop edge.
bool series_parallel(const gp::Graph& g);

// True iff the graph contains a directed cycle (self-loops included).
bool has_directed_cycle(const gp::Graph& g);

// True iff the graph is weakly connected (and nonempty).
bool weakly_connected(const gp::Graph& g);

// ---- deterministic random inputs ----
gp::Graph random_graph(std::mt19937_64& rng, int min_nodes, int max_nodes,
                       int max_edges, int label_range, bool with_strings);

// Loop-free weakly connected bipartite digraph, every label [0].
gp::Graph random_connected_bipartite(std::mt19937_64& rng, int max_nodes);

// Weakly connected digraph with small int labels.
gp::Graph random_connected(std::mt19937_64& rng, int min_nodes, int max_nodes);

// Directed cycle 1 -> 2 -> ... -> n -> 1, all labels [0].
gp::Graph cycle_graph(int n);

// Source text of a random well-formed rule-schema program ("main = r").
std::string random_schema_text(std::mt19937_64& rng);

// Host grown around an instance of the schema's left graph: variables get
// random values, the instantiated left is embedded verbatim, then noise
// nodes and edges are added up to max_nodes. A match is likely but not
// certain (a where-condition can reject the drawn values).
gp::Graph planted_host(std::mt19937_64& rng, const gp::CompiledSchema& s,
                       int max_nodes, int label_range, bool with_strings);

} // namespace oracle

#endif
