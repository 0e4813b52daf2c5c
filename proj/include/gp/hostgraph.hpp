#ifndef GP_HOSTGRAPH_HPP
#define GP_HOSTGRAPH_HPP

#include "gp/ast.hpp"
#include "gp/graph.hpp"

namespace gp {

struct HostParseResult {
    std::optional<Graph> graph;
    std::vector<Diagnostic> errors;
    bool ok() const { return errors.empty() && graph.has_value(); }
};

// Host-graph documents: one entry per line, `#` comments.
//   node <id> <label>
//   edge <src> <dst> <label>
// Ids are positive decimals, unique per node. Labels are ground label
// literals (underscore-joined atoms, strings double-quoted) - the program
// label syntax restricted to values. Node entries may appear in any order
// relative to the edges that use them.
HostParseResult parse_host(const std::string& text);

// Deterministic document for a valid, totally labelled graph: nodes
// renumbered 1..n in canonical order, edge lines sorted. Isomorphic graphs
// serialize identically; parse_host round-trips up to isomorphism.
// Throws std::invalid_argument if a node is unlabelled.
std::string serialize_host(const Graph& g);

} // namespace gp

#endif
