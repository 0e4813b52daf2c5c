#ifndef GP_CANONICAL_HPP
#define GP_CANONICAL_HPP

#include "gp/graph.hpp"

#include <string>
#include <vector>

namespace gp {

// Canonical byte string for a totally labelled graph: two graphs get equal
// keys iff they are isomorphic. Computed by colour refinement over node
// labels and incident edge structure, then individualization search taking
// the lexicographically least encoding. Deterministic across runs.
std::string canonical_key(const Graph& g);

// A node order realizing the canonical encoding (nodes listed in canonical
// position order). Orders are not unique under automorphisms but every
// returned order yields the same encoding.
std::vector<NodeId> canonical_order(const Graph& g);

// Isomorphism via canonical-form comparison. Pre: both valid and totally
// labelled.
bool isomorphic(const Graph& a, const Graph& b);

// Short display form of a canonical key (64-bit FNV-1a, hex). Dedup always
// uses the full key; this is for listings and traces.
std::string key_digest(const std::string& key);

// Keys for a batch of graphs, in input order. Runs across the configured
// worker threads; output is identical to mapping canonical_key serially.
std::vector<std::string> batch_canonical_keys(const std::vector<const Graph*>& graphs);

} // namespace gp

#endif
