#ifndef GP_APPLY_HPP
#define GP_APPLY_HPP

#include "gp/match.hpp"

namespace gp {

// Direct derivation at a match, by construction: (1) delete the images of
// non-interface left nodes and of all matched edges, (2) add the
// non-interface right nodes and all right edges disjointly, attaching
// endpoints through the node image, (3) relabel every interface image to
// its evaluated right label. Returns nullopt (with a note in *diag) if a
// right label divides by zero; otherwise a valid, totally labelled graph
// with nodes renumbered densely.
std::optional<Graph> apply_match(const CompiledSchema& schema, const Match& m,
                                 const Graph& host, std::string* diag = nullptr);

struct Derivation {
    const CompiledSchema* schema;
    Match match;
    Graph result;
};

// Every direct derivation by any schema in the list, in deterministic
// order: schemata in list order, matches in find_matches order.
std::vector<Derivation> derive_all(const std::vector<const CompiledSchema*>& rules,
                                   const Graph& host,
                                   std::vector<std::string>* diagnostics = nullptr);

} // namespace gp

#endif
