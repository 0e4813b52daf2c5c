#ifndef GP_MATCH_HPP
#define GP_MATCH_HPP

#include "gp/eval.hpp"
#include "gp/threads.hpp"

namespace gp {

// An injective occurrence of a schema's instantiated left graph in a host:
// node_image/edge_image are indexed by left node/edge position, and the
// assignment holds the variable bindings produced by unification.
struct Match {
    std::vector<NodeId> node_image;
    std::vector<EdgeId> edge_image;
    Assignment assignment;

    std::string summary() const; // "1->3 2->0; x=5"
};

// Enumerates every match of schema in host: injective node/edge images
// with positionally unified labels, satisfying the dangling condition and
// the schema condition. Deterministic order: candidates are explored in
// ascending host id per left item, left items in declaration order.
// Matches rejected by a division by zero are dropped with a note in
// *diagnostics.
std::vector<Match> find_matches(const CompiledSchema& schema, const Graph& host,
                                std::vector<std::string>* diagnostics = nullptr);

// "no node in g(L)-g(K) is incident to an edge in G-g(L)": every edge
// touching the image of a deleted left node must itself be matched.
bool check_dangling(const CompiledSchema& schema,
                    const std::vector<NodeId>& node_image,
                    const std::vector<EdgeId>& edge_image, const Graph& host);

// Materialize the instantiated left/right graphs of a schema under a
// complete assignment (for property checks and oracles). The right graph
// is nullopt on division by zero.
Graph instantiate_left(const CompiledSchema& schema, const Assignment& a);
std::optional<Graph> instantiate_right(const CompiledSchema& schema,
                                       const Assignment& a);

} // namespace gp

#endif
