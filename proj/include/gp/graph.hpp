#ifndef GP_GRAPH_HPP
#define GP_GRAPH_HPP

#include "gp/atom.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gp {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Finite directed multigraph with partial node labelling and total edge
// labelling. Node and edge ids are dense indices assigned by the container;
// parallel edges and self-loops are allowed. Treated as an immutable value
// once built: derivation steps construct new graphs.
struct Graph {
    struct Edge {
        NodeId src = 0;
        NodeId tgt = 0;
        Label label;
    };

    std::vector<std::optional<Label>> node_labels;
    std::vector<Edge> edges;

    NodeId add_node(std::optional<Label> label) {
        node_labels.push_back(std::move(label));
        return static_cast<NodeId>(node_labels.size() - 1);
    }
    EdgeId add_edge(NodeId src, NodeId tgt, Label label) {
        edges.push_back(Edge{src, tgt, std::move(label)});
        return static_cast<EdgeId>(edges.size() - 1);
    }

    std::size_t node_count() const { return node_labels.size(); }
    std::size_t edge_count() const { return edges.size(); }

    bool operator==(const Graph& o) const;
};

// One invariant violation, naming the offending item.
struct GraphViolation {
    std::string message;
};

// Checks the container invariants: edge endpoints in range, labels nonempty,
// string atoms over the printable character set. Violations are the return
// value; an empty list means the graph is well formed.
std::vector<GraphViolation> validate(const Graph& g);

bool is_totally_labelled(const Graph& g);

// Graph morphism: total maps on nodes and edges of src.
struct Morphism {
    const Graph* src = nullptr;
    const Graph* dst = nullptr;
    std::vector<NodeId> node_map;
    std::vector<EdgeId> edge_map;
};

// True iff the morphism preserves sources, targets, edge labels, and the
// labels of all labelled source nodes.
bool check_morphism(const Morphism& m);

bool is_injective(const Morphism& m);

} // namespace gp

#endif
