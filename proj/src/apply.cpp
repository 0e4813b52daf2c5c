#include "gp/apply.hpp"

#ifdef GP_HAVE_OPENMP
#include <omp.h>
#endif

namespace gp {

std::optional<Graph> apply_match(const CompiledSchema& schema, const Match& m,
                                 const Graph& host, std::string* diag) {
    // Evaluate all right labels up front; any division by zero aborts the
    // application before the graph is touched.
    std::vector<Label> node_labels;
    node_labels.reserve(schema.right_node_labels.size());
    for (const LabelExpr& l : schema.right_node_labels) {
        std::optional<Label> v = eval_label(l, m.assignment);
        if (!v) {
            if (diag)
                *diag = "schema '" + schema.name +
                        "': division by zero while evaluating a right label; "
                        "application dropped";
            return std::nullopt;
        }
        node_labels.push_back(std::move(*v));
    }
    std::vector<Label> edge_labels;
    edge_labels.reserve(schema.right_edges.size());
    for (const CompiledSchema::RightEdge& e : schema.right_edges) {
        std::optional<Label> v = eval_label(e.label, m.assignment);
        if (!v) {
            if (diag)
                *diag = "schema '" + schema.name +
                        "': division by zero while evaluating a right label; "
                        "application dropped";
            return std::nullopt;
        }
        edge_labels.push_back(std::move(*v));
    }

    // Step 1: removal. Deleted nodes are the images of non-interface left
    // nodes; deleted edges are all matched edges (the interface has none).
    std::vector<char> node_deleted(host.node_count(), 0);
    for (std::size_t i = 0; i < schema.left_nodes.size(); ++i)
        if (!schema.left_is_interface[i])
            node_deleted[m.node_image[i]] = 1;
    std::vector<char> edge_deleted(host.edge_count(), 0);
    for (EdgeId e : m.edge_image)
        edge_deleted[e] = 1;

    Graph out;
    std::vector<NodeId> renumber(host.node_count(), 0);
    for (NodeId v = 0; v < host.node_count(); ++v)
        if (!node_deleted[v])
            renumber[v] = out.add_node(*host.node_labels[v]);

    // Step 3 (relabelling) folded in: interface images take their right
    // label. The interface is unlabelled in K, so every interface node is
    // relabelled unconditionally.
    for (std::size_t slot = 0; slot < schema.interface_ids.size(); ++slot) {
        NodeId hv = m.node_image[schema.interface_left[slot]];
        out.node_labels[renumber[hv]] = node_labels[schema.interface_right[slot]];
    }

    // Step 2: additions. New right nodes first, then surviving host edges,
    // then right edges with endpoints routed through the interface.
    std::vector<NodeId> right_to_out(schema.right_node_labels.size(), 0);
    for (std::size_t j = 0; j < schema.right_node_labels.size(); ++j) {
        int slot = schema.right_interface_slot[j];
        if (slot >= 0)
            right_to_out[j] = renumber[m.node_image[schema.interface_left[slot]]];
        else
            right_to_out[j] = out.add_node(node_labels[j]);
    }
    for (EdgeId e = 0; e < host.edge_count(); ++e) {
        if (edge_deleted[e])
            continue;
        const Graph::Edge& he = host.edges[e];
        // dangling condition guarantees both endpoints survive
        out.add_edge(renumber[he.src], renumber[he.tgt], he.label);
    }
    for (std::size_t k = 0; k < schema.right_edges.size(); ++k) {
        const CompiledSchema::RightEdge& re = schema.right_edges[k];
        out.add_edge(right_to_out[re.src], right_to_out[re.tgt], edge_labels[k]);
    }
    return out;
}

std::vector<Derivation> derive_all(const std::vector<const CompiledSchema*>& rules,
                                   const Graph& host,
                                   std::vector<std::string>* diagnostics) {
    // Collect matches serially (already parallel inside find_matches),
    // then apply across all of them.
    std::vector<std::pair<const CompiledSchema*, Match>> work;
    for (const CompiledSchema* s : rules)
        for (Match& m : find_matches(*s, host, diagnostics))
            work.emplace_back(s, std::move(m));

    std::vector<std::optional<Graph>> results(work.size());
    std::vector<std::string> diags(work.size());
#ifdef GP_HAVE_OPENMP
    if (thread_count() > 1 && work.size() > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (std::size_t i = 0; i < work.size(); ++i)
            results[i] = apply_match(*work[i].first, work[i].second, host, &diags[i]);
    } else
#endif
    {
        for (std::size_t i = 0; i < work.size(); ++i)
            results[i] = apply_match(*work[i].first, work[i].second, host, &diags[i]);
    }

    std::vector<Derivation> out;
    out.reserve(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (!results[i]) {
            if (diagnostics && !diags[i].empty())
                diagnostics->push_back(diags[i]);
            continue;
        }
        out.push_back(Derivation{work[i].first, std::move(work[i].second),
                                 std::move(*results[i])});
    }
    return out;
}

} // namespace gp
