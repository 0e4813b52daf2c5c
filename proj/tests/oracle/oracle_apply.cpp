#include "oracle/oracle.hpp"

namespace oracle {

// The three construction steps, written against sets: remove the images of
// non-interface left nodes and of all matched edges, add the right-only
// items disjointly, relabel interface images. Nothing is shared with the
// engine's implementation.
std::optional<gp::Graph> apply(const gp::CompiledSchema& s, const FoundMatch& m,
                               const gp::Graph& host) {
    // Evaluate every right label first so a division by zero aborts cleanly.
    std::vector<gp::Label> right_labels;
    for (const gp::LabelExpr& l : s.right_node_labels) {
        std::optional<gp::Label> v = eval_label_ref(l, m.bindings, s);
        if (!v)
            return std::nullopt;
        right_labels.push_back(std::move(*v));
    }
    std::vector<gp::Label> right_edge_labels;
    for (const auto& e : s.right_edges) {
        std::optional<gp::Label> v = eval_label_ref(e.label, m.bindings, s);
        if (!v)
            return std::nullopt;
        right_edge_labels.push_back(std::move(*v));
    }

    std::vector<char> node_deleted(host.node_labels.size(), 0);
    for (std::size_t i = 0; i < m.node_image.size(); ++i)
        if (!s.left_is_interface[i])
            node_deleted[m.node_image[i]] = 1;
    std::vector<char> edge_deleted(host.edges.size(), 0);
    for (gp::EdgeId e : m.edge_image)
        edge_deleted[e] = 1;

    gp::Graph out;
    std::vector<gp::NodeId> old_to_new(host.node_labels.size(), 0);
    for (gp::NodeId v = 0; v < host.node_labels.size(); ++v)
        if (!node_deleted[v])
            old_to_new[v] = out.add_node(host.node_labels[v]);
    for (gp::EdgeId e = 0; e < host.edges.size(); ++e)
        if (!edge_deleted[e])
            out.add_edge(old_to_new[host.edges[e].src],
                         old_to_new[host.edges[e].tgt], host.edges[e].label);

    // Interface relabelling, then the added right nodes and edges.
    std::vector<gp::NodeId> right_to_new(s.right_node_labels.size(), 0);
    for (std::size_t r = 0; r < s.right_node_labels.size(); ++r) {
        int slot = s.right_interface_slot[r];
        if (slot >= 0) {
            gp::NodeId img = old_to_new[m.node_image[static_cast<std::size_t>(
                s.interface_left[static_cast<std::size_t>(slot)])]];
            out.node_labels[img] = right_labels[r];
            right_to_new[r] = img;
        } else {
            right_to_new[r] = out.add_node(right_labels[r]);
        }
    }
    for (std::size_t e = 0; e < s.right_edges.size(); ++e)
        out.add_edge(right_to_new[static_cast<std::size_t>(s.right_edges[e].src)],
                     right_to_new[static_cast<std::size_t>(s.right_edges[e].tgt)],
                     right_edge_labels[e]);
    return out;
}

} // namespace oracle
