#include "gp/graph.hpp"

namespace gp {

bool Graph::operator==(const Graph& o) const {
    if (node_labels != o.node_labels || edges.size() != o.edges.size())
        return false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].src != o.edges[i].src || edges[i].tgt != o.edges[i].tgt ||
            edges[i].label != o.edges[i].label)
            return false;
    }
    return true;
}

std::vector<GraphViolation> validate(const Graph& g) {
    std::vector<GraphViolation> out;
    const NodeId n = static_cast<NodeId>(g.node_count());
    for (std::size_t v = 0; v < g.node_labels.size(); ++v) {
        if (g.node_labels[v] && !g.node_labels[v]->valid())
            out.push_back({"node " + std::to_string(v) + ": empty label"});
        if (g.node_labels[v]) {
            for (const Atom& a : g.node_labels[v]->atoms)
                if (a.is_str() && !valid_string_atom(a.as_str()))
                    out.push_back({"node " + std::to_string(v) +
                                   ": string atom outside character set"});
        }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Graph::Edge& ed = g.edges[e];
        if (ed.src >= n)
            out.push_back({"edge " + std::to_string(e) + ": source node " +
                           std::to_string(ed.src) + " does not exist"});
        if (ed.tgt >= n)
            out.push_back({"edge " + std::to_string(e) + ": target node " +
                           std::to_string(ed.tgt) + " does not exist"});
        if (!ed.label.valid())
            out.push_back({"edge " + std::to_string(e) + ": empty label"});
        for (const Atom& a : ed.label.atoms)
            if (a.is_str() && !valid_string_atom(a.as_str()))
                out.push_back({"edge " + std::to_string(e) +
                               ": string atom outside character set"});
    }
    return out;
}

bool is_totally_labelled(const Graph& g) {
    for (const auto& l : g.node_labels)
        if (!l)
            return false;
    return true;
}

bool check_morphism(const Morphism& m) {
    if (!m.src || !m.dst)
        return false;
    if (m.node_map.size() != m.src->node_count() ||
        m.edge_map.size() != m.src->edge_count())
        return false;
    for (NodeId v = 0; v < m.node_map.size(); ++v)
        if (m.node_map[v] >= m.dst->node_count())
            return false;
    for (EdgeId e = 0; e < m.edge_map.size(); ++e) {
        if (m.edge_map[e] >= m.dst->edge_count())
            return false;
        const Graph::Edge& se = m.src->edges[e];
        const Graph::Edge& de = m.dst->edges[m.edge_map[e]];
        if (de.src != m.node_map[se.src])
            return false; // sources not preserved
        if (de.tgt != m.node_map[se.tgt])
            return false; // targets not preserved
        if (de.label != se.label)
            return false; // edge labels must match exactly
    }
    for (NodeId v = 0; v < m.node_map.size(); ++v) {
        const auto& sl = m.src->node_labels[v];
        if (!sl)
            continue; // unlabelled source nodes are unconstrained
        const auto& dl = m.dst->node_labels[m.node_map[v]];
        if (!dl || *dl != *sl)
            return false;
    }
    return true;
}

bool is_injective(const Morphism& m) {
    std::vector<bool> nseen(m.dst ? m.dst->node_count() : 0, false);
    for (NodeId v : m.node_map) {
        if (v < nseen.size()) {
            if (nseen[v])
                return false;
            nseen[v] = true;
        }
    }
    std::vector<bool> eseen(m.dst ? m.dst->edge_count() : 0, false);
    for (EdgeId e : m.edge_map) {
        if (e < eseen.size()) {
            if (eseen[e])
                return false;
            eseen[e] = true;
        }
    }
    return true;
}

} // namespace gp
