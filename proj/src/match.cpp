#include "gp/match.hpp"

#ifdef GP_HAVE_OPENMP
#include <omp.h>
#endif

namespace gp {

std::string Match::summary() const {
    std::string out;
    for (std::size_t i = 0; i < node_image.size(); ++i) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(i + 1) + "->" + std::to_string(node_image[i]);
    }
    std::string binds = assignment.summary();
    if (!binds.empty()) {
        out += out.empty() ? "" : "; ";
        out += binds;
    }
    if (out.empty())
        out = "(empty)";
    return out;
}

bool check_dangling(const CompiledSchema& schema,
                    const std::vector<NodeId>& node_image,
                    const std::vector<EdgeId>& edge_image, const Graph& host) {
    std::vector<char> matched(host.edge_count(), 0);
    for (EdgeId e : edge_image)
        matched[e] = 1;
    for (std::size_t i = 0; i < schema.left_nodes.size(); ++i) {
        if (schema.left_is_interface[i])
            continue;
        NodeId v = node_image[i];
        for (EdgeId e = 0; e < host.edge_count(); ++e) {
            const Graph::Edge& he = host.edges[e];
            if ((he.src == v || he.tgt == v) && !matched[e])
                return false;
        }
    }
    return true;
}

namespace {

struct Search {
    const CompiledSchema& s;
    const Graph& host;
    std::vector<std::string>* diags;

    std::vector<NodeId> node_image;
    std::vector<EdgeId> edge_image;
    std::vector<char> node_used;
    std::vector<char> edge_used;
    Assignment a;
    std::vector<Match> out;

    Search(const CompiledSchema& schema, const Graph& h,
           std::vector<std::string>* d)
        : s(schema), host(h), diags(d), node_image(schema.left_nodes.size()),
          edge_image(schema.left_edges.size()),
          node_used(h.node_count(), 0), edge_used(h.edge_count(), 0),
          a(schema) {}

    // Positional unification of one label; appends the indices of freshly
    // bound variables so the caller can undo them on backtrack.
    bool unify(const LabelPattern& p, const Label& l, std::vector<int>& bound) {
        if (p.comps.size() != l.size())
            return false;
        std::size_t undo_from = bound.size();
        for (std::size_t i = 0; i < p.comps.size(); ++i) {
            const SimplePattern& c = p.comps[i];
            const Atom& atom = l.atoms[i];
            if (c.kind == SimplePattern::Kind::Const) {
                if (c.value == atom)
                    continue;
            } else if (a.values[c.var]) {
                if (*a.values[c.var] == atom)
                    continue;
            } else if (s.var_types[c.var] ==
                       (atom.is_int() ? ExprType::Int : ExprType::String)) {
                a.values[c.var] = atom;
                bound.push_back(c.var);
                continue;
            }
            for (std::size_t j = undo_from; j < bound.size(); ++j)
                a.values[bound[j]].reset();
            bound.resize(undo_from);
            return false;
        }
        return true;
    }

    bool try_node(std::size_t i, NodeId h, std::vector<int>& bound) {
        if (node_used[h] || !host.node_labels[h])
            return false;
        if (!unify(s.left_nodes[i], *host.node_labels[h], bound))
            return false;
        node_used[h] = 1;
        node_image[i] = h;
        return true;
    }

    void undo_node(NodeId h, const std::vector<int>& bound) {
        node_used[h] = 0;
        for (int v : bound)
            a.values[v].reset();
    }

    void node_rec(std::size_t i) {
        if (i == s.left_nodes.size()) {
            edge_rec(0);
            return;
        }
        for (NodeId h = 0; h < host.node_count(); ++h) {
            std::vector<int> bound;
            if (!try_node(i, h, bound))
                continue;
            node_rec(i + 1);
            undo_node(h, bound);
        }
    }

    void edge_rec(std::size_t j) {
        if (j == s.left_edges.size()) {
            finish();
            return;
        }
        const CompiledSchema::PatternEdge& pe = s.left_edges[j];
        NodeId hs = node_image[pe.src];
        NodeId ht = node_image[pe.tgt];
        for (EdgeId e = 0; e < host.edge_count(); ++e) {
            if (edge_used[e])
                continue;
            const Graph::Edge& he = host.edges[e];
            if (he.src != hs || he.tgt != ht)
                continue;
            std::vector<int> bound;
            if (!unify(pe.label, he.label, bound))
                continue;
            edge_used[e] = 1;
            edge_image[j] = e;
            edge_rec(j + 1);
            edge_used[e] = 0;
            for (int v : bound)
                a.values[v].reset();
        }
    }

    void finish() {
        if (!check_dangling(s, node_image, edge_image, host))
            return;
        if (s.condition) {
            std::optional<bool> v =
                eval_condition(*s.condition, s, a, node_image, host);
            if (!v) {
                if (diags)
                    diags->push_back("schema '" + s.name +
                                     "': division by zero while evaluating the "
                                     "condition; match dropped");
                return;
            }
            if (!*v)
                return;
        }
        out.push_back(Match{node_image, edge_image, a});
    }
};

} // namespace

std::vector<Match> find_matches(const CompiledSchema& schema, const Graph& host,
                                std::vector<std::string>* diagnostics) {
#ifdef GP_HAVE_OPENMP
    // Anchor-parallel kernel: partition the search by the image of the
    // first left node. Buckets are concatenated in candidate order, which
    // reproduces the serial enumeration order exactly.
    if (thread_count() > 1 && !schema.left_nodes.empty() && host.node_count() > 1) {
        std::size_t n = host.node_count();
        std::vector<std::vector<Match>> buckets(n);
        std::vector<std::vector<std::string>> bucket_diags(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (std::size_t h = 0; h < n; ++h) {
            Search search(schema, host, &bucket_diags[h]);
            std::vector<int> bound;
            if (search.try_node(0, static_cast<NodeId>(h), bound)) {
                search.node_rec(1);
                search.undo_node(static_cast<NodeId>(h), bound);
            }
            buckets[h] = std::move(search.out);
        }
        std::vector<Match> out;
        for (std::size_t h = 0; h < n; ++h) {
            out.insert(out.end(), std::make_move_iterator(buckets[h].begin()),
                       std::make_move_iterator(buckets[h].end()));
            if (diagnostics)
                diagnostics->insert(diagnostics->end(), bucket_diags[h].begin(),
                                    bucket_diags[h].end());
        }
        return out;
    }
#endif
    Search search(schema, host, diagnostics);
    search.node_rec(0);
    return search.out;
}

Graph instantiate_left(const CompiledSchema& schema, const Assignment& a) {
    Graph g;
    auto concretize = [&](const LabelPattern& p) {
        Label l;
        for (const SimplePattern& c : p.comps) {
            if (c.kind == SimplePattern::Kind::Const)
                l.atoms.push_back(c.value);
            else
                l.atoms.push_back(*a.values[c.var]);
        }
        return l;
    };
    for (const LabelPattern& p : schema.left_nodes)
        g.add_node(concretize(p));
    for (const CompiledSchema::PatternEdge& e : schema.left_edges)
        g.add_edge(static_cast<NodeId>(e.src), static_cast<NodeId>(e.tgt),
                   concretize(e.label));
    return g;
}

std::optional<Graph> instantiate_right(const CompiledSchema& schema,
                                       const Assignment& a) {
    Graph g;
    for (const LabelExpr& l : schema.right_node_labels) {
        std::optional<Label> v = eval_label(l, a);
        if (!v)
            return std::nullopt;
        g.add_node(std::move(*v));
    }
    for (const CompiledSchema::RightEdge& e : schema.right_edges) {
        std::optional<Label> v = eval_label(e.label, a);
        if (!v)
            return std::nullopt;
        g.add_edge(static_cast<NodeId>(e.src), static_cast<NodeId>(e.tgt),
                   std::move(*v));
    }
    return g;
}

} // namespace gp
