#include "oracle/oracle.hpp"

#include <deque>
#include <map>

namespace oracle {

namespace {

// Remove one edge (parallel merge keeps the other of the pair).
gp::Graph drop_edge(const gp::Graph& g, gp::EdgeId victim) {
    gp::Graph out;
    out.node_labels = g.node_labels;
    for (gp::EdgeId e = 0; e < g.edges.size(); ++e)
        if (e != victim)
            out.add_edge(g.edges[e].src, g.edges[e].tgt, g.edges[e].label);
    return out;
}

// Contract the middle node of u -e1-> v -e2-> w into a single u->w edge
// carrying e1's label.
gp::Graph contract(const gp::Graph& g, gp::NodeId v, gp::EdgeId e1,
                   gp::EdgeId e2) {
    gp::Graph out;
    std::vector<gp::NodeId> remap(g.node_labels.size(), 0);
    for (gp::NodeId n = 0; n < g.node_labels.size(); ++n)
        if (n != v)
            remap[n] = out.add_node(g.node_labels[n]);
    for (gp::EdgeId e = 0; e < g.edges.size(); ++e)
        if (e != e1 && e != e2)
            out.add_edge(remap[g.edges[e].src], remap[g.edges[e].tgt],
                         g.edges[e].label);
    out.add_edge(remap[g.edges[e1].src], remap[g.edges[e2].tgt],
                 g.edges[e1].label);
    return out;
}

bool sp_rec(const gp::Graph& g, std::map<std::string, bool>& memo) {
    if (g.node_labels.size() == 2 && g.edges.size() == 1 &&
        g.edges[0].src != g.edges[0].tgt)
        return true;
    std::string key = exact_key(g);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    memo.emplace(key, false); // guard against revisits while recursing

    bool ok = false;
    // Parallel merges: distinct non-loop edges with equal direction.
    for (gp::EdgeId a = 0; a < g.edges.size() && !ok; ++a)
        for (gp::EdgeId b = 0; b < g.edges.size() && !ok; ++b) {
            if (a == b)
                continue;
            if (g.edges[a].src != g.edges[b].src ||
                g.edges[a].tgt != g.edges[b].tgt)
                continue;
            if (g.edges[a].src == g.edges[a].tgt)
                continue; // loops are untouchable (the rule needs two nodes)
            ok = sp_rec(drop_edge(g, b), memo);
        }
    // Series contractions: v with exactly one in, one out, three distinct
    // endpoints (injective matching), and no further incident edges (the
    // dangling condition).
    for (gp::NodeId v = 0; v < g.node_labels.size() && !ok; ++v) {
        std::vector<gp::EdgeId> ins, outs;
        bool extra = false;
        for (gp::EdgeId e = 0; e < g.edges.size(); ++e) {
            bool is_in = g.edges[e].tgt == v;
            bool is_out = g.edges[e].src == v;
            if (is_in && is_out)
                extra = true; // self-loop at v
            else if (is_in)
                ins.push_back(e);
            else if (is_out)
                outs.push_back(e);
        }
        if (extra || ins.size() != 1 || outs.size() != 1)
            continue;
        gp::NodeId u = g.edges[ins[0]].src;
        gp::NodeId w = g.edges[outs[0]].tgt;
        if (u == v || w == v || u == w)
            continue;
        ok = sp_rec(contract(g, v, ins[0], outs[0]), memo);
    }
    memo[key] = ok;
    return ok;
}

} // namespace

bool series_parallel(const gp::Graph& g) {
    std::map<std::string, bool> memo;
    return sp_rec(g, memo);
}

bool has_directed_cycle(const gp::Graph& g) {
    std::size_t n = g.node_labels.size();
    std::vector<std::vector<gp::NodeId>> adj(n);
    for (const auto& e : g.edges) {
        if (e.src == e.tgt)
            return true;
        adj[e.src].push_back(e.tgt);
    }
    std::vector<int> colour(n, 0); // 0 unvisited, 1 on stack, 2 finished
    for (gp::NodeId start = 0; start < n; ++start) {
        if (colour[start] != 0)
            continue;
        std::vector<std::pair<gp::NodeId, std::size_t>> stack{{start, 0}};
        colour[start] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i == adj[v].size()) {
                colour[v] = 2;
                stack.pop_back();
                continue;
            }
            gp::NodeId to = adj[v][i++];
            if (colour[to] == 1)
                return true;
            if (colour[to] == 0) {
                colour[to] = 1;
                stack.emplace_back(to, 0);
            }
        }
    }
    return false;
}

bool weakly_connected(const gp::Graph& g) {
    std::size_t n = g.node_labels.size();
    if (n == 0)
        return false;
    std::vector<char> seen(n, 0);
    std::deque<gp::NodeId> q{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        gp::NodeId v = q.front();
        q.pop_front();
        for (const auto& e : g.edges) {
            gp::NodeId other;
            if (e.src == v)
                other = e.tgt;
            else if (e.tgt == v)
                other = e.src;
            else
                continue;
            if (!seen[other]) {
                seen[other] = 1;
                ++count;
                q.push_back(other);
            }
        }
    }
    return count == n;
}

} // namespace oracle
