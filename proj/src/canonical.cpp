#include "gp/canonical.hpp"

#include "gp/threads.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace gp {

namespace {

struct Canonicalizer {
    const Graph& g;
    std::size_t n;
    std::vector<std::string> node_code;            // encoded node label
    std::vector<std::string> edge_code;            // encoded edge label
    std::vector<std::vector<EdgeId>> out_edges;    // by source
    std::vector<std::vector<EdgeId>> in_edges;     // by target
    std::vector<std::size_t> degree;

    std::string best;
    std::vector<NodeId> best_order;

    explicit Canonicalizer(const Graph& graph) : g(graph), n(graph.node_count()) {
        node_code.resize(n);
        for (std::size_t v = 0; v < n; ++v) {
            if (!g.node_labels[v])
                throw std::invalid_argument("canonical_key: node without label");
            g.node_labels[v]->encode(node_code[v]);
        }
        edge_code.resize(g.edge_count());
        out_edges.resize(n);
        in_edges.resize(n);
        degree.assign(n, 0);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            g.edges[e].label.encode(edge_code[e]);
            out_edges[g.edges[e].src].push_back(e);
            in_edges[g.edges[e].tgt].push_back(e);
            ++degree[g.edges[e].src];
            ++degree[g.edges[e].tgt];
        }
    }

    // Reassign ranks 0..k-1 by sorted signature order, so ranks depend only
    // on the multiset of signatures, not on node ids.
    static std::vector<int> rank_by_signature(const std::vector<std::string>& sig) {
        std::vector<std::string> sorted(sig);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> rank(sig.size());
        for (std::size_t v = 0; v < sig.size(); ++v)
            rank[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        return rank;
    }

    std::vector<int> refine(std::vector<std::string> sig) const {
        std::vector<int> rank = rank_by_signature(sig);
        for (std::size_t round = 0; round <= n + 1; ++round) {
            std::vector<std::string> next(n);
            for (std::size_t v = 0; v < n; ++v) {
                std::vector<std::string> entries;
                entries.reserve(out_edges[v].size() + in_edges[v].size());
                for (EdgeId e : out_edges[v])
                    entries.push_back("o" + edge_code[e] + "#" +
                                      std::to_string(rank[g.edges[e].tgt]));
                for (EdgeId e : in_edges[v])
                    entries.push_back("i" + edge_code[e] + "#" +
                                      std::to_string(rank[g.edges[e].src]));
                std::sort(entries.begin(), entries.end());
                std::string s = std::to_string(rank[v]);
                s += '|';
                for (const std::string& en : entries) {
                    s += en;
                    s += ';';
                }
                next[v] = std::move(s);
            }
            std::vector<int> nrank = rank_by_signature(next);
            if (nrank == rank)
                break;
            rank = std::move(nrank);
        }
        return rank;
    }

    // Encoding of the graph under a total node order given as ranks
    // (all-singleton cells, except interchangeable isolated nodes).
    std::string encode(const std::vector<int>& rank, std::vector<NodeId>* order_out) const {
        std::vector<NodeId> order(n);
        for (std::size_t v = 0; v < n; ++v)
            order[v] = static_cast<NodeId>(v);
        std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
            if (rank[a] != rank[b])
                return rank[a] < rank[b];
            return a < b; // only reached for interchangeable isolated nodes
        });
        std::vector<int> pos(n);
        for (std::size_t i = 0; i < n; ++i)
            pos[order[i]] = static_cast<int>(i);

        std::string out = "G" + std::to_string(n) + "," + std::to_string(g.edge_count()) + "|";
        for (NodeId v : order) {
            out += node_code[v];
            out += ';';
        }
        std::vector<std::string> etriples;
        etriples.reserve(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            std::string t = std::to_string(pos[g.edges[e].src]);
            t += '>';
            t += std::to_string(pos[g.edges[e].tgt]);
            t += ':';
            t += edge_code[e];
            etriples.push_back(std::move(t));
        }
        std::sort(etriples.begin(), etriples.end());
        for (const std::string& t : etriples) {
            out += t;
            out += ';';
        }
        if (order_out)
            *order_out = std::move(order);
        return out;
    }

    // A cell needs no branching when its members are isolated: equal labels
    // and no incident edges make any internal order encode identically.
    int branch_cell(const std::vector<int>& rank) const {
        std::vector<std::size_t> cell_size;
        for (std::size_t v = 0; v < n; ++v) {
            if (cell_size.size() <= static_cast<std::size_t>(rank[v]))
                cell_size.resize(rank[v] + 1, 0);
            ++cell_size[rank[v]];
        }
        for (std::size_t r = 0; r < cell_size.size(); ++r) {
            if (cell_size[r] <= 1)
                continue;
            bool all_isolated = true;
            for (std::size_t v = 0; v < n && all_isolated; ++v)
                if (rank[v] == static_cast<int>(r) && degree[v] != 0)
                    all_isolated = false;
            if (!all_isolated)
                return static_cast<int>(r);
        }
        return -1;
    }

    void search(const std::vector<int>& rank) {
        int cell = branch_cell(rank);
        if (cell < 0) {
            std::vector<NodeId> order;
            std::string enc = encode(rank, &order);
            if (best.empty() || enc < best) {
                best = std::move(enc);
                best_order = std::move(order);
            }
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (rank[v] != cell)
                continue;
            std::vector<std::string> sig(n);
            for (std::size_t w = 0; w < n; ++w)
                sig[w] = std::to_string(rank[w]);
            sig[v] = "*" + sig[v]; // '*' sorts before digits: v splits off first
            search(refine(std::move(sig)));
        }
    }

    void run() {
        std::vector<std::string> sig(node_code);
        search(refine(std::move(sig)));
    }
};

} // namespace

std::string canonical_key(const Graph& g) {
    Canonicalizer c(g);
    c.run();
    return c.best;
}

std::vector<NodeId> canonical_order(const Graph& g) {
    Canonicalizer c(g);
    c.run();
    return c.best_order;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_key(a) == canonical_key(b);
}

std::string key_digest(const std::string& key) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::vector<std::string> batch_canonical_keys(const std::vector<const Graph*>& graphs) {
    std::vector<std::string> out(graphs.size());
#ifdef GP_HAVE_OPENMP
    if (thread_count() > 1 && graphs.size() > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (std::size_t i = 0; i < graphs.size(); ++i)
            out[i] = canonical_key(*graphs[i]);
        return out;
    }
#endif
    for (std::size_t i = 0; i < graphs.size(); ++i)
        out[i] = canonical_key(*graphs[i]);
    return out;
}

} // namespace gp
