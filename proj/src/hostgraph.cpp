#include "gp/hostgraph.hpp"

#include "gp/canonical.hpp"
#include "gp/lexer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gp {

namespace {

struct HostEntry {
    bool is_node = false;
    long long a = 0; // node id / edge source
    long long b = 0; // edge target
    Label label;
    SourcePos pos;
};

struct HostParser {
    const std::vector<Token>& toks;
    std::size_t i = 0;
    std::vector<Diagnostic>& errors;

    const Token& peek() const { return toks[i]; }
    void skip_separators() {
        while (peek().kind == Tok::Newline)
            ++i;
    }

    bool entry_error(const std::string& msg) {
        errors.push_back(Diagnostic{peek().pos, msg});
        // resync to the next line
        while (peek().kind != Tok::Newline && peek().kind != Tok::End)
            ++i;
        return false;
    }

    std::optional<long long> parse_id(const char* what) {
        if (peek().kind != Tok::Num) {
            entry_error(std::string("expected ") + what);
            return std::nullopt;
        }
        try {
            long long v = std::stoll(toks[i].text);
            if (v < 1) {
                entry_error(std::string(what) + " must be positive");
                return std::nullopt;
            }
            ++i;
            return v;
        } catch (const std::out_of_range&) {
            entry_error(std::string(what) + " is out of range");
            return std::nullopt;
        }
    }

    std::optional<Label> parse_ground_label() {
        Label out;
        while (true) {
            const Token& t = peek();
            if (t.kind == Tok::Num) {
                out.atoms.push_back(Atom(Int(t.text)));
                ++i;
            } else if (t.kind == Tok::Minus) {
                ++i;
                if (peek().kind != Tok::Num) {
                    entry_error("expected numeral after '-'");
                    return std::nullopt;
                }
                out.atoms.push_back(Atom(-Int(toks[i].text)));
                ++i;
            } else if (t.kind == Tok::Str) {
                out.atoms.push_back(Atom(t.text));
                ++i;
            } else if (t.kind == Tok::Ident) {
                entry_error("variable '" + t.text +
                            "' in a host label (labels must be ground)");
                return std::nullopt;
            } else {
                entry_error("expected a label atom");
                return std::nullopt;
            }
            if (peek().kind != Tok::Underscore)
                return out;
            ++i;
        }
    }

    bool parse_entry(std::vector<HostEntry>& out) {
        HostEntry e;
        e.pos = peek().pos;
        if (peek().kind != Tok::Ident ||
            (peek().text != "node" && peek().text != "edge"))
            return entry_error("expected 'node' or 'edge'");
        e.is_node = peek().text == "node";
        ++i;
        auto a = parse_id(e.is_node ? "node id" : "edge source id");
        if (!a)
            return false;
        e.a = *a;
        if (!e.is_node) {
            auto b = parse_id("edge target id");
            if (!b)
                return false;
            e.b = *b;
        }
        auto label = parse_ground_label();
        if (!label)
            return false;
        e.label = std::move(*label);
        if (peek().kind != Tok::Newline && peek().kind != Tok::End)
            return entry_error("trailing input after entry");
        out.push_back(std::move(e));
        return true;
    }
};

} // namespace

HostParseResult parse_host(const std::string& text) {
    HostParseResult out;
    LexResult lr = lex(text);
    out.errors = lr.errors;
    if (!out.errors.empty())
        return out;

    std::vector<HostEntry> entries;
    HostParser p{lr.tokens, 0, out.errors};
    while (true) {
        p.skip_separators();
        if (p.peek().kind == Tok::End)
            break;
        p.parse_entry(entries);
    }
    if (!out.errors.empty())
        return out;

    Graph g;
    std::map<long long, NodeId> ids;
    for (const HostEntry& e : entries) {
        if (!e.is_node)
            continue;
        if (ids.count(e.a)) {
            out.errors.push_back(Diagnostic{
                e.pos, "duplicate node id " + std::to_string(e.a)});
            continue;
        }
        ids.emplace(e.a, g.add_node(e.label));
    }
    for (const HostEntry& e : entries) {
        if (e.is_node)
            continue;
        auto s = ids.find(e.a);
        auto t = ids.find(e.b);
        if (s == ids.end()) {
            out.errors.push_back(
                Diagnostic{e.pos, "edge " + std::to_string(e.a) + " " +
                                      std::to_string(e.b) + ": source node " +
                                      std::to_string(e.a) + " is not declared"});
            continue;
        }
        if (t == ids.end()) {
            out.errors.push_back(
                Diagnostic{e.pos, "edge " + std::to_string(e.a) + " " +
                                      std::to_string(e.b) + ": target node " +
                                      std::to_string(e.b) + " is not declared"});
            continue;
        }
        g.add_edge(s->second, t->second, e.label);
    }
    if (!out.errors.empty())
        return out;
    out.graph = std::move(g);
    return out;
}

std::string serialize_host(const Graph& g) {
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!g.node_labels[v])
            throw std::invalid_argument("serialize_host: node " +
                                        std::to_string(v) + " is unlabelled");

    std::vector<NodeId> order = canonical_order(g);
    std::vector<long long> new_id(g.node_count(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        new_id[order[pos]] = static_cast<long long>(pos) + 1;

    std::string out = "# " + std::to_string(g.node_count()) + " nodes, " +
                      std::to_string(g.edge_count()) + " edges\n";
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        out += "node " + std::to_string(pos + 1) + " " +
               g.node_labels[order[pos]]->to_literal() + "\n";

    struct Line {
        long long s, t;
        std::string enc; // label tiebreak
        std::string text;
    };
    std::vector<Line> lines;
    lines.reserve(g.edge_count());
    for (const Graph::Edge& e : g.edges) {
        Line l;
        l.s = new_id[e.src];
        l.t = new_id[e.tgt];
        e.label.encode(l.enc);
        l.text = "edge " + std::to_string(l.s) + " " + std::to_string(l.t) +
                 " " + e.label.to_literal() + "\n";
        lines.push_back(std::move(l));
    }
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return std::tie(a.s, a.t, a.enc) < std::tie(b.s, b.t, b.enc);
    });
    for (const Line& l : lines)
        out += l.text;
    return out;
}

} // namespace gp
