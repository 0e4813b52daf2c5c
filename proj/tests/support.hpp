// Small helpers shared by the unit tests and the acceptance binary.
#ifndef GP_TEST_SUPPORT_HPP
#define GP_TEST_SUPPORT_HPP

#include "gp/check.hpp"
#include "gp/expand.hpp"
#include "gp/parser.hpp"
#include "gp/run.hpp"

#include <array>
#include <sstream>
#include <string>
#include <vector>

namespace support {

struct Compiled {
    std::optional<gp::CompiledProgram> prog;
    std::string error; // first diagnostic, empty on success
    bool ok() const { return prog.has_value(); }
};

inline Compiled compile_text(const std::string& text) {
    Compiled out;
    auto describe = [](const gp::Diagnostic& d) {
        return std::to_string(d.pos.line) + ":" + std::to_string(d.pos.col) +
               ": " + d.message;
    };
    gp::ParseResult pr = gp::parse_program(text);
    if (!pr.ok()) {
        out.error = "parse: " + describe(pr.errors.front());
        return out;
    }
    gp::ExpandResult ex = gp::expand_macros(*pr.program);
    if (!ex.ok()) {
        out.error = "expand: " + describe(ex.errors.front());
        return out;
    }
    std::vector<gp::Diagnostic> ds = gp::static_check(*ex.program);
    if (!ds.empty()) {
        out.error = "check: " + describe(ds.front());
        return out;
    }
    out.prog = gp::compile_program(std::move(*ex.program));
    return out;
}

// g({1, 2}, {{0,1,7}}): two nodes labelled [1],[2], one edge 0->1 labelled
// [7]. All labels single int atoms.
inline gp::Graph g(const std::vector<long>& nodes,
                   const std::vector<std::array<long, 3>>& edges = {}) {
    gp::Graph out;
    for (long v : nodes)
        out.add_node(gp::int_label(v));
    for (const auto& e : edges)
        out.add_edge(static_cast<gp::NodeId>(e[0]), static_cast<gp::NodeId>(e[1]),
                     gp::int_label(e[2]));
    return out;
}

inline gp::Label label2(long a, long b) {
    return gp::Label{{gp::Atom(gp::Int(a)), gp::Atom(gp::Int(b))}};
}

} // namespace support

#endif
