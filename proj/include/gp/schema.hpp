#ifndef GP_SCHEMA_HPP
#define GP_SCHEMA_HPP

#include "gp/ast.hpp"
#include "gp/graph.hpp"

#include <map>

namespace gp {

// Name of the reserved always-applicable identity schema (empty left and
// right graphs) that backs `skip`. Contains '<' so no user declaration can
// collide with it.
inline const char* const kSkipSchemaName = "<skip>";

// One component of a compiled left label: either a concrete atom or a slot
// for a schema variable, to be bound by positional unification.
struct SimplePattern {
    enum class Kind { Const, Variable } kind = Kind::Const;
    Atom value; // Const
    int var = -1; // Variable: index into var_names/var_types
};

struct LabelPattern {
    std::vector<SimplePattern> comps; // nonempty
};

// A rule schema lowered to dense indices: left nodes are 0..n-1 in
// declaration order, interface correspondence is precomputed, and right
// labels stay as expressions for per-match instantiation. The interface
// graph K is implicit: the interface nodes, unlabelled, with no edges.
struct CompiledSchema {
    std::string name;

    std::vector<std::string> var_names;
    std::vector<ExprType> var_types;

    std::vector<LabelPattern> left_nodes;
    struct PatternEdge {
        int src = 0;
        int tgt = 0;
        LabelPattern label;
    };
    std::vector<PatternEdge> left_edges;
    std::vector<char> left_is_interface; // per left node

    // interface in declared order: original id, left index, right index
    std::vector<long long> interface_ids;
    std::vector<int> interface_left;
    std::vector<int> interface_right;

    std::vector<LabelExpr> right_node_labels;
    std::vector<int> right_interface_slot; // per right node: slot or -1 (added node)
    struct RightEdge {
        int src = 0; // indices into right nodes
        int tgt = 0;
        LabelExpr label;
    };
    std::vector<RightEdge> right_edges;

    CondPtr condition; // may be null

    std::map<long long, int> id_to_interface_slot; // for edge(v,w)

    int var_index(const std::string& name) const;
    bool deletes_nodes() const;
};

// Pre: decl passed static_check.
CompiledSchema compile_schema(const RuleSchemaDecl& decl);

struct CompiledProgram {
    Program ast; // macro-free, checked
    std::vector<CompiledSchema> schemata; // declaration order, then the skip schema
    std::map<std::string, int> schema_index;
    int skip_schema = -1;

    const CompiledSchema* find_schema(const std::string& name) const;
};

// Pre: prog is macro-free and passed static_check. Injects the reserved
// skip schema.
CompiledProgram compile_program(Program prog);

} // namespace gp

#endif
