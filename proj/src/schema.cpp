#include "gp/schema.hpp"

#include <stdexcept>

namespace gp {

int CompiledSchema::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < var_names.size(); ++i)
        if (var_names[i] == name)
            return static_cast<int>(i);
    return -1;
}

bool CompiledSchema::deletes_nodes() const {
    for (char c : left_is_interface)
        if (!c)
            return true;
    return false;
}

namespace {

SimplePattern compile_component(const Expr& e, CompiledSchema& out) {
    SimplePattern p;
    if (auto* n = std::get_if<Expr::Num>(&e.node)) {
        p.kind = SimplePattern::Kind::Const;
        p.value = Atom(n->value);
    } else if (auto* s = std::get_if<Expr::Str>(&e.node)) {
        p.kind = SimplePattern::Kind::Const;
        p.value = Atom(s->value);
    } else if (auto* v = std::get_if<Expr::Var>(&e.node)) {
        p.kind = SimplePattern::Kind::Variable;
        int idx = out.var_index(v->name);
        if (idx < 0) {
            idx = static_cast<int>(out.var_names.size());
            out.var_names.push_back(v->name);
            out.var_types.push_back(e.type);
        }
        p.var = idx;
    } else {
        throw std::logic_error("left label component is not simple");
    }
    return p;
}

LabelPattern compile_label(const LabelExpr& l, CompiledSchema& out) {
    LabelPattern p;
    for (const ExprPtr& c : l.components)
        p.comps.push_back(compile_component(*c, out));
    return p;
}

} // namespace

CompiledSchema compile_schema(const RuleSchemaDecl& decl) {
    CompiledSchema out;
    out.name = decl.name;

    std::map<long long, int> left_index, right_index;
    for (const SchemaNode& n : decl.left.nodes) {
        left_index.emplace(n.id, static_cast<int>(out.left_nodes.size()));
        out.left_nodes.push_back(compile_label(n.label, out));
    }
    out.left_is_interface.assign(out.left_nodes.size(), 0);
    for (const SchemaEdge& e : decl.left.edges) {
        CompiledSchema::PatternEdge pe;
        pe.src = left_index.at(e.src);
        pe.tgt = left_index.at(e.tgt);
        pe.label = compile_label(e.label, out);
        out.left_edges.push_back(std::move(pe));
    }

    for (const SchemaNode& n : decl.right.nodes) {
        right_index.emplace(n.id, static_cast<int>(out.right_node_labels.size()));
        out.right_node_labels.push_back(n.label);
    }
    out.right_interface_slot.assign(out.right_node_labels.size(), -1);

    for (long long id : decl.interface_ids) {
        int slot = static_cast<int>(out.interface_ids.size());
        out.interface_ids.push_back(id);
        out.interface_left.push_back(left_index.at(id));
        out.interface_right.push_back(right_index.at(id));
        out.left_is_interface[left_index.at(id)] = 1;
        out.right_interface_slot[right_index.at(id)] = slot;
        out.id_to_interface_slot.emplace(id, slot);
    }

    for (const SchemaEdge& e : decl.right.edges) {
        CompiledSchema::RightEdge re;
        re.src = right_index.at(e.src);
        re.tgt = right_index.at(e.tgt);
        re.label = e.label;
        out.right_edges.push_back(std::move(re));
    }

    out.condition = decl.condition;
    return out;
}

const CompiledSchema* CompiledProgram::find_schema(const std::string& name) const {
    auto it = schema_index.find(name);
    if (it == schema_index.end())
        return nullptr;
    return &schemata[it->second];
}

CompiledProgram compile_program(Program prog) {
    CompiledProgram out;
    out.ast = std::move(prog);
    for (const RuleSchemaDecl& r : out.ast.rules) {
        out.schema_index.emplace(r.name, static_cast<int>(out.schemata.size()));
        out.schemata.push_back(compile_schema(r));
    }
    CompiledSchema skip;
    skip.name = kSkipSchemaName;
    out.skip_schema = static_cast<int>(out.schemata.size());
    out.schema_index.emplace(skip.name, out.skip_schema);
    out.schemata.push_back(std::move(skip));
    return out;
}

} // namespace gp
