#include "gp/eval.hpp"

#include <stdexcept>

namespace gp {

std::optional<Atom> Assignment::lookup(const std::string& name) const {
    if (!schema)
        return std::nullopt;
    int idx = schema->var_index(name);
    if (idx < 0 || !values[idx])
        return std::nullopt;
    return values[idx];
}

std::string Assignment::summary() const {
    std::string out;
    if (!schema)
        return out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i])
            continue;
        if (!out.empty())
            out += ' ';
        out += schema->var_names[i];
        out += '=';
        out += values[i]->to_literal();
    }
    return out;
}

std::optional<Atom> eval_expr(const Expr& e, const Assignment& a) {
    if (auto* n = std::get_if<Expr::Num>(&e.node))
        return Atom(n->value);
    if (auto* s = std::get_if<Expr::Str>(&e.node))
        return Atom(s->value);
    if (auto* v = std::get_if<Expr::Var>(&e.node)) {
        std::optional<Atom> bound = a.lookup(v->name);
        if (!bound)
            throw std::logic_error("unbound variable '" + v->name +
                                   "' in evaluation");
        return bound;
    }
    auto& b = std::get<Expr::BinOp>(e.node);
    std::optional<Atom> l = eval_expr(*b.lhs, a);
    std::optional<Atom> r = eval_expr(*b.rhs, a);
    if (!l || !r)
        return std::nullopt;
    const Int& x = l->as_int();
    const Int& y = r->as_int();
    switch (b.op) {
    case '+':
        return Atom(x + y);
    case '-':
        return Atom(x - y);
    case '*':
        return Atom(x * y);
    case '/':
        if (y == 0)
            return std::nullopt; // division by zero: evaluation failure
        return Atom(x / y);      // truncates toward zero
    }
    throw std::logic_error("unknown arithmetic operator");
}

std::optional<Label> eval_label(const LabelExpr& l, const Assignment& a) {
    Label out;
    for (const ExprPtr& c : l.components) {
        std::optional<Atom> v = eval_expr(*c, a);
        if (!v)
            return std::nullopt;
        out.atoms.push_back(std::move(*v));
    }
    return out;
}

namespace {

std::optional<bool> eval_rel(const CondExpr::Rel& r, const Assignment& a) {
    std::optional<Atom> l = eval_expr(*r.lhs, a);
    std::optional<Atom> rv = eval_expr(*r.rhs, a);
    if (!l || !rv)
        return std::nullopt;
    if (r.op == "=")
        return *l == *rv;
    if (r.op == "\\=")
        return *l != *rv;
    const Int& x = l->as_int();
    const Int& y = rv->as_int();
    if (r.op == ">")
        return x > y;
    if (r.op == "<")
        return x < y;
    if (r.op == ">=")
        return x >= y;
    if (r.op == "<=")
        return x <= y;
    throw std::logic_error("unknown relational operator");
}

} // namespace

std::optional<bool> eval_condition(const CondExpr& c, const CompiledSchema& schema,
                                   const Assignment& a,
                                   const std::vector<NodeId>& node_image,
                                   const Graph& host) {
    if (auto* e = std::get_if<CondExpr::EdgePred>(&c.node)) {
        NodeId src = node_image[static_cast<std::size_t>(
            schema.interface_left[schema.id_to_interface_slot.at(e->v)])];
        NodeId tgt = node_image[static_cast<std::size_t>(
            schema.interface_left[schema.id_to_interface_slot.at(e->w)])];
        for (const Graph::Edge& he : host.edges)
            if (he.src == src && he.tgt == tgt)
                return true;
        return false;
    }
    if (auto* r = std::get_if<CondExpr::Rel>(&c.node))
        return eval_rel(*r, a);
    if (auto* n = std::get_if<CondExpr::Not>(&c.node)) {
        std::optional<bool> v =
            eval_condition(*n->child, schema, a, node_image, host);
        if (!v)
            return std::nullopt;
        return !*v;
    }
    auto& b = std::get<CondExpr::Bool>(c.node);
    std::optional<bool> l = eval_condition(*b.lhs, schema, a, node_image, host);
    std::optional<bool> r = eval_condition(*b.rhs, schema, a, node_image, host);
    if (!l || !r)
        return std::nullopt;
    return b.op == "and" ? (*l && *r) : (*l || *r);
}

} // namespace gp
