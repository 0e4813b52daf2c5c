#ifndef GP_EVAL_HPP
#define GP_EVAL_HPP

#include "gp/schema.hpp"

#include <optional>

namespace gp {

// A type-respecting binding of schema variables to atoms, indexed in the
// schema's variable order. Entries are nullopt until matching binds them.
struct Assignment {
    const CompiledSchema* schema = nullptr;
    std::vector<std::optional<Atom>> values;

    explicit Assignment(const CompiledSchema& s)
        : schema(&s), values(s.var_names.size()) {}
    Assignment() = default;

    std::optional<Atom> lookup(const std::string& name) const;
    std::string summary() const; // "x=3 y=\"a\"" in variable order
};

// All evaluation reports division by zero as nullopt (a distinguished
// failure outcome, never an exception): the affected match or application
// is simply not available.
std::optional<Atom> eval_expr(const Expr& e, const Assignment& a);
std::optional<Label> eval_label(const LabelExpr& l, const Assignment& a);

// Condition of a schema under an assignment and a (partial) node image of
// the left graph into host. node_image maps left node indices to host
// nodes; it must cover the interface. Both operands of and/or are always
// evaluated: a division by zero anywhere fails the whole condition.
std::optional<bool> eval_condition(const CondExpr& c, const CompiledSchema& schema,
                                   const Assignment& a,
                                   const std::vector<NodeId>& node_image,
                                   const Graph& host);

} // namespace gp

#endif
