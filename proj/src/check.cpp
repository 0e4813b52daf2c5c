#include "gp/check.hpp"

#include <map>
#include <set>

namespace gp {

namespace {

struct Checker {
    std::vector<Diagnostic>& errors;
    std::string where; // "schema 'x': " prefix for current declaration

    std::map<std::string, ExprType> params;
    std::set<std::string> left_vars;
    std::set<long long> interface_set;

    void error(SourcePos pos, const std::string& msg) {
        errors.push_back(Diagnostic{pos, where + msg});
    }

    // Annotates e.type. In right-graph and condition positions every
    // variable must additionally occur in the left graph, otherwise no
    // assignment could bind it.
    ExprType type_expr(Expr& e, bool needs_left_occurrence) {
        ExprType t = ExprType::Unknown;
        if (std::holds_alternative<Expr::Num>(e.node)) {
            t = ExprType::Int;
        } else if (std::holds_alternative<Expr::Str>(e.node)) {
            t = ExprType::String;
        } else if (auto* v = std::get_if<Expr::Var>(&e.node)) {
            auto p = params.find(v->name);
            if (p == params.end()) {
                error(e.pos, "undeclared variable '" + v->name + "'");
            } else {
                t = p->second;
                if (needs_left_occurrence && !left_vars.count(v->name))
                    error(e.pos, "variable '" + v->name +
                                     "' does not occur in the left graph");
            }
        } else if (auto* b = std::get_if<Expr::BinOp>(&e.node)) {
            ExprType lt = type_expr(*b->lhs, needs_left_occurrence);
            ExprType rt = type_expr(*b->rhs, needs_left_occurrence);
            if (lt == ExprType::String || rt == ExprType::String)
                error(e.pos, std::string("operator '") + b->op +
                                 "' expects arguments of type int");
            t = ExprType::Int;
        }
        e.type = t;
        return t;
    }

    void check_left_label(const LabelExpr& l, const std::string& what) {
        for (const ExprPtr& c : l.components) {
            if (!c->is_simple()) {
                error(c->pos, "left " + what + " labels must be simple expressions");
                type_expr(*c, false);
                continue;
            }
            if (auto* v = std::get_if<Expr::Var>(&c->node)) {
                auto p = params.find(v->name);
                if (p == params.end()) {
                    error(c->pos, "undeclared variable '" + v->name + "'");
                    c->type = ExprType::Unknown;
                } else {
                    c->type = p->second;
                    left_vars.insert(v->name);
                }
            } else {
                type_expr(*c, false);
            }
        }
    }

    void check_cond(CondExpr& c) {
        if (auto* e = std::get_if<CondExpr::EdgePred>(&c.node)) {
            if (!interface_set.count(e->v))
                error(c.pos, "edge predicate argument " + std::to_string(e->v) +
                                 " is not an interface node");
            if (!interface_set.count(e->w))
                error(c.pos, "edge predicate argument " + std::to_string(e->w) +
                                 " is not an interface node");
        } else if (auto* r = std::get_if<CondExpr::Rel>(&c.node)) {
            ExprType lt = type_expr(*r->lhs, true);
            ExprType rt = type_expr(*r->rhs, true);
            bool ordering = r->op != "=" && r->op != "\\=";
            if (ordering) {
                if (lt == ExprType::String || rt == ExprType::String)
                    error(c.pos, "ordering operator '" + r->op +
                                     "' expects arguments of type int");
            } else if (lt != ExprType::Unknown && rt != ExprType::Unknown &&
                       lt != rt) {
                error(c.pos, "'" + r->op + "' compares values of different types");
            }
        } else if (auto* n = std::get_if<CondExpr::Not>(&c.node)) {
            check_cond(*n->child);
        } else if (auto* b = std::get_if<CondExpr::Bool>(&c.node)) {
            check_cond(*b->lhs);
            check_cond(*b->rhs);
        }
    }

    void check_schema(RuleSchemaDecl& r) {
        where = "schema '" + r.name + "': ";
        params.clear();
        left_vars.clear();
        interface_set.clear();

        for (const Param& p : r.params)
            if (!params.emplace(p.name, p.type).second)
                error(p.pos, "duplicate parameter '" + p.name + "'");

        std::set<long long> left_ids, right_ids;
        for (const SchemaNode& n : r.left.nodes)
            if (!left_ids.insert(n.id).second)
                error(n.pos, "duplicate left node id " + std::to_string(n.id));
        for (const SchemaNode& n : r.right.nodes)
            if (!right_ids.insert(n.id).second)
                error(n.pos, "duplicate right node id " + std::to_string(n.id));
        for (const SchemaEdge& e : r.left.edges) {
            if (!left_ids.count(e.src))
                error(e.pos, "left edge source " + std::to_string(e.src) +
                                 " is not a left node");
            if (!left_ids.count(e.tgt))
                error(e.pos, "left edge target " + std::to_string(e.tgt) +
                                 " is not a left node");
        }
        for (const SchemaEdge& e : r.right.edges) {
            if (!right_ids.count(e.src))
                error(e.pos, "right edge source " + std::to_string(e.src) +
                                 " is not a right node");
            if (!right_ids.count(e.tgt))
                error(e.pos, "right edge target " + std::to_string(e.tgt) +
                                 " is not a right node");
        }

        for (long long id : r.interface_ids) {
            if (!interface_set.insert(id).second)
                error(r.pos, "interface lists node " + std::to_string(id) + " twice");
            if (!left_ids.count(id))
                error(r.pos, "interface node " + std::to_string(id) +
                                 " is missing from the left graph");
            if (!right_ids.count(id))
                error(r.pos, "interface node " + std::to_string(id) +
                                 " is missing from the right graph");
        }

        // Left labels first: later passes need to know which variables get
        // bound by matching.
        for (const SchemaNode& n : r.left.nodes)
            check_left_label(n.label, "node");
        for (const SchemaEdge& e : r.left.edges)
            check_left_label(e.label, "edge");

        for (SchemaNode& n : r.right.nodes)
            for (const ExprPtr& c : n.label.components)
                type_expr(*c, true);
        for (SchemaEdge& e : r.right.edges)
            for (const ExprPtr& c : e.label.components)
                type_expr(*c, true);

        if (r.condition)
            check_cond(*r.condition);
    }
};

struct CommandChecker {
    std::vector<Diagnostic>& errors;
    std::set<std::string> rule_names;
    std::set<std::string> macro_set;

    void check_seq(const CommandSeq& seq) {
        for (const CommandPtr& c : seq)
            check_cmd(*c);
    }

    void check_cmd(const Command& c) {
        if (auto* r = std::get_if<Command::RuleSetCall>(&c.node)) {
            for (const std::string& name : r->rules) {
                if (rule_names.count(name))
                    continue;
                if (macro_set.count(name))
                    errors.push_back(Diagnostic{
                        c.pos, "'" + name +
                                   "' names a macro; only rule schemata may "
                                   "appear in a rule-set call"});
                else
                    errors.push_back(Diagnostic{
                        c.pos, "call of undeclared rule schema '" + name + "'"});
            }
        } else if (std::get_if<Command::MacroCall>(&c.node)) {
            errors.push_back(
                Diagnostic{c.pos, "internal: macro call survived expansion"});
        } else if (auto* ite = std::get_if<Command::IfThenElse>(&c.node)) {
            check_seq(ite->cond);
            check_seq(ite->then_branch);
            check_seq(ite->else_branch);
        } else if (auto* it = std::get_if<Command::IfThen>(&c.node)) {
            check_seq(it->cond);
            check_seq(it->then_branch);
        } else if (auto* b = std::get_if<Command::Bang>(&c.node)) {
            check_seq(b->body);
        }
    }
};

} // namespace

std::vector<Diagnostic> static_check(Program& prog,
                                     const std::vector<std::string>& macro_names) {
    std::vector<Diagnostic> errors;

    Checker ck{errors, {}, {}, {}, {}};
    for (RuleSchemaDecl& r : prog.rules)
        ck.check_schema(r);

    CommandChecker cc{errors, {}, {}};
    for (const RuleSchemaDecl& r : prog.rules)
        cc.rule_names.insert(r.name);
    cc.macro_set.insert(macro_names.begin(), macro_names.end());
    if (prog.main.empty())
        errors.push_back(Diagnostic{prog.main_pos, "empty main sequence"});
    cc.check_seq(prog.main);

    return errors;
}

} // namespace gp
