#include "gp/ast.hpp"

#include <sstream>

namespace gp {

const char* to_string(ExprType t) {
    switch (t) {
    case ExprType::Int:
        return "int";
    case ExprType::String:
        return "string";
    default:
        return "unknown";
    }
}

CommandPtr make_command(Command c) {
    return std::make_shared<const Command>(std::move(c));
}

const RuleSchemaDecl* Program::find_rule(const std::string& name) const {
    for (const auto& r : rules)
        if (r.name == name)
            return &r;
    return nullptr;
}

const MacroDecl* Program::find_macro(const std::string& name) const {
    for (const auto& m : macros)
        if (m.name == name)
            return &m;
    return nullptr;
}

namespace {

int precedence(char op) {
    return (op == '*' || op == '/') ? 2 : 1;
}

void print_expr_rec(const Expr& e, int parent_prec, bool right_side, std::string& out) {
    if (auto* n = std::get_if<Expr::Num>(&e.node)) {
        out += n->value.str();
    } else if (auto* s = std::get_if<Expr::Str>(&e.node)) {
        out += Atom(s->value).to_literal();
    } else if (auto* v = std::get_if<Expr::Var>(&e.node)) {
        out += v->name;
    } else {
        const auto& b = std::get<Expr::BinOp>(e.node);
        int prec = precedence(b.op);
        bool parens = prec < parent_prec || (prec == parent_prec && right_side);
        if (parens)
            out += '(';
        print_expr_rec(*b.lhs, prec, false, out);
        out += ' ';
        out += b.op;
        out += ' ';
        print_expr_rec(*b.rhs, prec, true, out);
        if (parens)
            out += ')';
    }
}

int cond_precedence(const CondExpr& c) {
    if (std::holds_alternative<CondExpr::Bool>(c.node))
        return std::get<CondExpr::Bool>(c.node).op == "or" ? 1 : 2;
    if (std::holds_alternative<CondExpr::Not>(c.node))
        return 3;
    return 4;
}

void print_cond_rec(const CondExpr& c, int parent_prec, bool right_side, std::string& out) {
    if (auto* e = std::get_if<CondExpr::EdgePred>(&c.node)) {
        out += "edge(" + std::to_string(e->v) + ", " + std::to_string(e->w) + ")";
    } else if (auto* r = std::get_if<CondExpr::Rel>(&c.node)) {
        print_expr_rec(*r->lhs, 0, false, out);
        out += ' ';
        out += r->op;
        out += ' ';
        print_expr_rec(*r->rhs, 0, false, out);
    } else if (auto* n = std::get_if<CondExpr::Not>(&c.node)) {
        out += "not ";
        print_cond_rec(*n->child, 3, false, out);
    } else {
        const auto& b = std::get<CondExpr::Bool>(c.node);
        int prec = cond_precedence(c);
        bool parens = prec < parent_prec || (prec == parent_prec && right_side);
        if (parens)
            out += '(';
        print_cond_rec(*b.lhs, prec, false, out);
        out += ' ';
        out += b.op;
        out += ' ';
        print_cond_rec(*b.rhs, prec, true, out);
        if (parens)
            out += ')';
    }
}

void print_command_rec(const Command& c, std::string& out);

void print_seq_rec(const CommandSeq& seq, std::string& out) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0)
            out += "; ";
        print_command_rec(*seq[i], out);
    }
}

// A sequence in single-command position (loop body, branch) gets parentheses
// when it has more than one element.
void print_seq_grouped(const CommandSeq& seq, std::string& out) {
    bool parens = seq.size() != 1;
    if (!parens) {
        // bare if in a loop body still needs parentheses: bang binds tighter
        print_command_rec(*seq[0], out);
        return;
    }
    out += '(';
    print_seq_rec(seq, out);
    out += ')';
}

void print_command_rec(const Command& c, std::string& out) {
    if (auto* r = std::get_if<Command::RuleSetCall>(&c.node)) {
        if (!r->braced && r->rules.size() == 1) {
            out += r->rules[0];
        } else {
            out += '{';
            for (std::size_t i = 0; i < r->rules.size(); ++i) {
                if (i > 0)
                    out += ", ";
                out += r->rules[i];
            }
            out += '}';
        }
    } else if (auto* m = std::get_if<Command::MacroCall>(&c.node)) {
        out += m->name;
    } else if (auto* ite = std::get_if<Command::IfThenElse>(&c.node)) {
        out += "if ";
        print_seq_rec(ite->cond, out);
        out += " then ";
        print_seq_grouped(ite->then_branch, out);
        out += " else ";
        print_seq_grouped(ite->else_branch, out);
    } else if (auto* it = std::get_if<Command::IfThen>(&c.node)) {
        out += "if ";
        print_seq_rec(it->cond, out);
        out += " then ";
        print_seq_grouped(it->then_branch, out);
    } else if (auto* b = std::get_if<Command::Bang>(&c.node)) {
        const CommandSeq& body = b->body;
        bool parens = body.size() != 1 ||
                      std::holds_alternative<Command::IfThenElse>(body[0]->node) ||
                      std::holds_alternative<Command::IfThen>(body[0]->node);
        if (parens) {
            out += '(';
            print_seq_rec(body, out);
            out += ')';
        } else {
            print_command_rec(*body[0], out);
        }
        out += '!';
    } else if (std::holds_alternative<Command::Skip>(c.node)) {
        out += "skip";
    } else {
        out += "fail";
    }
}

void print_schema_graph(const char* kw, const SchemaGraph& g, std::string& out) {
    out += "  ";
    out += kw;
    out += " {";
    bool first = true;
    for (const auto& n : g.nodes) {
        out += first ? " " : "; ";
        first = false;
        out += "node " + std::to_string(n.id) + " " + print_label_expr(n.label);
    }
    for (const auto& e : g.edges) {
        out += first ? " " : "; ";
        first = false;
        out += "edge " + std::to_string(e.src) + " " + std::to_string(e.tgt) + " " +
               print_label_expr(e.label);
    }
    out += " }\n";
}

} // namespace

std::string print_expr(const Expr& e) {
    std::string out;
    print_expr_rec(e, 0, false, out);
    return out;
}

std::string print_label_expr(const LabelExpr& l) {
    std::string out;
    for (std::size_t i = 0; i < l.components.size(); ++i) {
        if (i > 0)
            out += '_';
        const Expr& e = *l.components[i];
        bool parens = !e.is_simple();
        if (parens)
            out += '(';
        print_expr_rec(e, 0, false, out);
        if (parens)
            out += ')';
    }
    return out;
}

std::string print_cond(const CondExpr& c) {
    std::string out;
    print_cond_rec(c, 0, false, out);
    return out;
}

std::string print_command(const Command& c) {
    std::string out;
    print_command_rec(c, out);
    return out;
}

std::string print_seq(const CommandSeq& seq) {
    std::string out;
    print_seq_rec(seq, out);
    return out;
}

std::string print_program(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) {
        out += r.name + "(";
        // group consecutive params of the same type
        for (std::size_t i = 0; i < r.params.size();) {
            std::size_t j = i;
            while (j < r.params.size() && r.params[j].type == r.params[i].type)
                ++j;
            if (i > 0)
                out += "; ";
            for (std::size_t k = i; k < j; ++k) {
                if (k > i)
                    out += ", ";
                out += r.params[k].name;
            }
            out += ": ";
            out += to_string(r.params[i].type);
            i = j;
        }
        out += ")\n";
        print_schema_graph("left", r.left, out);
        print_schema_graph("right", r.right, out);
        out += "  interface {";
        for (std::size_t i = 0; i < r.interface_ids.size(); ++i) {
            out += i ? ", " : " ";
            out += std::to_string(r.interface_ids[i]);
        }
        out += " }\n";
        if (r.condition)
            out += "  where " + print_cond(*r.condition) + "\n";
        out += "\n";
    }
    for (const auto& m : p.macros)
        out += m.name + " = " + print_seq(m.body) + "\n";
    out += "main = " + print_seq(p.main) + "\n";
    return out;
}

bool equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index())
        return false;
    if (auto* n = std::get_if<Expr::Num>(&a.node))
        return n->value == std::get<Expr::Num>(b.node).value;
    if (auto* s = std::get_if<Expr::Str>(&a.node))
        return s->value == std::get<Expr::Str>(b.node).value;
    if (auto* v = std::get_if<Expr::Var>(&a.node))
        return v->name == std::get<Expr::Var>(b.node).name;
    const auto& x = std::get<Expr::BinOp>(a.node);
    const auto& y = std::get<Expr::BinOp>(b.node);
    return x.op == y.op && equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
}

bool equal(const CondExpr& a, const CondExpr& b) {
    if (a.node.index() != b.node.index())
        return false;
    if (auto* e = std::get_if<CondExpr::EdgePred>(&a.node)) {
        const auto& f = std::get<CondExpr::EdgePred>(b.node);
        return e->v == f.v && e->w == f.w;
    }
    if (auto* r = std::get_if<CondExpr::Rel>(&a.node)) {
        const auto& s = std::get<CondExpr::Rel>(b.node);
        return r->op == s.op && equal(*r->lhs, *s.lhs) && equal(*r->rhs, *s.rhs);
    }
    if (auto* n = std::get_if<CondExpr::Not>(&a.node))
        return equal(*n->child, *std::get<CondExpr::Not>(b.node).child);
    const auto& x = std::get<CondExpr::Bool>(a.node);
    const auto& y = std::get<CondExpr::Bool>(b.node);
    return x.op == y.op && equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
}

static bool equal_cmd(const Command& a, const Command& b) {
    if (a.node.index() != b.node.index())
        return false;
    if (auto* r = std::get_if<Command::RuleSetCall>(&a.node))
        return r->rules == std::get<Command::RuleSetCall>(b.node).rules;
    if (auto* m = std::get_if<Command::MacroCall>(&a.node))
        return m->name == std::get<Command::MacroCall>(b.node).name;
    if (auto* ite = std::get_if<Command::IfThenElse>(&a.node)) {
        const auto& o = std::get<Command::IfThenElse>(b.node);
        return equal(ite->cond, o.cond) && equal(ite->then_branch, o.then_branch) &&
               equal(ite->else_branch, o.else_branch);
    }
    if (auto* it = std::get_if<Command::IfThen>(&a.node)) {
        const auto& o = std::get<Command::IfThen>(b.node);
        return equal(it->cond, o.cond) && equal(it->then_branch, o.then_branch);
    }
    if (auto* bg = std::get_if<Command::Bang>(&a.node))
        return equal(bg->body, std::get<Command::Bang>(b.node).body);
    return true; // Skip / Fail carry no data
}

bool equal(const CommandSeq& a, const CommandSeq& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!equal_cmd(*a[i], *b[i]))
            return false;
    return true;
}

static bool equal_label(const LabelExpr& a, const LabelExpr& b) {
    if (a.components.size() != b.components.size())
        return false;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        if (!equal(*a.components[i], *b.components[i]))
            return false;
    return true;
}

static bool equal_graph(const SchemaGraph& a, const SchemaGraph& b) {
    if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size())
        return false;
    for (std::size_t i = 0; i < a.nodes.size(); ++i)
        if (a.nodes[i].id != b.nodes[i].id || !equal_label(a.nodes[i].label, b.nodes[i].label))
            return false;
    for (std::size_t i = 0; i < a.edges.size(); ++i)
        if (a.edges[i].src != b.edges[i].src || a.edges[i].tgt != b.edges[i].tgt ||
            !equal_label(a.edges[i].label, b.edges[i].label))
            return false;
    return true;
}

bool equal(const Program& a, const Program& b) {
    if (a.rules.size() != b.rules.size() || a.macros.size() != b.macros.size())
        return false;
    for (std::size_t i = 0; i < a.rules.size(); ++i) {
        const auto& x = a.rules[i];
        const auto& y = b.rules[i];
        if (x.name != y.name || x.interface_ids != y.interface_ids)
            return false;
        if (x.params.size() != y.params.size())
            return false;
        for (std::size_t k = 0; k < x.params.size(); ++k)
            if (x.params[k].name != y.params[k].name || x.params[k].type != y.params[k].type)
                return false;
        if (!equal_graph(x.left, y.left) || !equal_graph(x.right, y.right))
            return false;
        if ((x.condition == nullptr) != (y.condition == nullptr))
            return false;
        if (x.condition && !equal(*x.condition, *y.condition))
            return false;
    }
    for (std::size_t i = 0; i < a.macros.size(); ++i)
        if (a.macros[i].name != b.macros[i].name || !equal(a.macros[i].body, b.macros[i].body))
            return false;
    return equal(a.main, b.main);
}

} // namespace gp
