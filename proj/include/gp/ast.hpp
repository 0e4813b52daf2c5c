#ifndef GP_AST_HPP
#define GP_AST_HPP

#include "gp/atom.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gp {

struct SourcePos {
    int line = 0;
    int col = 0;
};

struct Diagnostic {
    SourcePos pos;
    std::string message;
};

enum class ExprType { Unknown, Int, String };

const char* to_string(ExprType t);

// Label expressions (components of underscore-joined labels).
struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
    struct Num {
        Int value;
    };
    struct Str {
        std::string value;
    };
    struct Var {
        std::string name;
    };
    struct BinOp {
        char op; // one of + - * /
        ExprPtr lhs;
        ExprPtr rhs;
    };

    std::variant<Num, Str, Var, BinOp> node;
    SourcePos pos;
    ExprType type = ExprType::Unknown; // filled in by static_check

    bool is_simple() const { return !std::holds_alternative<BinOp>(node); }
};

struct LabelExpr {
    std::vector<ExprPtr> components; // nonempty
    SourcePos pos;
};

// Rule-schema conditions. The alternative structs live at namespace scope
// (aliased back into CondExpr) so the variant member stays
// default-constructible under gcc.
struct CondExpr;
using CondPtr = std::shared_ptr<CondExpr>;

namespace cond {
struct EdgePred {
    long long v = 0; // interface node ids
    long long w = 0;
};
struct Rel {
    std::string op; // = \= > < >= <=
    ExprPtr lhs;
    ExprPtr rhs;
};
struct Not {
    CondPtr child;
};
struct Bool {
    std::string op; // and | or
    CondPtr lhs;
    CondPtr rhs;
};
} // namespace cond

struct CondExpr {
    using EdgePred = cond::EdgePred;
    using Rel = cond::Rel;
    using Not = cond::Not;
    using Bool = cond::Bool;

    std::variant<EdgePred, Rel, Not, Bool> node;
    SourcePos pos;
};

// Commands. Immutable after construction; sequences share nodes, which the
// execution engine relies on for cheap configuration keys.
struct Command;
using CommandPtr = std::shared_ptr<const Command>;
using CommandSeq = std::vector<CommandPtr>;

namespace cmd {
struct RuleSetCall {
    std::vector<std::string> rules; // empty list = the always-failing call {}
    bool braced = false;            // written {r,...} rather than a bare name
};
struct MacroCall {
    std::string name;
};
struct IfThenElse {
    CommandSeq cond;
    CommandSeq then_branch;
    CommandSeq else_branch;
};
struct IfThen {
    CommandSeq cond;
    CommandSeq then_branch;
};
struct Bang {
    CommandSeq body;
};
struct Skip {};
struct Fail {};
} // namespace cmd

struct Command {
    using RuleSetCall = cmd::RuleSetCall;
    using MacroCall = cmd::MacroCall;
    using IfThenElse = cmd::IfThenElse;
    using IfThen = cmd::IfThen;
    using Bang = cmd::Bang;
    using Skip = cmd::Skip;
    using Fail = cmd::Fail;

    std::variant<RuleSetCall, MacroCall, IfThenElse, IfThen, Bang, Skip, Fail> node;
    SourcePos pos;
};

CommandPtr make_command(Command c);

// Declarations.
struct Param {
    std::string name;
    ExprType type = ExprType::Unknown;
    SourcePos pos;
};

struct SchemaNode {
    long long id = 0;
    LabelExpr label;
    SourcePos pos;
};

struct SchemaEdge {
    long long src = 0;
    long long tgt = 0;
    LabelExpr label;
    SourcePos pos;
};

struct SchemaGraph {
    std::vector<SchemaNode> nodes;
    std::vector<SchemaEdge> edges;
};

struct RuleSchemaDecl {
    std::string name;
    SourcePos pos;
    std::vector<Param> params;
    SchemaGraph left;
    SchemaGraph right;
    std::vector<long long> interface_ids;
    CondPtr condition; // may be null
};

struct MacroDecl {
    std::string name;
    SourcePos pos;
    CommandSeq body;
};

struct Program {
    std::vector<RuleSchemaDecl> rules;
    std::vector<MacroDecl> macros;
    CommandSeq main;
    SourcePos main_pos;

    const RuleSchemaDecl* find_rule(const std::string& name) const;
    const MacroDecl* find_macro(const std::string& name) const;
};

// Pretty printers. print_program(parse(text)) reparses to an equal AST; the
// command printer doubles as the configuration display in traces.
std::string print_expr(const Expr& e);
std::string print_label_expr(const LabelExpr& l);
std::string print_cond(const CondExpr& c);
std::string print_command(const Command& c);
std::string print_seq(const CommandSeq& seq);
std::string print_program(const Program& p);

// Structural equality (positions ignored).
bool equal(const Expr& a, const Expr& b);
bool equal(const CondExpr& a, const CondExpr& b);
bool equal(const CommandSeq& a, const CommandSeq& b);
bool equal(const Program& a, const Program& b);

} // namespace gp

#endif
