#include "gp/parser.hpp"

#include "gp/lexer.hpp"

#include <set>
#include <stdexcept>

namespace gp {

namespace {

struct ParseAbort {};

struct Parser {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    std::vector<Diagnostic>& errors;

    explicit Parser(std::vector<Token> toks, std::vector<Diagnostic>& errs)
        : tokens(std::move(toks)), errors(errs) {}

    [[noreturn]] void fail(const Token& at, std::string msg) {
        errors.push_back(Diagnostic{at.pos, std::move(msg)});
        throw ParseAbort{};
    }

    void skip_newlines() {
        while (tokens[pos].kind == Tok::Newline)
            ++pos;
    }

    // Most of the grammar ignores line breaks; graph blocks do not.
    const Token& peek(bool raw = false) {
        if (!raw)
            skip_newlines();
        return tokens[pos];
    }
    const Token& next(bool raw = false) {
        if (!raw)
            skip_newlines();
        return tokens[pos++];
    }
    bool at(Tok k, bool raw = false) { return peek(raw).kind == k; }
    bool at_word(const char* w) {
        const Token& t = peek();
        return t.kind == Tok::Ident && t.text == w;
    }
    Token expect(Tok k, const char* what) {
        const Token& t = peek();
        if (t.kind != k)
            fail(t, std::string("expected ") + what);
        return tokens[pos++];
    }
    Token expect_word(const char* w) {
        const Token& t = peek();
        if (t.kind != Tok::Ident || t.text != w)
            fail(t, std::string("expected '") + w + "'");
        return tokens[pos++];
    }

    std::string describe(const Token& t) {
        switch (t.kind) {
        case Tok::End:
            return "end of input";
        case Tok::Newline:
            return "end of line";
        case Tok::Ident:
        case Tok::Num:
            return "'" + t.text + "'";
        case Tok::Str:
            return "string literal";
        default:
            return "'" + t.text + "'";
        }
    }

    // ---- expressions -------------------------------------------------

    // raw = true keeps newline significance (labels inside graph blocks).
    ExprPtr parse_factor(bool raw) {
        const Token& t = peek(raw);
        if (t.kind == Tok::Minus) {
            ++pos;
            const Token& n = peek(raw);
            if (n.kind != Tok::Num)
                fail(n, "expected numeral after '-'");
            ++pos;
            auto e = std::make_shared<Expr>();
            e->node = Expr::Num{-Int(n.text)};
            e->pos = t.pos;
            return e;
        }
        if (t.kind == Tok::Num) {
            ++pos;
            auto e = std::make_shared<Expr>();
            e->node = Expr::Num{Int(t.text)};
            e->pos = t.pos;
            return e;
        }
        if (t.kind == Tok::Str) {
            ++pos;
            auto e = std::make_shared<Expr>();
            e->node = Expr::Str{t.text};
            e->pos = t.pos;
            return e;
        }
        if (t.kind == Tok::Ident) {
            if (is_reserved_word(t.text))
                fail(t, "reserved word '" + t.text + "' cannot be used in an expression");
            ++pos;
            auto e = std::make_shared<Expr>();
            e->node = Expr::Var{t.text};
            e->pos = t.pos;
            return e;
        }
        if (t.kind == Tok::LParen) {
            ++pos;
            ExprPtr e = parse_exp(raw);
            if (peek(raw).kind != Tok::RParen)
                fail(peek(raw), "expected ')'");
            ++pos;
            return e;
        }
        fail(t, "expected expression, got " + describe(t));
    }

    ExprPtr parse_term(bool raw) {
        ExprPtr e = parse_factor(raw);
        while (true) {
            Tok k = peek(raw).kind;
            if (k != Tok::Star && k != Tok::Slash)
                return e;
            SourcePos p = peek(raw).pos;
            ++pos;
            ExprPtr r = parse_factor(raw);
            auto b = std::make_shared<Expr>();
            b->node = Expr::BinOp{k == Tok::Star ? '*' : '/', e, r};
            b->pos = p;
            e = b;
        }
    }

    ExprPtr parse_exp(bool raw) {
        ExprPtr e = parse_term(raw);
        while (true) {
            Tok k = peek(raw).kind;
            if (k != Tok::Plus && k != Tok::Minus)
                return e;
            SourcePos p = peek(raw).pos;
            ++pos;
            ExprPtr r = parse_term(raw);
            auto b = std::make_shared<Expr>();
            b->node = Expr::BinOp{k == Tok::Plus ? '+' : '-', e, r};
            b->pos = p;
            e = b;
        }
    }

    LabelExpr parse_label_expr(bool raw) {
        LabelExpr l;
        l.pos = peek(raw).pos;
        l.components.push_back(parse_exp(raw));
        while (peek(raw).kind == Tok::Underscore) {
            ++pos;
            l.components.push_back(parse_exp(raw));
        }
        return l;
    }

    // ---- conditions --------------------------------------------------

    std::optional<std::string> rel_op() {
        switch (peek().kind) {
        case Tok::Eq:
            return "=";
        case Tok::Ne:
            return "\\=";
        case Tok::Gt:
            return ">";
        case Tok::Lt:
            return "<";
        case Tok::Ge:
            return ">=";
        case Tok::Le:
            return "<=";
        default:
            return std::nullopt;
        }
    }

    CondPtr parse_cond_atom() {
        const Token& t = peek();
        if (t.kind == Tok::Ident && t.text == "edge") {
            SourcePos p = t.pos;
            ++pos;
            expect(Tok::LParen, "'('");
            Token v = expect(Tok::Num, "interface node id");
            expect(Tok::Comma, "','");
            Token w = expect(Tok::Num, "interface node id");
            expect(Tok::RParen, "')'");
            auto c = std::make_shared<CondExpr>();
            c->node = CondExpr::EdgePred{std::stoll(v.text), std::stoll(w.text)};
            c->pos = p;
            return c;
        }
        if (t.kind == Tok::LParen) {
            // Either a parenthesized condition or a parenthesized arithmetic
            // operand; try the relational reading first.
            std::size_t save = pos;
            std::size_t errs = errors.size();
            try {
                ExprPtr lhs = parse_exp(false);
                auto op = rel_op();
                if (op) {
                    SourcePos p = peek().pos;
                    ++pos;
                    ExprPtr rhs = parse_exp(false);
                    auto c = std::make_shared<CondExpr>();
                    c->node = CondExpr::Rel{*op, lhs, rhs};
                    c->pos = t.pos;
                    return c;
                }
            } catch (ParseAbort&) {
            }
            pos = save;
            errors.resize(errs);
            ++pos; // '('
            CondPtr c = parse_cond();
            expect(Tok::RParen, "')'");
            return c;
        }
        ExprPtr lhs = parse_exp(false);
        auto op = rel_op();
        if (!op)
            fail(peek(), "expected relational operator");
        SourcePos p = peek().pos;
        ++pos;
        ExprPtr rhs = parse_exp(false);
        auto c = std::make_shared<CondExpr>();
        c->node = CondExpr::Rel{*op, lhs, rhs};
        c->pos = p;
        return c;
    }

    CondPtr parse_cond_not() {
        if (at_word("not")) {
            SourcePos p = peek().pos;
            ++pos;
            auto c = std::make_shared<CondExpr>();
            c->node = CondExpr::Not{parse_cond_not()};
            c->pos = p;
            return c;
        }
        return parse_cond_atom();
    }

    CondPtr parse_cond_and() {
        CondPtr c = parse_cond_not();
        while (at_word("and")) {
            SourcePos p = peek().pos;
            ++pos;
            auto b = std::make_shared<CondExpr>();
            b->node = CondExpr::Bool{"and", c, parse_cond_not()};
            b->pos = p;
            c = b;
        }
        return c;
    }

    CondPtr parse_cond() {
        CondPtr c = parse_cond_and();
        while (at_word("or")) {
            SourcePos p = peek().pos;
            ++pos;
            auto b = std::make_shared<CondExpr>();
            b->node = CondExpr::Bool{"or", c, parse_cond_and()};
            b->pos = p;
            c = b;
        }
        return c;
    }

    // ---- commands ----------------------------------------------------

    CommandSeq parse_comseq() {
        CommandSeq seq = parse_com();
        while (at(Tok::Semi)) {
            ++pos;
            CommandSeq next = parse_com();
            seq.insert(seq.end(), next.begin(), next.end());
        }
        return seq;
    }

    // One command; a parenthesized group comes back as its whole sequence
    // and is spliced by the caller unless a '!' follows.
    CommandSeq parse_com() {
        const Token& t = peek();
        if (t.kind == Tok::Ident && t.text == "if") {
            SourcePos p = t.pos;
            ++pos;
            CommandSeq cond = parse_comseq();
            expect_word("then");
            CommandSeq then_branch = parse_com();
            if (at_word("else")) {
                ++pos;
                CommandSeq else_branch = parse_com();
                Command c;
                c.node = Command::IfThenElse{std::move(cond), std::move(then_branch),
                                             std::move(else_branch)};
                c.pos = p;
                return {make_command(std::move(c))};
            }
            Command c;
            c.node = Command::IfThen{std::move(cond), std::move(then_branch)};
            c.pos = p;
            return {make_command(std::move(c))};
        }

        CommandSeq group;
        if (t.kind == Tok::Ident && t.text == "skip") {
            ++pos;
            Command c;
            c.node = Command::Skip{};
            c.pos = t.pos;
            group = {make_command(std::move(c))};
        } else if (t.kind == Tok::Ident && t.text == "fail") {
            ++pos;
            Command c;
            c.node = Command::Fail{};
            c.pos = t.pos;
            group = {make_command(std::move(c))};
        } else if (t.kind == Tok::LBrace) {
            ++pos;
            Command c;
            Command::RuleSetCall call;
            call.braced = true;
            if (!at(Tok::RBrace)) {
                call.rules.push_back(expect(Tok::Ident, "rule name").text);
                while (at(Tok::Comma)) {
                    ++pos;
                    call.rules.push_back(expect(Tok::Ident, "rule name").text);
                }
            }
            expect(Tok::RBrace, "'}'");
            c.node = std::move(call);
            c.pos = t.pos;
            group = {make_command(std::move(c))};
        } else if (t.kind == Tok::LParen) {
            ++pos;
            group = parse_comseq();
            expect(Tok::RParen, "')'");
        } else if (t.kind == Tok::Ident && !is_reserved_word(t.text)) {
            ++pos;
            Command c;
            c.node = Command::RuleSetCall{{t.text}, false};
            c.pos = t.pos;
            group = {make_command(std::move(c))};
        } else {
            fail(t, "expected command, got " + describe(t));
        }

        while (at(Tok::Bang)) {
            SourcePos p = peek().pos;
            ++pos;
            Command c;
            c.node = Command::Bang{std::move(group)};
            c.pos = p;
            group = {make_command(std::move(c))};
        }
        return group;
    }

    // ---- declarations ------------------------------------------------

    std::vector<Param> parse_params() {
        std::vector<Param> params;
        expect(Tok::LParen, "'('");
        if (!at(Tok::RParen)) {
            while (true) {
                std::vector<Token> names;
                names.push_back(expect(Tok::Ident, "parameter name"));
                while (at(Tok::Comma)) {
                    ++pos;
                    names.push_back(expect(Tok::Ident, "parameter name"));
                }
                expect(Tok::Colon, "':'");
                Token ty = expect(Tok::Ident, "type (int or string)");
                ExprType t;
                if (ty.text == "int")
                    t = ExprType::Int;
                else if (ty.text == "string")
                    t = ExprType::String;
                else
                    fail(ty, "unknown type '" + ty.text + "' (expected int or string)");
                for (const Token& n : names) {
                    if (is_reserved_word(n.text))
                        fail(n, "reserved word '" + n.text + "' cannot name a parameter");
                    params.push_back(Param{n.text, t, n.pos});
                }
                if (!at(Tok::Semi))
                    break;
                ++pos;
            }
        }
        expect(Tok::RParen, "')'");
        return params;
    }

    SchemaGraph parse_schema_graph() {
        SchemaGraph g;
        expect(Tok::LBrace, "'{'");
        while (true) {
            // entry separators: newlines and semicolons
            while (at(Tok::Semi, true) || at(Tok::Newline, true))
                ++pos;
            if (at(Tok::RBrace, true)) {
                ++pos;
                return g;
            }
            const Token& t = peek(true);
            if (t.kind == Tok::Ident && t.text == "node") {
                ++pos;
                Token id = expect(Tok::Num, "node id");
                SchemaNode n;
                n.id = std::stoll(id.text);
                n.pos = t.pos;
                n.label = parse_label_expr(true);
                g.nodes.push_back(std::move(n));
            } else if (t.kind == Tok::Ident && t.text == "edge") {
                ++pos;
                Token s = expect(Tok::Num, "source node id");
                Token d = expect(Tok::Num, "target node id");
                SchemaEdge e;
                e.src = std::stoll(s.text);
                e.tgt = std::stoll(d.text);
                e.pos = t.pos;
                e.label = parse_label_expr(true);
                g.edges.push_back(std::move(e));
            } else {
                fail(t, "expected 'node', 'edge' or '}' in graph block");
            }
            const Token& sep = peek(true);
            if (sep.kind != Tok::Newline && sep.kind != Tok::Semi &&
                sep.kind != Tok::RBrace)
                fail(sep, "expected end of graph entry, got " + describe(sep));
        }
    }

    RuleSchemaDecl parse_rule_decl(Token name) {
        RuleSchemaDecl r;
        r.name = name.text;
        r.pos = name.pos;
        r.params = parse_params();
        expect_word("left");
        r.left = parse_schema_graph();
        expect_word("right");
        r.right = parse_schema_graph();
        expect_word("interface");
        expect(Tok::LBrace, "'{'");
        if (!at(Tok::RBrace)) {
            r.interface_ids.push_back(std::stoll(expect(Tok::Num, "node id").text));
            while (at(Tok::Comma)) {
                ++pos;
                r.interface_ids.push_back(std::stoll(expect(Tok::Num, "node id").text));
            }
        }
        expect(Tok::RBrace, "'}'");
        if (at_word("where")) {
            ++pos;
            r.condition = parse_cond();
        }
        return r;
    }

    Program parse_program_body() {
        Program prog;
        bool have_main = false;
        std::set<std::string> names;
        while (!at(Tok::End)) {
            Token name = expect(Tok::Ident, "declaration");
            if (name.text == "main") {
                expect(Tok::Eq, "'='");
                if (have_main)
                    errors.push_back(Diagnostic{name.pos, "duplicate declaration of main"});
                prog.main = parse_comseq();
                prog.main_pos = name.pos;
                have_main = true;
                continue;
            }
            if (is_reserved_word(name.text))
                fail(name, "reserved word '" + name.text + "' cannot name a declaration");
            if (at(Tok::Eq)) {
                ++pos;
                MacroDecl m;
                m.name = name.text;
                m.pos = name.pos;
                m.body = parse_comseq();
                if (!names.insert(m.name).second)
                    errors.push_back(
                        Diagnostic{name.pos, "duplicate declaration name '" + m.name + "'"});
                prog.macros.push_back(std::move(m));
                continue;
            }
            if (at(Tok::LParen)) {
                RuleSchemaDecl r = parse_rule_decl(name);
                if (!names.insert(r.name).second)
                    errors.push_back(
                        Diagnostic{name.pos, "duplicate declaration name '" + r.name + "'"});
                prog.rules.push_back(std::move(r));
                continue;
            }
            fail(peek(), "expected '=' or '(' after declaration name '" + name.text + "'");
        }
        if (!have_main)
            errors.push_back(Diagnostic{SourcePos{0, 0}, "missing main declaration"});
        return prog;
    }
};

// Rewrites bare-name calls that refer to macros into macro calls. Braced
// rule-set calls are left alone; naming a macro there is a static error.
CommandPtr classify_cmd(const CommandPtr& c, const std::set<std::string>& macros);

CommandSeq classify_seq(const CommandSeq& seq, const std::set<std::string>& macros) {
    CommandSeq out;
    out.reserve(seq.size());
    for (const auto& c : seq)
        out.push_back(classify_cmd(c, macros));
    return out;
}

CommandPtr classify_cmd(const CommandPtr& c, const std::set<std::string>& macros) {
    if (auto* r = std::get_if<Command::RuleSetCall>(&c->node)) {
        if (!r->braced && r->rules.size() == 1 && macros.count(r->rules[0])) {
            Command m;
            m.node = Command::MacroCall{r->rules[0]};
            m.pos = c->pos;
            return make_command(std::move(m));
        }
        return c;
    }
    if (auto* ite = std::get_if<Command::IfThenElse>(&c->node)) {
        Command m;
        m.node = Command::IfThenElse{classify_seq(ite->cond, macros),
                                     classify_seq(ite->then_branch, macros),
                                     classify_seq(ite->else_branch, macros)};
        m.pos = c->pos;
        return make_command(std::move(m));
    }
    if (auto* it = std::get_if<Command::IfThen>(&c->node)) {
        Command m;
        m.node = Command::IfThen{classify_seq(it->cond, macros),
                                 classify_seq(it->then_branch, macros)};
        m.pos = c->pos;
        return make_command(std::move(m));
    }
    if (auto* b = std::get_if<Command::Bang>(&c->node)) {
        Command m;
        m.node = Command::Bang{classify_seq(b->body, macros)};
        m.pos = c->pos;
        return make_command(std::move(m));
    }
    return c;
}

} // namespace

ParseResult parse_program(const std::string& text) {
    ParseResult out;
    LexResult lr = lex(text);
    out.errors = lr.errors;
    if (!out.errors.empty())
        return out;
    Parser p(std::move(lr.tokens), out.errors);
    try {
        Program prog = p.parse_program_body();
        if (!out.errors.empty())
            return out;
        std::set<std::string> macro_names;
        for (const auto& m : prog.macros)
            macro_names.insert(m.name);
        for (auto& m : prog.macros)
            m.body = classify_seq(m.body, macro_names);
        prog.main = classify_seq(prog.main, macro_names);
        out.program = std::move(prog);
    } catch (ParseAbort&) {
        // diagnostics already recorded
    }
    return out;
}

LabelParseResult parse_label(const std::string& text) {
    LabelParseResult out;
    LexResult lr = lex(text);
    out.errors = lr.errors;
    if (!out.errors.empty())
        return out;
    Parser p(std::move(lr.tokens), out.errors);
    try {
        p.skip_newlines();
        if (p.at(Tok::End)) {
            out.errors.push_back(Diagnostic{SourcePos{1, 1}, "empty label"});
            return out;
        }
        LabelExpr l = p.parse_label_expr(false);
        p.skip_newlines();
        if (!p.at(Tok::End))
            p.fail(p.peek(), "trailing input after label");
        out.label = std::move(l);
    } catch (ParseAbort&) {
    }
    return out;
}

} // namespace gp
