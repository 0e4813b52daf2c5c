#include "gp/expand.hpp"

#include <map>
#include <set>

namespace gp {

namespace {

struct Expander {
    const Program& prog;
    std::vector<Diagnostic>& errors;
    std::map<std::string, CommandSeq> expanded; // fully expanded macro bodies
    std::set<std::string> in_progress;          // macros on the expansion stack
    std::vector<std::string> stack;             // for cycle reporting

    CommandSeq expand_seq(const CommandSeq& seq) {
        CommandSeq out;
        for (const CommandPtr& c : seq) {
            CommandSeq piece = expand_cmd(c);
            out.insert(out.end(), piece.begin(), piece.end());
        }
        return out;
    }

    CommandSeq expand_cmd(const CommandPtr& c) {
        if (auto* m = std::get_if<Command::MacroCall>(&c->node)) {
            auto hit = expanded.find(m->name);
            if (hit != expanded.end())
                return hit->second;
            if (in_progress.count(m->name)) {
                std::string cycle;
                bool in_cycle = false;
                for (const std::string& s : stack) {
                    if (s == m->name)
                        in_cycle = true;
                    if (in_cycle)
                        cycle += s + " -> ";
                }
                cycle += m->name;
                errors.push_back(
                    Diagnostic{c->pos, "recursive macro chain: " + cycle});
                return {c}; // leave in place; caller aborts on errors anyway
            }
            const MacroDecl* d = prog.find_macro(m->name);
            if (!d) {
                // cannot happen with parser-side classification, but keep the
                // guard so the pass stands on its own
                errors.push_back(
                    Diagnostic{c->pos, "undefined macro '" + m->name + "'"});
                return {c};
            }
            in_progress.insert(m->name);
            stack.push_back(m->name);
            CommandSeq body = expand_seq(d->body);
            stack.pop_back();
            in_progress.erase(m->name);
            expanded.emplace(m->name, body);
            return body;
        }
        if (auto* ite = std::get_if<Command::IfThenElse>(&c->node)) {
            Command n;
            n.node = Command::IfThenElse{expand_seq(ite->cond),
                                         expand_seq(ite->then_branch),
                                         expand_seq(ite->else_branch)};
            n.pos = c->pos;
            return {make_command(std::move(n))};
        }
        if (auto* it = std::get_if<Command::IfThen>(&c->node)) {
            Command n;
            n.node = Command::IfThen{expand_seq(it->cond), expand_seq(it->then_branch)};
            n.pos = c->pos;
            return {make_command(std::move(n))};
        }
        if (auto* b = std::get_if<Command::Bang>(&c->node)) {
            Command n;
            n.node = Command::Bang{expand_seq(b->body)};
            n.pos = c->pos;
            return {make_command(std::move(n))};
        }
        return {c};
    }
};

} // namespace

ExpandResult expand_macros(const Program& prog) {
    ExpandResult out;
    Expander ex{prog, out.errors, {}, {}, {}};
    // Expand every macro body first so cycles are reported even for macros
    // that main never reaches.
    for (const MacroDecl& m : prog.macros) {
        if (!ex.expanded.count(m.name)) {
            ex.in_progress.insert(m.name);
            ex.stack.push_back(m.name);
            CommandSeq body = ex.expand_seq(m.body);
            ex.stack.pop_back();
            ex.in_progress.erase(m.name);
            ex.expanded.emplace(m.name, std::move(body));
        }
    }
    Program result;
    result.rules = prog.rules;
    result.main = ex.expand_seq(prog.main);
    result.main_pos = prog.main_pos;
    if (out.errors.empty())
        out.program = std::move(result);
    return out;
}

} // namespace gp
