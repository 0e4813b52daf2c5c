#include "gp/cli.hpp"

#include "gp/check.hpp"
#include "gp/expand.hpp"
#include "gp/hostgraph.hpp"
#include "gp/parser.hpp"
#include "gp/threads.hpp"

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace gp {

namespace {

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot read '" << path << "'\n";
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_diags(const std::string& path, const std::vector<Diagnostic>& ds,
                 std::ostream& err) {
    for (const Diagnostic& d : ds)
        err << path << ":" << d.pos.line << ":" << d.pos.col << ": " << d.message
            << "\n";
}

std::optional<CompiledProgram> load_program(const std::string& path,
                                            std::ostream& err) {
    auto text = read_file(path, err);
    if (!text)
        return std::nullopt;
    ParseResult pr = parse_program(*text);
    if (!pr.ok()) {
        print_diags(path, pr.errors, err);
        return std::nullopt;
    }
    std::vector<std::string> macro_names;
    for (const MacroDecl& m : pr.program->macros)
        macro_names.push_back(m.name);
    ExpandResult ex = expand_macros(*pr.program);
    if (!ex.ok()) {
        print_diags(path, ex.errors, err);
        return std::nullopt;
    }
    std::vector<Diagnostic> ck = static_check(*ex.program, macro_names);
    if (!ck.empty()) {
        print_diags(path, ck, err);
        return std::nullopt;
    }
    return compile_program(std::move(*ex.program));
}

std::optional<Graph> load_host(const std::string& path, std::ostream& err) {
    auto text = read_file(path, err);
    if (!text)
        return std::nullopt;
    HostParseResult hr = parse_host(*text);
    if (!hr.ok()) {
        print_diags(path, hr.errors, err);
        return std::nullopt;
    }
    std::vector<GraphViolation> v = validate(*hr.graph);
    if (!v.empty()) {
        for (const GraphViolation& gv : v)
            err << path << ": " << gv.message << "\n";
        return std::nullopt;
    }
    return std::move(hr.graph);
}

void print_notes(const std::map<std::string, std::uint64_t>& notes,
                 std::ostream& err) {
    for (const auto& [msg, count] : notes)
        err << "note: " << msg << " (x" << count << ")\n";
}

int sampled_exit(SampleRun::Outcome o) {
    switch (o) {
    case SampleRun::Outcome::Result:
        return 0;
    case SampleRun::Outcome::Fail:
        return 1;
    default:
        return 3;
    }
}

const char* outcome_name(SampleRun::Outcome o) {
    switch (o) {
    case SampleRun::Outcome::Result:
        return "result";
    case SampleRun::Outcome::Fail:
        return "fail";
    case SampleRun::Outcome::StepLimit:
        return "step-limit";
    default:
        return "stuck";
    }
}

void print_sampled(const SampleRun& run, bool json, std::ostream& out) {
    if (json) {
        nlohmann::json j;
        j["outcome"] = outcome_name(run.outcome);
        j["steps"] = run.steps;
        j["configurations"] = run.configurations;
        if (run.result)
            j["graph"] = serialize_host(*run.result);
        if (!run.stuck_reason.empty())
            j["reason"] = run.stuck_reason;
        out << j.dump(2) << "\n";
        return;
    }
    switch (run.outcome) {
    case SampleRun::Outcome::Result:
        out << serialize_host(*run.result);
        break;
    case SampleRun::Outcome::Fail:
        out << "fail (this execution ends in the fail configuration)\n";
        break;
    case SampleRun::Outcome::StepLimit:
        out << "step limit reached after " << run.steps << " steps\n";
        break;
    case SampleRun::Outcome::Stuck:
        out << "stuck: " << run.stuck_reason << "\n";
        break;
    }
}

} // namespace

int cmd_run(const std::string& program_path, const std::string& host_path,
            const CliOptions& opt, std::ostream& out, std::ostream& err) {
    auto prog = load_program(program_path, err);
    if (!prog)
        return 2;
    auto host = load_host(host_path, err);
    if (!host)
        return 2;
    set_thread_count(opt.threads);
    SampleRun run = run_sampled(*prog, *host, opt.seed, opt.budget);
    print_sampled(run, opt.json, out);
    print_notes(run.diagnostics, err);
    return sampled_exit(run.outcome);
}

int cmd_trace(const std::string& program_path, const std::string& host_path,
              const CliOptions& opt, std::ostream& out, std::ostream& err) {
    auto prog = load_program(program_path, err);
    if (!prog)
        return 2;
    auto host = load_host(host_path, err);
    if (!host)
        return 2;
    set_thread_count(opt.threads);
    SampleRun run = run_sampled(*prog, *host, opt.seed, opt.budget);
    for (const TraceLine& t : run.trace)
        out << format_trace_line(t) << "\n";
    print_sampled(run, opt.json, out);
    print_notes(run.diagnostics, err);
    return sampled_exit(run.outcome);
}

int cmd_all(const std::string& program_path, const std::string& host_path,
            const CliOptions& opt, std::ostream& out, std::ostream& err) {
    auto prog = load_program(program_path, err);
    if (!prog)
        return 2;
    auto host = load_host(host_path, err);
    if (!host)
        return 2;
    set_thread_count(opt.threads);
    ResultSet rs = run_all(*prog, *host, opt.budget);
    out << (opt.json ? render_report_json(rs) + "\n" : render_report(rs));
    return rs.complete ? 0 : 3;
}

int cmd_check(const std::string& program_path, std::ostream& out,
              std::ostream& err) {
    auto prog = load_program(program_path, err);
    if (!prog)
        return 2;
    out << "ok: " << prog->ast.rules.size() << " rule schema"
        << (prog->ast.rules.size() == 1 ? "" : "ta") << ", main with "
        << prog->ast.main.size() << " command"
        << (prog->ast.main.size() == 1 ? "" : "s") << "\n";
    return 0;
}

} // namespace gp
