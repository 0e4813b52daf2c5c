#ifndef GP_PARSER_HPP
#define GP_PARSER_HPP

#include "gp/ast.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gp {

struct ParseResult {
    std::optional<Program> program;
    std::vector<Diagnostic> errors;
    bool ok() const { return errors.empty() && program.has_value(); }
};

// Parses a full program: rule-schema declarations, macro declarations and
// exactly one main declaration, in any order. Bare identifiers in command
// position are resolved against the macro table; everything else is a
// rule-set call. Checks name uniqueness and the presence of main.
ParseResult parse_program(const std::string& text);

struct LabelParseResult {
    std::optional<LabelExpr> label;
    std::vector<Diagnostic> errors;
    bool ok() const { return errors.empty() && label.has_value(); }
};

// Parses one label expression (underscore-joined components).
LabelParseResult parse_label(const std::string& text);

} // namespace gp

#endif
