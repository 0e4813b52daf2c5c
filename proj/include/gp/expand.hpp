#ifndef GP_EXPAND_HPP
#define GP_EXPAND_HPP

#include "gp/ast.hpp"

namespace gp {

struct ExpandResult {
    std::optional<Program> program; // macro-free on success
    std::vector<Diagnostic> errors;
    bool ok() const { return errors.empty() && program.has_value(); }
};

// Splices every macro call with the called macro's command sequence.
// Recursive macro chains are rejected and reported with the cycle.
ExpandResult expand_macros(const Program& prog);

} // namespace gp

#endif
