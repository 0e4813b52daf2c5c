#ifndef GP_CHECK_HPP
#define GP_CHECK_HPP

#include "gp/ast.hpp"

namespace gp {

// Verifies every declaration-level invariant of a macro-free program and
// annotates expressions with their types. Returns one diagnostic per
// violation; the program is ready for compilation iff the list is empty.
//
// macro_names improves messages for rule-set calls that name a macro
// (which the expander cannot splice inside braces).
std::vector<Diagnostic> static_check(Program& prog,
                                     const std::vector<std::string>& macro_names = {});

} // namespace gp

#endif
