#ifndef GP_LEXER_HPP
#define GP_LEXER_HPP

#include "gp/ast.hpp"

#include <string>
#include <vector>

namespace gp {

enum class Tok {
    Ident,
    Num, // unsigned digit run; sign is grammar-level
    Str, // decoded string literal
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Colon,
    Eq, // '=' (declaration equals and the equality relation)
    Bang,
    Underscore,
    Plus,
    Minus,
    Star,
    Slash,
    Lt,
    Gt,
    Le,
    Ge,
    Ne, // '\='
    Newline,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text; // identifier name, digit run, or decoded string
    SourcePos pos;
};

// Tokenizes program and label text. '#' starts a comment to end of line.
// Newline tokens are kept: rule-graph blocks are line oriented, everything
// else skips them.
struct LexResult {
    std::vector<Token> tokens;
    std::vector<Diagnostic> errors;
};

LexResult lex(const std::string& text);

bool is_reserved_word(const std::string& s);

} // namespace gp

#endif
