#include "gp/lexer.hpp"

#include <array>
#include <cctype>

namespace gp {

bool is_reserved_word(const std::string& s) {
    static const std::array<const char*, 16> words = {
        "main", "if",   "then", "else",      "skip", "fail", "where", "left",
        "right", "interface", "node", "edge", "int",  "string", "not", "and"};
    for (const char* w : words)
        if (s == w)
            return true;
    return s == "or";
}

LexResult lex(const std::string& text) {
    LexResult out;
    std::size_t i = 0;
    int line = 1, col = 1;

    auto push = [&](Tok k, std::string t, int l, int c) {
        out.tokens.push_back(Token{k, std::move(t), SourcePos{l, c}});
    };
    auto error = [&](std::string msg, int l, int c) {
        out.errors.push_back(Diagnostic{SourcePos{l, c}, std::move(msg)});
    };

    while (i < text.size()) {
        char c = text[i];
        int tl = line, tc = col;
        if (c == '\n') {
            push(Tok::Newline, "", tl, tc);
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                ++i;
                ++col;
            }
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string s;
            while (i < text.size() &&
                   std::isalnum(static_cast<unsigned char>(text[i]))) {
                s += text[i];
                ++i;
                ++col;
            }
            push(Tok::Ident, std::move(s), tl, tc);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i]))) {
                s += text[i];
                ++i;
                ++col;
            }
            push(Tok::Num, std::move(s), tl, tc);
            continue;
        }
        if (c == '"') {
            ++i;
            ++col;
            std::string s;
            bool closed = false;
            while (i < text.size()) {
                char d = text[i];
                if (d == '\n')
                    break;
                ++i;
                ++col;
                if (d == '"') {
                    closed = true;
                    break;
                }
                if (d == '\\') {
                    if (i < text.size() && (text[i] == '"' || text[i] == '\\')) {
                        s += text[i];
                        ++i;
                        ++col;
                    } else {
                        error("invalid escape in string literal (only \\\" and \\\\)", tl, tc);
                    }
                    continue;
                }
                if (!printable_ascii(d))
                    error("character outside the printable set in string literal", tl, tc);
                s += d;
            }
            if (!closed)
                error("unterminated string literal", tl, tc);
            push(Tok::Str, std::move(s), tl, tc);
            continue;
        }
        auto two = [&](Tok k) {
            push(k, text.substr(i, 2), tl, tc);
            i += 2;
            col += 2;
        };
        auto one = [&](Tok k) {
            push(k, text.substr(i, 1), tl, tc);
            ++i;
            ++col;
        };
        switch (c) {
        case '(':
            one(Tok::LParen);
            break;
        case ')':
            one(Tok::RParen);
            break;
        case '{':
            one(Tok::LBrace);
            break;
        case '}':
            one(Tok::RBrace);
            break;
        case ',':
            one(Tok::Comma);
            break;
        case ';':
            one(Tok::Semi);
            break;
        case ':':
            one(Tok::Colon);
            break;
        case '=':
            one(Tok::Eq);
            break;
        case '!':
            one(Tok::Bang);
            break;
        case '_':
            one(Tok::Underscore);
            break;
        case '+':
            one(Tok::Plus);
            break;
        case '-':
            one(Tok::Minus);
            break;
        case '*':
            one(Tok::Star);
            break;
        case '/':
            one(Tok::Slash);
            break;
        case '<':
            if (i + 1 < text.size() && text[i + 1] == '=')
                two(Tok::Le);
            else
                one(Tok::Lt);
            break;
        case '>':
            if (i + 1 < text.size() && text[i + 1] == '=')
                two(Tok::Ge);
            else
                one(Tok::Gt);
            break;
        case '\\':
            if (i + 1 < text.size() && text[i + 1] == '=') {
                two(Tok::Ne);
            } else {
                error("unexpected character '\\'", tl, tc);
                ++i;
                ++col;
            }
            break;
        default:
            error(std::string("unexpected character '") + c + "'", tl, tc);
            ++i;
            ++col;
            break;
        }
    }
    out.tokens.push_back(Token{Tok::End, "", SourcePos{line, col}});
    return out;
}

} // namespace gp
