#include "gp/atom.hpp"

namespace gp {

bool Atom::operator<(const Atom& o) const {
    if (is_int() != o.is_int())
        return is_int(); // integers sort before strings
    if (is_int())
        return as_int() < o.as_int();
    return as_str() < o.as_str();
}

void Atom::encode(std::string& out) const {
    if (is_int()) {
        std::string digits = as_int().str();
        out += 'i';
        out += std::to_string(digits.size());
        out += ':';
        out += digits;
    } else {
        out += 's';
        out += std::to_string(as_str().size());
        out += ':';
        out += as_str();
    }
}

std::string Atom::to_literal() const {
    if (is_int())
        return as_int().str();
    std::string out = "\"";
    for (char c : as_str()) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

bool Label::operator<(const Label& o) const {
    return std::lexicographical_compare(atoms.begin(), atoms.end(),
                                        o.atoms.begin(), o.atoms.end());
}

void Label::encode(std::string& out) const {
    out += 'L';
    out += std::to_string(atoms.size());
    out += '(';
    for (const Atom& a : atoms)
        a.encode(out);
    out += ')';
}

std::string Label::to_literal() const {
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i > 0)
            out += '_';
        out += atoms[i].to_literal();
    }
    return out;
}

bool printable_ascii(char c) {
    return c >= 0x20 && c <= 0x7e;
}

bool valid_string_atom(const std::string& s) {
    for (char c : s)
        if (!printable_ascii(c))
            return false;
    return true;
}

} // namespace gp
