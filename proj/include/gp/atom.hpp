#ifndef GP_ATOM_HPP
#define GP_ATOM_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <variant>
#include <vector>

namespace gp {

using Int = boost::multiprecision::cpp_int;

// One component of a label value: an integer (unbounded) or a character
// string. Strings range over printable ASCII.
class Atom {
public:
    Atom() : value_(Int(0)) {}
    explicit Atom(Int v) : value_(std::move(v)) {}
    explicit Atom(long v) : value_(Int(v)) {}
    explicit Atom(std::string s) : value_(std::move(s)) {}

    bool is_int() const { return std::holds_alternative<Int>(value_); }
    bool is_str() const { return std::holds_alternative<std::string>(value_); }

    const Int& as_int() const { return std::get<Int>(value_); }
    const std::string& as_str() const { return std::get<std::string>(value_); }

    bool operator==(const Atom& o) const { return value_ == o.value_; }
    bool operator!=(const Atom& o) const { return !(*this == o); }

    // Total order: integers before strings, then value order. Used by the
    // canonical encoder; not part of the language semantics.
    bool operator<(const Atom& o) const;

    // Unambiguous byte encoding for canonical keys.
    void encode(std::string& out) const;

    // Literal form: decimal for integers, quoted with \" and \\ escapes
    // for strings.
    std::string to_literal() const;

private:
    std::variant<Int, std::string> value_;
};

// A label value: a nonempty sequence of atoms.
struct Label {
    std::vector<Atom> atoms;

    Label() = default;
    explicit Label(std::vector<Atom> a) : atoms(std::move(a)) {}
    Label(std::initializer_list<Atom> a) : atoms(a) {}

    bool valid() const { return !atoms.empty(); }
    std::size_t size() const { return atoms.size(); }

    bool operator==(const Label& o) const { return atoms == o.atoms; }
    bool operator!=(const Label& o) const { return atoms != o.atoms; }
    bool operator<(const Label& o) const;

    void encode(std::string& out) const;

    // Underscore-joined literal, e.g. 5_"abc"_-3.
    std::string to_literal() const;
};

// Character set accepted in string atoms.
bool printable_ascii(char c);
bool valid_string_atom(const std::string& s);

// Convenience constructors used all over the tests.
inline Label int_label(long v) { return Label{Atom(Int(v))}; }
inline Label str_label(std::string s) { return Label{Atom(std::move(s))}; }

} // namespace gp

#endif
