#ifndef MACDUAL_POLY_IO_HPP
#define MACDUAL_POLY_IO_HPP

#include "macdual/poly.hpp"

#include <string>
#include <vector>

namespace macdual {

// Variable name table used only by the parser and printer.
struct VarTable {
    std::vector<std::string> names;

    // x, y, z, t, u, v, w for up to 7 variables, x1..xn beyond.
    static VarTable standard(int nvars);

    int index_of(const std::string& name) const; // -1 when unknown
    int nvars() const { return static_cast<int>(names.size()); }
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position(position) {}
    size_t position;
};

// Grammar: sum of terms joined by + and -; a term is a product of factors
// joined by *; a factor is a rational constant (integer or p/q, optionally
// parenthesized), a variable power (name or name^k), or a parenthesized sum.
Poly parse_poly(const std::string& text, const VarTable& vars);

// Parses with the standard name table, inferring the variable count from the
// names that occur (at least min_nvars).
Poly parse_poly_auto(const std::string& text, int min_nvars = 0);

// Canonical printer: terms in canonical descending order. Round-trips with
// the parser.
std::string to_string(const Poly& p, const VarTable& vars);
std::string to_string(const Poly& p); // standard names

std::string to_string(const Monomial& m, const VarTable& vars);
std::string to_string(const Monomial& m);

} // namespace macdual

#endif
