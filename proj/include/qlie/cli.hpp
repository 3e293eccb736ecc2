#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qlie/bimould.hpp"
#include "qlie/ncpoly.hpp"

namespace qlie::cli {

// Parsed expression; alphabet is inferred from the letter syntax and empty
// for constant expressions (which may be adopted into any alphabet).
struct Expr {
    NcPoly poly;
    std::optional<Alphabet> tag;
    Expr() : poly(Alphabet::B) {}
};

// Grammar:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := [rational '*'] word | rational
//   word   := atom+
//   atom   := 'b'nat | 'x'('0'|'1') | 'y'posnat | 'D(' nat ',' nat ')'
//           | 'ad0' ['^'posnat] '(' word ')' | atom '^' posnat
// Whitespace-separated atoms juxtapose by concatenation; ad0^n(w) expands
// to the n-fold commutator with the alphabet's zero letter.
Expr parse_expr(const std::string& text);

// Canonical rendering; parse_expr(print(p)) == p.
std::string print(const NcPoly& p);
std::string print(const Bimould& a);

// Subcommands: shuffle, stuffle, bracket, map, member, basis, dims.
// Exit code 0 on success, 1 on domain error, 2 on usage error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace qlie::cli
