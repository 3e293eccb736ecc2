#pragma once

#include <string>

#include "qlie/cli.hpp"
#include "qlie/print.hpp"

namespace qlie::testutil {

inline NcPoly P(const std::string& s) { return cli::parse_expr(s).poly; }

// Parses a single monic word.
inline Word W(const std::string& s) {
    NcPoly p = P(s);
    if (p.term_count() != 1 || p.terms().begin()->second != 1)
        throw DomainError("W() expects a single monic word: " + s);
    return p.terms().begin()->first;
}

inline NcPoly PX(const std::string& s) {
    cli::Expr e = cli::parse_expr(s);
    return e.poly;
}

}  // namespace qlie::testutil
