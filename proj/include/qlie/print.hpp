#pragma once

#include <string>

#include "qlie/bimould.hpp"
#include "qlie/ncpoly.hpp"
#include "qlie/word.hpp"

namespace qlie {

// Canonical renderings; polynomials print in the canonical term order and
// round-trip through the expression parser.
std::string to_string(const Word& w);
std::string to_string(const NcPoly& p);
std::string to_string(const Bimould& a);

}  // namespace qlie
