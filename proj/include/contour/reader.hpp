#pragma once

#include "contour/category.hpp"
#include "contour/semantics.hpp"

#include <map>
#include <string>

namespace contour {

// Reads the canonical category/term notation back in, one expression per
// call. Identifiers of length one (optionally followed by digits, e.g. x,
// P, x1) denote variables; anything longer is a constant. Each call shares
// a variable scope via the supplied name map so that entries like np:x and
// /np:x resolve to the same variable.

TermPtr parse_term(const std::string& text, std::map<std::string, int>& scope);
CatPtr parse_category(const std::string& text, std::map<std::string, int>& scope);

// Convenience forms with a private scope.
TermPtr parse_term(const std::string& text);
CatPtr parse_category(const std::string& text);

}  // namespace contour
